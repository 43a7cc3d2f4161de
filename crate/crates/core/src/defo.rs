//! First-order equimultiple deformations `f + ε·g` and their sections.
//!
//! `f + ε·g` is equimultiple along `(x, y) ↦ (x + ε·a, y + ε·b)` iff
//! `g − a·∂f/∂x − b·∂f/∂y ∈ ⟨x, y⟩^m`. Since `∂f/∂*` has order `≥ m − 1`,
//! only the constant terms `(a(0), b(0))` of the section matter; higher
//! terms of `a` and `b` are unconstrained.

use crate::error::Result;
use crate::jets::{self, AffineSolutionSet};
use crate::poly::{dual_substitute, BiPoly, FirstOrderDef, Rational, SectionGerm, Var};
use crate::singular::CurveGerm;

/// The algebraic criterion: `order(g − a·f_x − b·f_y) ≥ m`.
pub fn is_equimultiple_along(f: &BiPoly, g: &BiPoly, s: &SectionGerm) -> Result<bool> {
    let germ = CurveGerm::new(f.clone())?;
    let residual = section_residual(f, g, s);
    Ok(residual
        .order_or_inf()
        .is_none_or(|o| o >= germ.multiplicity()))
}

/// `g − a·∂f/∂x − b·∂f/∂y`.
pub fn section_residual(f: &BiPoly, g: &BiPoly, s: &SectionGerm) -> BiPoly {
    g - &(&(&s.a * &f.partial(Var::X)) + &(&s.b * &f.partial(Var::Y)))
}

/// Checks equimultiplicity straight from the definition: rewrite `f + ε·g`
/// in the moving coordinates `X = x + ε·a`, `Y = y + ε·b` and require both
/// components to lie in `⟨X, Y⟩^m`, with the base of order exactly `m`.
///
/// Since `x = X − ε·a(X, Y)` modulo `ε²`, the rewritten family is the dual
/// substitution of the inverse section.
pub fn is_equimultiple_along_direct(f: &BiPoly, g: &BiPoly, s: &SectionGerm) -> Result<bool> {
    let m = CurveGerm::new(f.clone())?.multiplicity();
    let moved = dual_substitute(&FirstOrderDef::new(f.clone(), g.clone()), &s.inverse());
    let base_ok = moved.base.order_or_inf() == Some(m);
    let direction_ok = moved.direction.order_or_inf().is_none_or(|o| o >= m);
    Ok(base_ok && direction_ok)
}

/// Whether `g ∈ ⟨∂f/∂x, ∂f/∂y⟩ + ⟨x, y⟩^m`, i.e. some section makes
/// `f + ε·g` equimultiple.
pub fn admits_section(f: &BiPoly, g: &BiPoly) -> Result<bool> {
    let germ = CurveGerm::new(f.clone())?;
    let target = jets::to_jet_vector(g, germ.multiplicity())?;
    germ.equimult_ideal_jet().contains(&target)
}

/// Admissible constant terms `(a₀, b₀)` of sections along which `f + ε·g`
/// is equimultiple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionSolution {
    pub solutions: AffineSolutionSet,
}

impl SectionSolution {
    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.solutions.dimension()
    }

    pub fn contains(&self, a0: &Rational, b0: &Rational) -> bool {
        self.solutions.contains(&[a0.clone(), b0.clone()])
    }

    /// A representative section: the particular `(a₀, b₀)` as constants.
    pub fn representative(&self) -> Option<SectionGerm> {
        let p = self.solutions.particular()?;
        Some(SectionGerm::new(
            BiPoly::constant(p[0].clone()),
            BiPoly::constant(p[1].clone()),
        ))
    }
}

pub fn solve_sections(f: &BiPoly, g: &BiPoly) -> Result<SectionSolution> {
    let germ = CurveGerm::new(f.clone())?;
    let m = germ.multiplicity();
    let columns = [
        jets::to_jet_vector(&f.partial(Var::X), m)?,
        jets::to_jet_vector(&f.partial(Var::Y), m)?,
    ];
    let target = jets::to_jet_vector(g, m)?;
    Ok(SectionSolution {
        solutions: jets::solve_affine(&columns, &target)?,
    })
}
