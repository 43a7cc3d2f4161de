//! Local invariants of a plane curve germ at the origin.
//!
//! For a germ `f` of multiplicity `m`, the equimultiplicity ideal is
//! `J_Z = ⟨∂f/∂x, ∂f/∂y⟩ + ⟨x, y⟩^m`. Its image in `J_{<m}` is spanned by the
//! `(m−1)`-jets of the two partials alone: both partials have order `≥ m − 1`,
//! so any multiple `u·∂f/∂*` with `u(0) = 0` already lies in `⟨x, y⟩^m`.
//! Those jets are exactly the partials of the tangent cone `f_m`, which gives
//! `deg(Z) = m(m+1)/2 − rank` with `rank ∈ {1, 2}`.
//!
//! Everything is computed in the coordinates `f` is given in; no normal form
//! (`y^m + …`) is ever produced.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::jets::{self, jet_dim, JetSubspace};
use crate::poly::{BiPoly, Rational, Var};

/// A curve germ through the origin with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveGerm {
    f: BiPoly,
    m: u32,
}

impl CurveGerm {
    pub fn new(f: BiPoly) -> Result<Self> {
        let m = f.order()?;
        if m == 0 {
            return Err(Error::OriginNotOnCurve(f.constant_term().to_string()));
        }
        Ok(CurveGerm { f, m })
    }

    pub fn f(&self) -> &BiPoly {
        &self.f
    }

    pub fn multiplicity(&self) -> u32 {
        self.m
    }

    pub fn tangent_cone(&self) -> BiPoly {
        self.f.homogeneous_part(self.m)
    }

    /// Whether the tangent cone is `c·ℓ^m` for a single linear form `ℓ`.
    ///
    /// Decided by the rank of `{∂f_m/∂x, ∂f_m/∂y}` among forms of degree
    /// `m − 1`: by Euler's identity `m·f_m = x·∂f_m/∂x + y·∂f_m/∂y` the rank
    /// is at least one, and it is one exactly when the partials are
    /// proportional, i.e. `f_m = c·(αx + βy)^m`. Rank over ℚ equals rank
    /// over ℂ, so a rational form that is an `m`-th power of a complex linear
    /// form is detected here without leaving ℚ. For `m = 1` the cone is a
    /// line and the germ counts as unitangential.
    pub fn is_unitangential(&self) -> bool {
        let cone = self.tangent_cone();
        let partials = [cone.partial(Var::X), cone.partial(Var::Y)]
            .map(|p| jets::to_jet_vector(&p, self.m).expect("m >= 1"));
        jets::span(self.m, &partials).expect("shared basis").rank() == 1
    }

    /// Image of `J_Z` in `J_{<m}`.
    pub fn equimult_ideal_jet(&self) -> JetSubspace {
        let cone = self.tangent_cone();
        let gens: Vec<_> = [Var::X, Var::Y]
            .into_iter()
            .map(|var| {
                let d = self.f.partial(var);
                assert!(
                    d.order_or_inf().is_none_or(|o| o + 1 >= self.m),
                    "partial derivative of a germ of order {} has lower order",
                    self.m
                );
                let v = jets::to_jet_vector(&d, self.m).expect("m >= 1");
                assert_eq!(
                    v,
                    jets::to_jet_vector(&cone.partial(var), self.m).expect("m >= 1"),
                    "jet of ∂f must equal jet of ∂f_m"
                );
                v
            })
            .collect();
        jets::span(self.m, &gens).expect("shared basis")
    }

    /// `dim ℂ{x,y}/J_Z`.
    pub fn deg_z(&self) -> usize {
        self.equimult_ideal_jet().codim()
    }

    /// Dimension of `{(a₀, b₀) : a₀·∂f/∂x + b₀·∂f/∂y ≡ 0 mod ⟨x,y⟩^m}`,
    /// i.e. of the freedom in choosing a section for a fixed equimultiple
    /// deformation.
    pub fn section_ambiguity(&self) -> usize {
        2 - self.equimult_ideal_jet().rank()
    }

    pub fn analyze(&self) -> SingularityReport {
        let rank = self.equimult_ideal_jet().rank();
        let report = SingularityReport {
            m: self.m,
            tangent_cone: self.tangent_cone(),
            unitangential: self.is_unitangential(),
            deg_z: jet_dim(self.m) - rank,
            ambiguity: 2 - rank,
        };
        debug_assert_eq!(report.unitangential, rank == 1);
        report
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityReport {
    pub m: u32,
    pub tangent_cone: BiPoly,
    pub unitangential: bool,
    pub deg_z: usize,
    pub ambiguity: usize,
}

pub fn multiplicity(f: &BiPoly) -> Result<u32> {
    Ok(CurveGerm::new(f.clone())?.multiplicity())
}

pub fn tangent_cone(f: &BiPoly) -> Result<BiPoly> {
    Ok(CurveGerm::new(f.clone())?.tangent_cone())
}

pub fn is_unitangential(f: &BiPoly) -> Result<bool> {
    Ok(CurveGerm::new(f.clone())?.is_unitangential())
}

pub fn equimult_ideal_jet(f: &BiPoly) -> Result<JetSubspace> {
    Ok(CurveGerm::new(f.clone())?.equimult_ideal_jet())
}

pub fn deg_z(f: &BiPoly) -> Result<usize> {
    Ok(CurveGerm::new(f.clone())?.deg_z())
}

pub fn section_ambiguity(f: &BiPoly) -> Result<usize> {
    Ok(CurveGerm::new(f.clone())?.section_ambiguity())
}

pub fn analyze(f: &BiPoly) -> Result<SingularityReport> {
    Ok(CurveGerm::new(f.clone())?.analyze())
}

/// Second route to unitangentiality: matches the coefficients of the
/// tangent cone against `c·(αx + βy)^m` directly.
///
/// Writing `f_m = Σ c_k x^{m−k} y^k`: if `c_0 ≠ 0` then `α ≠ 0`, normalize
/// `α = 1`, read off `β = c_1 / (m·c_0)` and require `c_k = c_0·C(m,k)·β^k`
/// for every `k`. If `c_0 = 0` then `α = 0` and the cone must be `c_m·y^m`.
/// `β` is forced to be rational, so the test is exact over ℚ.
pub fn is_unitangential_binomial(f: &BiPoly) -> Result<bool> {
    let germ = CurveGerm::new(f.clone())?;
    let m = germ.m;
    let cone = germ.tangent_cone();
    let c: Vec<Rational> = (0..=m).map(|k| cone.coeff(m - k, k)).collect();
    if c[0].is_zero() {
        return Ok(c[..m as usize].iter().all(Zero::is_zero));
    }
    let beta = &c[1] / (&c[0] * Rational::from_integer(BigInt::from(m)));
    let mut beta_pow = Rational::from_integer(BigInt::from(1));
    for (k, ck) in c.iter().enumerate() {
        let binom = Rational::from_integer(binomial(BigInt::from(m), BigInt::from(k)));
        if *ck != &c[0] * binom * &beta_pow {
            return Ok(false);
        }
        beta_pow *= &beta;
    }
    Ok(true)
}
