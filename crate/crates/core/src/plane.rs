//! Curves of degree `d` in ℙ², seen in an affine chart with the marked point
//! at the origin, and the stratum `L_m` of pairs `(C, p)` with `mult_p C = m`.
//!
//! `H⁰(ℙ², 𝒪(d))` is identified with polynomials of total degree `≤ d`, and
//! the nearby curves are `F_a = f + Σ a_{kl}·x^k y^l`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::jets::{self, jet_dim, MonoBasis};
use crate::linalg;
use crate::poly::{BiPoly, Monomial, Rational, Var};
use crate::singular::CurveGerm;

/// An affine equation `f` of a plane curve of degree at most `d`, singular
/// of multiplicity `m = order(f)` at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurve {
    germ: CurveGerm,
    d: u32,
}

impl PlaneCurve {
    pub fn new(f: BiPoly, d: i64) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidDegree(d));
        }
        let d = u32::try_from(d).map_err(|_| Error::InvalidDegree(d))?;
        let germ = CurveGerm::new(f)?;
        let total = germ.f().total_degree().expect("germ is nonzero");
        if total > d {
            return Err(Error::DegreeBound { total, d });
        }
        let m = germ.multiplicity();
        if d < m {
            return Err(Error::DegreeBelowMultiplicity { d, m });
        }
        Ok(PlaneCurve { germ, d })
    }

    /// As [`PlaneCurve::new`], additionally rejecting `f` whose order is not
    /// the declared multiplicity.
    pub fn with_multiplicity(f: BiPoly, d: i64, m: u32) -> Result<Self> {
        let c = PlaneCurve::new(f, d)?;
        let actual = c.multiplicity();
        if actual != m {
            return Err(Error::MultiplicityMismatch { declared: m, actual });
        }
        Ok(c)
    }

    pub fn f(&self) -> &BiPoly {
        self.germ.f()
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn multiplicity(&self) -> u32 {
        self.germ.multiplicity()
    }

    pub fn germ(&self) -> &CurveGerm {
        &self.germ
    }
}

/// Monomials of total degree `≤ d`, graded-lex.
fn monomials_up_to(d: u32) -> Vec<Monomial> {
    MonoBasis::new(d + 1)
        .expect("d + 1 >= 1")
        .monomials()
        .to_vec()
}

fn num_monomials(d: u32) -> usize {
    jet_dim(d + 1)
}

/// `dim |𝒪_{ℙ²}(d)| = (d+2)(d+1)/2 − 1`.
pub fn dim_linear_system(d: i64) -> Result<usize> {
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    let d = d as usize;
    Ok((d + 2) * (d + 1) / 2 - 1)
}

/// `dim H⁰(ℙ², 𝒥_Z(d))`: the kernel dimension of the map sending a degree-`d`
/// polynomial `G` to its class in `J_{<m} / J_Z`.
pub fn h0_jz(c: &PlaneCurve) -> usize {
    let m = c.multiplicity();
    let ideal = c.germ.equimult_ideal_jet();
    let images: Vec<Vec<Rational>> = monomials_up_to(c.d)
        .into_iter()
        .map(|mono| {
            let v = jets::to_jet_vector(&BiPoly::monomial(num_traits::One::one(), mono.x, mono.y), m)
                .expect("m >= 1");
            ideal.reduce(&v).expect("shared basis").coords().to_vec()
        })
        .collect();
    num_monomials(c.d) - linalg::rank(images)
}

/// Tangent-space dimension of `L_m` at `(C, p)`: `h⁰ − 2` for unitangential
/// germs, `h⁰ − 1` otherwise.
pub fn tangent_dim_lm(c: &PlaneCurve) -> i64 {
    let h0 = h0_jz(c) as i64;
    if c.germ.is_unitangential() {
        h0 - 2
    } else {
        h0 - 1
    }
}

/// `dim |L| − m(m+1)/2 + 2`.
pub fn expected_dim_lm(d: i64, m: u32) -> Result<i64> {
    if m == 0 {
        return Err(Error::InvalidJetOrder);
    }
    Ok(dim_linear_system(d)? as i64 - jet_dim(m) as i64 + 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JacobianColumn {
    X,
    Y,
    /// The coefficient `a_{kl}` of `x^k y^l` in `F_a`.
    A(Monomial),
}

/// Jacobian of `{∂^{i+j} F_a / ∂x^i ∂y^j : i + j ≤ m − 1}` with respect to
/// `(x, y, a_{kl})`, evaluated at the origin and `a = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianBlock {
    /// One row per `(i, j)`, in graded-lex order.
    pub rows: Vec<Monomial>,
    pub columns: Vec<JacobianColumn>,
    pub matrix: Vec<Vec<Rational>>,
    pub rank: usize,
}

impl JacobianBlock {
    /// Entries of the square block of `a_{ij}` columns matching the rows, if
    /// that block is diagonal with nonzero diagonal.
    pub fn a_block_diagonal(&self) -> Option<Vec<Rational>> {
        let col_index: Vec<usize> = self
            .rows
            .iter()
            .map(|r| self.columns.iter().position(|c| *c == JacobianColumn::A(*r)))
            .collect::<Option<_>>()?;
        let mut diag = Vec::with_capacity(self.rows.len());
        for (ri, row) in self.matrix.iter().enumerate() {
            for (ci, &col) in col_index.iter().enumerate() {
                let v = &row[col];
                if ri == ci {
                    if v.is_zero() {
                        return None;
                    }
                    diag.push(v.clone());
                } else if !v.is_zero() {
                    return None;
                }
            }
        }
        Some(diag)
    }
}

fn derivative(p: &BiPoly, i: u32, j: u32) -> BiPoly {
    let mut out = p.clone();
    for _ in 0..i {
        out = out.partial(Var::X);
    }
    for _ in 0..j {
        out = out.partial(Var::Y);
    }
    out
}

pub fn jacobian_block(c: &PlaneCurve) -> JacobianBlock {
    let m = c.multiplicity();
    let rows = MonoBasis::new(m).expect("m >= 1").monomials().to_vec();
    let a_monos = monomials_up_to(c.d);
    let columns: Vec<JacobianColumn> = [JacobianColumn::X, JacobianColumn::Y]
        .into_iter()
        .chain(a_monos.iter().copied().map(JacobianColumn::A))
        .collect();

    let matrix: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            columns
                .iter()
                .map(|col| match col {
                    JacobianColumn::X => derivative(c.f(), r.x + 1, r.y).constant_term(),
                    JacobianColumn::Y => derivative(c.f(), r.x, r.y + 1).constant_term(),
                    JacobianColumn::A(mono) => {
                        let basis_poly = BiPoly::monomial(num_traits::One::one(), mono.x, mono.y);
                        derivative(&basis_poly, r.x, r.y).constant_term()
                    }
                })
                .collect()
        })
        .collect();
    let rank = linalg::rank(matrix.clone());
    JacobianBlock {
        rows,
        columns,
        matrix,
        rank,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub d: u32,
    pub m: u32,
    pub dim_l: usize,
    pub unitangential: bool,
    pub deg_z: usize,
    pub h0_jz: usize,
    pub tangent_dim: i64,
    pub expected_dim: i64,
    pub jacobian_rank: usize,
    pub smooth_of_expected: bool,
}

/// Computes all dimensions for `(C, p)` and checks the Jacobian rank bound.
///
/// For non-unitangential germs the tangent dimension must equal the expected
/// dimension; a mismatch there, or a Jacobian of the wrong rank, is an
/// internal error. For unitangential germs the two numbers are reported and
/// `smooth_of_expected` is false when they differ.
pub fn verify_smooth_expected(c: &PlaneCurve) -> Result<DimensionReport> {
    let d = c.d;
    let m = c.multiplicity();
    let unitangential = c.germ.is_unitangential();
    let h0 = h0_jz(c);
    let tangent_dim = tangent_dim_lm(c);
    let expected_dim = expected_dim_lm(d.into(), m)?;

    let jac = jacobian_block(c);
    if jac.rank != jet_dim(m) {
        return Err(Error::Internal(format!(
            "Jacobian rank {} != m(m+1)/2 = {}",
            jac.rank,
            jet_dim(m)
        )));
    }
    if jac.a_block_diagonal().is_none() {
        return Err(Error::Internal("Jacobian a-block is not diagonal".into()));
    }
    if !unitangential && tangent_dim != expected_dim {
        return Err(Error::Internal(format!(
            "non-unitangential germ with tangent dimension {tangent_dim} != expected {expected_dim}"
        )));
    }

    Ok(DimensionReport {
        d,
        m,
        dim_l: dim_linear_system(d.into())?,
        unitangential,
        deg_z: c.germ.deg_z(),
        h0_jz: h0,
        tangent_dim,
        expected_dim,
        jacobian_rank: jac.rank,
        smooth_of_expected: tangent_dim == expected_dim,
    })
}
