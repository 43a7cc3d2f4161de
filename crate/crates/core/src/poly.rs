//! Sparse bivariate polynomials over ℚ and their first-order (ε² = 0)
//! extension.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic with `x > y`: ascending total degree, and within a
//! degree the larger `x`-exponent first (`1, x, y, x², xy, y², …`). Zero
//! coefficients are never stored, so structural equality is mathematical
//! equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. `BigRational` keeps itself in lowest terms with a
/// positive denominator, and zero is always `0/1`.
pub type Rational = BigRational;

/// Shorthand for the integer `n` as a [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den` as a reduced [`Rational`]. Panics on `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exponent pair `x^x · y^y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub const fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub const fn degree(&self) -> u32 {
        self.x + self.y
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.x + other.x, self.y + other.y)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.x.cmp(&self.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::with_capacity(2);
        for (name, e) in [("x", self.x), ("y", self.y)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

/// Sparse polynomial in `x, y` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Rational::one())
    }

    pub fn x() -> Self {
        BiPoly::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        BiPoly::monomial(Rational::one(), 0, 1)
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, x: u32, y: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(Monomial::new(x, y), c);
        p
    }

    /// Builds a polynomial from `(coefficient, x-exponent, y-exponent)`
    /// triples with integer coefficients; repeated monomials are summed.
    pub fn from_coeffs(terms: &[(i64, u32, u32)]) -> Self {
        BiPoly::from_terms(terms.iter().map(|&(c, i, j)| (Monomial::new(i, j), rat(c))))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = BiPoly::zero();
        for (mono, c) in terms {
            p.add_term(mono, c);
        }
        p
    }

    fn add_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mono).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: u32, y: u32) -> Rational {
        self.terms
            .get(&Monomial::new(x, y))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0)
    }

    /// Largest total degree of a stored term, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Smallest total degree of a stored term.
    pub fn order(&self) -> Result<u32> {
        self.terms
            .keys()
            .next()
            .map(Monomial::degree)
            .ok_or(Error::ZeroPolynomial)
    }

    /// Order with the zero polynomial treated as having infinite order.
    pub fn order_or_inf(&self) -> Option<u32> {
        self.order().ok()
    }

    /// Truncation to terms of total degree `<= k`; `k < 0` gives zero.
    pub fn jet(&self, k: i64) -> BiPoly {
        self.filter_terms(|mono| i64::from(mono.degree()) <= k)
    }

    /// The degree-`k` form of `self`.
    pub fn homogeneous_part(&self, k: u32) -> BiPoly {
        self.filter_terms(|mono| mono.degree() == k)
    }

    fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(mono, _)| keep(mono))
                .map(|(mono, c)| (*mono, c.clone()))
                .collect(),
        }
    }

    pub fn partial(&self, var: Var) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().filter_map(|(mono, c)| match var {
            Var::X if mono.x > 0 => Some((Monomial::new(mono.x - 1, mono.y), c * rat(mono.x.into()))),
            Var::Y if mono.y > 0 => Some((Monomial::new(mono.x, mono.y - 1), c * rat(mono.y.into()))),
            _ => None,
        }))
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(mono, a)| (*mono, a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates `self(sx, sy)` as an exact polynomial.
    pub fn substitute(&self, sx: &BiPoly, sy: &BiPoly) -> BiPoly {
        let (max_x, max_y) = self.max_exponents();
        let px = powers(sx, max_x, BiPoly::one(), |a, b| a * b);
        let py = powers(sy, max_y, BiPoly::one(), |a, b| a * b);
        let mut out = BiPoly::zero();
        for (mono, c) in &self.terms {
            let t = (&px[mono.x as usize] * &py[mono.y as usize]).scale(c);
            out = &out + &t;
        }
        out
    }

    fn max_exponents(&self) -> (u32, u32) {
        self.terms
            .keys()
            .fold((0, 0), |(mx, my), mono| (mx.max(mono.x), my.max(mono.y)))
    }
}

fn powers<T: Clone>(base: &T, n: u32, one: T, mul: impl Fn(&T, &T) -> T) -> Vec<T> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(one);
    for k in 0..n as usize {
        let next = mul(&out[k], base);
        out.push(next);
    }
    out
}

impl fmt::Display for BiPoly {
    /// Renders in the CLI grammar, e.g. `y^2 - x^3` or `3/2*x^2*y - y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (mono, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if *mono == Monomial::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (mono, c) in &rhs.terms {
            out.add_term(*mono, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (mono, c) in &rhs.terms {
            out.add_term(*mono, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(*mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(mono, c)| (*mono, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: &BiPoly) -> BiPoly {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        -&self
    }
}

impl From<Rational> for BiPoly {
    fn from(c: Rational) -> Self {
        BiPoly::constant(c)
    }
}

/// A first-order deformation `f + ε·g` with `ε² = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstOrderDef {
    pub base: BiPoly,
    pub direction: BiPoly,
}

impl FirstOrderDef {
    pub fn new(base: BiPoly, direction: BiPoly) -> Self {
        FirstOrderDef { base, direction }
    }
}

/// The first-order section `(x, y) ↦ (x + ε·a, y + ε·b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionGerm {
    pub a: BiPoly,
    pub b: BiPoly,
}

impl SectionGerm {
    pub fn new(a: BiPoly, b: BiPoly) -> Self {
        SectionGerm { a, b }
    }

    pub fn zero() -> Self {
        SectionGerm::new(BiPoly::zero(), BiPoly::zero())
    }

    /// The section moving in the opposite direction, `(x − ε·a, y − ε·b)`.
    pub fn inverse(&self) -> Self {
        SectionGerm::new(-&self.a, -&self.b)
    }

    /// The section keeping only the constant terms `(a(0,0), b(0,0))`.
    pub fn constant_part(&self) -> Self {
        SectionGerm::new(
            BiPoly::constant(self.a.constant_term()),
            BiPoly::constant(self.b.constant_term()),
        )
    }
}

/// Element `re + ε·eps` of `ℚ[x, y][ε]/(ε²)`.
#[derive(Clone, Debug)]
struct Dual {
    re: BiPoly,
    eps: BiPoly,
}

impl Dual {
    fn mul(&self, other: &Dual) -> Dual {
        Dual {
            re: &self.re * &other.re,
            eps: &(&self.re * &other.eps) + &(&self.eps * &other.re),
        }
    }
}

/// Composes `f + ε·g` with `x ↦ x + ε·a`, `y ↦ y + ε·b`, discarding `ε²`.
///
/// The substitution is carried out by genuine dual-number multiplication of
/// the powers `(x + ε·a)^i (y + ε·b)^j`, never through derivatives, so the
/// result `(f, g + a·∂f/∂x + b·∂f/∂y)` is an identity that can be tested
/// rather than a definition.
pub fn dual_substitute(def: &FirstOrderDef, s: &SectionGerm) -> FirstOrderDef {
    let (max_x, max_y) = def.base.max_exponents();
    let one = Dual {
        re: BiPoly::one(),
        eps: BiPoly::zero(),
    };
    let sx = Dual {
        re: BiPoly::x(),
        eps: s.a.clone(),
    };
    let sy = Dual {
        re: BiPoly::y(),
        eps: s.b.clone(),
    };
    let px = powers(&sx, max_x, one.clone(), Dual::mul);
    let py = powers(&sy, max_y, one, Dual::mul);

    let mut re = BiPoly::zero();
    let mut eps = BiPoly::zero();
    for (mono, c) in def.base.terms() {
        let t = px[mono.x as usize].mul(&py[mono.y as usize]);
        re = &re + &t.re.scale(c);
        eps = &eps + &t.eps.scale(c);
    }
    // ε·g(x + εa, y + εb) = ε·g(x, y) once ε² = 0.
    eps = &eps + &def.direction;
    FirstOrderDef::new(re, eps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, u32, u32)]) -> BiPoly {
        BiPoly::from_coeffs(terms)
    }

    #[test]
    fn add_examples() {
        assert!((p(&[(1, 1, 0)]) + p(&[(-1, 1, 0)])).is_zero());
        assert_eq!(p(&[(1, 0, 2), (-1, 3, 0)]) + p(&[(1, 3, 0)]), p(&[(1, 0, 2)]));
        let half_y = BiPoly::monomial(ratio(1, 2), 0, 1);
        let lhs = &(&p(&[(1, 1, 1)]) + &half_y) + &half_y;
        assert_eq!(lhs, p(&[(1, 1, 1), (1, 0, 1)]));
    }

    #[test]
    fn mul_examples() {
        let sum = p(&[(1, 1, 0), (1, 0, 1)]);
        let diff = p(&[(1, 1, 0), (-1, 0, 1)]);
        assert_eq!(sum * diff, p(&[(1, 2, 0), (-1, 0, 2)]));
        assert!((p(&[(3, 2, 1)]) * BiPoly::zero()).is_zero());
        assert_eq!(p(&[(1, 0, 1)]) * p(&[(2, 0, 1)]), p(&[(2, 0, 2)]));
    }

    #[test]
    fn partial_examples() {
        let cusp = p(&[(1, 0, 2), (-1, 3, 0)]);
        assert_eq!(cusp.partial(Var::X), p(&[(-3, 2, 0)]));
        assert_eq!(cusp.partial(Var::Y), p(&[(2, 0, 1)]));
        assert_eq!(p(&[(1, 1, 1)]).partial(Var::X), p(&[(1, 0, 1)]));
    }

    #[test]
    fn order_examples() {
        assert_eq!(p(&[(1, 0, 2), (-1, 3, 0)]).order(), Ok(2));
        assert_eq!(p(&[(1, 5, 0), (1, 0, 3)]).order(), Ok(3));
        assert_eq!(p(&[(7, 0, 0)]).order(), Ok(0));
        assert_eq!(BiPoly::zero().order(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn jet_examples() {
        let cusp = p(&[(1, 0, 2), (-1, 3, 0)]);
        assert_eq!(cusp.jet(2), p(&[(1, 0, 2)]));
        assert_eq!(cusp.jet(3), cusp);
        assert!(cusp.jet(-1).is_zero());
        let f = p(&[(1, 1, 1), (1, 3, 0), (1, 0, 4)]);
        assert_eq!(f.jet(3), p(&[(1, 1, 1), (1, 3, 0)]));
    }

    #[test]
    fn homogeneous_part_examples() {
        assert_eq!(p(&[(1, 0, 2), (-1, 3, 0)]).homogeneous_part(2), p(&[(1, 0, 2)]));
        assert_eq!(p(&[(1, 1, 1), (1, 3, 0)]).homogeneous_part(2), p(&[(1, 1, 1)]));
        let f = p(&[(2, 0, 0), (1, 1, 1), (1, 3, 0), (-4, 1, 2)]);
        for k in 0..5u32 {
            assert_eq!(f.homogeneous_part(k), f.jet(k.into()) - f.jet(i64::from(k) - 1));
        }
    }

    #[test]
    fn substitute_examples() {
        let xy = p(&[(1, 1, 1)]);
        let x_plus_y = p(&[(1, 1, 0), (1, 0, 1)]);
        assert_eq!(xy.substitute(&x_plus_y, &BiPoly::y()), p(&[(1, 1, 1), (1, 0, 2)]));
        let f = p(&[(3, 2, 1), (-1, 0, 4), (5, 0, 0)]);
        assert_eq!(f.substitute(&BiPoly::x(), &BiPoly::y()), f);
        assert_eq!(p(&[(1, 0, 2)]).substitute(&BiPoly::y(), &BiPoly::x()), p(&[(1, 2, 0)]));
    }

    #[test]
    fn dual_substitute_examples() {
        let f = p(&[(1, 0, 2), (-1, 3, 0), (2, 1, 1)]);
        let shifted = dual_substitute(
            &FirstOrderDef::new(f.clone(), BiPoly::zero()),
            &SectionGerm::new(BiPoly::one(), BiPoly::zero()),
        );
        assert_eq!(shifted, FirstOrderDef::new(f.clone(), f.partial(Var::X)));

        let b = p(&[(3, 0, 0), (1, 1, 0)]);
        let shifted = dual_substitute(
            &FirstOrderDef::new(p(&[(1, 0, 2)]), BiPoly::zero()),
            &SectionGerm::new(BiPoly::zero(), b.clone()),
        );
        assert_eq!(shifted.direction, (b * p(&[(2, 0, 1)])));

        let g = p(&[(1, 1, 0), (-2, 2, 2)]);
        let def = FirstOrderDef::new(f, g);
        assert_eq!(dual_substitute(&def, &SectionGerm::zero()), def);
    }

    #[test]
    fn canonical_order_is_graded_lex() {
        let f = p(&[(1, 0, 2), (1, 2, 0), (1, 1, 1), (1, 0, 0), (1, 0, 1), (1, 1, 0)]);
        let monos: Vec<_> = f.terms().map(|(m, _)| (m.x, m.y)).collect();
        assert_eq!(monos, vec![(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(1, 0, 2), (-1, 3, 0)]).to_string(), "y^2 - x^3");
        let f = BiPoly::monomial(ratio(3, 2), 2, 1) - BiPoly::y();
        assert_eq!(f.to_string(), "-y + 3/2*x^2*y");
        assert_eq!(BiPoly::zero().to_string(), "0");
        assert_eq!(p(&[(-1, 0, 0)]).to_string(), "-1");
    }
}
