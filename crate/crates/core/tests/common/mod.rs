#![allow(dead_code)]

use equimult_core::poly::{ratio, BiPoly, Monomial, Rational};
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=6, 1i64..=3, any::<bool>()).prop_map(|(n, d, neg)| ratio(if neg { -n } else { n }, d))
}

/// Polynomial with terms of total degree in `lo..=hi`.
pub fn poly_in_degrees(lo: u32, hi: u32, max_terms: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0u32..=hi), (0u32..=hi), small_rational()), 0..=max_terms).prop_map(
        move |terms| {
            BiPoly::from_terms(terms.into_iter().filter_map(|(i, j, c)| {
                let deg = i + j;
                (lo..=hi).contains(&deg).then_some((Monomial::new(i, j), c))
            }))
        },
    )
}

pub fn any_poly() -> impl Strategy<Value = BiPoly> {
    poly_in_degrees(0, 4, 6)
}

/// Nonzero degree-`m` binary form, a unitangential one `c·(αx+βy)^m` about
/// half of the time.
pub fn tangent_cone(m: u32) -> impl Strategy<Value = BiPoly> {
    let power = (nonzero_rational(), small_rational(), small_rational())
        .prop_filter("nonzero linear form", |(_, a, b)| !(num_traits::Zero::is_zero(a) && num_traits::Zero::is_zero(b)))
        .prop_map(move |(c, a, b)| {
            let lin = &BiPoly::monomial(a, 1, 0) + &BiPoly::monomial(b, 0, 1);
            lin.pow(m).scale(&c)
        });
    let generic = prop::collection::vec(small_rational(), (m + 1) as usize)
        .prop_map(move |cs| {
            BiPoly::from_terms(cs.into_iter().enumerate().map(|(k, c)| (Monomial::new(m - k as u32, k as u32), c)))
        })
        .prop_filter("nonzero form", |p| !p.is_zero());
    prop_oneof![power, generic]
}

/// Germ of multiplicity exactly `m` with higher terms up to degree `m + 2`.
pub fn germ_of_order(m: u32) -> impl Strategy<Value = BiPoly> {
    (tangent_cone(m), poly_in_degrees(m + 1, m + 2, 4)).prop_map(|(cone, tail)| &cone + &tail)
}

pub fn germ(max_m: u32) -> impl Strategy<Value = BiPoly> {
    (1..=max_m).prop_flat_map(germ_of_order)
}

/// Invertible linear substitution `(x, y) ↦ (p x + q y, r x + s y)`.
pub fn linear_change() -> impl Strategy<Value = (BiPoly, BiPoly)> {
    (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3)
        .prop_filter("invertible", |(p, q, r, s)| p * s - q * r != 0)
        .prop_map(|(p, q, r, s)| {
            (
                BiPoly::from_coeffs(&[(p, 1, 0), (q, 0, 1)]),
                BiPoly::from_coeffs(&[(r, 1, 0), (s, 0, 1)]),
            )
        })
}
