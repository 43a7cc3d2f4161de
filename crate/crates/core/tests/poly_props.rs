mod common;

use common::{any_poly, linear_change, poly_in_degrees};
use equimult_core::poly::{dual_substitute, BiPoly, FirstOrderDef, Rational, SectionGerm, Var};
use num_traits::Zero;
use proptest::prelude::*;

/// Inverse of the 2×2 substitution matrix, as a substitution.
fn inverse_change(sx: &BiPoly, sy: &BiPoly) -> (BiPoly, BiPoly) {
    let (p, q) = (sx.coeff(1, 0), sx.coeff(0, 1));
    let (r, s) = (sy.coeff(1, 0), sy.coeff(0, 1));
    let det = &p * &s - &q * &r;
    let lin = |a: Rational, b: Rational| {
        &BiPoly::monomial(a / &det, 1, 0) + &BiPoly::monomial(b / &det, 0, 1)
    };
    (lin(s.clone(), -q.clone()), lin(-r, p))
}

proptest! {
    #[test]
    fn ring_axioms(p in any_poly(), q in any_poly(), r in any_poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn order_is_additive(p in any_poly(), q in any_poly()) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        prop_assert_eq!((&p * &q).order().unwrap(), p.order().unwrap() + q.order().unwrap());
    }

    #[test]
    fn jet_of_jet(p in any_poly(), k in -1i64..6, k2 in -1i64..6) {
        prop_assert_eq!(p.jet(k).jet(k2), p.jet(k.min(k2)));
    }

    #[test]
    fn no_zero_coefficients_stored(p in any_poly(), q in any_poly()) {
        for (_, c) in (&p * &q).terms().chain((&p - &q).terms()) {
            prop_assert!(!c.is_zero());
        }
    }

    #[test]
    fn linear_change_round_trip(p in any_poly(), (sx, sy) in linear_change()) {
        let (ix, iy) = inverse_change(&sx, &sy);
        let back = p.substitute(&sx, &sy).substitute(&ix, &iy);
        prop_assert_eq!(back, p);
    }

    /// f + ε(a·f_x + b·f_y + h) = f(x_a, y_b) + ε·h(x_a, y_b).
    #[test]
    fn taylor_identity(
        f in poly_in_degrees(1, 5, 6),
        a in poly_in_degrees(0, 3, 4),
        b in poly_in_degrees(0, 3, 4),
        h in poly_in_degrees(0, 4, 4),
    ) {
        let s = SectionGerm::new(a.clone(), b.clone());
        let lhs_dir = &(&(&a * &f.partial(Var::X)) + &(&b * &f.partial(Var::Y))) + &h;
        let lhs = FirstOrderDef::new(f.clone(), lhs_dir);
        let rhs = dual_substitute(&FirstOrderDef::new(f.clone(), h.clone()), &s);
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(dual_substitute(&lhs, &s.inverse()), FirstOrderDef::new(f, h));
    }

    #[test]
    fn substitute_identity(p in any_poly()) {
        prop_assert_eq!(p.substitute(&BiPoly::x(), &BiPoly::y()), p.clone());
        prop_assert_eq!(p.substitute(&BiPoly::one(), &BiPoly::one()).constant_term(),
            p.terms().fold(Rational::zero(), |acc, (_, c)| acc + c));
    }
}
