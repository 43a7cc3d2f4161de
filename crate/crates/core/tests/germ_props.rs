mod common;

use common::{germ, germ_of_order, linear_change, poly_in_degrees, small_rational};
use equimult_core::defo::{
    admits_section, is_equimultiple_along, is_equimultiple_along_direct, solve_sections,
};
use equimult_core::jets::jet_dim;
use equimult_core::linalg;
use equimult_core::poly::{BiPoly, Rational, SectionGerm, Var};
use equimult_core::singular::{is_unitangential_binomial, CurveGerm};
use num_traits::Zero;
use proptest::prelude::*;

/// Colength of `⟨u·f_x, u·f_y : deg u ≤ m⟩ + ⟨x,y⟩^m`, spanning every
/// monomial multiple rather than just the two generators.
fn brute_force_deg_z(f: &BiPoly, m: u32) -> usize {
    let monos: Vec<(u32, u32)> = (0..m).flat_map(|d| (0..=d).map(move |i| (i, d - i))).collect();
    let mut rows = Vec::new();
    for var in [Var::X, Var::Y] {
        let d = f.partial(var);
        for deg in 0..=m {
            for i in 0..=deg {
                let u = BiPoly::monomial(num_traits::One::one(), i, deg - i);
                let prod = &u * &d;
                rows.push(monos.iter().map(|&(a, b)| prod.coeff(a, b)).collect::<Vec<Rational>>());
            }
        }
    }
    monos.len() - linalg::rank(rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn deg_z_formula_against_binomial_oracle(f in germ(6)) {
        let g = CurveGerm::new(f.clone()).unwrap();
        let m = g.multiplicity();
        let expected = if is_unitangential_binomial(&f).unwrap() { jet_dim(m) - 1 } else { jet_dim(m) - 2 };
        prop_assert_eq!(g.deg_z(), expected);
        prop_assert_eq!(g.is_unitangential(), is_unitangential_binomial(&f).unwrap());
    }

    #[test]
    fn euler_lower_bound_and_ambiguity(f in germ(6)) {
        let g = CurveGerm::new(f).unwrap();
        let rank = g.equimult_ideal_jet().rank();
        prop_assert!((1..=2).contains(&rank));
        prop_assert_eq!(g.section_ambiguity() == 1, g.is_unitangential());
        let r = g.analyze();
        prop_assert_eq!(r.deg_z, jet_dim(r.m) - rank);
        prop_assert_eq!(r.ambiguity, 2 - rank);
    }

    #[test]
    fn brute_force_colength(f in germ(4)) {
        let g = CurveGerm::new(f.clone()).unwrap();
        prop_assert_eq!(g.deg_z(), brute_force_deg_z(&f, g.multiplicity()));
    }

    #[test]
    fn coordinate_invariance(f in germ(5), (sx, sy) in linear_change()) {
        let a = CurveGerm::new(f.clone()).unwrap();
        let b = CurveGerm::new(f.substitute(&sx, &sy)).unwrap();
        prop_assert_eq!(a.multiplicity(), b.multiplicity());
        prop_assert_eq!(a.deg_z(), b.deg_z());
        prop_assert_eq!(a.is_unitangential(), b.is_unitangential());
        prop_assert_eq!(a.section_ambiguity(), b.section_ambiguity());
    }

    #[test]
    fn criterion_matches_direct_check(
        f in germ(4),
        g in poly_in_degrees(0, 5, 6),
        a in poly_in_degrees(0, 3, 4),
        b in poly_in_degrees(0, 3, 4),
    ) {
        let s = SectionGerm::new(a, b);
        let alg = is_equimultiple_along(&f, &g, &s).unwrap();
        prop_assert_eq!(alg, is_equimultiple_along_direct(&f, &g, &s).unwrap());
        prop_assert_eq!(alg, is_equimultiple_along(&f, &g, &s.constant_part()).unwrap());
    }

    /// Deformations built as `a₀·f_x + b₀·f_y + h` always admit a section, so
    /// the admissible branch gets exercised as much as the generic one.
    #[test]
    fn solver_sound_and_complete(
        f in germ(4),
        a0 in small_rational(),
        b0 in small_rational(),
        h in poly_in_degrees(0, 6, 5),
        admissible in any::<bool>(),
        probe in (small_rational(), small_rational()),
    ) {
        let m = f.order().unwrap();
        let g = if admissible {
            let tail = h.filter_degree_at_least(m);
            &(&f.partial(Var::X).scale(&a0) + &f.partial(Var::Y).scale(&b0)) + &tail
        } else {
            h
        };
        let sol = solve_sections(&f, &g).unwrap();
        prop_assert_eq!(admits_section(&f, &g).unwrap(), !sol.is_empty());
        if admissible {
            prop_assert!(!sol.is_empty());
            prop_assert!(sol.contains(&a0, &b0));
        }
        if let Some(p) = sol.solutions.particular() {
            let germ = CurveGerm::new(f.clone()).unwrap();
            prop_assert_eq!(sol.dimension(), Some(germ.section_ambiguity()));
            let mut points = vec![p.to_vec()];
            for d in sol.solutions.directions() {
                points.push(p.iter().zip(d).map(|(x, y)| x + y * Rational::from_integer(3.into())).collect());
            }
            for pt in points {
                let s = SectionGerm::new(BiPoly::constant(pt[0].clone()), BiPoly::constant(pt[1].clone()));
                prop_assert!(is_equimultiple_along(&f, &g, &s).unwrap());
            }
        }
        let (pa, pb) = probe;
        let s = SectionGerm::new(BiPoly::constant(pa.clone()), BiPoly::constant(pb.clone()));
        prop_assert_eq!(sol.contains(&pa, &pb), is_equimultiple_along(&f, &g, &s).unwrap());
    }

    #[test]
    fn trivial_deformation(f in germ(5)) {
        prop_assert!(admits_section(&f, &f).unwrap());
        prop_assert!(is_equimultiple_along(&f, &f, &SectionGerm::zero()).unwrap());
        prop_assert!(solve_sections(&f, &f).unwrap().contains(&Rational::zero(), &Rational::zero()));
    }

    /// Terms of degree above `m` never change the ideal image.
    #[test]
    fn ideal_image_sees_only_the_cone(
        (f, tail) in (1u32..=5).prop_flat_map(|m| (germ_of_order(m), poly_in_degrees(m + 1, m + 3, 4)))
    ) {
        let g = CurveGerm::new(f.clone()).unwrap();
        let h = CurveGerm::new(&f + &tail).unwrap();
        prop_assert_eq!(g.equimult_ideal_jet(), h.equimult_ideal_jet());
        let cone = CurveGerm::new(g.tangent_cone()).unwrap();
        prop_assert_eq!(g.equimult_ideal_jet(), cone.equimult_ideal_jet());
    }
}

trait DegreeFilter {
    fn filter_degree_at_least(&self, m: u32) -> BiPoly;
}

impl DegreeFilter for BiPoly {
    fn filter_degree_at_least(&self, m: u32) -> BiPoly {
        self - &self.jet(i64::from(m) - 1)
    }
}
