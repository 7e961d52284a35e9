//! Randomized property suites for the exact arithmetic layer and the
//! bundle calculus.

use acmgate_core::bundle::{chi_rank2, chi_rank2_sextic, BundleInvariants, HypersurfaceContext};
use acmgate_core::dims::{binom4, hdim};
use acmgate_core::poly::Poly;
use acmgate_core::unipoly::UniPoly;
use acmgate_core::{frac, rat, Rational};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| frac(n, d))
}

fn small_poly() -> impl Strategy<Value = Poly> {
    let term = (small_rational(), 0u32..3, 0u32..3).prop_map(|(c, ex, ey)| {
        Poly::constant(c) * Poly::var("x").pow(ex) * Poly::var("y").pow(ey)
    });
    proptest::collection::vec(term, 0..5)
        .prop_map(|ts| ts.into_iter().fold(Poly::zero(), |acc, t| acc + t))
}

proptest! {
    #[test]
    fn poly_addition_commutes_and_associates(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
    }

    #[test]
    fn poly_multiplication_associates_and_distributes(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn poly_has_additive_inverses(a in small_poly()) {
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + Poly::zero(), a.clone());
        prop_assert_eq!(&a * Poly::int(1), a);
    }

    #[test]
    fn hilbert_polynomial_matches_dimension_count(s in -8i64..8, n in -12i64..12) {
        // agreement for n+s >= -4 (including the four polynomial roots),
        // disagreement strictly below
        let poly = UniPoly::hdim_shifted(s).eval_int(n);
        let dim = Rational::from_integer(hdim(n + s));
        if n + s >= -4 {
            prop_assert_eq!(poly, dim);
        } else {
            prop_assert_ne!(poly, dim);
        }
    }

    #[test]
    fn binom4_equals_shifted_hdim(m in -30i64..40) {
        prop_assert_eq!(binom4(m), hdim(m - 4));
    }

    #[test]
    fn twist_composition(c1 in -6i64..=6, c2 in -30i64..=30, r in 3i64..=9, m in -5i64..=5, n in -5i64..=5) {
        let ctx = HypersurfaceContext::new(r).unwrap();
        let e = BundleInvariants::new(ctx, c1, Poly::int(c2));
        prop_assert_eq!(e.twist(m).twist(n), e.twist(m + n));
    }

    #[test]
    fn chi_specialization_on_the_sextic(c1 in -10i64..=10) {
        let ctx = HypersurfaceContext::sextic();
        let c2 = Poly::var("c2");
        let full = chi_rank2(&BundleInvariants::new(ctx, c1, c2.clone()));
        prop_assert_eq!(full, chi_rank2_sextic(c1, &c2));
    }

    #[test]
    fn split_bundle_chi_additivity(r in 3i64..=8, a in -6i64..=6, b in -6i64..=6) {
        let ctx = HypersurfaceContext::new(r).unwrap();
        let inv = BundleInvariants::new(ctx, a + b, Poly::int(a * b * r));
        let expected = ctx.chi_ox(a) + ctx.chi_ox(b);
        prop_assert_eq!(chi_rank2(&inv), Poly::constant(Rational::from_integer(expected)));
    }

    #[test]
    fn substitution_commutes_with_evaluation(p in small_poly(), vx in -5i64..=5, vy in -5i64..=5) {
        let direct = {
            let mut asn = std::collections::BTreeMap::new();
            asn.insert("x".to_string(), rat(vx));
            asn.insert("y".to_string(), rat(vy));
            p.eval(&asn).unwrap()
        };
        let staged = p
            .substitute("x", &Poly::int(vx))
            .substitute("y", &Poly::int(vy))
            .as_constant()
            .unwrap();
        prop_assert_eq!(direct, staged);
    }
}
