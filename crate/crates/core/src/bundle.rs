//! Chern-class and Euler-characteristic calculus for rank-2 bundles on a
//! smooth degree-r hypersurface X in P^4.
//!
//! Line bundles on X are identified with integers (Picard group Z for r >= 3
//! and X general). The Euler characteristic of a rank-2 bundle is carried as
//! a closed-form polynomial, linear in c2; no bundle cohomology is computed
//! here beyond the h^0 of line bundles on X, which the restriction sequence
//! from P^4 gives exactly.

use crate::dims::hdim;
use crate::poly::Poly;
use crate::{frac, rat, Error, Int, Rational};

/// A smooth hypersurface X of degree r >= 3 in P^4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HypersurfaceContext {
    degree: i64,
}

impl HypersurfaceContext {
    pub fn new(degree: i64) -> Result<Self, Error> {
        if degree < 3 {
            return Err(Error::InvalidDegree(degree));
        }
        Ok(HypersurfaceContext { degree })
    }

    /// The sextic threefold, the case the fixed tables are about.
    pub fn sextic() -> Self {
        HypersurfaceContext { degree: 6 }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// omega_X = O_X(r - 5).
    pub fn canonical_twist(&self) -> i64 {
        self.degree - 5
    }

    /// Dimension of the projective space of degree-r hypersurfaces in P^4:
    /// hdim(r) - 1 (209 for the sextic).
    pub fn parameter_space_dim(&self) -> Int {
        hdim(self.degree) - 1
    }

    /// h^0(O_X(n)) = hdim(n) - hdim(n - r), from the restriction sequence.
    pub fn h0_ox(&self, n: i64) -> Int {
        hdim(n) - hdim(n - self.degree)
    }

    /// chi(O_X(n)) = h^0(O_X(n)) - h^3(O_X(n)); the middle cohomology of a
    /// line bundle on X vanishes, and Serre duality turns h^3 into an h^0.
    pub fn chi_ox(&self, n: i64) -> Int {
        self.h0_ox(n) - self.h0_ox(self.canonical_twist() - n)
    }

    /// Admissible c1 for an indecomposable normalized rank-2 ACM bundle:
    /// the integers strictly between 2 - r and r.
    pub fn madonna_range(&self) -> Vec<i64> {
        (3 - self.degree..self.degree).collect()
    }
}

/// Chern data (c1, c2) of a rank-2 bundle on X; c2 may be symbolic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleInvariants {
    pub c1: i64,
    pub c2: Poly,
    pub context: HypersurfaceContext,
}

impl BundleInvariants {
    pub fn new(context: HypersurfaceContext, c1: i64, c2: Poly) -> Self {
        BundleInvariants { c1, c2, context }
    }

    /// Chern classes of E(n): c1 + 2n and c2 + r*n*c1 + r*n^2.
    pub fn twist(&self, n: i64) -> BundleInvariants {
        let r = self.context.degree;
        BundleInvariants {
            c1: self.c1 + 2 * n,
            c2: &self.c2 + &Poly::int(r * n * self.c1 + r * n * n),
            context: self.context,
        }
    }

    /// The twist m with h^3(E(n)) = h^0(E(m)), i.e. m = -c1 - n + r - 5
    /// (Serre duality plus E^vee = E(-c1) for rank 2).
    pub fn h3_dual_twist(&self, n: i64) -> i64 {
        -self.c1 - n + self.context.degree - 5
    }
}

/// Riemann–Roch on X: the Euler characteristic of a rank-2 bundle with the
/// given Chern data, exact and linear in c2.
pub fn chi_rank2(inv: &BundleInvariants) -> Poly {
    let r = inv.context.degree;
    let c1 = inv.c1;
    let constant = frac(r * c1 * c1 * c1, 6)
        + frac((5 - r) * r * c1 * c1, 4)
        + frac(r * c1 * (2 * r * r - 15 * r + 35), 12)
        + frac(r * (-r * r * r + 10 * r * r - 35 * r + 50), 12);
    let c2_coeff = chi_c2_coefficient(r, c1);
    Poly::constant(constant) + inv.c2.scale(&c2_coeff)
}

/// Coefficient of c2 in `chi_rank2`: (r - 5 - c1) / 2.
pub fn chi_c2_coefficient(r: i64, c1: i64) -> Rational {
    frac(r - 5 - c1, 2)
}

/// The sextic specialization of `chi_rank2`:
/// c1^3 - (3/2)c1^2 + c2/2 - c1*c2/2 + (17/2)c1 - 8.
pub fn chi_rank2_sextic(c1: i64, c2: &Poly) -> Poly {
    let constant = rat(c1 * c1 * c1) - frac(3 * c1 * c1, 2) + frac(17 * c1, 2) - rat(8);
    Poly::constant(constant) + c2.scale(&(frac(1, 2) - frac(c1, 2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sextic(c1: i64, c2: i64) -> BundleInvariants {
        BundleInvariants::new(HypersurfaceContext::sextic(), c1, Poly::int(c2))
    }

    #[test]
    fn chi_at_known_points() {
        assert_eq!(chi_rank2(&sextic(0, 0)), Poly::int(-8));
        // split bundle O_X(1) + O_X(1): chi = 4 + 4
        assert_eq!(chi_rank2(&sextic(2, 6)), Poly::int(8));
        // O_X + O_X(1): chi = -4 + 4
        assert_eq!(chi_rank2(&sextic(1, 0)), Poly::int(0));
        assert_eq!(chi_rank2_sextic(5, &Poly::int(55)), Poly::int(12));
    }

    #[test]
    fn sextic_specialization_is_an_identity_in_c2() {
        let c2 = Poly::var("c2");
        for c1 in -10..=10 {
            let full = chi_rank2(&BundleInvariants::new(
                HypersurfaceContext::sextic(),
                c1,
                c2.clone(),
            ));
            assert_eq!(full, chi_rank2_sextic(c1, &c2), "c1 = {c1}");
        }
    }

    #[test]
    fn twist_formulas() {
        let e = BundleInvariants::new(HypersurfaceContext::sextic(), -3, Poly::int(1));
        let t = e.twist(3);
        assert_eq!((t.c1, t.c2.clone()), (3, Poly::int(1)));
        let e = sextic(-1, 5);
        let t = e.twist(2);
        assert_eq!((t.c1, t.c2.clone()), (3, Poly::int(17)));
        assert_eq!(e.twist(0), e);
    }

    #[test]
    fn twist_composes_and_preserves_stability_level() {
        let e = sextic(1, 7);
        for m in -4..=4 {
            for n in -4..=4 {
                assert_eq!(e.twist(m).twist(n), e.twist(m + n));
                // c1(E(n)) - 2n recovers c1(E): the stability level 2b - c1
                // is twist-invariant.
                assert_eq!(e.twist(n).c1 - 2 * n, e.c1);
            }
        }
    }

    #[test]
    fn h3_dual_twists() {
        let ctx = HypersurfaceContext::sextic();
        assert_eq!(BundleInvariants::new(ctx, -3, Poly::int(1)).h3_dual_twist(3), 1);
        assert_eq!(BundleInvariants::new(ctx, 5, Poly::int(55)).h3_dual_twist(0), -4);
        for r in 3..10 {
            let ctx = HypersurfaceContext::new(r).unwrap();
            let e = BundleInvariants::new(ctx, 0, Poly::zero());
            assert_eq!(e.h3_dual_twist(r - 5), 0);
        }
    }

    #[test]
    fn h0_ox_values() {
        let x = HypersurfaceContext::sextic();
        assert_eq!(x.h0_ox(1), 5.into());
        assert_eq!(x.h0_ox(-1), 0.into());
        assert_eq!(x.h0_ox(6), 209.into());
        assert_eq!(x.parameter_space_dim(), 209.into());
    }

    #[test]
    fn madonna_ranges() {
        assert_eq!(
            HypersurfaceContext::sextic().madonna_range(),
            vec![-3, -2, -1, 0, 1, 2, 3, 4, 5]
        );
        assert_eq!(HypersurfaceContext::new(3).unwrap().madonna_range(), vec![0, 1, 2]);
        assert_eq!(
            HypersurfaceContext::new(4).unwrap().madonna_range(),
            vec![-1, 0, 1, 2, 3]
        );
        assert!(HypersurfaceContext::new(2).is_err());
    }

    #[test]
    fn split_bundle_additivity() {
        // chi of O_X(a) + O_X(b) computed two ways.
        for r in 3..=8 {
            let ctx = HypersurfaceContext::new(r).unwrap();
            for a in -6..=6 {
                for b in -6..=6 {
                    let inv = BundleInvariants::new(ctx, a + b, Poly::int(a * b * r));
                    let direct = ctx.chi_ox(a) + ctx.chi_ox(b);
                    assert_eq!(
                        chi_rank2(&inv),
                        Poly::constant(Rational::from_integer(direct)),
                        "r={r} a={a} b={b}"
                    );
                }
            }
        }
    }
}
