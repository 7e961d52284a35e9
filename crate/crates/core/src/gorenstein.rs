//! Self-dual graded Betti tables of subcanonical ACM curves in P^4, the
//! section counts they determine, the normal-bundle dimension formula, and
//! the Hilbert-flag dimension gate.
//!
//! An e-subcanonical ACM curve has a length-3 minimal free resolution of its
//! ideal sheaf that is self-dual up to twist: generators O(-a_i) pair with
//! syzygies O(-b_i), b_i = e + 5 - a_i, and the resolution ends in the rank-1
//! summand O(-e-5). Multiplicities may be symbolic: several of the fixed
//! curve families leave a Betti number undetermined, and the point of the
//! calculus is that the undetermined part cancels out of every count that
//! the dimension gate needs.

use crate::dims::{binom4, hdim};
use crate::linear::{self, ReducedSystem};
use crate::poly::Poly;
use crate::unipoly::UniPoly;
use crate::{frac, rat, Error, Rational};
use num::Signed;
use std::fmt;

/// Degree, arithmetic genus, and subcanonical level of a curve in P^4
/// (omega_C = O_C(e)). Degree and genus may be symbolic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveInvariants {
    pub degree: Poly,
    pub genus: Poly,
    pub e: i64,
}

impl CurveInvariants {
    pub fn new(degree: Poly, genus: Poly, e: i64) -> Self {
        CurveInvariants { degree, genus, e }
    }

    pub fn of_integers(d: i64, g: i64, e: i64) -> Self {
        CurveInvariants::new(Poly::int(d), Poly::int(g), e)
    }

    /// Invariants of the zero locus of a normalized bundle on the sextic
    /// with the given c1 and degree: e = c1 + 1 and g = 1 + (c1+1)d/2.
    pub fn sextic_section_curve(c1: i64, degree: Poly) -> Self {
        let genus = Poly::int(1) + degree.scale(&frac(c1 + 1, 2));
        CurveInvariants { degree, genus, e: c1 + 1 }
    }

    /// Checks 2g - 2 = e*d whenever both sides are determined.
    pub fn is_consistent(&self) -> bool {
        let lhs = self.genus.scale(&rat(2)) - Poly::int(2);
        let rhs = self.degree.scale(&rat(self.e));
        lhs == rhs
    }
}

/// One generator/syzygy pair of a self-dual resolution: `mult` generators in
/// degree `a`, paired with `mult` syzygies in degree e + 5 - a.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiPair {
    pub a: i64,
    pub mult: Poly,
}

/// Self-dual three-step resolution
/// `0 -> O(-e-5) -> (+) O(-b_i) -> (+) O(-a_i) -> I -> 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinResolution {
    pub e: i64,
    pub pairs: Vec<BettiPair>,
}

impl GorensteinResolution {
    pub fn new(e: i64, pairs: Vec<(i64, Poly)>) -> Result<Self, Error> {
        for (a, mult) in &pairs {
            if let Some(c) = mult.as_constant() {
                if c.is_negative() {
                    return Err(Error::NegativeMultiplicity { twist: *a, mult: c.to_string() });
                }
            }
        }
        Ok(GorensteinResolution {
            e,
            pairs: pairs.into_iter().map(|(a, mult)| BettiPair { a, mult }).collect(),
        })
    }

    pub fn with_integer_mults(e: i64, pairs: &[(i64, i64)]) -> Self {
        GorensteinResolution::new(e, pairs.iter().map(|&(a, m)| (a, Poly::int(m))).collect())
            .expect("integer multiplicities are checked by the caller")
    }

    /// The Koszul resolution of a complete intersection curve of the given
    /// type, which is always self-dual with e = d1 + d2 + d3 - 5.
    pub fn complete_intersection(d1: i64, d2: i64, d3: i64) -> Self {
        assert!(d1 >= 1 && d2 >= 1 && d3 >= 1);
        let e = d1 + d2 + d3 - 5;
        let mut pairs: Vec<BettiPair> = Vec::new();
        for a in [d1, d2, d3] {
            match pairs.iter_mut().find(|p| p.a == a) {
                Some(p) => p.mult += Poly::int(1),
                None => pairs.push(BettiPair { a, mult: Poly::int(1) }),
            }
        }
        GorensteinResolution { e, pairs }
    }

    /// Syzygy degree paired with generator degree a.
    pub fn b(&self, a: i64) -> i64 {
        self.e + 5 - a
    }

    /// Twist of the final rank-1 summand.
    pub fn top_twist(&self) -> i64 {
        self.e + 5
    }

    /// Pairs sorted by ascending generator degree (ties keep input order;
    /// the counts below only ever use unordered pairs, so ties cannot
    /// change any value).
    fn sorted_pairs(&self) -> Vec<&BettiPair> {
        let mut v: Vec<&BettiPair> = self.pairs.iter().collect();
        v.sort_by_key(|p| p.a);
        v
    }

    /// All unknown names appearing in the multiplicities.
    pub fn unknowns(&self) -> Vec<String> {
        let mut seen = Vec::new();
        for p in &self.pairs {
            for u in p.mult.unknowns() {
                if !seen.contains(&u) {
                    seen.push(u);
                }
            }
        }
        seen
    }

    /// Applies substitutions to every multiplicity.
    pub fn substituted(&self, sys: &ReducedSystem) -> GorensteinResolution {
        GorensteinResolution {
            e: self.e,
            pairs: self
                .pairs
                .iter()
                .map(|p| BettiPair { a: p.a, mult: sys.apply(&p.mult) })
                .collect(),
        }
    }
}

impl fmt::Display for GorensteinResolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sorted = self.sorted_pairs();
        let show = |side: &mut String, twist: i64, mult: &Poly| {
            if !side.is_empty() {
                side.push_str(" + ");
            }
            if mult.as_constant() == Some(rat(1)) {
                side.push_str(&format!("O(-{twist})"));
            } else if let Some(c) = mult.as_constant() {
                side.push_str(&format!("O(-{twist})^{c}"));
            } else {
                side.push_str(&format!("O(-{twist})^({mult})"));
            }
        };
        let mut gens = String::new();
        let mut syz = String::new();
        for p in &sorted {
            show(&mut syz, self.b(p.a), &p.mult);
        }
        for p in sorted.iter().rev() {
            show(&mut gens, p.a, &p.mult);
        }
        write!(f, "0 -> O(-{}) -> {} -> {} -> I -> 0", self.top_twist(), syz, gens)
    }
}

/// h^0(I(n)) from the resolution: the alternating sum of the section counts
/// of the free summands. Exact for every n because the twisted structure
/// sheaves on P^4 have no intermediate cohomology.
pub fn h0_ideal(res: &GorensteinResolution, n: i64) -> Poly {
    let mut total = Poly::zero();
    for p in &res.pairs {
        let gens = hdim(n - p.a) - hdim(n - res.b(p.a));
        total += p.mult.scale(&Rational::from_integer(gens));
    }
    total + Poly::constant(Rational::from_integer(hdim(n - res.top_twist())))
}

/// h^0(O_C(n)) = hdim(n) - h^0(I(n)); valid for every n because C is ACM.
pub fn h0_curve(res: &GorensteinResolution, n: i64) -> Poly {
    Poly::constant(Rational::from_integer(hdim(n))) - h0_ideal(res, n)
}

/// h^0(O_C(n)) from (d, g, e) alone: 0 for n < 0, and n*d + 1 - g for n > e
/// (where O_C(n) is nonspecial by duality). Inside [0, e] the line bundle
/// can be special and a resolution is required.
pub fn h0_curve_from_invariants(inv: &CurveInvariants, n: i64) -> Result<Poly, Error> {
    if n < 0 {
        Ok(Poly::zero())
    } else if n > inv.e {
        Ok(inv.degree.scale(&rat(n)) + Poly::int(1) - &inv.genus)
    } else {
        Err(Error::SpecialRange { n, e: inv.e })
    }
}

/// Hilbert polynomial of h0_ideal as coefficients of n^0..n^4, each a
/// polynomial in the unknown multiplicities.
fn ideal_hilbert_coeffs(res: &GorensteinResolution) -> [Poly; 5] {
    let mut acc: [Poly; 5] = Default::default();
    let add = |coeffs: &mut [Poly; 5], u: &UniPoly, mult: &Poly| {
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c += mult.scale(&u.coefficient(k));
        }
    };
    for p in &res.pairs {
        let gens = UniPoly::hdim_shifted(-p.a) - UniPoly::hdim_shifted(-res.b(p.a));
        add(&mut acc, &gens, &p.mult);
    }
    add(&mut acc, &UniPoly::hdim_shifted(-res.top_twist()), &Poly::int(1));
    acc
}

/// Linear constraints on the unknown multiplicities obtained by matching the
/// Hilbert polynomial of the resolution against hdim(n) - (n*d + 1 - g).
///
/// Returned as canonical reduced rows (each `= 0`), multiplicity unknowns
/// eliminated first so degree/genus unknowns stay free parameters.
pub fn hilbert_constraints(
    res: &GorensteinResolution,
    inv: &CurveInvariants,
) -> Result<ReducedSystem, Error> {
    let lhs = ideal_hilbert_coeffs(res);
    // hdim(n) - (d*n + 1 - g)
    let h = UniPoly::hdim_shifted(0);
    let mut rhs: [Poly; 5] = Default::default();
    for (k, c) in rhs.iter_mut().enumerate() {
        *c = Poly::constant(h.coefficient(k));
    }
    rhs[1] -= &inv.degree;
    rhs[0] -= &(Poly::int(1) - &inv.genus);
    let equations: Vec<Poly> = (0..5).map(|k| &lhs[k] - &rhs[k]).collect();
    linear::reduce(&equations, &res.unknowns()).map_err(|e| match e {
        Error::Inconsistent(row) => Error::IncompatibleShape(row),
        other => other,
    })
}

/// h^0 of the normal bundle of C in P^4 from the self-dual resolution:
///
/// sum_i h^0(O_C(a_i)) + sum_{i<j} C(-a_i + b_j + 4, 4)
///   - sum_{i<j} C(a_i - b_j + 4, 4) - sum_i C(a_i + 4, 4)
///
/// over the generators counted with multiplicity, a ascending and b
/// paired in the reversed order (b_i = e + 5 - a_i). Both i<j summands are
/// symmetric in {i, j}, so they reduce to unordered pair counts:
/// mult*(mult-1)/2 within a block and mult_i*mult_j across blocks.
/// h^0(O_C(a_i)) is always taken from the resolution (`h0_curve`), which
/// handles special line bundles; plain Riemann–Roch would not.
pub fn h0_normal_bundle(res: &GorensteinResolution) -> Poly {
    let sorted = res.sorted_pairs();
    let mut total = Poly::zero();
    for p in &sorted {
        total += &p.mult * h0_curve(res, p.a);
        total -= &p.mult.scale(&Rational::from_integer(binom4(p.a + 4)));
    }
    let pair_term = |ai: i64, aj: i64| -> Rational {
        // C(-a_i + b_j + 4, 4) - C(a_i - b_j + 4, 4), symmetric in (i, j)
        let plus = binom4(-ai + res.b(aj) + 4);
        let minus = binom4(ai - res.b(aj) + 4);
        Rational::from_integer(plus - minus)
    };
    for (idx, p) in sorted.iter().enumerate() {
        // unordered pairs inside the block: mult*(mult-1)/2
        let within = (&p.mult * &p.mult - &p.mult).scale(&frac(1, 2));
        total += within.scale(&pair_term(p.a, p.a));
        for q in sorted.iter().skip(idx + 1) {
            total += (&p.mult * &q.mult).scale(&pair_term(p.a, q.a));
        }
    }
    total
}

/// Verdict of the dimension gate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// bound < ambient_dim identically: the incidence variety cannot
    /// dominate the space of hypersurfaces.
    DominantImpossible,
    /// bound is not a constant below ambient_dim; the residual expression
    /// is in the report.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::DominantImpossible => write!(f, "dominant-impossible"),
            Verdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Outcome of the dimension gate for one curve family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GateReport {
    pub h0_normal: Poly,
    pub h0_ideal_n: Poly,
    /// h0_normal + h0_ideal_n - 1, an upper bound for the dimension of the
    /// incidence variety.
    pub bound: Poly,
    pub ambient_dim: i64,
    pub verdict: Verdict,
}

/// Assembles a gate report from already-computed section counts.
pub fn gate_from_values(h0_normal: Poly, h0_ideal_n: Poly, ambient_dim: i64) -> GateReport {
    let bound = &h0_normal + &h0_ideal_n - Poly::int(1);
    let verdict = match bound.as_constant() {
        Some(c) if c < rat(ambient_dim) => Verdict::DominantImpossible,
        _ => Verdict::Inconclusive,
    };
    GateReport { h0_normal, h0_ideal_n, bound, ambient_dim, verdict }
}

/// The dimension gate at hypersurface degree n: applies the Hilbert
/// constraints, then tests h^0(N(C)) + h^0(I(n)) - 1 < ambient_dim.
///
/// For the sextic use n = 6 and ambient_dim = 209; in general ambient_dim
/// should be hdim(n) - 1.
pub fn flag_gate_at(
    res: &GorensteinResolution,
    inv: &CurveInvariants,
    n: i64,
    ambient_dim: i64,
) -> Result<GateReport, Error> {
    if res.pairs.is_empty() {
        return Err(Error::NoGenerators);
    }
    let constraints = hilbert_constraints(res, inv)?;
    let h0n = constraints.apply(&h0_normal_bundle(res));
    let h0i = constraints.apply(&h0_ideal(res, n));
    Ok(gate_from_values(h0n, h0i, ambient_dim))
}

/// The sextic dimension gate (n = 6).
pub fn flag_gate(
    res: &GorensteinResolution,
    inv: &CurveInvariants,
    ambient_dim: i64,
) -> Result<GateReport, Error> {
    flag_gate_at(res, inv, 6, ambient_dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;

    fn canonical_genus5() -> GorensteinResolution {
        GorensteinResolution::new(1, vec![(2, Poly::int(3)), (3, Poly::var("x"))]).unwrap()
    }

    fn degree55() -> GorensteinResolution {
        GorensteinResolution::with_integer_mults(6, &[(5, 11)])
    }

    fn degree14() -> GorensteinResolution {
        GorensteinResolution::with_integer_mults(3, &[(2, 3), (5, 2)])
    }

    #[test]
    fn ideal_section_counts() {
        assert_eq!(h0_ideal(&canonical_genus5(), 6), Poly::int(166));
        assert_eq!(h0_ideal(&degree55(), 6), Poly::int(44));
        assert_eq!(h0_ideal(&degree14(), 0), Poly::int(0));
        assert_eq!(h0_ideal(&degree14(), 6), Poly::int(147));
    }

    #[test]
    fn curve_section_counts() {
        assert_eq!(h0_curve(&degree55(), 5), Poly::int(115));
        assert_eq!(h0_curve(&degree14(), 2), Poly::int(12));
        assert_eq!(h0_curve(&degree14(), 0), Poly::int(1));
        assert_eq!(h0_curve(&canonical_genus5(), 0), Poly::int(1));
    }

    #[test]
    fn nonspecial_counts_from_invariants() {
        let inv = CurveInvariants::of_integers(14, 15, 2);
        assert_eq!(h0_curve_from_invariants(&inv, 6).unwrap(), Poly::int(70));
        let inv = CurveInvariants::of_integers(11, 12, 2);
        assert_eq!(h0_curve_from_invariants(&inv, 6).unwrap(), Poly::int(55));
        assert_eq!(h0_curve_from_invariants(&inv, -1).unwrap(), Poly::zero());
        assert!(matches!(
            h0_curve_from_invariants(&inv, 1),
            Err(Error::SpecialRange { n: 1, e: 2 })
        ));
    }

    #[test]
    fn normal_bundle_counts_with_cancellation() {
        let km = h0_normal_bundle(&canonical_genus5());
        assert_eq!(km, Poly::int(36)); // the unknown x cancels
        assert_eq!(h0_normal_bundle(&degree55()), Poly::int(154));
        assert_eq!(h0_normal_bundle(&degree14()), Poly::int(62));
        let c1_4 = GorensteinResolution::new(5, vec![(4, Poly::int(5)), (5, Poly::var("x"))])
            .unwrap();
        assert_eq!(h0_normal_bundle(&c1_4), Poly::int(125));
    }

    #[test]
    fn normal_bundle_of_complete_intersections() {
        let cubic = GorensteinResolution::complete_intersection(1, 1, 3);
        assert_eq!(h0_normal_bundle(&cubic), Poly::int(15));
        let quartic = GorensteinResolution::complete_intersection(1, 2, 2);
        assert_eq!(h0_normal_bundle(&quartic), Poly::int(20));
        let quintic = GorensteinResolution::with_integer_mults(0, &[(2, 5)]);
        assert_eq!(h0_normal_bundle(&quintic), Poly::int(25));
    }

    #[test]
    fn hilbert_constraints_solve_shapes() {
        // one pair of quintics: multiplicity forced to 11
        let res = GorensteinResolution::new(6, vec![(5, Poly::var("m"))]).unwrap();
        let inv = CurveInvariants::of_integers(55, 166, 6);
        let sys = hilbert_constraints(&res, &inv).unwrap();
        assert_eq!(sys.substitutions()["m"], Poly::int(11));

        // canonical genus-5 shape: quadric count forced to 3, x free
        let res = GorensteinResolution::new(1, vec![(2, Poly::var("c")), (3, Poly::var("x"))])
            .unwrap();
        let inv = CurveInvariants::of_integers(8, 5, 1);
        let sys = hilbert_constraints(&res, &inv).unwrap();
        assert_eq!(sys.substitutions()["c"], Poly::int(3));
        assert!(!sys.substitutions().contains_key("x"));
    }

    #[test]
    fn hilbert_constraints_for_the_symbolic_family() {
        // generators in degrees 3, 4, 5 with unknown multiplicities, e = 4
        let res = GorensteinResolution::new(
            4,
            vec![(3, Poly::var("x")), (4, Poly::var("a")), (5, Poly::var("b"))],
        )
        .unwrap();
        let inv = CurveInvariants::sextic_section_curve(3, Poly::var("d"));
        let sys = hilbert_constraints(&res, &inv).unwrap();
        let expected = vec![
            parse_poly("x - (30 - d)").unwrap(),
            parse_poly("b - a - 3*(27 - d)").unwrap(),
        ];
        assert!(linear::equivalent(&sys.rows, &expected).unwrap());
    }

    #[test]
    fn incompatible_shape_is_detected() {
        let res = GorensteinResolution::with_integer_mults(6, &[(5, 10)]);
        let inv = CurveInvariants::of_integers(55, 166, 6);
        assert!(matches!(
            hilbert_constraints(&res, &inv),
            Err(Error::IncompatibleShape(_))
        ));
    }

    #[test]
    fn gates_for_pinned_families() {
        let report = flag_gate(&degree55(), &CurveInvariants::of_integers(55, 166, 6), 209)
            .unwrap();
        assert_eq!(report.bound, Poly::int(197));
        assert_eq!(report.verdict, Verdict::DominantImpossible);

        let report = flag_gate(&degree14(), &CurveInvariants::of_integers(14, 22, 3), 209)
            .unwrap();
        assert_eq!(report.bound, Poly::int(208)); // close, but under 209
        assert_eq!(report.verdict, Verdict::DominantImpossible);
    }

    #[test]
    fn gate_applies_constraints_to_symbolic_multiplicities() {
        // degree-16 family: generator count at degree 3 must cancel against
        // the quintic count; the gate is numeric afterwards.
        let res = GorensteinResolution::new(
            3,
            vec![
                (2, Poly::int(2)),
                (3, Poly::var("a")),
                (4, Poly::var("b")),
                (5, Poly::var("x")),
            ],
        )
        .unwrap();
        let inv = CurveInvariants::of_integers(16, 25, 3);
        let report = flag_gate(&res, &inv, 209).unwrap();
        assert_eq!(report.h0_normal, Poly::int(66));
        assert_eq!(report.h0_ideal_n, Poly::int(138));
        assert_eq!(report.bound, Poly::int(203));
        assert_eq!(report.verdict, Verdict::DominantImpossible);
    }

    #[test]
    fn symbolic_gate_is_inconclusive_with_residual() {
        let res = GorensteinResolution::new(
            4,
            vec![(3, Poly::var("x")), (4, Poly::var("a")), (5, Poly::var("b"))],
        )
        .unwrap();
        let inv = CurveInvariants::sextic_section_curve(3, Poly::var("d"));
        let report = flag_gate(&res, &inv, 209).unwrap();
        assert_eq!(report.h0_normal, Poly::int(69) + Poly::var("d"));
        assert_eq!(report.h0_ideal_n, Poly::int(210) - Poly::var("d").scale(&rat(4)));
        assert_eq!(report.bound, Poly::int(278) - Poly::var("d").scale(&rat(3)));
        assert_eq!(report.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn empty_resolution_is_rejected() {
        let res = GorensteinResolution { e: 1, pairs: vec![] };
        let inv = CurveInvariants::of_integers(8, 5, 1);
        assert!(matches!(flag_gate(&res, &inv, 209), Err(Error::NoGenerators)));
    }

    #[test]
    fn display_matches_shape() {
        assert_eq!(
            degree14().to_string(),
            "0 -> O(-8) -> O(-6)^3 + O(-3)^2 -> O(-5)^2 + O(-2)^3 -> I -> 0"
        );
    }
}
