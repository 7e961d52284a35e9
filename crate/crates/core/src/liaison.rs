//! Linkage calculus at the level of graded Betti numbers: Koszul complexes
//! of complete intersections, dualized mapping cones for linked curves,
//! caller-directed cancellation of split pairs, and degree/genus extraction
//! from the Hilbert polynomial of a complex.
//!
//! Containment of the curve in the complete intersection is not visible in
//! Betti data; it is a precondition the caller asserts. Likewise `link`
//! returns the possibly non-minimal mapping cone and never claims
//! minimality: which pairs split is a geometric fact, so cancellation is a
//! separate, explicit operation.

use crate::gorenstein::GorensteinResolution;
use crate::linear::ReducedSystem;
use crate::poly::Poly;
use crate::unipoly::UniPoly;
use crate::{rat, Error};
use num::Signed;
use std::fmt;

/// A free summand O(-twist)^mult of one term of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub twist: i64,
    pub mult: Poly,
}

/// Three-term complex of free sheaves resolving an ideal sheaf:
/// `0 -> F3 -> F2 -> F1 -> I -> 0`. Terms are kept sorted by twist with
/// equal twists merged, so equal complexes compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComplex {
    terms: [Vec<Summand>; 3],
}

/// Complete intersection type (d1, d2, d3), each degree >= 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CiType(pub i64, pub i64, pub i64);

impl CiType {
    pub fn validate(&self) -> Result<(), Error> {
        if self.0 < 1 || self.1 < 1 || self.2 < 1 {
            return Err(Error::NotCurveComplex(format!(
                "complete intersection type ({}, {}, {}) has a degree below 1",
                self.0, self.1, self.2
            )));
        }
        Ok(())
    }

    pub fn total(&self) -> i64 {
        self.0 + self.1 + self.2
    }

    pub fn product(&self) -> i64 {
        self.0 * self.1 * self.2
    }
}

impl GradedComplex {
    pub fn new(f1: Vec<(i64, Poly)>, f2: Vec<(i64, Poly)>, f3: Vec<(i64, Poly)>) -> Self {
        GradedComplex { terms: [normalize(f1), normalize(f2), normalize(f3)] }
    }

    pub fn term(&self, k: usize) -> &[Summand] {
        &self.terms[k]
    }

    /// Multiplicity of O(-twist) in term k (0-based: F1, F2, F3).
    pub fn mult(&self, k: usize, twist: i64) -> Poly {
        self.terms[k]
            .iter()
            .find(|s| s.twist == twist)
            .map(|s| s.mult.clone())
            .unwrap_or_else(Poly::zero)
    }

    /// F1 - F2 + F3 total multiplicity; 1 for a resolution of an ideal sheaf.
    pub fn rank_sum(&self) -> Poly {
        let sum = |k: usize| {
            self.terms[k]
                .iter()
                .fold(Poly::zero(), |acc, s| acc + &s.mult)
        };
        sum(0) - sum(1) + sum(2)
    }

    pub fn is_curve_resolution(&self) -> bool {
        self.rank_sum() == Poly::int(1) && degree_genus(self).is_ok()
    }

    /// Applies substitutions to every multiplicity.
    pub fn substituted(&self, sys: &ReducedSystem) -> GradedComplex {
        let map = |v: &[Summand]| {
            v.iter()
                .map(|s| (s.twist, sys.apply(&s.mult)))
                .collect::<Vec<_>>()
        };
        GradedComplex::new(map(&self.terms[0]), map(&self.terms[1]), map(&self.terms[2]))
    }
}

fn normalize(entries: Vec<(i64, Poly)>) -> Vec<Summand> {
    let mut out: Vec<Summand> = Vec::new();
    for (twist, mult) in entries {
        if mult.is_zero() {
            continue;
        }
        match out.iter_mut().find(|s| s.twist == twist) {
            Some(s) => s.mult += mult,
            None => out.push(Summand { twist, mult }),
        }
    }
    out.retain(|s| !s.mult.is_zero());
    out.sort_by_key(|s| s.twist);
    out
}

impl From<&GorensteinResolution> for GradedComplex {
    fn from(res: &GorensteinResolution) -> Self {
        let f1 = res.pairs.iter().map(|p| (p.a, p.mult.clone())).collect();
        let f2 = res.pairs.iter().map(|p| (res.b(p.a), p.mult.clone())).collect();
        let f3 = vec![(res.top_twist(), Poly::int(1))];
        GradedComplex::new(f1, f2, f3)
    }
}

impl fmt::Display for GradedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |v: &[Summand]| {
            if v.is_empty() {
                return "0".to_string();
            }
            v.iter()
                .rev()
                .map(|s| {
                    if s.mult.as_constant() == Some(rat(1)) {
                        format!("O(-{})", s.twist)
                    } else if let Some(c) = s.mult.as_constant() {
                        format!("O(-{})^{}", s.twist, c)
                    } else {
                        format!("O(-{})^({})", s.twist, s.mult)
                    }
                })
                .collect::<Vec<_>>()
                .join(" + ")
        };
        write!(
            f,
            "0 -> {} -> {} -> {} -> I -> 0",
            side(&self.terms[2]),
            side(&self.terms[1]),
            side(&self.terms[0])
        )
    }
}

/// The Koszul resolution of a complete intersection of the given type.
pub fn koszul_resolution(ci: CiType) -> GradedComplex {
    let CiType(d1, d2, d3) = ci;
    GradedComplex::new(
        vec![(d1, Poly::int(1)), (d2, Poly::int(1)), (d3, Poly::int(1))],
        vec![
            (d1 + d2, Poly::int(1)),
            (d1 + d3, Poly::int(1)),
            (d2 + d3, Poly::int(1)),
        ],
        vec![(d1 + d2 + d3, Poly::int(1))],
    )
}

/// Resolution of the curve linked to C inside a complete intersection of
/// type `ci`, as the dualized mapping cone (possibly non-minimal):
///
/// each summand O(-t) contributes O(-(s - t)) to the complementary
/// position, s = d1 + d2 + d3; the Koszul top summand O(-s) dualizes to the
/// unit and is consumed as the augmentation, a rank-one cancellation.
///
/// Precondition (not checkable here): C is contained in the complete
/// intersection.
pub fn link(res_c: &GradedComplex, ci: CiType) -> Result<GradedComplex, Error> {
    ci.validate()?;
    if res_c.rank_sum() != Poly::int(1) {
        return Err(Error::NotCurveComplex(format!(
            "rank alternating sum is {}, not 1",
            res_c.rank_sum()
        )));
    }
    degree_genus(res_c)?;
    let s = ci.total();
    let kos = koszul_resolution(ci);
    let dual = |v: &[Summand]| -> Vec<(i64, Poly)> {
        v.iter().map(|x| (s - x.twist, x.mult.clone())).collect()
    };
    let mut f1 = dual(res_c.term(2));
    f1.extend(dual(kos.term(1)));
    let mut f2 = dual(res_c.term(1));
    f2.extend(dual(kos.term(0)));
    let f3 = dual(res_c.term(0));
    Ok(GradedComplex::new(f1, f2, f3))
}

/// Position of an adjacent pair of terms for cancellation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CancelPosition {
    /// Between the generator term F1 and the syzygy term F2.
    F1F2,
    /// Between F2 and the final term F3.
    F2F3,
}

/// Removes `count` summands of the given twist from both terms of an
/// adjacent pair. The Hilbert polynomial is unchanged, so degree and genus
/// are preserved exactly.
pub fn cancel_pair(
    cx: &GradedComplex,
    position: CancelPosition,
    twist: i64,
    count: &Poly,
) -> Result<GradedComplex, Error> {
    if count.is_zero() {
        return Ok(cx.clone());
    }
    let (i, j) = match position {
        CancelPosition::F1F2 => (0usize, 1usize),
        CancelPosition::F2F3 => (1, 2),
    };
    for k in [i, j] {
        let have = cx.mult(k, twist);
        let left = &have - count;
        if let Some(c) = left.as_constant() {
            if c.is_negative() {
                return Err(Error::InsufficientMultiplicity {
                    twist,
                    count: count.to_string(),
                });
            }
        }
        if have.is_zero() {
            return Err(Error::InsufficientMultiplicity { twist, count: count.to_string() });
        }
    }
    let adjust = |v: &[Summand], hit: bool| -> Vec<(i64, Poly)> {
        let mut out: Vec<(i64, Poly)> = v.iter().map(|s| (s.twist, s.mult.clone())).collect();
        if hit {
            out.push((twist, -count.clone()));
        }
        out
    };
    Ok(GradedComplex::new(
        adjust(cx.term(0), i == 0),
        adjust(cx.term(1), true),
        adjust(cx.term(2), j == 2),
    ))
}

/// Reads (degree, genus) off the Hilbert polynomial of the complex:
/// hdim(n) - H_complex(n) must equal d*n + 1 - g.
pub fn degree_genus(cx: &GradedComplex) -> Result<(Poly, Poly), Error> {
    let mut coeffs: [Poly; 5] = Default::default();
    let signs: [i64; 3] = [1, -1, 1];
    for (k, sign) in signs.iter().enumerate() {
        for s in cx.term(k) {
            let u = UniPoly::hdim_shifted(-s.twist);
            for (c, acc) in coeffs.iter_mut().enumerate() {
                *acc += s.mult.scale(&(u.coefficient(c) * rat(*sign)));
            }
        }
    }
    let h = UniPoly::hdim_shifted(0);
    // residual = hdim(n) - H(n); must have degree <= 1 in n
    let mut residual: [Poly; 5] = Default::default();
    for (c, slot) in residual.iter_mut().enumerate() {
        *slot = Poly::constant(h.coefficient(c)) - &coeffs[c];
    }
    for (c, slot) in residual.iter().enumerate().skip(2) {
        if !slot.is_zero() {
            return Err(Error::NotCurveComplex(format!(
                "Hilbert residual has degree {c} in the twist (coefficient {slot})"
            )));
        }
    }
    let degree = residual[1].clone();
    let genus = Poly::int(1) - &residual[0];
    Ok((degree, genus))
}

/// Reconstructs a self-dual resolution at subcanonical level `e` from a
/// possibly non-minimal complex with integer multiplicities, cancelling the
/// fewest pairs that duality forces. Fails when no cancellation pattern
/// makes the complex self-dual.
pub fn impose_self_duality(cx: &GradedComplex, e: i64) -> Result<GorensteinResolution, Error> {
    let as_int = |p: &Poly| -> Result<i64, Error> {
        p.as_constant()
            .filter(|c| c.is_integer())
            .and_then(|c| c.numer().try_into().ok())
            .ok_or_else(|| Error::SymbolicMultiplicity(p.to_string()))
    };
    let top = e + 5;
    // F3 must reduce to the single summand O(-e-5); everything else in F3
    // cancels into F2, which therefore must contain it.
    let mut f2: Vec<(i64, i64)> = Vec::new();
    for s in cx.term(1) {
        f2.push((s.twist, as_int(&s.mult)?));
    }
    let mut top_seen = 0i64;
    for s in cx.term(2) {
        let mut m = as_int(&s.mult)?;
        if s.twist == top {
            top_seen += 1;
            m -= 1;
        }
        if m == 0 {
            continue;
        }
        let Some(slot) = f2.iter_mut().find(|(t, c)| *t == s.twist && *c >= m) else {
            return Err(Error::NotSelfDual {
                e,
                reason: format!("cannot cancel O(-{})^{} out of the final term", s.twist, m),
            });
        };
        slot.1 -= m;
    }
    if top_seen != 1 {
        return Err(Error::NotSelfDual {
            e,
            reason: format!("final term lacks the summand O(-{top})"),
        });
    }
    let mult2 = |t: i64| f2.iter().find(|(x, _)| *x == t).map(|(_, c)| *c).unwrap_or(0);
    // Pair F1 at twist t with F2 at twist e+5-t. A cancellation of k(t)
    // summands at twist t hits both F1 and F2 there, so
    //   m1(t) - k(t) = m2(t') - k(t')  with t' = e + 5 - t,
    // which fixes k(t) - k(t') and has a unique minimal nonnegative
    // solution; consistency requires m1(t) + m1(t') = m2(t) + m2(t').
    let mut twists: Vec<i64> = cx.term(0).iter().map(|s| s.twist).collect();
    twists.extend(f2.iter().filter(|(_, c)| *c > 0).map(|(t, _)| *t));
    twists.sort();
    twists.dedup();
    let mut pairs: Vec<(i64, i64)> = Vec::new();
    for &t in &twists {
        let tp = top - t;
        let m1 = as_int(&cx.mult(0, t))?;
        let m1p = as_int(&cx.mult(0, tp))?;
        let m2 = mult2(t);
        let m2p = mult2(tp);
        if m1 + m1p != m2 + m2p {
            return Err(Error::NotSelfDual {
                e,
                reason: format!(
                    "multiplicities at twists {t} and {tp} cannot be paired ({m1}+{m1p} vs {m2}+{m2p})"
                ),
            });
        }
        let delta = m1 - m2p;
        let k = delta.max(0);
        let final_mult = m1 - k;
        if final_mult < 0 || k > m2 {
            return Err(Error::NotSelfDual {
                e,
                reason: format!("cancellation at twist {t} exceeds the available multiplicity"),
            });
        }
        if final_mult > 0 && !pairs.contains(&(t, final_mult)) {
            pairs.push((t, final_mult));
        }
    }
    GorensteinResolution::new(e, pairs.into_iter().map(|(a, m)| (a, Poly::int(m))).collect())
}
