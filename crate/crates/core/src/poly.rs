//! Sparse multivariate polynomials over the rationals in named unknowns.
//!
//! Unknowns are strings ("x", "u2", "d", ...). Terms are kept in a `BTreeMap`
//! keyed by monomial, so the representation is canonical and iteration order
//! is deterministic: lexicographic on unknown names, then exponents.

use crate::{Error, Rational};
use num::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// A monomial: unknown name -> positive exponent. The empty monomial is 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(BTreeMap<String, u32>);

impl Monomial {
    /// The constant monomial.
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    /// A single unknown to the first power.
    pub fn var(name: &str) -> Self {
        assert!(!name.is_empty(), "unknown names must be nonempty");
        let mut m = BTreeMap::new();
        m.insert(name.to_string(), 1);
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn exponent(&self, name: &str) -> u32 {
        self.0.get(name).copied().unwrap_or(0)
    }

    pub fn unknowns(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(|s| s.as_str())
    }

    fn product(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (name, e) in &other.0 {
            *out.entry(name.clone()).or_insert(0) += e;
        }
        Monomial(out)
    }

    /// Removes `name` from the monomial; returns (exponent, remainder).
    fn split(&self, name: &str) -> (u32, Monomial) {
        let mut rest = self.0.clone();
        let e = rest.remove(name).unwrap_or(0);
        (e, Monomial(rest))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with exact rational coefficients.
///
/// Invariant: no zero coefficient is ever stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Poly::default();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(crate::rat(n))
    }

    pub fn var(name: &str) -> Self {
        let mut p = Poly::default();
        p.add_term(Monomial::var(name), Rational::one());
        p
    }

    /// c * m as a one-term polynomial.
    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Poly::default();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Some(c) iff the polynomial is the constant c (including 0).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// The coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    /// All unknown names appearing with nonzero coefficient.
    pub fn unknowns(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            out.extend(m.unknowns().map(str::to_string));
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::int(1);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Eliminates `name` by substituting the polynomial `value` for it.
    pub fn substitute(&self, name: &str, value: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(name);
            if e == 0 {
                out.add_term(rest, c.clone());
            } else {
                out += &Poly::term(c.clone(), rest) * &value.pow(e);
            }
        }
        out
    }

    /// Applies several substitutions simultaneously.
    pub fn substitute_map(&self, subs: &BTreeMap<String, Poly>) -> Poly {
        let mut out = self.clone();
        for (name, value) in subs {
            out = out.substitute(name, value);
        }
        out
    }

    /// Full evaluation. Every unknown present must be assigned.
    pub fn eval(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational, Error> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for name in m.unknowns() {
                let x = assignment
                    .get(name)
                    .ok_or_else(|| Error::MissingUnknown(name.to_string()))?;
                for _ in 0..m.exponent(name) {
                    v *= x;
                }
            }
            total += v;
        }
        Ok(total)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Self {
        Poly::int(n)
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.product(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($op:ident :: $f:ident),*) => {$(
        impl $op for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly { (&self).$f(&rhs) }
        }
        impl $op<&Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &Poly) -> Poly { (&self).$f(rhs) }
        }
        impl $op<Poly> for &Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly { self.$f(&rhs) }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign<Poly> for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        *self += &rhs;
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    /// Canonical form, e.g. `20 + 2*u1 - 2*u2`; the zero polynomial prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mag = fmt_rational(&c.abs());
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if c.abs().is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{frac, rat};

    #[test]
    fn cancellation_yields_zero() {
        let x2 = Poly::var("x").pow(2);
        assert!((&x2 - &x2).is_zero());
        assert_eq!((&x2 - &x2).as_constant(), Some(rat(0)));
    }

    #[test]
    fn substitute_linear() {
        // 3x + 1 at x = 2
        let p = Poly::var("x").scale(&rat(3)) + Poly::int(1);
        assert_eq!(p.substitute("x", &Poly::int(2)), Poly::int(7));
    }

    #[test]
    fn constant_detection_after_cancellation() {
        // 20x - 20x + 36
        let p = Poly::var("x").scale(&rat(20)) - Poly::var("x").scale(&rat(20)) + Poly::int(36);
        assert_eq!(p.as_constant(), Some(rat(36)));
    }

    #[test]
    fn eval_reports_missing_unknown() {
        let p = Poly::var("x") + Poly::var("y");
        let mut asn = BTreeMap::new();
        asn.insert("x".to_string(), rat(1));
        assert_eq!(p.eval(&asn), Err(Error::MissingUnknown("y".into())));
        asn.insert("y".to_string(), rat(2));
        assert_eq!(p.eval(&asn), Ok(rat(3)));
    }

    #[test]
    fn display_is_canonical() {
        let p = Poly::int(20) + Poly::var("u1").scale(&rat(2)) - Poly::var("u2").scale(&rat(2));
        assert_eq!(p.to_string(), "20 + 2*u1 - 2*u2");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::constant(frac(-3, 2)).to_string(), "-3/2");
        let q = Poly::var("x").pow(2).scale(&frac(1, 2)) - Poly::var("x").scale(&frac(1, 2));
        assert_eq!(q.to_string(), "-1/2*x + 1/2*x^2");
    }

    #[test]
    fn quadratic_substitution() {
        // x^2 at x = y + 1 -> y^2 + 2y + 1
        let p = Poly::var("x").pow(2);
        let v = Poly::var("y") + Poly::int(1);
        let expect = Poly::var("y").pow(2) + Poly::var("y").scale(&rat(2)) + Poly::int(1);
        assert_eq!(p.substitute("x", &v), expect);
    }
}
