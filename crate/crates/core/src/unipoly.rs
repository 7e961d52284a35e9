//! Univariate polynomials in a twist variable `n` over the rationals.
//!
//! These carry Hilbert polynomials: for large n the section count of a sheaf
//! built from twists of O agrees with a polynomial in n, and matching its
//! coefficients against degree/genus data yields exact linear constraints.

use crate::{rat, Rational};
use num::Zero;
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Coefficients in ascending powers of n; trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// The monomial n.
    pub fn n() -> Self {
        UniPoly::from_coeffs(vec![rat(0), rat(1)])
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficient(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|k| k * c).collect() }
    }

    pub fn eval(&self, n: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c;
        }
        acc
    }

    pub fn eval_int(&self, n: i64) -> Rational {
        self.eval(&rat(n))
    }

    /// The degree-4 polynomial (n+s+4)(n+s+3)(n+s+2)(n+s+1)/24.
    ///
    /// Evaluated at n it agrees with `hdim(n+s)` whenever n+s >= 0, and also
    /// at the polynomial roots n+s in {-1,-2,-3,-4}; for n+s <= -5 the two
    /// differ (the polynomial is positive there, the dimension is 0).
    pub fn hdim_shifted(s: i64) -> UniPoly {
        let mut p = UniPoly::constant(crate::frac(1, 24));
        for i in 1..=4 {
            p = &p * &(UniPoly::n() + UniPoly::constant(rat(s + i)));
        }
        p
    }
}

impl Add for UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: UniPoly) -> UniPoly {
        &self + &rhs
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coefficient(k) + rhs.coefficient(k)).collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coefficient(k) - rhs.coefficient(k)).collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: UniPoly) -> UniPoly {
        &self - &rhs
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Reuse the canonical multivariate format with unknown "n".
        let mut p = crate::poly::Poly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            p += crate::poly::Poly::var("n").pow(k as u32).scale(c);
        }
        write!(f, "{p}")
    }
}
