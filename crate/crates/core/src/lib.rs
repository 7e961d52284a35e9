//! Exact invariant calculus for rank-2 ACM bundles on smooth hypersurface
//! threefolds in P^4 and for the arithmetically Gorenstein curves cut out by
//! their sections.
//!
//! Everything is computed over the rationals with arbitrary precision: the
//! dimension counts this library exists for are decided by equalities and by
//! margins of one, so no floating point appears anywhere.
//!
//! The main layers, bottom up:
//!
//! * [`poly`], [`unipoly`], [`dims`], [`linear`] — sparse multivariate
//!   polynomials in named unknowns, univariate Hilbert polynomials, the
//!   dimension counts `h^0(O(n))` on P^4, and exact linear-system reduction.
//! * [`bundle`] — Chern-class bookkeeping and Riemann–Roch for rank-2 bundles
//!   on a degree-r hypersurface.
//! * [`cases`] — the twist-and-compare engine deriving the admissible c2 of a
//!   normalized ACM bundle as a linear relation in ideal-section counts.
//! * [`gorenstein`] — self-dual graded Betti tables of subcanonical ACM
//!   curves, section counts, the normal-bundle dimension formula, and the
//!   Hilbert-flag dimension gate.
//! * [`liaison`] — Koszul complexes, dualized mapping cones for linked
//!   curves, and degree/genus extraction.
//! * [`catalog`] — the fixed families of curves entering the sextic case
//!   analysis, with their resolutions.
//! * [`io`] — JSON schemas for resolutions, complexes, and assignment files.

pub mod bundle;
pub mod cases;
pub mod catalog;
pub mod dims;
pub mod error;
pub mod expr;
pub mod gorenstein;
pub mod io;
pub mod liaison;
pub mod linear;
pub mod poly;
pub mod unipoly;

pub use error::Error;
pub use poly::{Monomial, Poly};

/// Exact rational scalar; always reduced, denominator positive.
pub type Rational = num::BigRational;
/// Arbitrary-precision integer.
pub type Int = num::BigInt;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// Shorthand for the reduced fraction n/d (d must be nonzero).
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}
