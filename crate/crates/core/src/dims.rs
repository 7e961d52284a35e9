//! Dimension counts for spaces of forms on P^4.

use crate::Int;
use num::Zero;

/// Dimension of the space of degree-n forms in 5 variables:
/// C(n+4, 4) for n >= 0, and 0 for negative n.
pub fn hdim(n: i64) -> Int {
    if n < 0 {
        return Int::zero();
    }
    let n = Int::from(n);
    (&n + 4) * (&n + 3) * (&n + 2) * (&n + 1) / Int::from(24)
}

/// C(m, 4) with graded-Hom-dimension semantics: 0 for every m < 4,
/// including negative m. Equals `hdim(m - 4)`.
///
/// This is the binomial convention under which the normal-bundle dimension
/// formula reproduces the section counts of the fixed curve families; the
/// algebraic extension (which has C(-1, 4) = 1) does not.
pub fn binom4(m: i64) -> Int {
    hdim(m - 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(hdim(6), 210.into());
        assert_eq!(hdim(0), 1.into());
        assert_eq!(hdim(-3), 0.into());
        assert_eq!(hdim(1), 5.into());
        assert_eq!(hdim(4), 70.into());
        assert_eq!(binom4(8), 70.into());
        assert_eq!(binom4(3), 0.into());
        assert_eq!(binom4(-1), 0.into());
    }

    #[test]
    fn hdim_vanishes_below_zero_and_grows_above() {
        for n in -20..0 {
            assert_eq!(hdim(n), 0.into());
        }
        for n in 0..30 {
            assert!(hdim(n + 1) > hdim(n));
        }
    }

    #[test]
    fn binom4_is_shifted_hdim() {
        for m in -15..25 {
            assert_eq!(binom4(m), hdim(m - 4));
        }
    }
}
