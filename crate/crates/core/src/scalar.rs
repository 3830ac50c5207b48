//! Coefficient scalars for the two precision modes.
//!
//! Every series, parameter bundle and proof relation in this crate is generic
//! over a [`Scalar`]: either [`BigRational`] (exact mode, used wherever a
//! residual must vanish identically) or `f64` (floating mode, used for bound
//! tables and the extremal search). Conversion between modes is always
//! explicit; nothing in the crate silently rounds an exact value.

use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};
use std::fmt;

/// A real coefficient type: exact rational or double precision.
pub trait Scalar:
    Num + Signed + Clone + PartialEq + PartialOrd + FromPrimitive + ToPrimitive + fmt::Debug + fmt::Display + 'static
{
    /// True for the exact-rational mode, false for floating point.
    const EXACT: bool;

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer converts into every scalar mode")
    }

    /// `n / d`, exact in rational mode, correctly rounded in floating mode.
    fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "ratio denominator must be nonzero");
        Self::from_int(n) / Self::from_int(d)
    }

    /// Lossy view of the value as an `f64` (used only for rendering).
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;
}

impl Scalar for BigRational {
    const EXACT: bool = true;
}

/// The exact-mode scalar.
pub type Exact = BigRational;

/// Complex value over a scalar mode; stored as a rectangular pair, never polar.
pub type C<S> = num_complex::Complex<S>;

/// Shorthand for an exact complex rational.
pub fn cx_ratio(re: (i64, i64), im: (i64, i64)) -> C<Exact> {
    C::new(Exact::from_ratio(re.0, re.1), Exact::from_ratio(im.0, im.1))
}

/// Complex value with zero imaginary part.
pub fn cx_real<S: Scalar>(re: S) -> C<S> {
    C::new(re, S::zero())
}

/// Complex value from an integer.
pub fn cx_int<S: Scalar>(n: i64) -> C<S> {
    cx_real(S::from_int(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_ratio_is_exact_for_rationals() {
        let x = Exact::from_ratio(1, 3);
        let three = Exact::from_int(3);
        assert_eq!(x * three, Exact::from_int(1));
    }

    #[test]
    fn float_mode_rounds() {
        let x = f64::from_ratio(1, 4);
        assert_eq!(x, 0.25);
    }
}
