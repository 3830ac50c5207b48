//! Target functions for the subordination condition and their first two
//! Taylor coefficients.
//!
//! Three families are supported: a generic `1 + B1 z + B2 z^2 + ...` with
//! `B1 > 0`, the Janowski family `(1 + A z)/(1 + B z)` with
//! `-1 <= B < A <= 1`, and the order family `(1 + (1 - 2 zeta) z)/(1 - z)`
//! with `0 <= zeta < 1`. The closed coefficient forms are pinned against the
//! series-division route by tests.

use crate::scalar::{cx_real, Scalar, C};
use crate::series::TruncSeries;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PhiError {
    #[error("generic target requires B1 > 0, got {0}")]
    NonPositiveB1(String),
    #[error("Janowski target requires -1 <= B < A <= 1, got A = {a}, B = {b}")]
    JanowskiRange { a: String, b: String },
    #[error("order target requires 0 <= zeta < 1, got {0}")]
    ZetaRange(String),
}

/// A target function family with extractable `B1`, `B2`.
#[derive(Debug, Clone, PartialEq)]
pub enum PhiSpec<S: Scalar> {
    Generic { b1: S, b2: S },
    Janowski { a: S, b: S },
    OrderZeta { zeta: S },
}

impl<S: Scalar> PhiSpec<S> {
    pub fn generic(b1: S, b2: S) -> Result<Self, PhiError> {
        if b1 <= S::zero() {
            return Err(PhiError::NonPositiveB1(b1.to_string()));
        }
        Ok(PhiSpec::Generic { b1, b2 })
    }

    pub fn janowski(a: S, b: S) -> Result<Self, PhiError> {
        let neg_one = -S::one();
        if b < neg_one || b >= a || a > S::one() {
            return Err(PhiError::JanowskiRange { a: a.to_string(), b: b.to_string() });
        }
        Ok(PhiSpec::Janowski { a, b })
    }

    pub fn order_zeta(zeta: S) -> Result<Self, PhiError> {
        if zeta < S::zero() || zeta >= S::one() {
            return Err(PhiError::ZetaRange(zeta.to_string()));
        }
        Ok(PhiSpec::OrderZeta { zeta })
    }

    /// Taylor expansion at 0 through `order` (>= 2); constant term 1.
    pub fn series(&self, order: usize) -> TruncSeries<S> {
        assert!(order >= 2, "target series is used through order >= 2");
        match self {
            PhiSpec::Generic { b1, b2 } => {
                let mut coeffs = vec![C::zero(); order + 1];
                coeffs[0] = C::one();
                coeffs[1] = cx_real(b1.clone());
                coeffs[2] = cx_real(b2.clone());
                TruncSeries::new(coeffs)
            }
            PhiSpec::Janowski { a, b } => {
                let num = linear(a.clone(), order);
                let den = linear(b.clone(), order);
                num.divide(&den).expect("denominator has unit constant term")
            }
            PhiSpec::OrderZeta { zeta } => {
                let top = S::one() - S::from_int(2) * zeta.clone();
                let num = linear(top, order);
                let den = linear(-S::one(), order);
                num.divide(&den).expect("denominator has unit constant term")
            }
        }
    }

    /// Closed forms for `(B1, B2)`:
    /// generic pass-through, Janowski `(A - B, -B (A - B))`,
    /// order family `(2 (1 - zeta), 2 (1 - zeta))`.
    pub fn coefficients(&self) -> (S, S) {
        match self {
            PhiSpec::Generic { b1, b2 } => (b1.clone(), b2.clone()),
            PhiSpec::Janowski { a, b } => {
                let b1 = a.clone() - b.clone();
                let b2 = -b.clone() * b1.clone();
                (b1, b2)
            }
            PhiSpec::OrderZeta { zeta } => {
                let b1 = S::from_int(2) * (S::one() - zeta.clone());
                (b1.clone(), b1)
            }
        }
    }

    /// Short label used in table output, e.g. `janowski` / `order` / `generic`.
    pub fn family_name(&self) -> &'static str {
        match self {
            PhiSpec::Generic { .. } => "generic",
            PhiSpec::Janowski { .. } => "janowski",
            PhiSpec::OrderZeta { .. } => "order",
        }
    }
}

/// `1 + c z` padded to the requested order.
fn linear<S: Scalar>(c: S, order: usize) -> TruncSeries<S> {
    let mut coeffs = vec![C::zero(); order + 1];
    coeffs[0] = C::one();
    coeffs[1] = cx_real(c);
    TruncSeries::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Exact;
    use num_traits::Zero;

    fn rat(n: i64, d: i64) -> Exact {
        Exact::from_ratio(n, d)
    }

    #[test]
    fn janowski_koebe_like_expansion() {
        let phi = PhiSpec::janowski(Exact::one(), -Exact::one()).unwrap();
        let s = phi.series(2);
        assert_eq!(s, TruncSeries::from_real(vec![Exact::one(), Exact::from_int(2), Exact::from_int(2)]));
    }

    #[test]
    fn janowski_trivial_denominator() {
        let phi = PhiSpec::janowski(Exact::one(), Exact::zero()).unwrap();
        let s = phi.series(2);
        assert_eq!(s, TruncSeries::from_real(vec![Exact::one(), Exact::one(), Exact::zero()]));
    }

    #[test]
    fn order_half_expansion() {
        let phi = PhiSpec::order_zeta(rat(1, 2)).unwrap();
        let s = phi.series(2);
        assert_eq!(s, TruncSeries::from_real(vec![Exact::one(), Exact::one(), Exact::one()]));
    }

    #[test]
    fn coefficients_match_series_division() {
        let cases: Vec<PhiSpec<Exact>> = vec![
            PhiSpec::janowski(rat(1, 2), rat(-1, 2)).unwrap(),
            PhiSpec::janowski(rat(3, 4), rat(1, 5)).unwrap(),
            PhiSpec::order_zeta(Exact::zero()).unwrap(),
            PhiSpec::order_zeta(rat(2, 3)).unwrap(),
            PhiSpec::generic(Exact::from_int(3), Exact::from_int(-1)).unwrap(),
        ];
        for phi in cases {
            let (b1, b2) = phi.coefficients();
            let s = phi.series(2);
            assert_eq!(s.coeff(1), cx_real(b1));
            assert_eq!(s.coeff(2), cx_real(b2));
        }
    }

    #[test]
    fn specific_coefficient_values() {
        let phi = PhiSpec::janowski(rat(1, 2), rat(-1, 2)).unwrap();
        assert_eq!(phi.coefficients(), (Exact::one(), rat(1, 2)));
        let phi = PhiSpec::order_zeta(Exact::zero()).unwrap();
        assert_eq!(phi.coefficients(), (Exact::from_int(2), Exact::from_int(2)));
        let phi = PhiSpec::generic(Exact::from_int(3), Exact::from_int(-1)).unwrap();
        assert_eq!(phi.coefficients(), (Exact::from_int(3), Exact::from_int(-1)));
    }

    #[test]
    fn range_validation() {
        assert!(PhiSpec::generic(Exact::zero(), Exact::one()).is_err());
        assert!(PhiSpec::janowski(rat(1, 2), rat(1, 2)).is_err());
        assert!(PhiSpec::janowski(rat(3, 2), -Exact::one()).is_err());
        assert!(PhiSpec::janowski(Exact::one(), rat(-3, 2)).is_err());
        assert!(PhiSpec::order_zeta(Exact::one()).is_err());
        assert!(PhiSpec::order_zeta(rat(-1, 4)).is_err());
    }
}
