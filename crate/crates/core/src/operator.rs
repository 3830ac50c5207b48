//! The convolution multiplier transform and the Bazilevic quotient it
//! induces.
//!
//! The transform acts diagonally on Taylor coefficients: `a_n` is scaled by
//! `ups_n(k) * C(delta, n)` where `ups_n = [lambda (alpha + beta - 1) (n-1)]^k`
//! and `C(delta, n)` is the generalized binomial `binom(n + delta - 1, delta)`.
//! Equivalently it is the Hadamard product with a fixed kernel series.

use crate::scalar::{cx_real, Scalar};
use crate::series::{NormalizedSeries, SeriesError, TruncSeries};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("alpha must lie in (0, 1], got {0}")]
    Alpha(String),
    #[error("beta must lie in (0, 1], got {0}")]
    Beta(String),
    #[error("lambda must be >= 0, got {0}")]
    Lambda(String),
    #[error("delta must be >= 0, got {0}")]
    Delta(String),
    #[error("gamma must be >= 0, got {0}")]
    Gamma(String),
}

/// Operator and class parameters `(k, alpha, beta, lambda, delta, gamma)`.
///
/// Ranges: `k = 0, 1, 2, ...`, `0 < alpha <= 1`, `0 < beta <= 1`,
/// `lambda >= 0`, `delta >= 0`, `gamma >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassParams<S: Scalar> {
    k: u32,
    alpha: S,
    beta: S,
    lambda: S,
    delta: S,
    gamma: S,
}

impl<S: Scalar> ClassParams<S> {
    pub fn new(k: u32, alpha: S, beta: S, lambda: S, delta: S, gamma: S) -> Result<Self, ParamError> {
        if alpha <= S::zero() || alpha > S::one() {
            return Err(ParamError::Alpha(alpha.to_string()));
        }
        if beta <= S::zero() || beta > S::one() {
            return Err(ParamError::Beta(beta.to_string()));
        }
        if lambda < S::zero() {
            return Err(ParamError::Lambda(lambda.to_string()));
        }
        if delta < S::zero() {
            return Err(ParamError::Delta(delta.to_string()));
        }
        if gamma < S::zero() {
            return Err(ParamError::Gamma(gamma.to_string()));
        }
        Ok(ClassParams { k, alpha, beta, lambda, delta, gamma })
    }

    /// The identity configuration: every multiplier equals 1.
    pub fn identity() -> Self {
        ClassParams {
            k: 0,
            alpha: S::one(),
            beta: S::one(),
            lambda: S::one(),
            delta: S::zero(),
            gamma: S::zero(),
        }
    }

    pub fn with_gamma(mut self, gamma: S) -> Result<Self, ParamError> {
        if gamma < S::zero() {
            return Err(ParamError::Gamma(gamma.to_string()));
        }
        self.gamma = gamma;
        Ok(self)
    }

    pub fn k(&self) -> u32 {
        self.k
    }
    pub fn alpha(&self) -> &S {
        &self.alpha
    }
    pub fn beta(&self) -> &S {
        &self.beta
    }
    pub fn lambda(&self) -> &S {
        &self.lambda
    }
    pub fn delta(&self) -> &S {
        &self.delta
    }
    pub fn gamma(&self) -> &S {
        &self.gamma
    }

    /// `[lambda (alpha + beta - 1) (n - 1)]^k`, with the 0^0 = 1 convention
    /// so that k = 0 always yields the identity multiplier.
    pub fn upsilon(&self, n: u32) -> S {
        assert!(n >= 2, "multipliers are defined for n >= 2");
        let base = self.lambda.clone()
            * (self.alpha.clone() + self.beta.clone() - S::one())
            * S::from_int(i64::from(n) - 1);
        let mut acc = S::one();
        for _ in 0..self.k {
            acc = acc * base.clone();
        }
        acc
    }

    /// Full coefficient multiplier `upsilon(n) * C(delta, n)`.
    pub fn multiplier(&self, n: u32) -> S {
        self.upsilon(n) * c_delta(&self.delta, n)
    }

    /// The pair of multipliers entering every second/third-coefficient bound.
    pub fn multipliers(&self) -> MultiplierPair<S> {
        MultiplierPair { u2: self.multiplier(2), u3: self.multiplier(3) }
    }

    /// True when `lambda (alpha + beta - 1) = 0` with `k >= 1`, which kills
    /// every multiplier from n = 2 on.
    pub fn is_degenerate(&self) -> bool {
        self.k >= 1
            && (self.lambda.clone() * (self.alpha.clone() + self.beta.clone() - S::one())).is_zero()
    }

    /// Apply the multiplier transform coefficient-wise; linear in `f`.
    pub fn apply(&self, f: &NormalizedSeries<S>) -> NormalizedSeries<S> {
        let src = f.series();
        let mut out = src.clone();
        for n in 2..=src.order() {
            out.set_coeff(n, src.coeff(n).scale(self.multiplier(n as u32)));
        }
        NormalizedSeries::new(out).expect("multipliers do not touch c0, c1")
    }

    /// The fixed kernel whose Hadamard product realises `apply`.
    pub fn kernel(&self, order: usize) -> NormalizedSeries<S> {
        let tail = (2..=order as u32).map(|n| cx_real(self.multiplier(n))).collect();
        NormalizedSeries::from_tail(tail)
    }

    /// The quotient series `1 + q1 z + q2 z^2 + ...` of the transformed
    /// function: derivative of `Df` times `(Df / z)^(gamma - 1)`.
    ///
    /// For degenerate multipliers the output is the constant series 1.
    pub fn bazilevic_quotient(&self, f: &NormalizedSeries<S>) -> Result<TruncSeries<S>, SeriesError> {
        let df = self.apply(f).into_series();
        let deriv = df.derivative()?;
        // Df / z has unit constant term, so the real power is defined.
        let shifted = TruncSeries::new(df.coeffs()[1..].to_vec());
        let exponent = self.gamma.clone() - S::one();
        let power = shifted.pow_real(&exponent)?;
        Ok(&deriv * &power)
    }
}

/// The `n = 2, 3` multiplier values used by all coefficient bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplierPair<S: Scalar> {
    pub u2: S,
    pub u3: S,
}

impl<S: Scalar> MultiplierPair<S> {
    pub fn is_degenerate(&self) -> bool {
        self.u2.is_zero() || self.u3.is_zero()
    }
}

/// Generalized binomial `binom(n + delta - 1, delta)` for integer `n >= 2`,
/// evaluated as the finite product `prod_{j=1..n-1} (delta + j) / j`. Exact
/// for rational `delta`; reduces to the ordinary binomial for integer `delta`.
pub fn c_delta<S: Scalar>(delta: &S, n: u32) -> S {
    assert!(n >= 2, "generalized binomial used for n >= 2");
    let mut acc = S::one();
    for j in 1..n {
        let j = S::from_int(i64::from(j));
        acc = acc * (delta.clone() + j.clone()) / j;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{cx_int, cx_real, Exact};
    use num_traits::{One, Zero};

    fn rat(n: i64, d: i64) -> Exact {
        Exact::from_ratio(n, d)
    }

    fn params(k: u32, alpha: (i64, i64), beta: (i64, i64), lambda: (i64, i64), delta: i64, gamma: (i64, i64)) -> ClassParams<Exact> {
        ClassParams::new(
            k,
            rat(alpha.0, alpha.1),
            rat(beta.0, beta.1),
            rat(lambda.0, lambda.1),
            Exact::from_int(delta),
            rat(gamma.0, gamma.1),
        )
        .unwrap()
    }

    #[test]
    fn upsilon_zeroth_power_is_one() {
        let p = params(0, (1, 2), (1, 3), (7, 1), 4, (0, 1));
        assert_eq!(p.upsilon(5), Exact::one());
    }

    #[test]
    fn upsilon_simple_values() {
        let p = params(1, (1, 1), (1, 1), (1, 1), 0, (0, 1));
        assert_eq!(p.upsilon(3), Exact::from_int(2));
        let p = params(2, (3, 5), (4, 5), (1, 2), 0, (0, 1));
        assert_eq!(p.upsilon(2), rat(1, 25));
    }

    #[test]
    fn c_delta_values() {
        assert_eq!(c_delta(&Exact::zero(), 3), Exact::one());
        assert_eq!(c_delta(&Exact::one(), 2), Exact::from_int(2));
        assert_eq!(c_delta(&Exact::one(), 3), Exact::from_int(3));
        assert_eq!(c_delta(&Exact::from_int(2), 3), Exact::from_int(6));
    }

    #[test]
    fn c_delta_closed_forms() {
        for d in 0..6 {
            let delta = Exact::from_int(d);
            assert_eq!(c_delta(&delta, 2), delta.clone() + Exact::one());
            assert_eq!(
                c_delta(&delta, 3),
                (delta.clone() + Exact::one()) * (delta + Exact::from_int(2)) / Exact::from_int(2)
            );
        }
    }

    #[test]
    fn apply_identity_params() {
        let f = NormalizedSeries::from_tail(vec![cx_int(1), cx_int(1)]);
        let p = ClassParams::<Exact>::identity();
        assert_eq!(p.apply(&f), f);
    }

    #[test]
    fn apply_simple_multipliers() {
        let f = NormalizedSeries::from_tail(vec![cx_int(1), cx_int(1)]);
        let p = params(1, (1, 1), (1, 1), (1, 1), 0, (0, 1));
        assert_eq!(p.apply(&f), NormalizedSeries::from_tail(vec![cx_int(1), cx_int(2)]));
        let p = params(0, (1, 1), (1, 1), (1, 1), 1, (0, 1));
        assert_eq!(p.apply(&f), NormalizedSeries::from_tail(vec![cx_int(2), cx_int(3)]));
    }

    #[test]
    fn apply_matches_hadamard_kernel() {
        let f = NormalizedSeries::from_tail(vec![cx_int(3), cx_int(-2), cx_int(5), cx_int(7)]);
        let p = params(2, (2, 3), (3, 4), (5, 4), 2, (0, 1));
        let kernel = p.kernel(5);
        assert_eq!(
            p.apply(&f).series(),
            &f.series().hadamard(kernel.series())
        );
    }

    #[test]
    fn multipliers_are_unit_for_identity_configuration() {
        let p = ClassParams::<Exact>::identity();
        let m = p.multipliers();
        assert_eq!(m.u2, Exact::one());
        assert_eq!(m.u3, Exact::one());
        assert!(!m.is_degenerate());
    }

    #[test]
    fn degeneracy_flag() {
        let p = params(1, (1, 2), (1, 2), (1, 1), 0, (0, 1));
        assert!(p.is_degenerate());
        assert!(p.multipliers().is_degenerate());
        let p = params(0, (1, 2), (1, 2), (1, 1), 0, (0, 1));
        assert!(!p.is_degenerate());
        let p = params(3, (1, 1), (1, 1), (0, 1), 0, (0, 1));
        assert!(p.is_degenerate());
    }

    #[test]
    fn quotient_reduces_to_derivative_at_gamma_one() {
        let f = NormalizedSeries::from_tail(vec![cx_int(2), cx_int(-1)]);
        let p = params(1, (1, 1), (3, 4), (1, 2), 1, (1, 1));
        let q = p.bazilevic_quotient(&f).unwrap();
        assert_eq!(q, p.apply(&f).series().derivative().unwrap());
    }

    #[test]
    fn quotient_identity_operator_gamma_zero() {
        // f' (f/z)^{-1} = 1 + a2 z + (2 a3 - a2^2) z^2 for the identity operator.
        let a2 = rat(5, 3);
        let a3 = rat(-1, 2);
        let f = NormalizedSeries::from_tail(vec![cx_real(a2.clone()), cx_real(a3.clone())]);
        let p = ClassParams::<Exact>::identity();
        let q = p.bazilevic_quotient(&f).unwrap();
        assert_eq!(q.coeff(0), cx_int(1));
        assert_eq!(q.coeff(1), cx_real(a2.clone()));
        assert_eq!(q.coeff(2), cx_real(Exact::from_int(2) * a3 - a2.clone() * a2));
    }

    #[test]
    fn quotient_general_closed_form() {
        let p = params(1, (1, 1), (1, 1), (1, 1), 1, (3, 2));
        let a2 = rat(2, 7);
        let a3 = rat(-3, 5);
        let f = NormalizedSeries::from_tail(vec![cx_real(a2.clone()), cx_real(a3.clone())]);
        let q = p.bazilevic_quotient(&f).unwrap();
        let g = p.gamma().clone();
        let mp = p.multipliers();
        let one = Exact::one();
        let two = Exact::from_int(2);
        let q1 = (g.clone() + one.clone()) * mp.u2.clone() * a2.clone();
        let q2 = (g.clone() + two.clone()) * mp.u3 * a3
            + (g.clone() - one) * (g + two.clone()) / two * mp.u2.clone() * mp.u2 * a2.clone() * a2;
        assert_eq!(q.coeff(1), cx_real(q1));
        assert_eq!(q.coeff(2), cx_real(q2));
    }

    #[test]
    fn param_range_validation() {
        assert!(ClassParams::new(0, Exact::zero(), Exact::one(), Exact::one(), Exact::zero(), Exact::zero()).is_err());
        assert!(ClassParams::new(0, Exact::one(), Exact::from_int(2), Exact::one(), Exact::zero(), Exact::zero()).is_err());
        assert!(ClassParams::new(0, Exact::one(), Exact::one(), Exact::from_int(-1), Exact::zero(), Exact::zero()).is_err());
        assert!(ClassParams::new(0, Exact::one(), Exact::one(), Exact::one(), Exact::from_int(-1), Exact::zero()).is_err());
        assert!(ClassParams::new(0, Exact::one(), Exact::one(), Exact::one(), Exact::zero(), Exact::from_int(-2)).is_err());
    }
}
