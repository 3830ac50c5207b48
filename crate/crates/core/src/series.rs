//! Truncated formal power series over complex coefficients.
//!
//! A [`TruncSeries`] holds the coefficients `c_0 .. c_N` of a Taylor
//! expansion truncated at order `N`. Binary operations return the minimum of
//! the operand orders; nothing ever zero-pads, so the order is an invariant
//! the caller can rely on. In exact mode every operation is closed over the
//! rationals.

use crate::scalar::{cx_real, Scalar, C};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series order {actual} is too small (need at least {required})")]
    OrderTooSmall { required: usize, actual: usize },
    #[error("operation requires a unit constant term")]
    ConstantTermNotOne,
    #[error("inner series of a composition must have zero constant term")]
    InnerConstantNotZero,
    #[error("divisor has zero constant term")]
    DivisorConstantZero,
    #[error("series is not normalized (c0 = 0, c1 = 1 required)")]
    NotNormalized,
}

/// Truncated Taylor series with complex coefficients in one scalar mode.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries<S: Scalar> {
    coeffs: Vec<C<S>>,
}

impl<S: Scalar> TruncSeries<S> {
    /// Build from the coefficient list `c_0 .. c_N`; the order is `len - 1`.
    pub fn new(coeffs: Vec<C<S>>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least its constant term");
        TruncSeries { coeffs }
    }

    /// Series with real coefficients `c_0 .. c_N`.
    pub fn from_real(coeffs: Vec<S>) -> Self {
        Self::new(coeffs.into_iter().map(cx_real).collect())
    }

    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        Self::new(vec![C::zero(); order + 1])
    }

    /// The constant-one series at the given order.
    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    /// A constant series at the given order.
    pub fn constant(value: C<S>, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = value;
        Self::new(coeffs)
    }

    /// The identity series `z` at the given order (requires order >= 1).
    pub fn identity(order: usize) -> Self {
        assert!(order >= 1, "identity series needs order >= 1");
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[1] = C::one();
        Self::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^n`; `n` must not exceed the truncation order.
    pub fn coeff(&self, n: usize) -> C<S> {
        assert!(n <= self.order(), "coefficient index {n} beyond order {}", self.order());
        self.coeffs[n].clone()
    }

    pub fn coeffs(&self) -> &[C<S>] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, value: C<S>) {
        assert!(n <= self.order());
        self.coeffs[n] = value;
    }

    /// Drop coefficients above `order` (never extends).
    pub fn truncated(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        Self::new(self.coeffs[..=keep].to_vec())
    }

    /// Multiply every coefficient by a complex constant.
    pub fn scale(&self, factor: &C<S>) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect())
    }

    /// Coefficient-wise (Hadamard) product through the common order.
    pub fn hadamard(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            (0..=order)
                .map(|n| self.coeffs[n].clone() * other.coeffs[n].clone())
                .collect(),
        )
    }

    /// Term-by-term derivative; the order drops by one.
    pub fn derivative(&self) -> Result<Self, SeriesError> {
        if self.order() < 1 {
            return Err(SeriesError::OrderTooSmall { required: 1, actual: 0 });
        }
        let coeffs = (1..=self.order())
            .map(|n| self.coeffs[n].clone().scale(S::from_int(n as i64)))
            .collect();
        Ok(Self::new(coeffs))
    }

    /// Raise a series with unit constant term to a real power.
    ///
    /// Uses the recurrence `n h_n = sum_{k=1..n} (e k - (n - k)) s_k h_{n-k}`
    /// obtained from `h' s = e h s'`; agrees with repeated multiplication
    /// for positive integer exponents.
    pub fn pow_real(&self, exponent: &S) -> Result<Self, SeriesError> {
        if self.coeffs[0] != C::one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let order = self.order();
        let mut out = vec![C::zero(); order + 1];
        out[0] = C::one();
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                let weight = exponent.clone() * S::from_int(k as i64) - S::from_int((n - k) as i64);
                acc = acc + (self.coeffs[k].clone() * out[n - k].clone()).scale(weight);
            }
            out[n] = acc.unscale(S::from_int(n as i64));
        }
        Ok(Self::new(out))
    }

    /// Taylor coefficients of `self(inner)` through the common order.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::InnerConstantNotZero);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncated(order);
        // Horner evaluation: exact through `order` because inner has no
        // constant term.
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for n in (0..order).rev() {
            acc = &(&acc * &inner) + &Self::constant(self.coeffs[n].clone(), order);
        }
        Ok(acc)
    }

    /// Series quotient `self / divisor`; the divisor needs a nonzero constant
    /// term. Long-division recurrence, exact in rational mode.
    pub fn divide(&self, divisor: &Self) -> Result<Self, SeriesError> {
        if divisor.coeffs[0].is_zero() {
            return Err(SeriesError::DivisorConstantZero);
        }
        let order = self.order().min(divisor.order());
        let lead = divisor.coeffs[0].clone();
        let mut out: Vec<C<S>> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                acc = acc - divisor.coeffs[k].clone() * out[n - k].clone();
            }
            out.push(acc / lead.clone());
        }
        Ok(Self::new(out))
    }

    /// Explicit mode conversion; the only bridge from exact to floating.
    pub fn to_floating(&self) -> TruncSeries<f64> {
        TruncSeries::new(
            self.coeffs
                .iter()
                .map(|c| C::new(c.re.to_f64_lossy(), c.im.to_f64_lossy()))
                .collect(),
        )
    }
}

impl<S: Scalar> fmt::Display for TruncSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() && self.coeffs.len() > 1 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})·z")?,
                _ => write!(f, "({c})·z^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<S: Scalar> Add for &TruncSeries<S> {
    type Output = TruncSeries<S>;
    fn add(self, rhs: Self) -> TruncSeries<S> {
        let order = self.order().min(rhs.order());
        TruncSeries::new(
            (0..=order)
                .map(|n| self.coeffs[n].clone() + rhs.coeffs[n].clone())
                .collect(),
        )
    }
}

impl<S: Scalar> Sub for &TruncSeries<S> {
    type Output = TruncSeries<S>;
    fn sub(self, rhs: Self) -> TruncSeries<S> {
        let order = self.order().min(rhs.order());
        TruncSeries::new(
            (0..=order)
                .map(|n| self.coeffs[n].clone() - rhs.coeffs[n].clone())
                .collect(),
        )
    }
}

impl<S: Scalar> Neg for &TruncSeries<S> {
    type Output = TruncSeries<S>;
    fn neg(self) -> TruncSeries<S> {
        TruncSeries::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

/// Cauchy product through the minimum operand order.
impl<S: Scalar> Mul for &TruncSeries<S> {
    type Output = TruncSeries<S>;
    fn mul(self, rhs: Self) -> TruncSeries<S> {
        let order = self.order().min(rhs.order());
        let mut out = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncSeries::new(out)
    }
}

/// A series of the shape `z + c_2 z^2 + c_3 z^3 + ...` (c0 = 0, c1 = 1).
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedSeries<S: Scalar> {
    series: TruncSeries<S>,
}

impl<S: Scalar> NormalizedSeries<S> {
    /// Wrap a series after checking the normalization exactly.
    pub fn new(series: TruncSeries<S>) -> Result<Self, SeriesError> {
        if series.order() < 1 {
            return Err(SeriesError::OrderTooSmall { required: 1, actual: series.order() });
        }
        if !series.coeffs[0].is_zero() || series.coeffs[1] != C::one() {
            return Err(SeriesError::NotNormalized);
        }
        Ok(NormalizedSeries { series })
    }

    /// Build `z + tail[0] z^2 + tail[1] z^3 + ...`.
    pub fn from_tail(tail: Vec<C<S>>) -> Self {
        let mut coeffs = vec![C::zero(), C::one()];
        coeffs.extend(tail);
        NormalizedSeries { series: TruncSeries::new(coeffs) }
    }

    pub fn series(&self) -> &TruncSeries<S> {
        &self.series
    }

    pub fn into_series(self) -> TruncSeries<S> {
        self.series
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// Compositional inverse: the normalized `g` with `f(g(w)) = w` through
    /// the truncation order. Solved triangularly; each new coefficient is
    /// fixed by one composition because the linear coefficient is 1.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        if self.order() < 2 {
            return Err(SeriesError::OrderTooSmall { required: 2, actual: self.order() });
        }
        let order = self.order();
        let mut g = TruncSeries::identity(order);
        for n in 2..=order {
            let err = self.series.compose(&g).expect("inner series built with zero constant term");
            g.set_coeff(n, -err.coeff(n));
        }
        Ok(NormalizedSeries { series: g })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{cx_int, cx_ratio, Exact};
    use num_traits::{One, Zero};

    fn ex(coeffs: &[(i64, i64)]) -> TruncSeries<Exact> {
        TruncSeries::from_real(coeffs.iter().map(|&(n, d)| Exact::from_ratio(n, d)).collect())
    }

    fn ints(coeffs: &[i64]) -> TruncSeries<Exact> {
        TruncSeries::from_real(coeffs.iter().map(|&n| Exact::from_int(n)).collect())
    }

    /// Independent convolution oracle: plain double loop over the inputs.
    #[allow(clippy::needless_range_loop)]
    fn naive_product(a: &TruncSeries<Exact>, b: &TruncSeries<Exact>) -> TruncSeries<Exact> {
        let order = a.order().min(b.order());
        let mut out = vec![C::zero(); order + 1];
        for n in 0..=order {
            for j in 0..=n {
                out[n] = out[n].clone() + a.coeff(j) * b.coeff(n - j);
            }
        }
        TruncSeries::new(out)
    }

    #[test]
    fn mul_difference_of_squares() {
        let lhs = ints(&[1, 1, 0]);
        let rhs = ints(&[1, -1, 0]);
        assert_eq!(&lhs * &rhs, ints(&[1, 0, -1]));
    }

    #[test]
    fn mul_by_one_is_identity() {
        let s = ints(&[1, 2, 2]);
        assert_eq!(&s * &TruncSeries::one(2), s);
    }

    #[test]
    fn mul_matches_convolution_oracle() {
        let s = ints(&[1, 1, 1]);
        assert_eq!(&s * &s, naive_product(&s, &s));
        assert_eq!(&s * &s, ints(&[1, 2, 3]));
        let a = ex(&[(1, 1), (3, 2), (-2, 5), (7, 3)]);
        let b = ex(&[(2, 7), (-1, 2), (5, 1), (0, 1)]);
        assert_eq!(&a * &b, naive_product(&a, &b));
    }

    #[test]
    fn mul_takes_min_order() {
        let a = ints(&[1, 1, 1, 1]);
        let b = ints(&[1, 1]);
        assert_eq!((&a * &b).order(), 1);
    }

    #[test]
    fn pow_real_integer_powers() {
        let s = ints(&[1, 1]);
        assert_eq!(s.pow_real(&Exact::from_int(2)).unwrap(), ints(&[1, 2]));
        let s2 = ints(&[1, 1, 0]);
        assert_eq!(s2.pow_real(&Exact::from_int(2)).unwrap(), ints(&[1, 2, 1]));
        assert_eq!(s2.pow_real(&Exact::zero()).unwrap(), TruncSeries::one(2));
    }

    #[test]
    fn pow_real_matches_binomial_series() {
        // (1 + a2 z + a3 z^2)^e = 1 + e a2 z + (e a3 + e(e-1)/2 a2^2) z^2.
        let a2 = Exact::from_ratio(3, 4);
        let a3 = Exact::from_ratio(-2, 5);
        for (num, den) in [(5, 1), (-1, 1), (1, 2), (-7, 3)] {
            let e = Exact::from_ratio(num, den);
            let s = TruncSeries::from_real(vec![Exact::one(), a2.clone(), a3.clone()]);
            let got = s.pow_real(&e).unwrap();
            let lin = e.clone() * a2.clone();
            let quad = e.clone() * a3.clone()
                + e.clone() * (e.clone() - Exact::one()) / Exact::from_int(2) * a2.clone() * a2.clone();
            assert_eq!(got, TruncSeries::from_real(vec![Exact::one(), lin, quad]));
        }
    }

    #[test]
    fn pow_real_round_trip() {
        let s = ex(&[(1, 1), (2, 3), (-1, 4), (5, 6)]);
        for (num, den) in [(1, 2), (2, 1), (-1, 1)] {
            let e = Exact::from_ratio(num, den);
            let inv = Exact::one() / e.clone();
            let back = s.pow_real(&e).unwrap().pow_real(&inv).unwrap();
            assert_eq!(back, s);
        }
    }

    #[test]
    fn pow_real_rejects_non_unit_constant() {
        let s = ints(&[2, 1]);
        assert_eq!(s.pow_real(&Exact::one()), Err(SeriesError::ConstantTermNotOne));
    }

    #[test]
    fn derivative_basic() {
        assert_eq!(ints(&[0, 1, 1, 1]).derivative().unwrap(), ints(&[1, 2, 3]));
        assert_eq!(ints(&[1, 0]).derivative().unwrap(), ints(&[0]));
        let s = ex(&[(0, 1), (1, 1), (3, 7), (-5, 2)]);
        assert_eq!(
            s.derivative().unwrap(),
            ex(&[(1, 1), (6, 7), (-15, 2)])
        );
    }

    #[test]
    fn derivative_needs_positive_order() {
        assert_eq!(
            ints(&[1]).derivative(),
            Err(SeriesError::OrderTooSmall { required: 1, actual: 0 })
        );
    }

    #[test]
    fn derivative_product_rule() {
        let a = ex(&[(1, 2), (3, 1), (-1, 3), (2, 5)]);
        let b = ex(&[(4, 1), (-2, 7), (1, 1), (0, 1)]);
        let lhs = (&a * &b).derivative().unwrap();
        let rhs = &(&a.derivative().unwrap() * &b.truncated(2)) + &(&a.truncated(2) * &b.derivative().unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn compose_substitution_oracle() {
        // (1 + B1 t + B2 t^2) o (c1 z + c2 z^2) = 1 + B1 c1 z + (B1 c2 + B2 c1^2) z^2.
        let b1 = Exact::from_ratio(5, 3);
        let b2 = Exact::from_ratio(-1, 2);
        let c1 = Exact::from_ratio(2, 7);
        let c2 = Exact::from_ratio(4, 5);
        let outer = TruncSeries::from_real(vec![Exact::one(), b1.clone(), b2.clone()]);
        let inner = TruncSeries::from_real(vec![Exact::zero(), c1.clone(), c2.clone()]);
        let got = outer.compose(&inner).unwrap();
        let want = TruncSeries::from_real(vec![
            Exact::one(),
            b1.clone() * c1.clone(),
            b1 * c2 + b2 * c1.clone() * c1,
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn compose_with_identity_inner() {
        let s = ints(&[1, 2, 2]);
        assert_eq!(s.compose(&TruncSeries::identity(2)).unwrap(), s);
    }

    #[test]
    fn compose_rejects_nonzero_inner_constant() {
        let s = ints(&[1, 1]);
        assert_eq!(s.compose(&ints(&[1, 1])), Err(SeriesError::InnerConstantNotZero));
    }

    #[test]
    fn divide_geometric_oracle() {
        let num = ints(&[1, 1, 0]);
        let den = ints(&[1, -1, 0]);
        let q = num.divide(&den).unwrap();
        assert_eq!(q, ints(&[1, 2, 2]));
        assert_eq!(&q * &den, num);
    }

    #[test]
    fn divide_self_is_one() {
        let s = ex(&[(3, 2), (1, 5), (-4, 7)]);
        assert_eq!(s.divide(&s).unwrap(), TruncSeries::one(2));
    }

    #[test]
    fn divide_janowski_shape() {
        // (1 + A z)/(1 + B z) = 1 + (A - B) z + (B^2 - A B) z^2.
        for (a, b) in [((1, 1), (-1, 1)), ((1, 2), (-1, 3)), ((3, 4), (1, 5))] {
            let av = Exact::from_ratio(a.0, a.1);
            let bv = Exact::from_ratio(b.0, b.1);
            let num = TruncSeries::from_real(vec![Exact::one(), av.clone(), Exact::zero()]);
            let den = TruncSeries::from_real(vec![Exact::one(), bv.clone(), Exact::zero()]);
            let want = TruncSeries::from_real(vec![
                Exact::one(),
                av.clone() - bv.clone(),
                bv.clone() * bv.clone() - av * bv,
            ]);
            assert_eq!(num.divide(&den).unwrap(), want);
        }
    }

    #[test]
    fn divide_rejects_zero_constant() {
        let s = ints(&[1, 1]);
        assert_eq!(s.divide(&ints(&[0, 1])), Err(SeriesError::DivisorConstantZero));
    }

    #[test]
    fn invert_identity() {
        let f = NormalizedSeries::from_tail(vec![C::zero()]);
        let g = f.invert().unwrap();
        assert_eq!(g.series(), &ints(&[0, 1, 0]));
    }

    #[test]
    fn invert_alternating() {
        let f = NormalizedSeries::from_tail(vec![cx_int(1), cx_int(1)]);
        let g = f.invert().unwrap();
        assert_eq!(g.series(), &ints(&[0, 1, -1, 1]));
    }

    #[test]
    fn invert_order_four_coefficient() {
        // Reversion closed forms through order 4:
        //   b2 = -a2, b3 = 2 a2^2 - a3, b4 = -(5 a2^3 - 5 a2 a3 + a4).
        let f = NormalizedSeries::from_tail(vec![cx_int::<Exact>(2), cx_int(1), cx_int(0)]);
        let g = f.invert().unwrap();
        assert_eq!(g.series().coeff(2), cx_int(-2));
        assert_eq!(g.series().coeff(3), cx_int(7));
        assert_eq!(g.series().coeff(4), cx_int(-30));
        let round = f.series().compose(g.series()).unwrap();
        assert_eq!(round, TruncSeries::identity(4));
    }

    #[test]
    fn invert_round_trip_rational() {
        let f = NormalizedSeries::from_tail(vec![
            cx_ratio((5, 2), (0, 1)),
            cx_ratio((-7, 3), (0, 1)),
            cx_ratio((1, 6), (0, 1)),
        ]);
        let g = f.invert().unwrap();
        assert_eq!(f.series().compose(g.series()).unwrap(), TruncSeries::identity(4));
        assert_eq!(g.series().compose(f.series()).unwrap(), TruncSeries::identity(4));
    }

    #[test]
    fn invert_needs_order_two() {
        let f = NormalizedSeries::<Exact>::from_tail(vec![]);
        assert_eq!(f.invert(), Err(SeriesError::OrderTooSmall { required: 2, actual: 1 }));
    }

    #[test]
    fn normalized_rejects_bad_series() {
        assert_eq!(
            NormalizedSeries::new(ints(&[0, 2, 0])),
            Err(SeriesError::NotNormalized)
        );
        assert_eq!(
            NormalizedSeries::new(ints(&[1, 1, 0])),
            Err(SeriesError::NotNormalized)
        );
    }

    #[test]
    fn hadamard_pointwise() {
        let a = ints(&[0, 1, 3, 5]);
        let b = ints(&[0, 1, 2, 7]);
        assert_eq!(a.hadamard(&b), ints(&[0, 1, 6, 35]));
    }

    #[test]
    fn to_floating_is_explicit_and_lossy() {
        let s = ex(&[(1, 3), (1, 1)]);
        let f = s.to_floating();
        assert!((f.coeff(0).re - 1.0 / 3.0).abs() < 1e-15);
    }
}
