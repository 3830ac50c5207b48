//! Closed-form second- and third-coefficient bounds and their evaluation
//! over any parameter bundle and target family.
//!
//! The mechanical route — substitute the target family's `(B1, B2)` into the
//! general bound formulas — is the single source of truth. Printed
//! specialization forms live in [`audit`] and are only data to compare
//! against.

pub mod audit;

use crate::maminda::{PhiError, PhiSpec};
use crate::operator::{ClassParams, MultiplierPair};
use crate::scalar::Scalar;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("operator multipliers vanish; the bound formulas are undefined")]
    DegenerateOperator,
    #[error("the second-coefficient denominator is zero; the bound is uninformative")]
    ZeroDenominator,
}

/// Coefficient of `a2^2` in the summed quadratic relation:
/// `2 (gamma + 2) u3 + (gamma - 1)(gamma + 2) u2^2`.
pub fn a2sq_coefficient<S: Scalar>(gamma: &S, m: &MultiplierPair<S>) -> S {
    let one = S::one();
    let two = S::from_int(2);
    two.clone() * (gamma.clone() + two.clone()) * m.u3.clone()
        + (gamma.clone() - one) * (gamma.clone() + two) * m.u2.clone() * m.u2.clone()
}

/// The quantity inside the absolute value of the second-coefficient bound:
/// `B1^2 * a2sq_coefficient - 2 (B2 - B1)(gamma + 1)^2 u2^2`.
pub fn a2_denominator<S: Scalar>(gamma: &S, b1: &S, b2: &S, m: &MultiplierPair<S>) -> S {
    let one = S::one();
    let two = S::from_int(2);
    let gp1 = gamma.clone() + one;
    b1.clone() * b1.clone() * a2sq_coefficient(gamma, m)
        - two * (b2.clone() - b1.clone()) * gp1.clone() * gp1 * m.u2.clone() * m.u2.clone()
}

/// The two building blocks of the third-coefficient bound:
/// `(B1 / ((gamma + 2) u3), B1 / ((gamma + 1) u2))`. The bound itself is
/// `t1 + t2^2`. Shared with the extremal search so that corner evaluations
/// and the bound agree bit for bit.
pub fn a3_terms<S: Scalar>(gamma: &S, b1: &S, m: &MultiplierPair<S>) -> (S, S) {
    let one = S::one();
    let two = S::from_int(2);
    let t1 = b1.clone() / ((gamma.clone() + two) * m.u3.clone());
    let t2 = b1.clone() / ((gamma.clone() + one) * m.u2.clone());
    (t1, t2)
}

/// Second-coefficient bound `B1 sqrt(2 B1) / sqrt(|denominator|)`.
pub fn bound_a2(params: &ClassParams<f64>, b1: f64, b2: f64) -> Result<f64, BoundError> {
    assert!(b1 > 0.0, "bound formulas require B1 > 0");
    let m = params.multipliers();
    if m.is_degenerate() {
        return Err(BoundError::DegenerateOperator);
    }
    let den = a2_denominator(params.gamma(), &b1, &b2, &m);
    if den == 0.0 {
        return Err(BoundError::ZeroDenominator);
    }
    Ok((2.0 * (b1 * b1 * b1) / den.abs()).sqrt())
}

/// Third-coefficient bound `B1 / ((gamma + 2) u3) + [B1 / ((gamma + 1) u2)]^2`.
pub fn bound_a3(params: &ClassParams<f64>, b1: f64) -> Result<f64, BoundError> {
    assert!(b1 > 0.0, "bound formulas require B1 > 0");
    let m = params.multipliers();
    if m.is_degenerate() {
        return Err(BoundError::DegenerateOperator);
    }
    let (t1, t2) = a3_terms(params.gamma(), &b1, &m);
    Ok(t1 + t2 * t2)
}

/// Evaluated bounds for one parameter bundle and target family.
#[derive(Debug, Clone, Serialize)]
pub struct BoundResult {
    pub a2_bound: Option<f64>,
    pub a3_bound: Option<f64>,
    /// The signed second-coefficient denominator before the absolute value.
    pub denom_value: f64,
    pub degenerate: bool,
    /// `;`-joinable tokens describing why a cell is blank or suspicious.
    pub flags: Vec<String>,
}

impl BoundResult {
    pub fn b1_b2(params: &ClassParams<f64>, b1: f64, b2: f64) -> BoundResult {
        let m = params.multipliers();
        let mut flags = Vec::new();
        let denom_value = a2_denominator(params.gamma(), &b1, &b2, &m);
        let degenerate = m.is_degenerate() || denom_value == 0.0;
        if m.is_degenerate() {
            flags.push("degenerate-operator".to_string());
        } else if denom_value == 0.0 {
            flags.push("zero-denominator".to_string());
        }
        if !m.is_degenerate() && m.u3 < 0.0 {
            // The printed third-coefficient form assumes a positive
            // multiplier; with u3 < 0 its first term goes negative.
            flags.push("negative-multiplier".to_string());
        }
        let (a2_bound, a3_bound) = if degenerate {
            (None, None)
        } else {
            (
                Some(bound_a2(params, b1, b2).expect("checked non-degenerate")),
                Some(bound_a3(params, b1).expect("checked non-degenerate")),
            )
        };
        BoundResult { a2_bound, a3_bound, denom_value, degenerate, flags }
    }

    /// Mechanical route: substitute the family's closed coefficients.
    pub fn for_phi(params: &ClassParams<f64>, phi: &PhiSpec<f64>) -> BoundResult {
        let (b1, b2) = phi.coefficients();
        Self::b1_b2(params, b1, b2)
    }
}

/// Bounds for the Janowski family `(1 + A z)/(1 + B z)` via the mechanical
/// route; validates `-1 <= B < A <= 1`.
pub fn bound_janowski(params: &ClassParams<f64>, a: f64, b: f64) -> Result<BoundResult, PhiError> {
    let phi = PhiSpec::janowski(a, b)?;
    Ok(BoundResult::for_phi(params, &phi))
}

/// Bounds for the order family; the `B2 - B1` term vanishes identically.
pub fn bound_order(params: &ClassParams<f64>, zeta: f64) -> Result<BoundResult, PhiError> {
    let phi = PhiSpec::order_zeta(zeta)?;
    Ok(BoundResult::for_phi(params, &phi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fparams(k: u32, alpha: f64, beta: f64, lambda: f64, delta: f64, gamma: f64) -> ClassParams<f64> {
        ClassParams::new(k, alpha, beta, lambda, delta, gamma).unwrap()
    }

    fn identity_gamma(gamma: f64) -> ClassParams<f64> {
        fparams(0, 1.0, 1.0, 1.0, 0.0, gamma)
    }

    #[test]
    fn a2_identity_operator() {
        // gamma = 0, B1 = B2 = 2: denominator 4 * (4 - 2) = 8, numerator 4.
        let p = identity_gamma(0.0);
        let v = bound_a2(&p, 2.0, 2.0).unwrap();
        assert!((v - 2.0_f64.sqrt()).abs() < 1e-14);
        let den = a2_denominator(&0.0, &2.0, &2.0, &p.multipliers());
        assert_eq!(den, 8.0);
    }

    #[test]
    fn a2_first_order_operator() {
        let p = fparams(1, 1.0, 1.0, 1.0, 0.0, 0.0);
        let m = p.multipliers();
        assert_eq!((m.u2, m.u3), (1.0, 2.0));
        let v = bound_a2(&p, 2.0, 2.0).unwrap();
        assert!((v - 4.0 / 24.0_f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn a2_identity_gamma_one() {
        let p = identity_gamma(1.0);
        let v = bound_a2(&p, 1.0, 1.0).unwrap();
        assert!((v - 1.0 / 3.0_f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn a3_values() {
        assert_eq!(bound_a3(&identity_gamma(0.0), 2.0).unwrap(), 5.0);
        let p = fparams(1, 1.0, 1.0, 1.0, 0.0, 0.0);
        assert_eq!(bound_a3(&p, 2.0).unwrap(), 4.5);
        let v = bound_a3(&identity_gamma(1.0), 1.0).unwrap();
        assert!((v - 7.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn degenerate_operator_is_an_error() {
        let p = fparams(1, 1.0, 1.0, 0.0, 0.0, 0.0);
        assert_eq!(bound_a2(&p, 1.0, 1.0), Err(BoundError::DegenerateOperator));
        assert_eq!(bound_a3(&p, 1.0), Err(BoundError::DegenerateOperator));
        let r = BoundResult::b1_b2(&p, 1.0, 1.0);
        assert!(r.degenerate && r.a2_bound.is_none() && r.a3_bound.is_none());
        assert!(r.flags.iter().any(|f| f == "degenerate-operator"));
    }

    #[test]
    fn zero_denominator_is_an_error_not_infinity() {
        // B1 = 1, arrange B2 so the denominator vanishes: den = X - 2(B2-1)(gamma+1)^2
        // with identity multipliers and gamma = 0: X = 2, so B2 = 2 gives 0.
        let p = identity_gamma(0.0);
        assert_eq!(bound_a2(&p, 1.0, 2.0), Err(BoundError::ZeroDenominator));
        let r = BoundResult::b1_b2(&p, 1.0, 2.0);
        assert!(r.degenerate);
        assert!(r.flags.iter().any(|f| f == "zero-denominator"));
    }

    #[test]
    fn janowski_substitution_identity() {
        // A = 1, B = -1 is the same point as B1 = B2 = 2.
        let p = identity_gamma(0.0);
        let r = bound_janowski(&p, 1.0, -1.0).unwrap();
        assert_eq!(r.a2_bound, Some(bound_a2(&p, 2.0, 2.0).unwrap()));
        assert_eq!(r.a3_bound, Some(bound_a3(&p, 2.0).unwrap()));
    }

    #[test]
    fn janowski_mechanical_point_where_printed_form_degenerates() {
        // A = 1, B = 0 at the identity operator, gamma = 0: the mechanical
        // route gives sqrt(2)/2; the printed two-parameter specialization has
        // denominator |(A-B) - (B+1)| = 0 there (covered by the audit).
        let p = identity_gamma(0.0);
        let r = bound_janowski(&p, 1.0, 0.0).unwrap();
        let v = r.a2_bound.unwrap();
        assert!((v - 2.0_f64.sqrt() / 2.0).abs() < 1e-14);
        assert_eq!(r.denom_value, 4.0);
    }

    #[test]
    fn janowski_b_minus_one_kills_the_b2_term() {
        for gamma in [0.0, 0.5, 1.0, 2.0] {
            for a in [0.25, 0.5, 1.0] {
                let p = fparams(1, 1.0, 0.75, 0.5, 1.0, gamma);
                let r = bound_janowski(&p, a, -1.0).unwrap();
                let b1 = a + 1.0;
                let expected = b1 * b1 * a2sq_coefficient(&gamma, &p.multipliers());
                assert_eq!(r.denom_value, expected);
            }
        }
    }

    #[test]
    fn order_family_values() {
        let p = identity_gamma(1.0);
        let r = bound_order(&p, 0.5).unwrap();
        assert!((r.a2_bound.unwrap() - (1.0_f64 / 3.0).sqrt()).abs() < 1e-14);
        assert!((r.a3_bound.unwrap() - 7.0 / 12.0).abs() < 1e-15);

        let p = fparams(1, 1.0, 1.0, 1.0, 0.0, 0.0);
        let r = bound_order(&p, 0.0).unwrap();
        assert!((r.a2_bound.unwrap() - 4.0 / 24.0_f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn order_family_closed_form_gamma_one_identity() {
        // gamma = 1, identity operator: a2 bound is sqrt(2 (1 - zeta) / 3).
        let p = identity_gamma(1.0);
        for zeta in [0.0, 0.125, 0.25, 0.5, 0.75] {
            let r = bound_order(&p, zeta).unwrap();
            let expected = (2.0 * (1.0 - zeta) / 3.0).sqrt();
            assert!((r.a2_bound.unwrap() - expected).abs() < 1e-14);
        }
    }

    #[test]
    fn order_family_bounds_decrease_in_zeta() {
        let p = fparams(1, 1.0, 1.0, 1.0, 1.0, 2.0);
        let mut last_a2 = f64::INFINITY;
        let mut last_a3 = f64::INFINITY;
        for i in 0..16 {
            let zeta = i as f64 / 16.0;
            let r = bound_order(&p, zeta).unwrap();
            let (a2, a3) = (r.a2_bound.unwrap(), r.a3_bound.unwrap());
            assert!(a2 < last_a2 && a3 < last_a3, "bounds must strictly decrease in zeta");
            last_a2 = a2;
            last_a3 = a3;
        }
    }

    #[test]
    fn a3_structural_decomposition() {
        let p = fparams(2, 0.875, 0.75, 1.25, 2.0, 1.5);
        let m = p.multipliers();
        let b1 = 1.75;
        let (t1, t2) = a3_terms(p.gamma(), &b1, &m);
        assert_eq!(bound_a3(&p, b1).unwrap(), t1 + t2 * t2);
        assert_eq!(t2, b1 / ((p.gamma() + 1.0) * m.u2));
    }
}
