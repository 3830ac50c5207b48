//! Exact reproduction of the proof chain behind the coefficient bounds, and
//! the machinery to demonstrate the bounds as maxima of the relaxed extremal
//! problem.
//!
//! Everything here runs over a generic scalar; the verification suite uses
//! exact rationals (residuals must vanish identically), while the extremal
//! search instantiates the same relations over `f64`.

pub mod sampling;
pub mod search;
pub mod suite;

use crate::bounds::{a2_denominator, a2sq_coefficient, a3_terms, BoundError};
use crate::operator::ClassParams;
use crate::scalar::{cx_real, Scalar, C};
use crate::series::{NormalizedSeries, SeriesError, TruncSeries};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TupleError {
    #[error("|{0}| must not exceed 2")]
    BoxViolation(&'static str),
    #[error("the inverse-side linear coefficient must satisfy h1 = -p1")]
    InverseLinkBroken,
}

/// The free coefficients `(p1, p2, h1, h2)` of the two positive-real-part
/// functions in the proof, restricted to the coefficient boxes `|.| <= 2`
/// and tied by `h1 = -p1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CaratheodoryTuple<S: Scalar> {
    pub p1: C<S>,
    pub p2: C<S>,
    pub h1: C<S>,
    pub h2: C<S>,
}

impl<S: Scalar> CaratheodoryTuple<S> {
    pub fn new(p1: C<S>, p2: C<S>, h1: C<S>, h2: C<S>) -> Result<Self, TupleError> {
        let four = S::from_int(4);
        if p1.norm_sqr() > four {
            return Err(TupleError::BoxViolation("p1"));
        }
        if p2.norm_sqr() > four {
            return Err(TupleError::BoxViolation("p2"));
        }
        if h1.norm_sqr() > four {
            return Err(TupleError::BoxViolation("h1"));
        }
        if h2.norm_sqr() > four {
            return Err(TupleError::BoxViolation("h2"));
        }
        if h1 != -p1.clone() {
            return Err(TupleError::InverseLinkBroken);
        }
        Ok(CaratheodoryTuple { p1, p2, h1, h2 })
    }

    /// Build from the three free coordinates; `h1` is forced to `-p1`.
    pub fn from_free(p1: C<S>, p2: C<S>, h2: C<S>) -> Result<Self, TupleError> {
        let h1 = -p1.clone();
        Self::new(p1, p2, h1, h2)
    }

    pub fn zero() -> Self {
        CaratheodoryTuple { p1: C::zero(), p2: C::zero(), h1: C::zero(), h2: C::zero() }
    }

    /// The positive-real-part series `1 + p1 z + p2 z^2`.
    pub fn p_series(&self) -> TruncSeries<S> {
        TruncSeries::new(vec![C::one(), self.p1.clone(), self.p2.clone()])
    }

    /// The inverse-side series `1 + h1 w + h2 w^2`.
    pub fn h_series(&self) -> TruncSeries<S> {
        TruncSeries::new(vec![C::one(), self.h1.clone(), self.h2.clone()])
    }
}

/// Map a series with unit constant term through `p -> (p - 1)/(p + 1)`.
/// The result is the associated self-map coefficients:
/// `c1 = p1/2`, `c2 = (p2 - p1^2/2)/2`.
pub fn schwarz_from_caratheodory<S: Scalar>(p: &TruncSeries<S>) -> Result<TruncSeries<S>, SeriesError> {
    if p.coeff(0) != C::one() {
        return Err(SeriesError::ConstantTermNotOne);
    }
    let one = TruncSeries::one(p.order());
    (p - &one).divide(&(p + &one))
}

/// The two self-map series induced by a coefficient tuple.
#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzPair<S: Scalar> {
    pub u: TruncSeries<S>,
    pub v: TruncSeries<S>,
}

impl<S: Scalar> SchwarzPair<S> {
    pub fn from_tuple(t: &CaratheodoryTuple<S>) -> Self {
        let u = schwarz_from_caratheodory(&t.p_series()).expect("constant term is one");
        let v = schwarz_from_caratheodory(&t.h_series()).expect("constant term is one");
        SchwarzPair { u, v }
    }

    /// The two-coefficient self-map body: `|c1| <= 1` and `|c2| <= 1 - |c1|^2`
    /// for both members. Only the strict search mode enforces this.
    pub fn satisfies_coefficient_body(&self) -> bool {
        let ok = |w: &TruncSeries<S>| {
            let c1sq = w.coeff(1).norm_sqr();
            let c2sq = w.coeff(2).norm_sqr();
            if c1sq > S::one() {
                return false;
            }
            let slack = S::one() - c1sq;
            c2sq <= slack.clone() * slack
        };
        ok(&self.u) && ok(&self.v)
    }
}

/// The coefficient relations of the proof, evaluated at one tuple.
#[derive(Debug, Clone, PartialEq)]
pub struct ProofRelations<S: Scalar> {
    /// `a2` from the linear relation: `B1 p1 / (2 (gamma+1) u2)`.
    pub a2: C<S>,
    /// `a2^2` from the combined quadratic relation:
    /// `B1^3 (p2 + h2) / (2 B1^2 X - 4 (B2 - B1)(gamma+1)^2 u2^2)`.
    pub a2_squared: C<S>,
    /// `a3` from the difference relation with the squared linear relation
    /// substituted for `a2^2` (squared `(gamma+1)` denominator):
    /// `B1^2 (p1^2 + h1^2) / (8 (gamma+1)^2 u2^2) + B1 (p2 - h2) / (4 (gamma+2) u3)`.
    pub a3: C<S>,
    /// Squared linear relation evaluated with `a2` above; identically zero.
    pub squared_linear_residual: C<S>,
    /// Combined quadratic relation evaluated with `a2_squared` above and the
    /// squared linear relation eliminating `p1^2 + h1^2`; identically zero.
    pub quadratic_solve_residual: C<S>,
}

/// Evaluate the proof relations at a tuple.
pub fn proof_relations<S: Scalar>(
    params: &ClassParams<S>,
    b1: &S,
    b2: &S,
    t: &CaratheodoryTuple<S>,
) -> Result<ProofRelations<S>, BoundError> {
    let m = params.multipliers();
    if m.is_degenerate() {
        return Err(BoundError::DegenerateOperator);
    }
    let gamma = params.gamma();
    let two = S::from_int(2);
    let gp1 = gamma.clone() + S::one();
    let u2 = m.u2.clone();

    let a2 = t.p1.clone().scale(b1.clone()).unscale(two.clone() * gp1.clone() * u2.clone());

    let den_core = a2_denominator(gamma, b1, b2, &m);
    if den_core.is_zero() {
        return Err(BoundError::ZeroDenominator);
    }
    let b1_cubed = b1.clone() * b1.clone() * b1.clone();
    let a2_squared = (t.p2.clone() + t.h2.clone())
        .scale(b1_cubed.clone())
        .unscale(two.clone() * den_core.clone());

    let (t1, t2) = a3_terms(gamma, b1, &m);
    let p1_sq = t.p1.clone() * t.p1.clone();
    let h1_sq = t.h1.clone() * t.h1.clone();
    let a3 = (p1_sq.clone() + h1_sq.clone())
        .scale(t2.clone() * t2.clone())
        .unscale(S::from_int(8))
        + (t.p2.clone() - t.h2.clone()).scale(t1).unscale(S::from_int(4));

    let squared_linear_residual = (a2.clone() * a2.clone())
        .scale(S::from_int(8) * gp1.clone() * gp1.clone() * u2.clone() * u2.clone())
        - (p1_sq + h1_sq).scale(b1.clone() * b1.clone());

    // Multiplying the solved quotient back against its denominator must
    // reproduce the numerator; this exercises the full division chain.
    let x = a2sq_coefficient(gamma, &m);
    let quadratic_solve_residual = a2_squared.clone().scale(b1.clone() * b1.clone() * x)
        - a2_squared.clone().scale(
            two * (b2.clone() - b1.clone()) * gp1.clone() * gp1.clone() * m.u2.clone() * m.u2.clone(),
        )
        - (t.p2.clone() + t.h2.clone()).scale(b1_cubed).unscale(S::from_int(2));

    Ok(ProofRelations { a2, a2_squared, a3, squared_linear_residual, quadratic_solve_residual })
}

/// Residuals of the additivity identity: summing the two quadratic
/// coefficient relations (direct and inverse side) must reproduce the
/// combined relation, separately on each side of the equals sign. `a2` and
/// `a3` are free values here.
#[derive(Debug, Clone, PartialEq)]
pub struct AdditivityResiduals<S: Scalar> {
    pub lhs: C<S>,
    pub rhs: C<S>,
}

pub fn relation_additivity<S: Scalar>(
    params: &ClassParams<S>,
    b1: &S,
    b2: &S,
    t: &CaratheodoryTuple<S>,
    a2: &C<S>,
    a3: &C<S>,
) -> Result<AdditivityResiduals<S>, BoundError> {
    let m = params.multipliers();
    if m.is_degenerate() {
        return Err(BoundError::DegenerateOperator);
    }
    let gamma = params.gamma();
    let one = S::one();
    let two = S::from_int(2);
    let four = S::from_int(4);
    let gp2 = gamma.clone() + two.clone();
    let u2sq = m.u2.clone() * m.u2.clone();
    let third_coeff = gp2.clone() * m.u3.clone();
    let half_quad = (gamma.clone() - one) * gp2 / two.clone() * u2sq.clone();

    let a2sq = a2.clone() * a2.clone();
    let p1sq = t.p1.clone() * t.p1.clone();
    let h1sq = t.h1.clone() * t.h1.clone();

    let lhs_direct = a3.clone().scale(third_coeff.clone()) + a2sq.clone().scale(half_quad.clone());
    let rhs_direct = (t.p2.clone() - p1sq.clone().unscale(two.clone())).scale(b1.clone() / two.clone())
        + p1sq.clone().scale(b2.clone() / four.clone());

    let lhs_inverse = a2sq.clone().scale(two.clone() * third_coeff.clone() + half_quad)
        - a3.clone().scale(third_coeff);
    let rhs_inverse = (t.h2.clone() - h1sq.clone().unscale(two.clone())).scale(b1.clone() / two.clone())
        + h1sq.clone().scale(b2.clone() / four.clone());

    let x = a2sq_coefficient(gamma, &m);
    let lhs_combined = a2sq.scale(x);
    let rhs_combined = (t.p2.clone() + t.h2.clone()).scale(b1.clone() / two)
        + (p1sq + h1sq).scale((b2.clone() - b1.clone()) / four);

    Ok(AdditivityResiduals {
        lhs: lhs_direct + lhs_inverse - lhs_combined,
        rhs: rhs_direct + rhs_inverse - rhs_combined,
    })
}

/// Sum of squared coefficient distances between two series through order 2.
fn residual_norm<S: Scalar>(lhs: &TruncSeries<S>, rhs: &TruncSeries<S>) -> S {
    let mut acc = S::zero();
    for n in 0..=lhs.order().min(rhs.order()) {
        acc = acc + (lhs.coeff(n) - rhs.coeff(n)).norm_sqr();
    }
    acc
}

/// End-to-end expansion check on the direct side.
///
/// Builds `f` from the linear and quadratic coefficient relations of the
/// tuple, pushes it through the operator quotient, and compares against the
/// target series composed with the induced self-map. The returned residual
/// must be exactly zero in exact mode.
pub fn expansion_residual<S: Scalar>(
    params: &ClassParams<S>,
    b1: &S,
    b2: &S,
    t: &CaratheodoryTuple<S>,
) -> Result<S, BoundError> {
    expansion_residual_inner(params, b1, b2, t, &S::zero())
}

/// Same as [`expansion_residual`], but the target series used for comparison
/// gets its quadratic coefficient shifted. Nonzero shifts exist for the
/// negative-control path only.
pub fn expansion_residual_inner<S: Scalar>(
    params: &ClassParams<S>,
    b1: &S,
    b2: &S,
    t: &CaratheodoryTuple<S>,
    b2_shift: &S,
) -> Result<S, BoundError> {
    let m = params.multipliers();
    if m.is_degenerate() {
        return Err(BoundError::DegenerateOperator);
    }
    let gamma = params.gamma();
    let one = S::one();
    let two = S::from_int(2);
    let four = S::from_int(4);
    let gp1 = gamma.clone() + one.clone();
    let gp2 = gamma.clone() + two.clone();

    let a2 = t.p1.clone().scale(b1.clone()).unscale(two.clone() * gp1 * m.u2.clone());
    let p1sq = t.p1.clone() * t.p1.clone();
    let rhs_quad = (t.p2.clone() - p1sq.clone().unscale(two.clone())).scale(b1.clone() / two.clone())
        + p1sq.scale(b2.clone() / four);
    let half_quad = (gamma.clone() - one) * gp2.clone() / two * m.u2.clone() * m.u2.clone();
    let a3 = (rhs_quad - (a2.clone() * a2.clone()).scale(half_quad)).unscale(gp2 * m.u3.clone());

    let f = NormalizedSeries::from_tail(vec![a2, a3]);
    let lhs = params.bazilevic_quotient(&f).expect("normalized order-3 input");

    let u = schwarz_from_caratheodory(&t.p_series()).expect("constant term is one");
    let phi = TruncSeries::new(vec![
        C::one(),
        cx_real(b1.clone()),
        cx_real(b2.clone() + b2_shift.clone()),
    ]);
    let rhs = phi.compose(&u).expect("self-map has zero constant term");

    Ok(residual_norm(&lhs, &rhs))
}

/// End-to-end expansion check on the inverse side: builds `f` from the
/// inverse-side relations, inverts it, and compares the quotient of the
/// inverse against the target composed with the inverse-side self-map.
pub fn inverse_expansion_residual<S: Scalar>(
    params: &ClassParams<S>,
    b1: &S,
    b2: &S,
    t: &CaratheodoryTuple<S>,
) -> Result<S, BoundError> {
    let m = params.multipliers();
    if m.is_degenerate() {
        return Err(BoundError::DegenerateOperator);
    }
    let gamma = params.gamma();
    let one = S::one();
    let two = S::from_int(2);
    let four = S::from_int(4);
    let gp1 = gamma.clone() + one.clone();
    let gp2 = gamma.clone() + two.clone();

    let a2 = -(t.h1.clone().scale(b1.clone()).unscale(two.clone() * gp1 * m.u2.clone()));
    let h1sq = t.h1.clone() * t.h1.clone();
    let rhs_quad = (t.h2.clone() - h1sq.clone().unscale(two.clone())).scale(b1.clone() / two.clone())
        + h1sq.scale(b2.clone() / four);
    let half_quad = (gamma.clone() - one) * gp2.clone() / two.clone() * m.u2.clone() * m.u2.clone();
    let big = two * gp2.clone() * m.u3.clone() + half_quad;
    let a3 = ((a2.clone() * a2.clone()).scale(big) - rhs_quad).unscale(gp2 * m.u3.clone());

    let f = NormalizedSeries::from_tail(vec![a2, a3]);
    let g = f.invert().expect("order three is invertible");
    let lhs = params.bazilevic_quotient(&g).expect("normalized order-3 input");

    let v = schwarz_from_caratheodory(&t.h_series()).expect("constant term is one");
    let phi = TruncSeries::new(vec![C::one(), cx_real(b1.clone()), cx_real(b2.clone())]);
    let rhs = phi.compose(&v).expect("self-map has zero constant term");

    Ok(residual_norm(&lhs, &rhs))
}
