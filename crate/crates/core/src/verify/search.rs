//! Constrained extremal search over the relaxed tuple space.
//!
//! The search maximizes |a2| (from the combined quadratic relation) or |a3|
//! (from the difference relation) over the coefficient boxes `|.| <= 2` with
//! `h1 = -p1`, and reports the gap against the closed-form bound. The
//! deterministic corner set contains a maximizer of the relaxed problem, so
//! the grid and random draws act as a soundness sweep rather than the
//! optimizer. Strict mode additionally filters candidates through the
//! two-coefficient self-map body and reports the (smaller or equal) maximum
//! for comparison.

use crate::bounds::{bound_a2, bound_a3, BoundError};
use crate::operator::ClassParams;
use crate::report::ComplexVal;
use crate::scalar::C;
use crate::verify::{proof_relations, CaratheodoryTuple, ProofRelations};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundTarget {
    A2,
    A3,
}

impl std::fmt::Display for BoundTarget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundTarget::A2 => write!(f, "a2"),
            BoundTarget::A3 => write!(f, "a3"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Step of the real grid over `[-2, 2]^3`.
    pub resolution: f64,
    /// Number of uniform random draws in the complex polydisc.
    pub random_draws: u64,
    pub seed: u64,
    /// Also track the maximum over the self-map coefficient body.
    pub strict: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { resolution: 0.25, random_draws: 10_000, seed: 1, strict: false }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TupleView {
    pub p1: ComplexVal,
    pub p2: ComplexVal,
    pub h1: ComplexVal,
    pub h2: ComplexVal,
}

impl From<&CaratheodoryTuple<f64>> for TupleView {
    fn from(t: &CaratheodoryTuple<f64>) -> Self {
        TupleView { p1: t.p1.into(), p2: t.p2.into(), h1: t.h1.into(), h2: t.h2.into() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StrictOutcome {
    pub searched_max: f64,
    pub argmax: TupleView,
    pub admissible: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtremalReport {
    pub target: BoundTarget,
    pub searched_max: f64,
    pub formula_bound: f64,
    /// `formula_bound - searched_max`; never below round-off of zero.
    pub gap: f64,
    pub argmax: TupleView,
    pub evaluated: u64,
    pub strict: Option<StrictOutcome>,
}

fn candidate_value(target: BoundTarget, rel: &ProofRelations<f64>) -> f64 {
    match target {
        BoundTarget::A2 => rel.a2_squared.norm().sqrt(),
        BoundTarget::A3 => rel.a3.norm(),
    }
}

/// The self-map coefficient body in tuple coordinates:
/// `|p2 - p1^2/2| <= 2 - |p1|^2/2` on both sides.
fn strict_admissible(t: &CaratheodoryTuple<f64>) -> bool {
    let side = |c1: &C<f64>, c2: &C<f64>| {
        (c2 - c1 * c1 * 0.5).norm() <= 2.0 - c1.norm_sqr() * 0.5
    };
    side(&t.p1, &t.p2) && side(&t.h1, &t.h2)
}

fn disc_point(rng: &mut ChaCha8Rng) -> C<f64> {
    loop {
        let re = rng.gen_range(-2.0..=2.0);
        let im = rng.gen_range(-2.0..=2.0);
        if re * re + im * im <= 4.0 {
            return C::new(re, im);
        }
    }
}

/// Maximize the chosen coefficient over the relaxed constraint set and
/// report the gap against the closed-form bound.
pub fn extremal_search(
    params: &ClassParams<f64>,
    b1: f64,
    b2: f64,
    target: BoundTarget,
    cfg: &SearchConfig,
) -> Result<ExtremalReport, BoundError> {
    assert!(cfg.resolution > 0.0, "grid resolution must be positive");
    let m = params.multipliers();
    if m.is_degenerate() {
        return Err(BoundError::DegenerateOperator);
    }
    if crate::bounds::a2_denominator(params.gamma(), &b1, &b2, &m) == 0.0 {
        return Err(BoundError::ZeroDenominator);
    }
    let formula_bound = match target {
        BoundTarget::A2 => bound_a2(params, b1, b2)?,
        BoundTarget::A3 => bound_a3(params, b1)?,
    };

    let mut best = f64::NEG_INFINITY;
    let mut best_tuple = CaratheodoryTuple::zero();
    let mut strict_best = f64::NEG_INFINITY;
    let mut strict_tuple = CaratheodoryTuple::zero();
    let mut admissible = 0u64;
    let mut evaluated = 0u64;

    let mut visit = |t: CaratheodoryTuple<f64>| {
        let rel = proof_relations(params, &b1, &b2, &t)
            .expect("degenerate and zero-denominator cases are rejected above");
        let value = candidate_value(target, &rel);
        evaluated += 1;
        if value > best {
            best = value;
            best_tuple = t.clone();
        }
        if cfg.strict && strict_admissible(&t) {
            admissible += 1;
            if value > strict_best {
                strict_best = value;
                strict_tuple = t;
            }
        }
    };

    // Deterministic corner set, in tie-break order p1, then p2, then h2.
    let p1_corners = [C::new(0.0, 0.0), C::new(2.0, 0.0), C::new(-2.0, 0.0)];
    let quad_corners = [
        C::new(2.0, 0.0),
        C::new(-2.0, 0.0),
        C::new(0.0, 2.0),
        C::new(0.0, -2.0),
    ];
    for p1 in p1_corners {
        for p2 in quad_corners {
            for h2 in quad_corners {
                visit(CaratheodoryTuple::from_free(p1, p2, h2).expect("corner is admissible"));
            }
        }
    }

    // Real grid at the requested resolution.
    let steps = (4.0 / cfg.resolution).round() as usize;
    let grid: Vec<f64> = (0..=steps)
        .map(|i| -2.0 + i as f64 * cfg.resolution)
        .filter(|v| *v <= 2.0 + 1e-12)
        .map(|v| v.min(2.0))
        .collect();
    for &p1 in &grid {
        for &p2 in &grid {
            for &h2 in &grid {
                let t = CaratheodoryTuple::from_free(
                    C::new(p1, 0.0),
                    C::new(p2, 0.0),
                    C::new(h2, 0.0),
                )
                .expect("grid point is admissible");
                visit(t);
            }
        }
    }

    // Uniform random draws in the complex polydisc.
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.random_draws {
        let t = CaratheodoryTuple::from_free(
            disc_point(&mut rng),
            disc_point(&mut rng),
            disc_point(&mut rng),
        )
        .expect("disc points are admissible");
        visit(t);
    }

    let strict = cfg.strict.then(|| StrictOutcome {
        searched_max: strict_best,
        argmax: TupleView::from(&strict_tuple),
        admissible,
    });

    Ok(ExtremalReport {
        target,
        searched_max: best,
        formula_bound,
        gap: formula_bound - best,
        argmax: TupleView::from(&best_tuple),
        evaluated,
        strict,
    })
}
