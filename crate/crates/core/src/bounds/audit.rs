//! Audit of the printed specialization statements against mechanical
//! specialization of the general bounds.
//!
//! Every corollary of the source text is transcribed literally (including
//! its typos) as a closed-form evaluator. The audit draws random valid
//! parameters in each corollary's regime, evaluates the printed form and the
//! mechanical substitution route, and classifies MATCH or MISMATCH with a
//! witness. Mismatches are deliverable findings, not test failures.

use crate::bounds::{bound_a2, bound_a3};
use crate::maminda::PhiSpec;
use crate::operator::ClassParams;
use crate::report::Finding;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

const REL_TOL: f64 = 1e-12;
/// Draws whose mechanical denominator is smaller than this are re-sampled;
/// near the zero set both routes lose the digits the comparison needs.
const DENOM_GUARD: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum AuditStatus {
    Match,
    Mismatch,
}

/// One sampled parameter point with both evaluation routes.
#[derive(Debug, Clone, Serialize)]
pub struct AuditWitness {
    pub k: u32,
    pub alpha: f64,
    pub beta: f64,
    pub lambda: f64,
    pub delta: f64,
    pub gamma: f64,
    pub phi: String,
    /// `None` when the printed expression is non-finite at the witness.
    pub printed_a2: Option<f64>,
    pub printed_a3: Option<f64>,
    pub derived_a2: f64,
    pub derived_a3: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditEntry {
    pub id: String,
    pub regime: String,
    pub status: AuditStatus,
    pub samples: u32,
    pub resampled: u32,
    pub witness: AuditWitness,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub entries: Vec<AuditEntry>,
    pub findings: Vec<Finding>,
}

#[derive(Clone, Copy)]
enum Family {
    Generic,
    Janowski,
    Order,
}

#[derive(Clone, Copy)]
enum GammaRule {
    Fixed(f64),
    Free,
}

/// One sampled evaluation context; printed evaluators read only these raw
/// fields and recompute their own multiplier expressions, so the two routes
/// share no intermediate values.
struct DrawCtx {
    k: u32,
    alpha: f64,
    beta: f64,
    lambda: f64,
    delta: f64,
    gamma: f64,
    b1: f64,
    b2: f64,
    a: f64,
    b: f64,
    zeta: f64,
}

impl DrawCtx {
    /// `[lambda (alpha + beta - 1) (n - 1)]^k` transcribed independently.
    fn ups(&self, n: u32) -> f64 {
        (self.lambda * (self.alpha + self.beta - 1.0) * f64::from(n - 1)).powi(self.k as i32)
    }

    /// Generalized binomial, transcribed independently.
    fn cdel(&self, n: u32) -> f64 {
        let mut acc = 1.0;
        for j in 1..n {
            acc = acc * (self.delta + f64::from(j)) / f64::from(j);
        }
        acc
    }

    fn phi_label(&self, family: Family) -> String {
        match family {
            Family::Generic => format!("B1={};B2={}", self.b1, self.b2),
            Family::Janowski => format!("A={};B={}", self.a, self.b),
            Family::Order => format!("zeta={}", self.zeta),
        }
    }
}

type PrintedForm = fn(&DrawCtx) -> (f64, f64);

struct Case {
    id: &'static str,
    regime: &'static str,
    family: Family,
    gamma: GammaRule,
    force_k0: bool,
    force_d0: bool,
    printed: PrintedForm,
}

fn sq(x: f64) -> f64 {
    x * x
}

// Printed second-section forms (general target coefficients B1, B2).

fn printed_c22(c: &DrawCtx) -> (f64, f64) {
    let (u2, u3) = (c.ups(2) * c.cdel(2), c.ups(3) * c.cdel(3));
    let a2 = c.b1 * c.b1.sqrt()
        / (c.b1 * c.b1 * (2.0 * u3 - sq(u2)) - (c.b2 - c.b1) * sq(u2)).abs().sqrt();
    let a3 = c.b1 / (2.0 * u3) + sq(c.b1 / u2);
    (a2, a3)
}

fn printed_c23(c: &DrawCtx) -> (f64, f64) {
    let (u2, u3) = (c.ups(2) * c.cdel(2), c.ups(3) * c.cdel(3));
    let a2 = c.b1 * c.b1.sqrt()
        / (3.0 * c.b1 * c.b1 * u3 - 4.0 * (c.b2 - c.b1) * sq(u2)).abs().sqrt();
    let a3 = c.b1 / (3.0 * u3) + sq(c.b1 / (2.0 * u2));
    (a2, a3)
}

fn printed_c24(c: &DrawCtx) -> (f64, f64) {
    let (c2, c3) = (c.cdel(2), c.cdel(3));
    let a2 = c.b1 * c.b1.sqrt()
        / (c.b1 * c.b1 * (2.0 * c3 - sq(c2)) - (c.b2 - c.b1) * sq(c2)).abs().sqrt();
    let a3 = c.b1 / (2.0 * c3) + sq(c.b1 / c2);
    (a2, a3)
}

fn printed_c25(c: &DrawCtx) -> (f64, f64) {
    let (c2, c3) = (c.cdel(2), c.cdel(3));
    let a2 = c.b1 * c.b1.sqrt()
        / (3.0 * c.b1 * c.b1 * c3 - 4.0 * (c.b2 - c.b1) * sq(c2)).abs().sqrt();
    let a3 = c.b1 / (3.0 * c3) + sq(c.b1 / (2.0 * c2));
    (a2, a3)
}

fn printed_c26(c: &DrawCtx) -> (f64, f64) {
    let (u2, u3) = (c.ups(2), c.ups(3));
    let a2 = c.b1 * c.b1.sqrt()
        / (c.b1 * c.b1 * (2.0 * u3 - sq(u2)) - (c.b2 - c.b1) * sq(u2)).abs().sqrt();
    let a3 = c.b1 / (2.0 * u3) + sq(c.b1 / u2);
    (a2, a3)
}

/// Transcribed with the unbalanced parenthesis repaired to `4(B2-B1)[ups2]^2`.
fn printed_c27(c: &DrawCtx) -> (f64, f64) {
    let (u2, u3) = (c.ups(2), c.ups(3));
    let a2 = c.b1 * c.b1.sqrt()
        / (3.0 * c.b1 * c.b1 * u3 - 4.0 * (c.b2 - c.b1) * sq(u2)).abs().sqrt();
    let a3 = c.b1 / (3.0 * u3) + sq(c.b1 / (2.0 * u2));
    (a2, a3)
}

fn printed_c28(c: &DrawCtx) -> (f64, f64) {
    let a2 = c.b1 * c.b1.sqrt() / (c.b1 * c.b1 - (c.b2 - c.b1)).abs().sqrt();
    let a3 = c.b1 / 2.0 + c.b1 * c.b1;
    (a2, a3)
}

fn printed_c29(c: &DrawCtx) -> (f64, f64) {
    let a2 = c.b1 * c.b1.sqrt() / (3.0 * c.b1 * c.b1 - 4.0 * (c.b2 - c.b1)).abs().sqrt();
    let a3 = c.b1 / 3.0 + sq(c.b1 / 2.0);
    (a2, a3)
}

// Printed Janowski-section forms (parameters A, B).

fn printed_t31(c: &DrawCtx) -> (f64, f64) {
    let (u2, u3) = (c.ups(2) * c.cdel(2), c.ups(3) * c.cdel(3));
    let x = 2.0 * (c.gamma + 2.0) * u3 + (c.gamma - 1.0) * (c.gamma + 2.0) * sq(u2);
    let a2 = 2.0_f64.sqrt() * (c.a - c.b)
        / ((c.a - c.b) * x - 2.0 * (c.b + 1.0) * sq(c.gamma + 1.0) * sq(u2)).abs().sqrt();
    let a3 = (c.a - c.b) / ((c.gamma + 2.0) * u3) + sq((c.a - c.b) / ((c.gamma + 1.0) * u2));
    (a2, a3)
}

fn printed_c32(c: &DrawCtx) -> (f64, f64) {
    let (u2, u3) = (c.ups(2) * c.cdel(2), c.ups(3) * c.cdel(3));
    let a2 = (c.a - c.b)
        / ((c.a - c.b) * (2.0 * u3 - sq(u2)) - (c.b + 1.0) * sq(u2)).abs().sqrt();
    let a3 = (c.a - c.b) / (2.0 * u3) + sq((c.a - c.b) / u2);
    (a2, a3)
}

fn printed_c33(c: &DrawCtx) -> (f64, f64) {
    let (u2, u3) = (c.ups(2) * c.cdel(2), c.ups(3) * c.cdel(3));
    let a2 = (c.a - c.b) / (3.0 * (c.a - c.b) * u3 - 4.0 * (c.b + 1.0) * sq(u2)).abs().sqrt();
    let a3 = (c.a - c.b) / (3.0 * u3) + sq((c.a - c.b) / (2.0 * u2));
    (a2, a3)
}

fn printed_c34(c: &DrawCtx) -> (f64, f64) {
    let (c2, c3) = (c.cdel(2), c.cdel(3));
    let a2 = (c.a - c.b)
        / ((c.a - c.b) * (2.0 * c3 - sq(c2)) - (c.b + 1.0) * sq(c2)).abs().sqrt();
    let a3 = (c.a - c.b) / (2.0 * c3) + sq((c.a - c.b) / c2);
    (a2, a3)
}

fn printed_c35(c: &DrawCtx) -> (f64, f64) {
    let (c2, c3) = (c.cdel(2), c.cdel(3));
    let a2 = (c.a - c.b) / (3.0 * (c.a - c.b) * c3 - 4.0 * (c.b + 1.0) * sq(c2)).abs().sqrt();
    let a3 = (c.a - c.b) / (3.0 * c3) + sq((c.a - c.b) / (2.0 * c2));
    (a2, a3)
}

fn printed_c36(c: &DrawCtx) -> (f64, f64) {
    let (u2, u3) = (c.ups(2), c.ups(3));
    let a2 = (c.a - c.b)
        / ((c.a - c.b) * (2.0 * u3 - sq(u2)) - (c.b + 1.0) * sq(u2)).abs().sqrt();
    let a3 = (c.a - c.b) / (2.0 * u3) + sq((c.a - c.b) / u2);
    (a2, a3)
}

fn printed_c37(c: &DrawCtx) -> (f64, f64) {
    let (u2, u3) = (c.ups(2), c.ups(3));
    let a2 = (c.a - c.b) / (3.0 * (c.a - c.b) * u3 - 4.0 * (c.b + 1.0) * sq(u2)).abs().sqrt();
    let a3 = (c.a - c.b) / (3.0 * u3) + sq((c.a - c.b) / (2.0 * u2));
    (a2, a3)
}

fn printed_c38(c: &DrawCtx) -> (f64, f64) {
    let a2 = (c.a - c.b) / ((c.a - c.b) - (c.b + 1.0)).abs().sqrt();
    let a3 = (c.a - c.b) / 2.0 + sq(c.a - c.b);
    (a2, a3)
}

/// Printed with the squared difference `3(A-B)^2` where the parent statement
/// has `3(A-B) ups3`.
fn printed_c39(c: &DrawCtx) -> (f64, f64) {
    let a2 = (c.a - c.b) / (3.0 * sq(c.a - c.b) - 4.0 * (c.b + 1.0)).abs().sqrt();
    let a3 = (c.a - c.b) / 3.0 + sq((c.a - c.b) / 2.0);
    (a2, a3)
}

// Printed order-family forms (parameter zeta).

fn printed_t32(c: &DrawCtx) -> (f64, f64) {
    let (u2, u3) = (c.ups(2) * c.cdel(2), c.ups(3) * c.cdel(3));
    let x = 2.0 * (c.gamma + 2.0) * u3 + (c.gamma - 1.0) * (c.gamma + 2.0) * sq(u2);
    let a2 = 2.0 * (1.0 - c.zeta).sqrt() / x.abs().sqrt();
    let a3 = 2.0 * (1.0 - c.zeta) / ((c.gamma + 2.0) * u3)
        + sq(2.0 * (1.0 - c.zeta) / ((c.gamma + 1.0) * u2));
    (a2, a3)
}

fn printed_c311(c: &DrawCtx) -> (f64, f64) {
    let (u2, u3) = (c.ups(2) * c.cdel(2), c.ups(3) * c.cdel(3));
    let a2 = (2.0 * (1.0 - c.zeta)).sqrt() / (2.0 * u3 - sq(u2)).abs().sqrt();
    let a3 = (1.0 - c.zeta) / u3 + sq(2.0 * (1.0 - c.zeta) / u2);
    (a2, a3)
}

fn printed_c312(c: &DrawCtx) -> (f64, f64) {
    let (u2, u3) = (c.ups(2) * c.cdel(2), c.ups(3) * c.cdel(3));
    let a2 = (2.0 * (1.0 - c.zeta) / (3.0 * u3)).sqrt();
    let a3 = 2.0 * (1.0 - c.zeta) / (3.0 * u3) + sq((1.0 - c.zeta) / u2);
    (a2, a3)
}

/// Printed numerator is `2(1 - zeta)` where the parent statement yields
/// `sqrt(2(1 - zeta))`.
fn printed_c313(c: &DrawCtx) -> (f64, f64) {
    let (c2, c3) = (c.cdel(2), c.cdel(3));
    let a2 = 2.0 * (1.0 - c.zeta) / (2.0 * c3 - sq(c2)).abs().sqrt();
    let a3 = (1.0 - c.zeta) / c3 + sq(2.0 * (1.0 - c.zeta) / c2);
    (a2, a3)
}

fn printed_c314(c: &DrawCtx) -> (f64, f64) {
    let (c2, c3) = (c.cdel(2), c.cdel(3));
    let a2 = (2.0 * (1.0 - c.zeta) / (3.0 * c3)).sqrt();
    let a3 = 2.0 * (1.0 - c.zeta) / (3.0 * c3) + sq((1.0 - c.zeta) / c2);
    (a2, a3)
}

fn printed_c315(c: &DrawCtx) -> (f64, f64) {
    let (u2, u3) = (c.ups(2), c.ups(3));
    let a2 = (2.0 * (1.0 - c.zeta)).sqrt() / (2.0 * u3 - sq(u2)).abs().sqrt();
    let a3 = (1.0 - c.zeta) / u3 + sq(2.0 * (1.0 - c.zeta) / u2);
    (a2, a3)
}

fn printed_c316(c: &DrawCtx) -> (f64, f64) {
    let (u2, u3) = (c.ups(2), c.ups(3));
    let a2 = (2.0 * (1.0 - c.zeta) / (3.0 * u3)).sqrt();
    let a3 = 2.0 * (1.0 - c.zeta) / (3.0 * u3) + sq((1.0 - c.zeta) / u2);
    (a2, a3)
}

fn printed_c317(c: &DrawCtx) -> (f64, f64) {
    let a2 = (2.0 * (1.0 - c.zeta)).sqrt();
    let a3 = (1.0 - c.zeta) + 4.0 * sq(1.0 - c.zeta);
    (a2, a3)
}

fn printed_c318(c: &DrawCtx) -> (f64, f64) {
    let a2 = (2.0 * (1.0 - c.zeta) / 3.0).sqrt();
    let a3 = 2.0 * (1.0 - c.zeta) / 3.0 + sq(1.0 - c.zeta);
    (a2, a3)
}

const CASES: &[Case] = &[
    Case { id: "Cor 2.2", regime: "gamma=0", family: Family::Generic, gamma: GammaRule::Fixed(0.0), force_k0: false, force_d0: false, printed: printed_c22 },
    Case { id: "Cor 2.3", regime: "gamma=1", family: Family::Generic, gamma: GammaRule::Fixed(1.0), force_k0: false, force_d0: false, printed: printed_c23 },
    Case { id: "Cor 2.4", regime: "gamma=0, k=0", family: Family::Generic, gamma: GammaRule::Fixed(0.0), force_k0: true, force_d0: false, printed: printed_c24 },
    Case { id: "Cor 2.5", regime: "gamma=1, k=0", family: Family::Generic, gamma: GammaRule::Fixed(1.0), force_k0: true, force_d0: false, printed: printed_c25 },
    Case { id: "Cor 2.6", regime: "gamma=0, delta=0", family: Family::Generic, gamma: GammaRule::Fixed(0.0), force_k0: false, force_d0: true, printed: printed_c26 },
    Case { id: "Cor 2.7", regime: "gamma=1, delta=0", family: Family::Generic, gamma: GammaRule::Fixed(1.0), force_k0: false, force_d0: true, printed: printed_c27 },
    Case { id: "Cor 2.8", regime: "gamma=0, k=delta=0", family: Family::Generic, gamma: GammaRule::Fixed(0.0), force_k0: true, force_d0: true, printed: printed_c28 },
    Case { id: "Cor 2.9", regime: "gamma=1, k=delta=0", family: Family::Generic, gamma: GammaRule::Fixed(1.0), force_k0: true, force_d0: true, printed: printed_c29 },
    Case { id: "Thm 3.1", regime: "Janowski target, gamma free", family: Family::Janowski, gamma: GammaRule::Free, force_k0: false, force_d0: false, printed: printed_t31 },
    Case { id: "Cor 3.2", regime: "Janowski, gamma=0", family: Family::Janowski, gamma: GammaRule::Fixed(0.0), force_k0: false, force_d0: false, printed: printed_c32 },
    Case { id: "Cor 3.3", regime: "Janowski, gamma=1", family: Family::Janowski, gamma: GammaRule::Fixed(1.0), force_k0: false, force_d0: false, printed: printed_c33 },
    Case { id: "Cor 3.4", regime: "Janowski, gamma=0, k=0", family: Family::Janowski, gamma: GammaRule::Fixed(0.0), force_k0: true, force_d0: false, printed: printed_c34 },
    Case { id: "Cor 3.5", regime: "Janowski, gamma=1, k=0", family: Family::Janowski, gamma: GammaRule::Fixed(1.0), force_k0: true, force_d0: false, printed: printed_c35 },
    Case { id: "Cor 3.6", regime: "Janowski, gamma=0, delta=0", family: Family::Janowski, gamma: GammaRule::Fixed(0.0), force_k0: false, force_d0: true, printed: printed_c36 },
    Case { id: "Cor 3.7", regime: "Janowski, gamma=1, delta=0", family: Family::Janowski, gamma: GammaRule::Fixed(1.0), force_k0: false, force_d0: true, printed: printed_c37 },
    Case { id: "Cor 3.8", regime: "Janowski, gamma=0, k=delta=0", family: Family::Janowski, gamma: GammaRule::Fixed(0.0), force_k0: true, force_d0: true, printed: printed_c38 },
    Case { id: "Cor 3.9", regime: "Janowski, gamma=1, k=delta=0", family: Family::Janowski, gamma: GammaRule::Fixed(1.0), force_k0: true, force_d0: true, printed: printed_c39 },
    Case { id: "Thm 3.2", regime: "order target, gamma free", family: Family::Order, gamma: GammaRule::Free, force_k0: false, force_d0: false, printed: printed_t32 },
    Case { id: "Cor 3.11", regime: "order, gamma=0", family: Family::Order, gamma: GammaRule::Fixed(0.0), force_k0: false, force_d0: false, printed: printed_c311 },
    Case { id: "Cor 3.12", regime: "order, gamma=1", family: Family::Order, gamma: GammaRule::Fixed(1.0), force_k0: false, force_d0: false, printed: printed_c312 },
    Case { id: "Cor 3.13", regime: "order, gamma=0, k=0", family: Family::Order, gamma: GammaRule::Fixed(0.0), force_k0: true, force_d0: false, printed: printed_c313 },
    Case { id: "Cor 3.14", regime: "order, gamma=1, k=0", family: Family::Order, gamma: GammaRule::Fixed(1.0), force_k0: true, force_d0: false, printed: printed_c314 },
    Case { id: "Cor 3.15", regime: "order, gamma=0, delta=0", family: Family::Order, gamma: GammaRule::Fixed(0.0), force_k0: false, force_d0: true, printed: printed_c315 },
    Case { id: "Cor 3.16", regime: "order, gamma=1, delta=0", family: Family::Order, gamma: GammaRule::Fixed(1.0), force_k0: false, force_d0: true, printed: printed_c316 },
    Case { id: "Cor 3.17", regime: "order, gamma=0, k=delta=0", family: Family::Order, gamma: GammaRule::Fixed(0.0), force_k0: true, force_d0: true, printed: printed_c317 },
    Case { id: "Cor 3.18", regime: "order, gamma=1, k=delta=0", family: Family::Order, gamma: GammaRule::Fixed(1.0), force_k0: true, force_d0: true, printed: printed_c318 },
];

/// Dyadic draws: every sampled value is exactly representable, which keeps
/// both evaluation routes well conditioned.
fn draw_ctx(rng: &mut ChaCha8Rng, case: &Case) -> DrawCtx {
    let k = if case.force_k0 { 0 } else { rng.gen_range(0..=3u32) };
    let alpha = f64::from(rng.gen_range(1..=8i32)) / 8.0;
    let beta = f64::from(rng.gen_range(1..=8i32)) / 8.0;
    let lambda = f64::from(rng.gen_range(1..=8i32)) / 4.0;
    let delta = if case.force_d0 { 0.0 } else { f64::from(rng.gen_range(0..=3i32)) };
    let gamma = match case.gamma {
        GammaRule::Fixed(g) => g,
        GammaRule::Free => f64::from(rng.gen_range(0..=6i32)) / 2.0,
    };
    let (mut a, mut b, mut zeta) = (1.0, -1.0, 0.0);
    // The mechanical route always goes through the family's closed
    // coefficients.
    let phi = match case.family {
        Family::Generic => {
            let b1 = f64::from(rng.gen_range(1..=12i32)) / 4.0;
            let b2 = f64::from(rng.gen_range(-12..=12i32)) / 4.0;
            PhiSpec::generic(b1, b2).expect("B1 > 0 by construction")
        }
        Family::Janowski => {
            let ai = rng.gen_range(-7..=8i32);
            let bi = rng.gen_range(-8..ai);
            a = f64::from(ai) / 8.0;
            b = f64::from(bi) / 8.0;
            PhiSpec::janowski(a, b).expect("-1 <= B < A <= 1 by construction")
        }
        Family::Order => {
            zeta = f64::from(rng.gen_range(0..=7i32)) / 8.0;
            PhiSpec::order_zeta(zeta).expect("0 <= zeta < 1 by construction")
        }
    };
    let (b1, b2) = phi.coefficients();
    DrawCtx { k, alpha, beta, lambda, delta, gamma, b1, b2, a, b, zeta }
}

fn rel_close(printed: f64, derived: f64) -> bool {
    printed.is_finite() && derived.is_finite()
        && (printed - derived).abs() <= REL_TOL * derived.abs().max(1.0)
}

fn witness(case: &Case, ctx: &DrawCtx, printed: (f64, f64), derived: (f64, f64)) -> AuditWitness {
    AuditWitness {
        k: ctx.k,
        alpha: ctx.alpha,
        beta: ctx.beta,
        lambda: ctx.lambda,
        delta: ctx.delta,
        gamma: ctx.gamma,
        phi: ctx.phi_label(case.family),
        printed_a2: printed.0.is_finite().then_some(printed.0),
        printed_a3: printed.1.is_finite().then_some(printed.1),
        derived_a2: derived.0,
        derived_a3: derived.1,
    }
}

/// The literally printed general Janowski a2 form, exposed so the bound
/// evaluator can compare it against the mechanical route on demand.
#[allow(clippy::too_many_arguments)]
pub fn printed_janowski_a2(
    k: u32,
    alpha: f64,
    beta: f64,
    lambda: f64,
    delta: f64,
    gamma: f64,
    a: f64,
    b: f64,
) -> f64 {
    let ctx = DrawCtx {
        k,
        alpha,
        beta,
        lambda,
        delta,
        gamma,
        b1: a - b,
        b2: -b * (a - b),
        a,
        b,
        zeta: 0.0,
    };
    printed_t31(&ctx).0
}

/// Run the audit: `samples` admissible draws per printed statement.
pub fn audit_corollaries(samples: u32, seed: u64) -> AuditReport {
    assert!(samples >= 1, "audit needs at least one sample per entry");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = Vec::with_capacity(CASES.len());
    for case in CASES {
        entries.push(audit_case(case, samples, &mut rng));
    }
    let findings = collect_findings(&entries);
    AuditReport { entries, findings }
}

fn audit_case(case: &Case, samples: u32, rng: &mut ChaCha8Rng) -> AuditEntry {
    let mut resampled = 0u32;
    let mut first: Option<AuditWitness> = None;
    let mut mismatch: Option<AuditWitness> = None;
    let mut done = 0u32;
    while done < samples {
        let ctx = draw_ctx(rng, case);
        let params = ClassParams::new(ctx.k, ctx.alpha, ctx.beta, ctx.lambda, ctx.delta, ctx.gamma)
            .expect("draws stay inside the parameter ranges");
        let derived_a2 = match bound_a2(&params, ctx.b1, ctx.b2) {
            Ok(v) => v,
            Err(_) => {
                resampled += 1;
                continue;
            }
        };
        let m = params.multipliers();
        if crate::bounds::a2_denominator(params.gamma(), &ctx.b1, &ctx.b2, &m).abs() < DENOM_GUARD {
            resampled += 1;
            continue;
        }
        let derived_a3 = bound_a3(&params, ctx.b1).expect("non-degenerate by the a2 check");
        let printed = (case.printed)(&ctx);
        let w = witness(case, &ctx, printed, (derived_a2, derived_a3));
        if first.is_none() {
            first = Some(w.clone());
        }
        if mismatch.is_none()
            && !(rel_close(printed.0, derived_a2) && rel_close(printed.1, derived_a3))
        {
            mismatch = Some(w);
        }
        done += 1;
    }
    let status = if mismatch.is_some() { AuditStatus::Mismatch } else { AuditStatus::Match };
    AuditEntry {
        id: case.id.to_string(),
        regime: case.regime.to_string(),
        status,
        samples,
        resampled,
        witness: mismatch.or(first).expect("at least one admissible draw"),
    }
}

fn collect_findings(entries: &[AuditEntry]) -> Vec<Finding> {
    let mut findings = vec![
        Finding::new(
            "janowski-target-prose",
            "the prose introducing the Janowski family prints (1+Az)/(1-Az) with -1<=A<B<=1; \
             the displayed subordination condition and its theorem use (1+Az)/(1+Bz) with \
             -1<=B<A<=1, which is what the engine implements",
        ),
        Finding::new(
            "order-target-numerator-z",
            "the order-family target is printed without z in the numerator; implemented as \
             (1+(1-2*zeta)z)/(1-z), consistent with the real-part inequality defining the class",
        ),
        Finding::new(
            "transcription-repair-parenthesis",
            "the printed a2 denominator of Cor 2.7 has an unbalanced parenthesis; transcribed \
             as 3 B1^2 ups3 - 4 (B2 - B1) ups2^2, the only reading consistent with its parent",
        ),
    ];
    let mismatched = |id: &str| {
        entries.iter().any(|e| e.id == id && e.status == AuditStatus::Mismatch)
    };
    if mismatched("Thm 3.1") {
        findings.push(Finding::new(
            "janowski-a2-denominator-sign",
            "the printed Janowski a2 denominator subtracts 2(B+1)(gamma+1)^2 u2^2, but \
             substituting B2 - B1 = -(A-B)(B+1) into the general bound adds that term; the \
             printed and mechanical forms agree only at B = -1 (every Janowski specialization \
             inherits the sign)",
        ));
    }
    if mismatched("Cor 3.9") {
        findings.push(Finding::new(
            "janowski-quadratic-a2-term",
            "the printed a2 denominator of Cor 3.9 squares (A-B) where its parent statement \
             is linear in (A-B)",
        ));
    }
    if mismatched("Cor 3.13") {
        findings.push(Finding::new(
            "order-family-a2-numerator",
            "the printed a2 numerator of Cor 3.13 is 2(1-zeta) where specializing its parent \
             yields sqrt(2(1-zeta)); the forms agree only at zeta = 1/2",
        ));
    }
    if mismatched("Cor 3.12") || mismatched("Cor 3.16") {
        findings.push(Finding::new(
            "order-specialization-missing-abs",
            "the printed a2 forms of Cor 3.12 and Cor 3.16 place the multiplier under the \
             square root without the absolute value their parent carries; for lambda \
             (alpha + beta - 1) < 0 with odd k the printed forms are undefined while the \
             mechanical route stays finite",
        ));
    }
    findings
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn second_section_specializations_all_match() {
        let report = audit_corollaries(200, 1);
        for entry in &report.entries {
            if entry.id.starts_with("Cor 2.") {
                assert_eq!(entry.status, AuditStatus::Match, "{} must match", entry.id);
            }
        }
    }

    #[test]
    fn order_target_theorem_matches() {
        let report = audit_corollaries(200, 1);
        let t = report.entries.iter().find(|e| e.id == "Thm 3.2").unwrap();
        assert_eq!(t.status, AuditStatus::Match);
    }

    #[test]
    fn janowski_sign_defect_is_detected_with_witness() {
        let report = audit_corollaries(200, 7);
        let t = report.entries.iter().find(|e| e.id == "Thm 3.1").unwrap();
        assert_eq!(t.status, AuditStatus::Mismatch);
        // The mismatch witness carries both values, and they disagree
        // (a None printed value means the printed form was non-finite).
        if let Some(p) = t.witness.printed_a2 {
            assert!((p - t.witness.derived_a2).abs() > 1e-12);
        }
        assert!(report.findings.iter().any(|f| f.code == "janowski-a2-denominator-sign"));
    }

    #[test]
    fn order_k0_numerator_defect_is_detected() {
        let report = audit_corollaries(200, 3);
        let e = report.entries.iter().find(|e| e.id == "Cor 3.13").unwrap();
        assert_eq!(e.status, AuditStatus::Mismatch);
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let a = audit_corollaries(50, 42);
        let b = audit_corollaries(50, 42);
        let ja = serde_json::to_string(&a.entries).unwrap();
        let jb = serde_json::to_string(&b.entries).unwrap();
        assert_eq!(ja, jb);
    }
}
