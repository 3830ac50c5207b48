//! Argument types for the `bibaz` binary.

use bibaz::maminda::{PhiError, PhiSpec};
use bibaz::operator::{ClassParams, ParamError};
use bibaz::verify::search::BoundTarget;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "bibaz",
    version,
    about = "Coefficient bounds, audits and proof verification for bi-Bazilevic classes",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Evaluate the a2/a3 bounds at one parameter point.
    Bounds(BoundsArgs),
    /// Evaluate the bounds over a parameter grid (CSV or JSON).
    Grid(GridArgs),
    /// Audit every printed specialization against mechanical specialization.
    Audit(AuditArgs),
    /// Run the exact-mode verification suite; nonzero residuals exit 3.
    Verify(VerifyArgs),
    /// Search the relaxed tuple space and report the gap against the bound.
    Extremal(ExtremalArgs),
}

#[derive(Args, Clone)]
pub struct ParamFlags {
    /// Operator iteration count (k = 0, 1, 2, ...).
    #[arg(long, default_value_t = 0)]
    pub k: u32,
    /// alpha in (0, 1].
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    /// beta in (0, 1].
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    /// lambda >= 0.
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    /// delta >= 0.
    #[arg(long, default_value_t = 0.0)]
    pub delta: f64,
    /// gamma >= 0 (the Bazilevic type).
    #[arg(long, default_value_t = 0.0)]
    pub gamma: f64,
}

impl ParamFlags {
    pub fn to_params(&self) -> Result<ClassParams<f64>, ParamError> {
        ClassParams::new(self.k, self.alpha, self.beta, self.lambda, self.delta, self.gamma)
    }
}

#[derive(Args, Clone)]
pub struct PhiFlags {
    /// Generic target: linear coefficient B1 > 0 (requires --B2).
    #[arg(long = "B1", allow_negative_numbers = true)]
    pub b1: Option<f64>,
    /// Generic target: quadratic coefficient B2 (requires --B1).
    #[arg(long = "B2", allow_negative_numbers = true)]
    pub b2: Option<f64>,
    /// Janowski target: A with -1 <= B < A <= 1 (requires --B).
    #[arg(long = "A", allow_negative_numbers = true)]
    pub a: Option<f64>,
    /// Janowski target: B with -1 <= B < A <= 1 (requires --A).
    #[arg(long = "B", allow_negative_numbers = true)]
    pub b: Option<f64>,
    /// Order target: zeta in [0, 1).
    #[arg(long)]
    pub zeta: Option<f64>,
}

impl PhiFlags {
    /// Exactly one family must be selected.
    pub fn to_spec(&self) -> Result<PhiSpec<f64>, String> {
        let generic = self.b1.is_some() || self.b2.is_some();
        let janowski = self.a.is_some() || self.b.is_some();
        let order = self.zeta.is_some();
        match (generic, janowski, order) {
            (true, false, false) => match (self.b1, self.b2) {
                (Some(b1), Some(b2)) => PhiSpec::generic(b1, b2).map_err(phi_msg),
                _ => Err("generic target needs both --B1 and --B2".to_string()),
            },
            (false, true, false) => match (self.a, self.b) {
                (Some(a), Some(b)) => PhiSpec::janowski(a, b).map_err(phi_msg),
                _ => Err("Janowski target needs both --A and --B".to_string()),
            },
            (false, false, true) => {
                PhiSpec::order_zeta(self.zeta.expect("checked")).map_err(phi_msg)
            }
            (false, false, false) => {
                Err("select a target family: --B1/--B2, --A/--B, or --zeta".to_string())
            }
            _ => Err("target family flags are mutually exclusive".to_string()),
        }
    }
}

fn phi_msg(e: PhiError) -> String {
    e.to_string()
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Human,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub params: ParamFlags,
    #[command(flatten)]
    pub phi: PhiFlags,
    #[arg(long, value_enum, default_value_t = ReportFormat::Human)]
    pub format: ReportFormat,
}

#[derive(Args)]
pub struct GridArgs {
    /// Ranges as `value` or `start:stop:count`; k takes integer values.
    #[arg(long, default_value = "0")]
    pub k: String,
    #[arg(long, default_value = "1")]
    pub alpha: String,
    #[arg(long, default_value = "1")]
    pub beta: String,
    #[arg(long, default_value = "1")]
    pub lambda: String,
    #[arg(long, default_value = "0")]
    pub delta: String,
    #[arg(long, default_value = "0")]
    pub gamma: String,
    /// Generic target range for B1 (with --B2).
    #[arg(long = "B1", allow_hyphen_values = true)]
    pub b1: Option<String>,
    #[arg(long = "B2", allow_hyphen_values = true)]
    pub b2: Option<String>,
    /// Janowski target range for A (with --B).
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Order target range for zeta.
    #[arg(long)]
    pub zeta: Option<String>,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
}

#[derive(Args)]
pub struct AuditArgs {
    /// Admissible draws per printed statement.
    #[arg(long, default_value_t = 1000)]
    pub samples: u32,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Human)]
    pub format: ReportFormat,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Random rational points per suite section.
    #[arg(long, default_value_t = 100)]
    pub draws: u32,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Human)]
    pub format: ReportFormat,
    /// Negative control: flip one target coefficient in the first expansion
    /// check. The run must then exit 3.
    #[arg(long, hide = true, default_value_t = false)]
    pub inject_defect: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum TargetFlag {
    A2,
    A3,
}

impl From<TargetFlag> for BoundTarget {
    fn from(t: TargetFlag) -> BoundTarget {
        match t {
            TargetFlag::A2 => BoundTarget::A2,
            TargetFlag::A3 => BoundTarget::A3,
        }
    }
}

#[derive(Args)]
pub struct ExtremalArgs {
    #[command(flatten)]
    pub params: ParamFlags,
    #[command(flatten)]
    pub phi: PhiFlags,
    /// Which coefficient to maximize.
    #[arg(long, value_enum)]
    pub target: TargetFlag,
    /// Real-grid step over [-2, 2]^3.
    #[arg(long, default_value_t = 0.25)]
    pub resolution: f64,
    /// Uniform random draws in the complex polydisc.
    #[arg(long, default_value_t = 10_000)]
    pub draws: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Also report the maximum over the self-map coefficient body.
    #[arg(long, default_value_t = false)]
    pub strict: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Human)]
    pub format: ReportFormat,
}
