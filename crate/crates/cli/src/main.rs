//! `bibaz` — coefficient bounds, corollary audits, proof verification and
//! extremal searches for bi-Bazilevic classes under a convolution multiplier
//! operator.
//!
//! Exit codes: 0 success, 1 usage error, 2 degenerate input (blank bounds
//! with a flag), 3 verification failure (engine defect).

mod cli;
mod grid;
mod output;

use bibaz::bounds::audit::{audit_corollaries, printed_janowski_a2, AuditStatus};
use bibaz::bounds::BoundResult;
use bibaz::maminda::PhiSpec;
use bibaz::report::Finding;
use bibaz::verify::search::{extremal_search, SearchConfig};
use bibaz::verify::suite;
use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;
use std::process::ExitCode;

use cli::{AuditArgs, BoundsArgs, Cli, Cmd, ExtremalArgs, GridArgs, ReportFormat, TableFormat, VerifyArgs};
use output::{fmt6, full, full_opt, print_findings_human, print_json, RunReport};

fn main() -> ExitCode {
    let parsed = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match parsed.cmd {
        Cmd::Bounds(args) => cmd_bounds(args),
        Cmd::Grid(args) => cmd_grid(args),
        Cmd::Audit(args) => cmd_audit(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Extremal(args) => cmd_extremal(args),
    };
    ExitCode::from(code)
}

fn usage_error(message: &str) -> u8 {
    eprintln!("error: {message}");
    eprintln!("run with --help for usage");
    1
}

fn cmd_bounds(args: BoundsArgs) -> u8 {
    let params = match args.params.to_params() {
        Ok(p) => p,
        Err(e) => return usage_error(&e.to_string()),
    };
    let phi = match args.phi.to_spec() {
        Ok(p) => p,
        Err(e) => return usage_error(&e),
    };
    let result = BoundResult::for_phi(&params, &phi);

    let mut findings = Vec::new();
    if let PhiSpec::Janowski { a, b } = &phi {
        let printed = printed_janowski_a2(
            args.params.k,
            args.params.alpha,
            args.params.beta,
            args.params.lambda,
            args.params.delta,
            args.params.gamma,
            *a,
            *b,
        );
        if let Some(mechanical) = result.a2_bound {
            let agree = printed.is_finite()
                && (printed - mechanical).abs() <= 1e-12 * mechanical.abs().max(1.0);
            if !agree {
                findings.push(Finding::new(
                    "janowski-a2-denominator-sign",
                    format!(
                        "printed Janowski a2 form gives {} here; mechanical substitution gives {}",
                        if printed.is_finite() { full(printed) } else { "a division by zero".to_string() },
                        full(mechanical)
                    ),
                ));
            }
        }
    }

    let meta = RunReport::new(
        u64::from(!result.degenerate),
        u64::from(result.degenerate),
        0,
        findings,
    );
    match args.format {
        ReportFormat::Json => print_json(&meta, "report", &result),
        ReportFormat::Human => {
            let blank = "-".to_string();
            println!("a2_bound     {}", result.a2_bound.map(fmt6).unwrap_or_else(|| blank.clone()));
            println!("a3_bound     {}", result.a3_bound.map(fmt6).unwrap_or(blank));
            println!("denominator  {}", fmt6(result.denom_value));
            if !result.flags.is_empty() {
                println!("flags        {}", result.flags.join(";"));
            }
            print_findings_human(&meta.findings);
        }
    }
    if result.degenerate {
        2
    } else {
        0
    }
}

#[derive(Serialize)]
struct GridRow {
    k: u32,
    alpha: f64,
    beta: f64,
    lambda: f64,
    delta: f64,
    gamma: f64,
    phi_family: String,
    phi_params: String,
    #[serde(rename = "B1")]
    b1: f64,
    #[serde(rename = "B2")]
    b2: f64,
    a2_bound: Option<f64>,
    a3_bound: Option<f64>,
    denom: f64,
    flags: Vec<String>,
}

const GRID_HEADER: &str =
    "k,alpha,beta,lambda,delta,gamma,phi_family,phi_params,B1,B2,a2_bound,a3_bound,denom,flags";

fn cmd_grid(args: GridArgs) -> u8 {
    let spec = match build_grid_spec(&args) {
        Ok(s) => s,
        Err(e) => return usage_error(&e),
    };

    let mut rows = Vec::with_capacity(spec.len());
    let mut degenerate = 0u64;
    for point in spec.points() {
        let params = match bibaz::operator::ClassParams::new(
            point.k,
            point.alpha,
            point.beta,
            point.lambda,
            point.delta,
            point.gamma,
        ) {
            Ok(p) => p,
            Err(e) => return usage_error(&format!("grid point out of range: {e}")),
        };
        let phi = match point.phi {
            Ok(p) => p,
            Err(e) => return usage_error(&format!("grid point out of range: {e}")),
        };
        let (b1, b2) = phi.coefficients();
        let result = BoundResult::for_phi(&params, &phi);
        degenerate += u64::from(result.degenerate);
        rows.push(GridRow {
            k: point.k,
            alpha: point.alpha,
            beta: point.beta,
            lambda: point.lambda,
            delta: point.delta,
            gamma: point.gamma,
            phi_family: phi.family_name().to_string(),
            phi_params: point.phi_label,
            b1,
            b2,
            a2_bound: result.a2_bound,
            a3_bound: result.a3_bound,
            denom: result.denom_value,
            flags: result.flags,
        });
    }

    let meta = RunReport::new(rows.len() as u64 - degenerate, degenerate, 0, Vec::new());
    match args.format {
        TableFormat::Json => print_json(&meta, "rows", &rows),
        TableFormat::Csv => {
            let mut out = String::with_capacity(rows.len() * 96 + 128);
            out.push_str(GRID_HEADER);
            out.push('\n');
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                    r.k,
                    full(r.alpha),
                    full(r.beta),
                    full(r.lambda),
                    full(r.delta),
                    full(r.gamma),
                    r.phi_family,
                    r.phi_params,
                    full(r.b1),
                    full(r.b2),
                    full_opt(r.a2_bound),
                    full_opt(r.a3_bound),
                    full(r.denom),
                    r.flags.join(";"),
                ));
            }
            print!("{out}");
        }
    }
    0
}

fn build_grid_spec(args: &GridArgs) -> Result<grid::GridSpec, String> {
    let phi = {
        let generic = args.b1.is_some() || args.b2.is_some();
        let janowski = args.a.is_some() || args.b.is_some();
        let order = args.zeta.is_some();
        match (generic, janowski, order) {
            (true, false, false) => match (&args.b1, &args.b2) {
                (Some(b1), Some(b2)) => grid::PhiAxis::Generic {
                    b1: grid::parse_range(b1, "B1")?,
                    b2: grid::parse_range(b2, "B2")?,
                },
                _ => return Err("generic target needs both --B1 and --B2".to_string()),
            },
            (false, true, false) => match (&args.a, &args.b) {
                (Some(a), Some(b)) => grid::PhiAxis::Janowski {
                    a: grid::parse_range(a, "A")?,
                    b: grid::parse_range(b, "B")?,
                },
                _ => return Err("Janowski target needs both --A and --B".to_string()),
            },
            (false, false, true) => grid::PhiAxis::Order {
                zeta: grid::parse_range(args.zeta.as_ref().expect("checked"), "zeta")?,
            },
            (false, false, false) => {
                return Err("select a target family: --B1/--B2, --A/--B, or --zeta".to_string())
            }
            _ => return Err("target family flags are mutually exclusive".to_string()),
        }
    };
    Ok(grid::GridSpec {
        k: grid::parse_integer_range(&args.k, "k")?,
        alpha: grid::parse_range(&args.alpha, "alpha")?,
        beta: grid::parse_range(&args.beta, "beta")?,
        lambda: grid::parse_range(&args.lambda, "lambda")?,
        delta: grid::parse_range(&args.delta, "delta")?,
        gamma: grid::parse_range(&args.gamma, "gamma")?,
        phi,
    })
}

fn cmd_audit(args: AuditArgs) -> u8 {
    if args.samples < 1 {
        return usage_error("--samples must be >= 1");
    }
    let report = audit_corollaries(args.samples, args.seed);
    let resampled: u64 = report.entries.iter().map(|e| u64::from(e.resampled)).sum();
    let evaluated: u64 = report.entries.iter().map(|e| u64::from(e.samples)).sum();
    let meta = RunReport::new(evaluated, resampled, 0, report.findings.clone());
    match args.format {
        ReportFormat::Json => print_json(&meta, "entries", &report.entries),
        ReportFormat::Human => {
            for e in &report.entries {
                let status = match e.status {
                    AuditStatus::Match => "MATCH   ",
                    AuditStatus::Mismatch => "MISMATCH",
                };
                println!(
                    "{:<9} {} samples={} resampled={}",
                    e.id, status, e.samples, e.resampled
                );
                if e.status == AuditStatus::Mismatch {
                    let w = &e.witness;
                    println!(
                        "          witness: k={} alpha={} beta={} lambda={} delta={} gamma={} {}",
                        w.k, w.alpha, w.beta, w.lambda, w.delta, w.gamma, w.phi
                    );
                    println!(
                        "          printed a2={} a3={} | derived a2={} a3={}",
                        w.printed_a2.map(fmt6).unwrap_or_else(|| "(non-finite)".to_string()),
                        w.printed_a3.map(fmt6).unwrap_or_else(|| "(non-finite)".to_string()),
                        fmt6(w.derived_a2),
                        fmt6(w.derived_a3),
                    );
                }
            }
            print_findings_human(&meta.findings);
        }
    }
    0
}

#[derive(Serialize)]
struct VerifyBody<'a> {
    draws: u32,
    resampled: u32,
    passed: bool,
    sections: &'a [suite::SectionOutcome],
}

fn cmd_verify(args: VerifyArgs) -> u8 {
    if args.draws < 1 {
        return usage_error("--draws must be >= 1");
    }
    let outcome = suite::run(args.draws, args.seed, args.inject_defect);
    let failures: u64 = outcome.sections.iter().map(|s| u64::from(s.failures)).sum();
    let checked: u64 = outcome.sections.iter().map(|s| u64::from(s.checked)).sum();
    let meta = RunReport::new(
        checked - failures,
        u64::from(outcome.resampled),
        failures,
        outcome.findings.clone(),
    );
    let body = VerifyBody {
        draws: outcome.draws,
        resampled: outcome.resampled,
        passed: outcome.passed(),
        sections: &outcome.sections,
    };
    match args.format {
        ReportFormat::Json => print_json(&meta, "report", &body),
        ReportFormat::Human => {
            for s in &outcome.sections {
                println!("{:<22} checked={:<5} failures={}", s.name, s.checked, s.failures);
                if let Some(w) = &s.first_failure {
                    println!("    first failure: {w}");
                }
            }
            print_findings_human(&meta.findings);
            println!("result: {}", if outcome.passed() { "PASS" } else { "FAIL" });
        }
    }
    if outcome.passed() {
        0
    } else {
        3
    }
}

fn cmd_extremal(args: ExtremalArgs) -> u8 {
    let params = match args.params.to_params() {
        Ok(p) => p,
        Err(e) => return usage_error(&e.to_string()),
    };
    let phi = match args.phi.to_spec() {
        Ok(p) => p,
        Err(e) => return usage_error(&e),
    };
    if args.resolution <= 0.0 {
        return usage_error("--resolution must be positive");
    }
    let (b1, b2) = phi.coefficients();
    let cfg = SearchConfig {
        resolution: args.resolution,
        random_draws: args.draws,
        seed: args.seed,
        strict: args.strict,
    };
    let report = match extremal_search(&params, b1, b2, args.target.into(), &cfg) {
        Ok(r) => r,
        Err(e) => {
            let meta = RunReport::new(0, 1, 0, Vec::new());
            match args.format {
                ReportFormat::Json => print_json(&meta, "report", &e.to_string()),
                ReportFormat::Human => println!("degenerate: {e}"),
            }
            return 2;
        }
    };
    let meta = RunReport::new(report.evaluated, 0, 0, Vec::new());
    match args.format {
        ReportFormat::Json => print_json(&meta, "report", &report),
        ReportFormat::Human => {
            println!("target         {}", report.target);
            println!("searched_max   {}", fmt6(report.searched_max));
            println!("formula_bound  {}", fmt6(report.formula_bound));
            println!("gap            {:e}", report.gap);
            println!(
                "argmax         p1={} p2={} h1={} h2={}",
                report.argmax.p1, report.argmax.p2, report.argmax.h1, report.argmax.h2
            );
            if let Some(s) = &report.strict {
                println!("strict_max     {}", fmt6(s.searched_max));
                println!(
                    "strict_argmax  p1={} p2={} h1={} h2={}",
                    s.argmax.p1, s.argmax.p2, s.argmax.h1, s.argmax.h2
                );
                println!("admissible     {}", s.admissible);
            }
            println!("evaluated      {}", report.evaluated);
        }
    }
    0
}
