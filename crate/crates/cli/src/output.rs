//! Run metadata and rendering helpers.
//!
//! Human tables print at six decimal places; CSV and JSON carry full
//! precision so emitted tables can be re-evaluated exactly.

use bibaz::report::Finding;
use serde::Serialize;

#[derive(Serialize)]
pub struct RunReport {
    pub command: String,
    pub version: String,
    pub evaluated: u64,
    pub degenerate: u64,
    pub errors: u64,
    pub findings: Vec<Finding>,
}

impl RunReport {
    pub fn new(evaluated: u64, degenerate: u64, errors: u64, findings: Vec<Finding>) -> Self {
        RunReport {
            command: std::env::args().skip(1).collect::<Vec<_>>().join(" "),
            version: env!("CARGO_PKG_VERSION").to_string(),
            evaluated,
            degenerate,
            errors,
            findings,
        }
    }
}

/// Six-decimal rendering for human tables.
pub fn fmt6(v: f64) -> String {
    format!("{v:.6}")
}

/// Full-precision rendering for CSV cells; round-trips through `f64`.
pub fn full(v: f64) -> String {
    format!("{v}")
}

/// Full-precision rendering with blank for missing (degenerate) cells.
pub fn full_opt(v: Option<f64>) -> String {
    v.map(full).unwrap_or_default()
}

pub fn print_findings_human(findings: &[Finding]) {
    if findings.is_empty() {
        return;
    }
    println!("findings:");
    for f in findings {
        println!("  - {}: {}", f.code, f.message);
    }
}

/// The stable top-level JSON shape: `meta` plus one payload key.
pub fn print_json<T: Serialize>(meta: &RunReport, payload_key: &str, payload: &T) {
    #[derive(Serialize)]
    struct Doc<'a, T> {
        meta: &'a RunReport,
        #[serde(flatten)]
        payload: std::collections::BTreeMap<&'a str, &'a T>,
    }
    let mut map = std::collections::BTreeMap::new();
    map.insert(payload_key, payload);
    let doc = Doc { meta, payload: map };
    println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
}
