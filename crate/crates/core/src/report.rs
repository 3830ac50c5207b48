//! Small serializable building blocks shared by reports.

use crate::scalar::C;
use serde::Serialize;

/// A flagged defect discovered while auditing or verifying printed forms.
/// Findings are data, not failures: a run that surfaces them still exits 0.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Finding {
    pub code: String,
    pub message: String,
}

impl Finding {
    pub fn new(code: &str, message: impl Into<String>) -> Self {
        Finding { code: code.to_string(), message: message.into() }
    }
}

/// Rectangular complex value for stable JSON output.
#[derive(Debug, Clone, Copy, Serialize, PartialEq)]
pub struct ComplexVal {
    pub re: f64,
    pub im: f64,
}

impl From<C<f64>> for ComplexVal {
    fn from(z: C<f64>) -> Self {
        // Normalize negative zeros out of reports.
        ComplexVal { re: z.re + 0.0, im: z.im + 0.0 }
    }
}

impl std::fmt::Display for ComplexVal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im == 0.0 {
            write!(f, "{}", self.re)
        } else if self.im < 0.0 {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}
