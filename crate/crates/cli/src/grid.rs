//! Parameter-grid parsing and deterministic iteration.

use bibaz::maminda::PhiSpec;

/// One axis of the grid: either a single value or `start:stop:count`.
pub fn parse_range(text: &str, name: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = text.split(':').collect();
    let parse = |s: &str| -> Result<f64, String> {
        s.parse::<f64>().map_err(|_| format!("{name}: cannot parse `{s}` as a number"))
    };
    match parts.as_slice() {
        [v] => Ok(vec![parse(v)?]),
        [start, stop, count] => {
            let start = parse(start)?;
            let stop = parse(stop)?;
            let count: usize = count
                .parse()
                .map_err(|_| format!("{name}: step count `{count}` is not an integer"))?;
            if count == 0 {
                return Err(format!("{name}: step count must be >= 1"));
            }
            if count == 1 {
                return Ok(vec![start]);
            }
            let step = (stop - start) / (count - 1) as f64;
            Ok((0..count).map(|i| start + i as f64 * step).collect())
        }
        _ => Err(format!("{name}: expected `value` or `start:stop:count`, got `{text}`")),
    }
}

pub fn parse_integer_range(text: &str, name: &str) -> Result<Vec<u32>, String> {
    parse_range(text, name)?
        .into_iter()
        .map(|v| {
            if v >= 0.0 && v.fract() == 0.0 && v <= f64::from(u32::MAX) {
                Ok(v as u32)
            } else {
                Err(format!("{name}: `{v}` is not a non-negative integer"))
            }
        })
        .collect()
}

/// The target-family axis of a grid: family is fixed per invocation, its
/// parameters may range.
pub enum PhiAxis {
    Generic { b1: Vec<f64>, b2: Vec<f64> },
    Janowski { a: Vec<f64>, b: Vec<f64> },
    Order { zeta: Vec<f64> },
}

impl PhiAxis {
    pub fn len(&self) -> usize {
        match self {
            PhiAxis::Generic { b1, b2 } => b1.len() * b2.len(),
            PhiAxis::Janowski { a, b } => a.len() * b.len(),
            PhiAxis::Order { zeta } => zeta.len(),
        }
    }

    /// The i-th point in lexicographic order; returns the raw parameter
    /// label and the validated family spec.
    pub fn point(&self, i: usize) -> (String, Result<PhiSpec<f64>, String>) {
        match self {
            PhiAxis::Generic { b1, b2 } => {
                let (q, r) = (i / b2.len(), i % b2.len());
                let label = format!("B1={};B2={}", b1[q], b2[r]);
                (label, PhiSpec::generic(b1[q], b2[r]).map_err(|e| e.to_string()))
            }
            PhiAxis::Janowski { a, b } => {
                let (q, r) = (i / b.len(), i % b.len());
                let label = format!("A={};B={}", a[q], b[r]);
                (label, PhiSpec::janowski(a[q], b[r]).map_err(|e| e.to_string()))
            }
            PhiAxis::Order { zeta } => {
                let label = format!("zeta={}", zeta[i]);
                (label, PhiSpec::order_zeta(zeta[i]).map_err(|e| e.to_string()))
            }
        }
    }
}

/// Fully parsed grid: operator axes in column order plus the target axis.
pub struct GridSpec {
    pub k: Vec<u32>,
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
    pub lambda: Vec<f64>,
    pub delta: Vec<f64>,
    pub gamma: Vec<f64>,
    pub phi: PhiAxis,
}

impl GridSpec {
    pub fn len(&self) -> usize {
        self.k.len()
            * self.alpha.len()
            * self.beta.len()
            * self.lambda.len()
            * self.delta.len()
            * self.gamma.len()
            * self.phi.len()
    }

    /// Lexicographic iteration: k, alpha, beta, lambda, delta, gamma, phi.
    pub fn points(&self) -> impl Iterator<Item = GridPoint> + '_ {
        let dims = [
            self.k.len(),
            self.alpha.len(),
            self.beta.len(),
            self.lambda.len(),
            self.delta.len(),
            self.gamma.len(),
            self.phi.len(),
        ];
        (0..self.len()).map(move |mut i| {
            let mut idx = [0usize; 7];
            for d in (0..7).rev() {
                idx[d] = i % dims[d];
                i /= dims[d];
            }
            let (phi_label, phi) = self.phi.point(idx[6]);
            GridPoint {
                k: self.k[idx[0]],
                alpha: self.alpha[idx[1]],
                beta: self.beta[idx[2]],
                lambda: self.lambda[idx[3]],
                delta: self.delta[idx[4]],
                gamma: self.gamma[idx[5]],
                phi_label,
                phi,
            }
        })
    }
}

pub struct GridPoint {
    pub k: u32,
    pub alpha: f64,
    pub beta: f64,
    pub lambda: f64,
    pub delta: f64,
    pub gamma: f64,
    pub phi_label: String,
    pub phi: Result<PhiSpec<f64>, String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_values_and_ranges() {
        assert_eq!(parse_range("0.5", "x").unwrap(), vec![0.5]);
        assert_eq!(parse_range("0:1:3", "x").unwrap(), vec![0.0, 0.5, 1.0]);
        assert_eq!(parse_range("1:1:1", "x").unwrap(), vec![1.0]);
        assert!(parse_range("a", "x").is_err());
        assert!(parse_range("0:1:0", "x").is_err());
        assert_eq!(parse_integer_range("0:3:4", "k").unwrap(), vec![0, 1, 2, 3]);
        assert!(parse_integer_range("0.5", "k").is_err());
    }

    #[test]
    fn grid_row_count_is_product_of_counts() {
        let spec = GridSpec {
            k: vec![0, 1],
            alpha: vec![1.0],
            beta: vec![1.0],
            lambda: vec![0.5, 1.0, 1.5],
            delta: vec![0.0],
            gamma: vec![0.0, 1.0],
            phi: PhiAxis::Order { zeta: vec![0.0, 0.5] },
        };
        assert_eq!(spec.len(), 2 * 3 * 2 * 2);
        assert_eq!(spec.points().count(), spec.len());
    }

    #[test]
    fn iteration_is_lexicographic() {
        let spec = GridSpec {
            k: vec![0, 1],
            alpha: vec![1.0],
            beta: vec![1.0],
            lambda: vec![1.0],
            delta: vec![0.0],
            gamma: vec![0.0, 1.0],
            phi: PhiAxis::Order { zeta: vec![0.0, 0.5] },
        };
        let rows: Vec<(u32, f64, String)> =
            spec.points().map(|p| (p.k, p.gamma, p.phi_label)).collect();
        assert_eq!(rows[0], (0, 0.0, "zeta=0".to_string()));
        assert_eq!(rows[1], (0, 0.0, "zeta=0.5".to_string()));
        assert_eq!(rows[2], (0, 1.0, "zeta=0".to_string()));
        assert_eq!(rows[4], (1, 0.0, "zeta=0".to_string()));
    }
}
