//! Log-log growth fits.

use std::collections::BTreeMap;
use std::path::Path;

use super::survey::{read_csv, SurveyRecord};
use super::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fit {
    pub slope: f64,
    pub intercept: f64,
}

/// Least-squares line through `(log n, log max cost)`, one point per `n`
/// with positive cost.
pub fn fit_records(rows: &[SurveyRecord]) -> Result<Fit, HarnessError> {
    let mut best: BTreeMap<usize, u64> = BTreeMap::new();
    for r in rows.iter().filter(|r| r.cost > 0 && r.n > 0) {
        let e = best.entry(r.n).or_insert(0);
        *e = (*e).max(r.cost);
    }
    if best.len() < 3 {
        return Err(HarnessError::InsufficientData(best.len()));
    }
    let pts: Vec<(f64, f64)> = best
        .iter()
        .map(|(&n, &c)| ((n as f64).ln(), (c as f64).ln()))
        .collect();
    let len = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / len;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / len;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let slope = sxy / sxx;
    Ok(Fit {
        slope,
        intercept: my - slope * mx,
    })
}

pub fn fit_exponent(csv_path: &Path) -> Result<Fit, HarnessError> {
    fit_records(&read_csv(csv_path)?)
}
