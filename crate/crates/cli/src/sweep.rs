//! Degree sweeps behind `table sendov` and `figure zeros`.
//!
//! Degrees are processed in parallel; results are always returned in the
//! order of `cfg.degrees`, and on failure the error of the first failing
//! degree in that order is reported.

use polarzeros::localize::sendov_report_with;
use polarzeros::{
    build_family, containment_report, polar_polynomial, Complex64, ComplexPoly, Containment,
    PolarParams, RootSet, SendovMetric,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{RunConfig, MAX_DEGREE};
use crate::error::CliError;

/// `L_n` and `Q_{n;k}(·; ξ)` for the configured measure and pole.
pub fn build_polar(cfg: &RunConfig, n: usize) -> Result<(ComplexPoly, ComplexPoly), CliError> {
    if n == 0 || n > MAX_DEGREE {
        return Err(CliError::usage(format!("degree {n} is outside 1..={MAX_DEGREE}")));
    }
    let l = build_family(&cfg.measure, n).map_err(|e| CliError::at_degree(n, e))?;
    let q = polar_polynomial(&l, PolarParams::new(cfg.xi, cfg.k))
        .map_err(|e| CliError::at_degree(n, e))?;
    Ok((l, q))
}

fn in_order<T: Send>(
    degrees: &[usize],
    job: impl Fn(usize) -> Result<T, CliError> + Sync,
) -> Result<Vec<T>, CliError> {
    let results: Vec<Result<T, CliError>> = degrees.par_iter().map(|&n| job(n)).collect();
    results.into_iter().collect()
}

/// One row of a Sendov table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableRow {
    pub n: usize,
    /// Zero attaining the maximum.
    pub zero: Complex64,
    pub distance: f64,
}

/// For each degree, the zero of `Q_{n;k}` farthest (under `metric`) from the
/// critical points, and that distance.
pub fn reproduce_sendov_table(cfg: &RunConfig, metric: SendovMetric) -> Result<Vec<TableRow>, CliError> {
    cfg.validate()?;
    if let Some(&n) = cfg.degrees.iter().find(|&&n| !(2..=MAX_DEGREE).contains(&n)) {
        return Err(CliError::usage(format!(
            "Sendov tables need degrees in 2..={MAX_DEGREE}, got {n}"
        )));
    }
    let opts = cfg.root_options();
    in_order(&cfg.degrees, |n| {
        let (_, q) = build_polar(cfg, n)?;
        let rs = opts.find(&q).map_err(|e| CliError::at_degree(n, e))?;
        let report = sendov_report_with(&q, &rs, &opts).map_err(|e| CliError::at_degree(n, e))?;
        let (distance, zero) = report.metric(metric);
        Ok(TableRow { n, zero, distance })
    })
}

/// Zeros of one polar polynomial with their disk verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScatterSeries {
    pub degree: usize,
    pub roots: RootSet,
    pub containment: Containment,
}

/// Sorted zeros of `Q_{n;k}(·; ξ)` for every configured degree.
pub fn zero_scatter_dataset(cfg: &RunConfig) -> Result<Vec<ScatterSeries>, CliError> {
    cfg.validate()?;
    let opts = cfg.root_options();
    in_order(&cfg.degrees, |n| {
        let (_, q) = build_polar(cfg, n)?;
        let roots = opts.find(&q).map_err(|e| CliError::at_degree(n, e))?;
        let containment = containment_report(&roots, cfg.xi, cfg.k);
        Ok(ScatterSeries {
            degree: n,
            roots,
            containment,
        })
    })
}
