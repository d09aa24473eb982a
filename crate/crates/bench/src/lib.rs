//! Shared inputs for the criterion benchmarks in `benches/`.

use polarzeros::{build_family, polar_polynomial, ComplexPoly, MeasureSpec, PolarParams};
use polarzeros_cli::{Preset, RunConfig};

/// `(label, L_n)` for every standard family at degree `n`.
pub fn families(n: usize) -> Vec<(&'static str, ComplexPoly)> {
    polarzeros::corpus::standard_families()
        .into_iter()
        .map(|spec| (spec.name(), build_family(&spec, n).expect("standard family")))
        .collect()
}

/// `Q_{n;k}` for the configuration of `preset`.
pub fn preset_polar(preset: Preset, n: usize, k: usize) -> ComplexPoly {
    let cfg = RunConfig::from_preset(preset);
    let l = build_family(&cfg.measure, n).expect("preset family");
    polar_polynomial(&l, PolarParams::new(cfg.xi, k)).expect("preset polar polynomial")
}

/// The Verblunsky-driven member of the corpus, the slowest family to build.
pub fn verblunsky(len: usize) -> MeasureSpec {
    MeasureSpec::Verblunsky {
        alphas: polarzeros::corpus::sample_alphas(len),
    }
}
