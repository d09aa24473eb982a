#![allow(dead_code)]

use polarzeros::{build_family, polar_polynomial, Complex64, ComplexPoly, MeasureSpec, PolarParams};
use proptest::prelude::*;

pub fn complex_in_box(half: f64) -> impl Strategy<Value = Complex64> {
    (-half..half, -half..half).prop_map(|(re, im)| Complex64::new(re, im))
}

pub fn complex_in_disk(radius: f64) -> impl Strategy<Value = Complex64> {
    (0.0..radius, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

pub fn poly_in_box(max_degree: usize) -> impl Strategy<Value = ComplexPoly> {
    prop::collection::vec(complex_in_box(1.0), 1..=max_degree + 1).prop_map(ComplexPoly::new)
}

/// Closed-form families only.
pub fn closed_form_families() -> Vec<MeasureSpec> {
    polarzeros::corpus::standard_families()
        .into_iter()
        .filter(|s| !matches!(s, MeasureSpec::Verblunsky { .. }))
        .collect()
}

pub fn polar(spec: &MeasureSpec, n: usize, xi: Complex64, k: usize) -> (ComplexPoly, ComplexPoly) {
    let l = build_family(spec, n).unwrap();
    let q = polar_polynomial(&l, PolarParams::new(xi, k)).unwrap();
    (l, q)
}

/// Every polynomial the localization sweeps run over: each family at
/// n ∈ {5, 10, 20, 40}, k ∈ {1, ..., 4} on the 16-point pole grid.
pub fn polar_corpus() -> Vec<(String, Complex64, usize, ComplexPoly)> {
    let mut out = Vec::new();
    for spec in polarzeros::corpus::standard_families() {
        for n in [5, 10, 20, 40] {
            for k in 1..=4 {
                for xi in polarzeros::corpus::pole_grid() {
                    let (_, q) = polar(&spec, n, xi, k);
                    out.push((format!("{} n={n} k={k} xi={xi}", spec.name()), xi, k, q));
                }
            }
        }
    }
    out
}

/// Largest distance from a point of `a` to its partner in `b` under the
/// best one-to-one matching (greedy on sorted distances, exact for the
/// well-separated sets used here).
pub fn matched_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let mut pairs: Vec<(f64, usize, usize)> = a
        .iter()
        .enumerate()
        .flat_map(|(i, x)| b.iter().enumerate().map(move |(j, y)| ((x - y).norm(), i, j)))
        .collect();
    pairs.sort_by(|p, q| p.0.total_cmp(&q.0));
    let (mut used_a, mut used_b) = (vec![false; a.len()], vec![false; b.len()]);
    let mut worst: f64 = 0.0;
    for (d, i, j) in pairs {
        if !used_a[i] && !used_b[j] {
            used_a[i] = true;
            used_b[j] = true;
            worst = worst.max(d);
        }
    }
    worst
}
