#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

use polarzeros::Complex64;

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_polarzeros"))
}

/// Runs the binary and returns its output without checking the status.
pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

/// Runs the binary, requiring success, and returns standard output.
pub fn run_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} exited with {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("UTF-8 output")
}

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

/// Rows of a CSV file or string, header skipped, fields parsed as floats.
pub fn csv_rows(text: &str) -> Vec<Vec<f64>> {
    csv::Reader::from_reader(text.as_bytes())
        .records()
        .map(|r| {
            r.expect("well-formed CSV")
                .iter()
                .map(|f| f.parse::<f64>().unwrap_or_else(|_| panic!("not a number: {f}")))
                .collect()
        })
        .collect()
}

pub fn data_rows(name: &str) -> Vec<Vec<f64>> {
    let text = std::fs::read_to_string(data_path(name)).expect("data file");
    csv_rows(&text)
}

/// `(degree, point)` pairs of a `degree,re,im` table.
pub fn scatter_points(rows: &[Vec<f64>]) -> Vec<(usize, Complex64)> {
    rows.iter()
        .map(|r| (r[0] as usize, Complex64::new(r[1], r[2])))
        .collect()
}

pub fn points_of_degree(points: &[(usize, Complex64)], degree: usize) -> Vec<Complex64> {
    points.iter().filter(|(d, _)| *d == degree).map(|(_, z)| *z).collect()
}

/// Largest partner distance under a one-to-one matching built greedily from
/// the shortest pairs. It bounds the optimal bottleneck matching from above,
/// so a greedy value within tolerance certifies the optimal one.
pub fn matched_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
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
