//! Acceptance checks, one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the verdict lines always reach the
//! output; exits nonzero if any criterion fails.

mod common;

use std::f64::consts::PI;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use common::{data_rows, matched_distance, points_of_degree, run_ok, scatter_points};
use polarzeros::localize::CONTAINMENT_TOL;
use polarzeros::opuc::{boundary_identity_residual, orthogonality_residual, DEFAULT_QUAD_POINTS};
use polarzeros::polar::{
    binomial_normal_form, g_derivative_identity_residual, g_polynomial, grace_composition,
    jacobi_identity_residual,
};
use polarzeros::{
    build_family, closed_form_polar, containment_report, find_roots, gauss_lucas_report,
    polar_disk_radius, polar_integral_k1, polar_polynomial, Complex64, ComplexPoly, MeasureSpec,
    PolarParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const TABLE_TOL: f64 = 1e-3;
const TABLE_MIN_ROWS: usize = 18;
const FIG2_TOL: f64 = 5e-4;
const FIG1_TOL: f64 = 5e-3;
const ORACLE_TOL: f64 = 1e-10;
const G_IDENTITY_TOL: f64 = 1e-11;
const JACOBI_TOL: f64 = 1e-12;
const BOUNDARY_TOL: f64 = 1e-9;
const ORTHOGONALITY_TOL: f64 = 1e-9;
const RECONSTRUCTION_TOL: f64 = 1e-8;
const ROOT_TOL: f64 = 1e-12;

type Check = fn() -> Verdict;

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict {
            pass,
            detail: detail.into(),
        }
    }
}

fn closed_form_families() -> Vec<MeasureSpec> {
    polarzeros::corpus::standard_families()
        .into_iter()
        .filter(|s| !matches!(s, MeasureSpec::Verblunsky { .. }))
        .collect()
}

/// `(family, n, k, ξ)` for every family, n ∈ {5, 10, 20, 40}, k ∈ 1..=4 and
/// the 16-point pole grid.
fn corpus_params() -> Vec<(MeasureSpec, usize, usize, Complex64)> {
    let mut out = Vec::new();
    for spec in polarzeros::corpus::standard_families() {
        for n in [5, 10, 20, 40] {
            for k in 1..=4 {
                for xi in polarzeros::corpus::pole_grid() {
                    out.push((spec.clone(), n, k, xi));
                }
            }
        }
    }
    out
}

fn polar_of(spec: &MeasureSpec, n: usize, k: usize, xi: Complex64) -> (ComplexPoly, ComplexPoly) {
    let l = build_family(spec, n).expect("family");
    let q = polar_polynomial(&l, PolarParams::new(xi, k)).expect("polar polynomial");
    (l, q)
}

fn sendov_table(preset: &str, expected_file: &str) -> (usize, Vec<String>, usize) {
    let ours = common::csv_rows(&run_ok(&["table", "sendov", "--preset", preset]));
    let expected = data_rows(expected_file);
    assert_eq!(ours.len(), expected.len(), "{preset}: row count");
    let mut hits = 0;
    let mut witnesses = 0;
    let mut misses = Vec::new();
    for (o, e) in ours.iter().zip(&expected) {
        assert_eq!(o[0], e[0], "{preset}: degree order");
        if (o[3] - e[3]).abs() <= TABLE_TOL {
            hits += 1;
        } else {
            misses.push(format!("{preset} n={}: computed {:.5} expected {}", o[0], o[3], e[3]));
        }
        if (Complex64::new(o[1], o[2]) - Complex64::new(e[1], e[2])).norm() <= TABLE_TOL {
            witnesses += 1;
        }
    }
    (hits, misses, witnesses)
}

fn table_criterion(tables: &[(&str, &str)]) -> Verdict {
    let mut pass = true;
    let mut parts = Vec::new();
    let mut misses = Vec::new();
    for (preset, file) in tables {
        let (hits, m, witnesses) = sendov_table(preset, file);
        pass &= hits >= TABLE_MIN_ROWS;
        parts.push(format!(
            "{preset}: {hits}/19 distances within {TABLE_TOL:e} ({witnesses}/19 witness zeros agree)"
        ));
        misses.extend(m);
    }
    let mut detail = parts.join("; ");
    if !misses.is_empty() {
        detail.push_str(&format!("; misses: {}", misses.join(", ")));
    }
    Verdict::new(pass, detail)
}

fn criterion_1() -> Verdict {
    table_criterion(&[("table1", "table1.csv")])
}

fn criterion_2() -> Verdict {
    table_criterion(&[("table2", "table2.csv")])
}

fn criterion_3() -> Verdict {
    table_criterion(&[("table3", "table3.csv"), ("table4", "table4.csv")])
}

/// Worst matched distance per degree between computed and expected zeros.
fn figure_errors(args: &[&str], expected_file: &str, degrees: &[usize]) -> Vec<(usize, f64)> {
    let mut full = vec!["figure", "zeros"];
    full.extend_from_slice(args);
    let ours = scatter_points(&common::csv_rows(&run_ok(&full)));
    let expected = scatter_points(&data_rows(expected_file));
    degrees
        .iter()
        .map(|&d| {
            (
                d,
                matched_distance(&points_of_degree(&ours, d), &points_of_degree(&expected, d)),
            )
        })
        .collect()
}

fn criterion_4() -> Verdict {
    let fig2 = [
        ("xi=1/3", vec!["--preset", "fig2", "--degrees", "10"], "fig2_xi_1_3.csv"),
        (
            "xi=4/3",
            vec!["--preset", "fig2", "--degrees", "10", "--xi", "1.3333333333333333,0"],
            "fig2_xi_4_3.csv",
        ),
    ];
    let fig1 = [
        ("k=1", vec!["--preset", "fig1"], "fig1_k1.csv"),
        ("k=2", vec!["--preset", "fig1", "--k", "2"], "fig1_k2.csv"),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, args, file) in &fig2 {
        let err = figure_errors(args, file, &[10])[0].1;
        pass &= err <= FIG2_TOL;
        parts.push(format!("mass point {name} degree 10: {err:.1e} (tol {FIG2_TOL:e})"));
    }
    for (name, args, file) in &fig1 {
        let errs = figure_errors(args, file, &[10, 20, 30, 40]);
        let worst = errs.iter().map(|e| e.1).fold(0.0, f64::max);
        pass &= worst <= FIG1_TOL;
        parts.push(format!("Bernstein-Szegő {name} degrees 10-40: {worst:.1e} (tol {FIG1_TOL:e})"));
    }
    Verdict::new(pass, parts.join("; "))
}

fn criterion_5() -> Verdict {
    let results: Vec<(usize, usize)> = corpus_params()
        .par_iter()
        .map(|(spec, n, k, xi)| {
            let (_, q) = polar_of(spec, *n, *k, *xi);
            let rs = find_roots(&q, ROOT_TOL, 500).expect("roots");
            (rs.len(), containment_report(&rs, *xi, *k).outside.len())
        })
        .collect();
    let checked: usize = results.iter().map(|r| r.0).sum();
    let violations: usize = results.iter().map(|r| r.1).sum();
    let radii = [
        (Complex64::new(1.0 / 3.0, 0.0), 1, 3.0),
        (Complex64::new(4.0 / 3.0, 0.0), 1, 6.0),
        (Complex64::new(4.0 / 3.0, 0.0), 4, 13.0),
    ];
    let radius_err = radii
        .iter()
        .map(|(xi, k, r)| (polar_disk_radius(*xi, *k) - r).abs())
        .fold(0.0, f64::max);
    Verdict::new(
        violations == 0 && checked == 4 * 75 * 4 * 16 && radius_err <= 1e-14,
        format!(
            "{violations} violations over {checked} zeros of {} polynomials; radii 3, 6, 13 within {radius_err:.1e}",
            results.len()
        ),
    )
}

fn criterion_6() -> Verdict {
    // coefficient differences relative to 1 + max|Q|
    let rel = |a: &ComplexPoly, b: &ComplexPoly| a.max_abs_diff(b) / (1.0 + b.max_abs_coeff());
    let integral: Vec<f64> = corpus_params()
        .into_par_iter()
        .filter(|(_, _, k, _)| *k == 1)
        .map(|(spec, n, _, xi)| {
            let (l, q) = polar_of(&spec, n, 1, xi);
            rel(&polar_integral_k1(&l, xi).expect("integral form"), &q)
        })
        .collect();
    let worst_integral = integral.iter().copied().fold(0.0, f64::max);

    let beta = polarzeros::corpus::reference_beta();
    let cases = [
        (MeasureSpec::BernsteinSzego { beta }, 1),
        (MeasureSpec::BernsteinSzego { beta }, 2),
        (MeasureSpec::MassPoint { mass: polarzeros::corpus::REFERENCE_MASS }, 1),
        (MeasureSpec::GeometricWeight, 1),
    ];
    let mut worst_closed: f64 = 0.0;
    let mut compared = 0;
    for (spec, k) in &cases {
        for n in [5, 10, 20, 40] {
            for xi in polarzeros::corpus::pole_grid() {
                if matches!(spec, MeasureSpec::GeometricWeight) && (xi - 1.0).norm() < 1e-12 {
                    continue; // closed form is singular at ξ = 1
                }
                let (_, q) = polar_of(spec, n, *k, xi);
                let closed = closed_form_polar(spec, n, PolarParams::new(xi, *k)).expect("closed form");
                worst_closed = worst_closed.max(rel(&closed, &q));
                compared += 1;
            }
        }
    }
    Verdict::new(
        worst_integral <= ORACLE_TOL && worst_closed <= ORACLE_TOL,
        format!(
            "integral form vs kernel over {} k=1 polynomials: {worst_integral:.1e}; closed forms vs kernel over {compared}: {worst_closed:.1e} (tol {ORACLE_TOL:e}, relative to 1 + max|Q|)",
            integral.len()
        ),
    )
}

fn criterion_7() -> Verdict {
    let mut g_worst: f64 = 0.0;
    for n in 0..=20 {
        for k in 1..=3 {
            g_worst = g_worst.max(g_derivative_identity_residual(n, k).expect("g identity"));
        }
    }
    let samples: Vec<Complex64> = (0..16)
        .map(|t| Complex64::from_polar(0.3 + 0.05 * t as f64, 0.4 * t as f64))
        .collect();
    let mut jacobi_worst: f64 = 0.0;
    for n in 0..=10 {
        for k in 0..=3 {
            jacobi_worst = jacobi_worst.max(jacobi_identity_residual(n, k, &samples).expect("jacobi"));
        }
    }
    let thetas: Vec<f64> = (0..64).map(|t| -PI + 2.0 * PI * t as f64 / 64.0).collect();
    let mut boundary_worst: f64 = 0.0;
    for spec in polarzeros::corpus::standard_families() {
        for n in 0..=10 {
            let r = boundary_identity_residual(&spec, n, &thetas).expect("boundary identity");
            boundary_worst = boundary_worst.max(r.residual);
        }
    }
    Verdict::new(
        g_worst <= G_IDENTITY_TOL && jacobi_worst <= JACOBI_TOL && boundary_worst <= BOUNDARY_TOL,
        format!(
            "derivative identity {g_worst:.1e} (tol {G_IDENTITY_TOL:e}); hypergeometric/Jacobi {jacobi_worst:.1e} (tol {JACOBI_TOL:e}); boundary {boundary_worst:.1e} (tol {BOUNDARY_TOL:e})"
        ),
    )
}

fn criterion_8() -> Verdict {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for spec in closed_form_families() {
        for n in 1..=20 {
            for j in 0..n {
                worst = worst.max(orthogonality_residual(&spec, n, j, DEFAULT_QUAD_POINTS).expect("quadrature"));
                count += 1;
            }
        }
    }
    Verdict::new(
        worst <= ORTHOGONALITY_TOL,
        format!("{count} inner products, worst {worst:.1e} (tol {ORTHOGONALITY_TOL:e}, {DEFAULT_QUAD_POINTS} nodes)"),
    )
}

fn separated_points(rng: &mut ChaCha8Rng, count: usize, radius: f64, sep: f64) -> Vec<Complex64> {
    let mut pts: Vec<Complex64> = Vec::with_capacity(count);
    while pts.len() < count {
        let z = Complex64::new(rng.random_range(-radius..radius), rng.random_range(-radius..radius));
        if z.norm() <= radius && pts.iter().all(|w| (w - z).norm() >= sep) {
            pts.push(z);
        }
    }
    pts
}

fn criterion_9() -> Verdict {
    let gauss_lucas_failures = corpus_params()
        .par_iter()
        .filter(|(spec, n, k, xi)| {
            let (_, q) = polar_of(spec, *n, *k, *xi);
            let rs = find_roots(&q, ROOT_TOL, 500).expect("roots");
            !gauss_lucas_report(&q, &rs).expect("hull report").all_inside
        })
        .count();

    let mut rng = ChaCha8Rng::seed_from_u64(0x0067_7261_6365);
    let mut grace_failures = 0;
    for _ in 0..100 {
        let n = rng.random_range(2..=12);
        let mut disk = |r: f64| Complex64::from_polar(r * rng.random::<f64>().sqrt(), rng.random_range(0.0..2.0 * PI));
        let a_zeros: Vec<Complex64> = (0..n).map(|_| disk(1.0)).collect();
        let b_zeros: Vec<Complex64> = (0..n).map(|_| disk(3.0)).collect();
        let a = binomial_normal_form(&ComplexPoly::from_roots(&a_zeros), n);
        let b = binomial_normal_form(&ComplexPoly::from_roots(&b_zeros), n);
        let c = grace_composition(&a, &b).expect("composition");
        let bound = b_zeros.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let rs = find_roots(&c, ROOT_TOL, 500).expect("roots");
        if rs.max_modulus() > bound + CONTAINMENT_TOL {
            grace_failures += 1;
        }
    }

    let mut count_failures = Vec::new();
    for n in 1..=20 {
        for k in 1..=3 {
            let g = g_polynomial(n, k).expect("g polynomial");
            let rs = find_roots(&g, ROOT_TOL, 500).expect("roots");
            let non_real = rs.roots.iter().filter(|z| z.im.abs() > 1e-8).count();
            let expected = if n % 2 == 0 { n } else { n - 1 };
            if non_real != expected {
                count_failures.push(format!("n={n} k={k}: {non_real}"));
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst_reconstruction: f64 = 0.0;
    for _ in 0..100 {
        let n = rng.random_range(1..=30);
        let truth = separated_points(&mut rng, n, 2.0, 0.05);
        let rs = find_roots(&ComplexPoly::from_roots(&truth), 1e-10, 500).expect("roots");
        worst_reconstruction = worst_reconstruction.max(matched_distance(&rs.roots, &truth));
    }

    Verdict::new(
        gauss_lucas_failures == 0
            && grace_failures == 0
            && count_failures.is_empty()
            && worst_reconstruction <= RECONSTRUCTION_TOL,
        format!(
            "Gauss-Lucas failures {gauss_lucas_failures}/1024; Grace failures {grace_failures}/100; non-real count mismatches {} {:?}; reconstruction worst {worst_reconstruction:.1e} over 100 (tol {RECONSTRUCTION_TOL:e})",
            count_failures.len(),
            count_failures
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 9] = [
        ("table1 Sendov distances", criterion_1),
        ("table2 Sendov distances (k=2)", criterion_2),
        ("table3/table4 Sendov distances (mass point)", criterion_3),
        ("fig1/fig2 zero sets", criterion_4),
        ("Polar disk containment sweep", criterion_5),
        ("Oracle equivalence", criterion_6),
        ("Identity suites", criterion_7),
        ("Orthogonality", criterion_8),
        ("Property suites", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let verdict = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Verdict::new(false, format!("panicked: {msg}"))
        });
        if !verdict.pass {
            failed += 1;
        }
        println!(
            "{} criterion {}: {name}: {}",
            if verdict.pass { "PASS" } else { "FAIL" },
            i + 1,
            verdict.detail
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
