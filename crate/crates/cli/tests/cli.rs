mod common;

use common::{csv_rows, run, run_ok, scatter_points};
use polarzeros::corpus::{reference_beta, reference_pole};
use polarzeros::Complex64;
use serde_json::Value;

fn contains_point(points: &[(usize, Complex64)], degree: usize, z: Complex64, tol: f64) -> bool {
    points.iter().any(|(d, w)| *d == degree && (w - z).norm() <= tol)
}

fn complex_flag(z: Complex64) -> String {
    format!("{:.17e},{:.17e}", z.re, z.im)
}

#[test]
fn invalid_flags_exit_with_2() {
    let cases: [&[&str]; 7] = [
        &["roots", "--preset", "fig1", "--n", "5", "--format", "xml"],
        &["roots", "--measure", "bs", "--beta", "0.9,0.9", "--n", "5"],
        &["roots", "--measure", "masspoint", "--n", "5"],
        &["roots", "--n", "5"],
        &["table", "sendov", "--preset", "table1", "--degrees", "1-4"],
        &["table", "sendov", "--preset", "table1", "--format", "svg"],
        &["figure", "zeros", "--preset", "fig1", "--xi", "1,2,3"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn root_finder_failure_exits_with_3_and_names_the_degree() {
    let out = run(&["figure", "zeros", "--preset", "fig2", "--max-iter", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("degree 10"), "{err}");
}

#[test]
fn bounds_assert_passes_on_mass_point_instances() {
    for (preset, xi) in [("table3", "0.3333333333333333,0"), ("table4", "1.3333333333333333,0")] {
        for k in ["1", "4"] {
            let text = run_ok(&["bounds", "--preset", preset, "--xi", xi, "--k", k, "--n", "20", "--assert"]);
            let doc: Value = serde_json::from_str(&text).unwrap();
            assert_eq!(doc["violations"], 0);
            assert_eq!(doc["pass"], true);
            assert_eq!(doc["report"]["gauss_lucas_inside"], true);
            assert_eq!(doc["report"]["per_root_verdicts"].as_array().unwrap().len(), 20);
        }
    }
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let commands: [&[&str]; 4] = [
        &["table", "sendov", "--preset", "table2"],
        &["figure", "zeros", "--preset", "fig1", "--format", "svg"],
        &["figure", "zeros", "--preset", "fig2", "--format", "json"],
        &["bounds", "--preset", "table1", "--n", "12"],
    ];
    for args in commands {
        assert_eq!(run_ok(args), run_ok(args), "{args:?}");
    }
}

#[test]
fn csv_layout() {
    let text = run_ok(&["table", "sendov", "--preset", "table1", "--degrees", "2-4"]);
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,zero_re,zero_im,distance"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 3);
    for row in rows {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 4);
        for f in &fields[1..] {
            let mantissa = f.trim_start_matches('-').split('e').next().unwrap();
            let digits = mantissa.chars().filter(char::is_ascii_digit).count();
            assert_eq!(digits, 17, "{f}");
        }
    }
}

#[test]
fn output_flag_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zeros.csv");
    let stdout = run_ok(&["figure", "zeros", "--preset", "fig2", "--output", path.to_str().unwrap()]);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, run_ok(&["figure", "zeros", "--preset", "fig2"]));
    assert_eq!(csv_rows(&written).len(), 10 + 20 + 30 + 40);
}

#[test]
fn scatter_examples() {
    let left = scatter_points(&csv_rows(&run_ok(&["figure", "zeros", "--preset", "fig2", "--degrees", "10"])));
    assert_eq!(left.len(), 10);
    assert!(contains_point(&left, 10, Complex64::new(-1.0005, 0.0), 5e-4));
    assert!(contains_point(&left, 10, Complex64::new(1.1433, 0.0), 5e-4));

    let right = scatter_points(&csv_rows(&run_ok(&[
        "figure", "zeros", "--preset", "fig2", "--degrees", "10", "--xi", "1.3333333333333333,0",
    ])));
    assert!(contains_point(&right, 10, Complex64::new(0.51981, 1.1448), 5e-4));
    assert!(contains_point(&right, 10, Complex64::new(0.51981, -1.1448), 5e-4));
    assert!(contains_point(&right, 10, Complex64::new(1.0649, 0.68221), 5e-4));
    assert!(contains_point(&right, 10, Complex64::new(-1.2007, -0.35180), 5e-4));
}

#[test]
fn degree_one_scatter_is_the_closed_form_root() {
    let beta = reference_beta();
    let xi = reference_pole();
    let text = run_ok(&[
        "figure", "zeros", "--measure", "bs", "--beta", &complex_flag(beta), "--xi", &complex_flag(xi), "--k",
        "1", "--degrees", "1",
    ]);
    let pts = scatter_points(&csv_rows(&text));
    assert_eq!(pts.len(), 1);
    assert!((pts[0].1 + xi + beta * 2.0).norm() < 1e-14, "{:?}", pts[0]);
}

#[test]
fn sendov_examples_and_metrics() {
    let rows = csv_rows(&run_ok(&["table", "sendov", "--preset", "table1", "--degrees", "20"]));
    assert!((rows[0][3] - 0.82332).abs() < 1e-3);
    let rows = csv_rows(&run_ok(&["table", "sendov", "--preset", "table2", "--degrees", "2"]));
    assert!((rows[0][3] - 0.5528).abs() < 1e-3);
    let rows = csv_rows(&run_ok(&["table", "sendov", "--preset", "table3", "--n", "2"]));
    assert!((rows[0][3] - 0.9440).abs() < 1e-3);

    let far = csv_rows(&run_ok(&["table", "sendov", "--preset", "table4", "--degrees", "2-8"]));
    let near = csv_rows(&run_ok(&["table", "sendov", "--preset", "table4", "--degrees", "2-8", "--metric", "nearest"]));
    for (f, n) in far.iter().zip(&near) {
        assert!(n[3] <= f[3] + 1e-15, "{n:?} vs {f:?}");
    }
    // one critical point at n = 2: both metrics agree
    assert_eq!(far[0][3], near[0][3]);
}

#[test]
fn roots_json_records_consistent_verdicts() {
    let text = run_ok(&["roots", "--preset", "table4", "--k", "3", "--n", "15"]);
    let doc: Value = serde_json::from_str(&text).unwrap();
    let radius = doc["containment"]["radius"].as_f64().unwrap();
    assert_eq!(radius, polarzeros::polar_disk_radius(Complex64::new(4.0 / 3.0, 0.0), 3));
    let roots = doc["roots"]["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 15);
    let outside = doc["containment"]["outside"].as_array().unwrap();
    for r in roots {
        let z = Complex64::new(r[0].as_f64().unwrap(), r[1].as_f64().unwrap());
        assert_eq!(z.norm() > radius + 1e-9, outside.contains(r));
    }
    assert_eq!(doc["containment"]["pass"], outside.is_empty());
    assert!(doc["roots"]["max_residual"].as_f64().unwrap() <= 1e-12);

    let csv = csv::Reader::from_reader(run_ok(&["roots", "--preset", "table4", "--k", "3", "--n", "15", "--format", "csv"]).as_bytes())
        .records()
        .map(|r| r.unwrap())
        .collect::<Vec<_>>();
    assert_eq!(csv.len(), 15);
    for rec in csv {
        let z = Complex64::new(rec[1].parse().unwrap(), rec[2].parse().unwrap());
        assert_eq!(&rec[3] == "true", z.norm() <= radius + 1e-9);
    }
}

#[test]
fn family_and_polar_documents() {
    let doc: Value = serde_json::from_str(&run_ok(&["family", "--preset", "table3", "--n", "6"])).unwrap();
    let alphas = doc["verblunsky"].as_array().unwrap();
    assert_eq!(alphas.len(), 6);
    // mass point: L_j(0) = -m / (1 + j m)
    let a6 = alphas[5][0].as_f64().unwrap();
    assert!((a6 + (2.0 / 3.0) / (1.0 + 6.0 * 2.0 / 3.0)).abs() < 1e-15);
    assert!(doc["orthogonality_residual"].as_f64().unwrap() <= 1e-12);
    assert_eq!(doc["polynomial"]["basis"], "monomial");

    let csv = csv_rows(&run_ok(&["polar", "--preset", "table1", "--n", "7", "--format", "csv"]));
    assert_eq!(csv.len(), 8);
    assert_eq!(csv[7], vec![7.0, 1.0, 0.0]);
    let doc: Value = serde_json::from_str(&run_ok(&["polar", "--preset", "table2", "--n", "7"])).unwrap();
    assert!(doc["ode_residual"].as_f64().unwrap() <= 1e-12);
    assert_eq!(doc["k"], 2);
}

#[test]
fn verblunsky_family_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("alphas.json");
    std::fs::write(&path, "[[0.5, 0.0], [0.0, -0.25], {\"re\": 0.1, \"im\": 0.1}]").unwrap();
    let file = path.to_str().unwrap();
    let doc: Value = serde_json::from_str(&run_ok(&["family", "--measure", "verblunsky", "--alphas-file", file, "--n", "3"])).unwrap();
    let coeffs = doc["polynomial"]["coeffs"].as_array().unwrap();
    assert_eq!(coeffs.len(), 4);
    assert!((coeffs[0][0].as_f64().unwrap() - 0.1).abs() < 1e-15);
    assert!((coeffs[0][1].as_f64().unwrap() - 0.1).abs() < 1e-15);

    let out = run(&["family", "--measure", "verblunsky", "--alphas-file", file, "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let missing = run(&["family", "--alphas-file", "/nonexistent/alphas.json", "--n", "2"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn svg_figure() {
    let svg = run_ok(&["figure", "zeros", "--preset", "fig2", "--format", "svg"]);
    assert!(svg.contains(r#"width="800" height="800""#));
    assert_eq!(svg.matches(r#"class="marker""#).count(), 100);
    assert_eq!(svg.matches(r#"class="series""#).count(), 4);
    // window [-1, 1.2] x [-1, 1] spans 700 px over 2.2 units; the k = 1 disk has radius 3
    let scale = 700.0 / 2.2;
    assert!(svg.contains(&format!(
        r#"data-label="polar disk" cx="{:.3}" cy="400.000" r="{:.3}""#,
        50.0 + scale,
        3.0 * scale
    )));

    let single = run_ok(&["roots", "--preset", "fig1", "--n", "3", "--format", "svg"]);
    assert_eq!(single.matches(r#"class="marker""#).count(), 3);
}

#[test]
fn help_documents_every_flag() {
    let top = run_ok(&["--help"]);
    for cmd in ["family", "polar", "roots", "bounds", "table", "figure"] {
        assert!(top.contains(cmd), "{cmd}");
    }
    let table = run_ok(&["table", "sendov", "--help"]);
    for flag in [
        "--measure", "--beta", "--mass", "--alphas-file", "--preset", "--k", "--xi", "--degrees", "--metric",
        "--tol", "--quad-points", "--format", "--output",
    ] {
        assert!(table.contains(flag), "{flag}");
    }
    assert!(run_ok(&["figure", "zeros", "--help"]).contains("--window"));
    assert!(run_ok(&["bounds", "--help"]).contains("--assert"));
}
