//! Fixed parameter sets shared by sweeps, tests and benchmarks.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::opuc::MeasureSpec;

/// Highest degree covered by [`standard_families`].
pub const MAX_CORPUS_DEGREE: usize = 64;

/// `(1/2) e^{iπ/3}`.
pub fn reference_beta() -> Complex64 {
    Complex64::from_polar(0.5, PI / 3.0)
}

/// `(1/3) e^{iπ/3}`.
pub fn reference_pole() -> Complex64 {
    Complex64::from_polar(1.0 / 3.0, PI / 3.0)
}

pub const REFERENCE_MASS: f64 = 2.0 / 3.0;

/// Deterministic Verblunsky coefficients with `|alpha_j| <= 0.6`.
pub fn sample_alphas(len: usize) -> Vec<Complex64> {
    (1..=len)
        .map(|j| {
            let j = j as f64;
            Complex64::from_polar(0.6 / j.sqrt(), 0.7 * j + 0.2)
        })
        .collect()
}

/// One member of every family variant, each valid up to
/// [`MAX_CORPUS_DEGREE`].
pub fn standard_families() -> Vec<MeasureSpec> {
    vec![
        MeasureSpec::BernsteinSzego {
            beta: reference_beta(),
        },
        MeasureSpec::MassPoint {
            mass: REFERENCE_MASS,
        },
        MeasureSpec::GeometricWeight,
        MeasureSpec::Verblunsky {
            alphas: sample_alphas(MAX_CORPUS_DEGREE),
        },
    ]
}

/// Sixteen poles with `|ξ| <= 2`: moduli `{1/3, 1, 4/3, 2}` at angles
/// `{0, π/3, π, 3π/2}`.
pub fn pole_grid() -> Vec<Complex64> {
    let moduli = [1.0 / 3.0, 1.0, 4.0 / 3.0, 2.0];
    let angles = [0.0, PI / 3.0, PI, 1.5 * PI];
    moduli
        .iter()
        .flat_map(|&r| angles.iter().map(move |&t| Complex64::from_polar(r, t)))
        .collect()
}
