//! Monic orthogonal polynomials on the unit circle.
//!
//! Three measures have closed-form families (Bernstein–Szegő, Lebesgue plus a
//! point mass at `z = 1`, and the weight `|z - 1|^2`); any other family is
//! described by its Verblunsky coefficients `alpha_j = L_j(0)` and built with
//! the Szegő recursion `L_j = z L_{j-1} + alpha_j L*_{j-1}`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::poly::ComplexPoly;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// The measure a family is orthogonal against.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "measure")]
pub enum MeasureSpec {
    /// `dθ / (2π |z + β|^2)` with `|β| < 1`.
    #[serde(rename = "bernstein-szego")]
    BernsteinSzego { beta: Complex64 },
    /// `dθ / 2π + m δ(z - 1)`.
    #[serde(rename = "masspoint")]
    MassPoint { mass: f64 },
    /// `|z - 1|^2 dθ / 2π`.
    #[serde(rename = "geometric")]
    GeometricWeight,
    /// Family driven by `alphas[j - 1] = L_j(0)`.
    #[serde(rename = "verblunsky")]
    Verblunsky { alphas: Vec<Complex64> },
}

impl MeasureSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            MeasureSpec::BernsteinSzego { beta } => {
                if !(beta.norm() < 1.0) {
                    return Err(Error::InvalidMeasure(format!(
                        "Bernstein-Szegő parameter must satisfy |beta| < 1, got {beta}"
                    )));
                }
            }
            MeasureSpec::MassPoint { mass } => {
                if !(mass.is_finite() && *mass >= 0.0) {
                    return Err(Error::InvalidMeasure(format!(
                        "mass must be finite and nonnegative, got {mass}"
                    )));
                }
            }
            MeasureSpec::GeometricWeight => {}
            MeasureSpec::Verblunsky { alphas } => check_alphas(alphas)?,
        }
        Ok(())
    }

    /// Short lowercase name used in CLI flags and file names.
    pub fn name(&self) -> &'static str {
        match self {
            MeasureSpec::BernsteinSzego { .. } => "bs",
            MeasureSpec::MassPoint { .. } => "masspoint",
            MeasureSpec::GeometricWeight => "geometric",
            MeasureSpec::Verblunsky { .. } => "verblunsky",
        }
    }

    /// `L_n(0)` without building the polynomial.
    pub fn verblunsky(&self, n: usize) -> Result<Complex64> {
        if n == 0 {
            return Ok(ONE);
        }
        Ok(match self {
            MeasureSpec::BernsteinSzego { beta } => {
                if n == 1 {
                    *beta
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }
            MeasureSpec::MassPoint { mass } => {
                Complex64::new(-mass / (1.0 + n as f64 * mass), 0.0)
            }
            MeasureSpec::GeometricWeight => Complex64::new(1.0 / (n as f64 + 1.0), 0.0),
            MeasureSpec::Verblunsky { alphas } => *alphas.get(n - 1).ok_or_else(|| {
                invalid(format!("need {n} Verblunsky coefficients, have {}", alphas.len()))
            })?,
        })
    }
}

fn check_alphas(alphas: &[Complex64]) -> Result<()> {
    if let Some((j, a)) = alphas.iter().enumerate().find(|(_, a)| !(a.norm() < 1.0)) {
        return Err(Error::InvalidMeasure(format!(
            "Verblunsky coefficient alpha_{} = {a} lies outside the open unit disk",
            j + 1
        )));
    }
    Ok(())
}

/// The monic degree-`n` orthogonal polynomial of the family.
pub fn build_family(spec: &MeasureSpec, n: usize) -> Result<ComplexPoly> {
    spec.validate()?;
    if n == 0 {
        return Ok(ComplexPoly::one());
    }
    let poly = match spec {
        MeasureSpec::BernsteinSzego { beta } => {
            let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
            coeffs[n] = ONE;
            coeffs[n - 1] = *beta;
            ComplexPoly::from_exact(coeffs)
        }
        MeasureSpec::MassPoint { mass } => {
            let c = Complex64::new(-mass / (1.0 + n as f64 * mass), 0.0);
            let mut coeffs = vec![c; n + 1];
            coeffs[n] = ONE;
            ComplexPoly::from_exact(coeffs)
        }
        MeasureSpec::GeometricWeight => {
            let denom = n as f64 + 1.0;
            ComplexPoly::from_exact(
                (0..=n)
                    .map(|k| Complex64::new((k as f64 + 1.0) / denom, 0.0))
                    .collect(),
            )
        }
        MeasureSpec::Verblunsky { alphas } => {
            if alphas.len() < n {
                return Err(invalid(format!(
                    "degree {n} needs {n} Verblunsky coefficients, have {}",
                    alphas.len()
                )));
            }
            szego_recursion(&alphas[..n])?
                .pop()
                .expect("recursion returns at least L_0")
        }
    };
    Ok(poly)
}

/// `L_0, ..., L_n` for the family.
pub fn family_sequence(spec: &MeasureSpec, n: usize) -> Result<Vec<ComplexPoly>> {
    match spec {
        MeasureSpec::Verblunsky { alphas } => {
            if alphas.len() < n {
                return Err(invalid(format!(
                    "degree {n} needs {n} Verblunsky coefficients, have {}",
                    alphas.len()
                )));
            }
            szego_recursion(&alphas[..n])
        }
        _ => (0..=n).map(|j| build_family(spec, j)).collect(),
    }
}

/// Runs the Szegő recursion from `L_0 = 1`, returning `L_0 ..= L_n` where
/// `n = alphas.len()`.
pub fn szego_recursion(alphas: &[Complex64]) -> Result<Vec<ComplexPoly>> {
    check_alphas(alphas)?;
    let mut out = Vec::with_capacity(alphas.len() + 1);
    out.push(ComplexPoly::one());
    for (idx, &alpha) in alphas.iter().enumerate() {
        let prev = &out[idx];
        let star = prev.reverse_star(idx)?;
        let next = &prev.shift_up(1) + &star.scale(alpha);
        out.push(next);
    }
    Ok(out)
}

/// Default number of trapezoid nodes on `[-π, π]`.
pub const DEFAULT_QUAD_POINTS: usize = 512;

enum Density {
    Lebesgue,
    InversePoly(ComplexPoly),
    Poly(ComplexPoly),
}

impl Density {
    fn of(spec: &MeasureSpec) -> Result<Self> {
        Ok(match spec {
            MeasureSpec::BernsteinSzego { beta } => {
                Density::InversePoly(ComplexPoly::new(vec![*beta, ONE]))
            }
            MeasureSpec::MassPoint { .. } => Density::Lebesgue,
            MeasureSpec::GeometricWeight => Density::Poly(ComplexPoly::linear(ONE)),
            // Bernstein–Szegő approximant: the weight 1/|L_N|^2 reproduces the
            // first N Verblunsky coefficients, hence L_0 ..= L_N.
            MeasureSpec::Verblunsky { alphas } => {
                Density::InversePoly(build_family(spec, alphas.len())?)
            }
        })
    }

    fn at(&self, z: Complex64) -> f64 {
        match self {
            Density::Lebesgue => 1.0,
            Density::InversePoly(p) => 1.0 / p.evaluate(z).norm_sqr(),
            Density::Poly(p) => p.evaluate(z).norm_sqr(),
        }
    }
}

/// `|∫ L_n(z) z^{-j} dμ|`, with the absolutely continuous part integrated by
/// the composite trapezoid rule (normalized by `1/2π`) and the point mass, if
/// any, added exactly.
pub fn orthogonality_residual(
    spec: &MeasureSpec,
    n: usize,
    j: usize,
    quad_points: usize,
) -> Result<f64> {
    if j >= n {
        return Err(invalid(format!(
            "orthogonality needs j < n (got j = {j}, n = {n}); j = n is the squared norm"
        )));
    }
    if quad_points < 4 * (n + 1) {
        return Err(invalid(format!(
            "{quad_points} quadrature points is below the minimum 4(n+1) = {}",
            4 * (n + 1)
        )));
    }
    let l = build_family(spec, n)?;
    let density = Density::of(spec)?;
    let step = 2.0 * PI / quad_points as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for t in 0..quad_points {
        let theta = -PI + step * t as f64;
        let z = Complex64::from_polar(1.0, theta);
        let zj = Complex64::from_polar(1.0, -(j as f64) * theta);
        sum += l.evaluate(z) * zj * density.at(z);
    }
    let mut integral = sum / quad_points as f64;
    if let MeasureSpec::MassPoint { mass } = spec {
        integral += l.evaluate(ONE) * *mass;
    }
    Ok(integral.norm())
}

/// Result of [`boundary_identity_residual`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryResidual {
    /// Max over samples of `| |L_{n+1}/L_n - z| - |L_{n+1}(0)| |` plus the
    /// coefficientwise deviation of the series form of `L_n^*`.
    pub residual: f64,
    pub ratio_residual: f64,
    pub series_residual: f64,
    /// Angles skipped because `|L_n(e^{iθ})|` was too small.
    pub skipped: Vec<f64>,
}

const BOUNDARY_MIN_MODULUS: f64 = 1e-9;

/// Checks `|L_{n+1}(z)/L_n(z) - z| = |L_{n+1}(0)|` on the circle and
/// `L_n^* = 1 + z Σ conj(L_{l+1}(0)) L_l`.
pub fn boundary_identity_residual(
    spec: &MeasureSpec,
    n: usize,
    theta_samples: &[f64],
) -> Result<BoundaryResidual> {
    let seq = family_sequence(spec, n + 1)?;
    let (ln, ln1) = (&seq[n], &seq[n + 1]);
    let alpha_next = ln1.coeff(0).norm();

    let mut ratio_residual: f64 = 0.0;
    let mut skipped = Vec::new();
    for &theta in theta_samples {
        let z = Complex64::from_polar(1.0, theta);
        let denom = ln.evaluate(z);
        if denom.norm() <= BOUNDARY_MIN_MODULUS {
            skipped.push(theta);
            continue;
        }
        let lhs = (ln1.evaluate(z) / denom - z).norm();
        ratio_residual = ratio_residual.max((lhs - alpha_next).abs());
    }

    let mut series = ComplexPoly::zero();
    for l in 0..n {
        series = &series + &seq[l].scale(seq[l + 1].coeff(0).conj());
    }
    let series = &series.shift_up(1) + &ComplexPoly::one();
    let series_residual = series.max_abs_diff(&ln.reverse_star(n)?);

    Ok(BoundaryResidual {
        residual: ratio_residual + series_residual,
        ratio_residual,
        series_residual,
        skipped,
    })
}
