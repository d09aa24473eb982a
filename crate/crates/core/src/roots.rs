//! Simultaneous root finding with the Aberth–Ehrlich iteration.
//!
//! Initial guesses sit on one circle, `r0 · exp(2πi (j + 1/4) / n)`. Each
//! approximation is frozen once its last correction is below
//! `tol · (1 + |z|)` or once `|p(z)|` is within the rounding-error bound of
//! Horner's scheme (further corrections would only chase noise). Converged
//! roots get up to three Newton polishing steps.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::poly::ComplexPoly;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_ITER: usize = 500;
const POLISH_STEPS: usize = 3;
const RESTART_SCALE: f64 = 1.1;

/// Roots of a polynomial, sorted by real part and then imaginary part.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    /// `max |p(r)| / (1 + max |coeff|)` over the returned roots.
    pub max_residual: f64,
    pub iterations: usize,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn max_modulus(&self) -> f64 {
        self.roots.iter().map(|r| r.norm()).fold(0.0, f64::max)
    }
}

/// Solver settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootOptions {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions {
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
        }
    }
}

impl RootOptions {
    pub fn find(&self, p: &ComplexPoly) -> Result<RootSet> {
        find_roots(p, self.tol, self.max_iter)
    }
}

/// `max |p(r)| / (1 + max |coeff of p|)`; zero for an empty list. `p(r)` is
/// evaluated with compensated Horner.
pub fn max_residual(p: &ComplexPoly, roots: &[Complex64]) -> f64 {
    let scale = 1.0 + p.max_abs_coeff();
    roots
        .iter()
        .map(|&r| p.evaluate_compensated(r).norm() / scale)
        .fold(0.0, f64::max)
}

/// Orders roots by real part, then imaginary part.
pub fn sort_roots(roots: &mut [Complex64]) {
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

/// Unique positive root of `x^n = Σ_{j<n} |c_j / c_n| x^j`, the tightest
/// radius of Cauchy type; zero when every lower coefficient vanishes.
pub fn sharp_cauchy_radius(p: &ComplexPoly) -> f64 {
    let n = p.degree();
    let lead = p.leading().norm();
    let lower: Vec<f64> = p.coeffs()[..n].iter().map(|c| c.norm() / lead).collect();
    if lower.iter().all(|&c| c == 0.0) {
        return 0.0;
    }
    // h(x) = Σ |c_j| x^{j-n} decreases from +inf to 0; solve h(x) = 1 in log space.
    let h = |x: f64| -> f64 {
        let y = 1.0 / x;
        lower.iter().fold(0.0, |acc, &c| (acc + c) * y)
    };
    let upper_bound = 1.0 + lower.iter().cloned().fold(0.0, f64::max);
    let (mut lo, mut hi) = (-700.0_f64, upper_bound.ln());
    if h(lo.exp()) < 1.0 {
        return lo.exp();
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if h(mid.exp()) > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-15 {
            break;
        }
    }
    hi.exp()
}

/// Finds all roots of `p` (degree ≥ 1).
///
/// Success guarantees `max_residual <= tol`. On non-convergence, or when the
/// residual exceeds `tol`, the iteration is restarted once from a circle 10%
/// larger; if that also fails the error carries the best iterate.
pub fn find_roots(p: &ComplexPoly, tol: f64, max_iter: usize) -> Result<RootSet> {
    if p.degree() == 0 {
        return Err(invalid("root finding needs a polynomial of degree >= 1"));
    }
    if !(tol > 0.0) {
        return Err(invalid(format!("tolerance must be positive, got {tol}")));
    }
    // exact zero roots come from vanishing low-order coefficients
    let zeros = p.coeffs().iter().take_while(|c| **c == ZERO).count();
    let reduced = ComplexPoly::from_exact(p.coeffs()[zeros..].to_vec());
    if reduced.degree() == 0 {
        return Ok(RootSet {
            roots: vec![ZERO; zeros],
            max_residual: 0.0,
            iterations: 0,
        });
    }
    let radius = 0.5 * sharp_cauchy_radius(&reduced);
    match attempt(p, &reduced, zeros, radius, tol, max_iter) {
        Ok(rs) => Ok(rs),
        Err(_) => attempt(p, &reduced, zeros, radius * RESTART_SCALE, tol, max_iter),
    }
}

fn attempt(
    p: &ComplexPoly,
    reduced: &ComplexPoly,
    zeros: usize,
    radius: f64,
    tol: f64,
    max_iter: usize,
) -> Result<RootSet> {
    let (found, iterations) = aberth(reduced, radius, tol, max_iter)?;
    let mut roots = vec![ZERO; zeros];
    roots.extend(found);
    sort_roots(&mut roots);
    let residual = max_residual(p, &roots);
    if residual > tol {
        return Err(Error::NoConvergence {
            iterations,
            residual,
            best: roots,
        });
    }
    Ok(RootSet {
        max_residual: residual,
        roots,
        iterations,
    })
}

fn noise_bound(degree: usize, magnitude: f64) -> f64 {
    4.0 * (degree as f64 + 1.0) * f64::EPSILON * magnitude
}

fn aberth(
    p: &ComplexPoly,
    radius: f64,
    tol: f64,
    max_iter: usize,
) -> Result<(Vec<Complex64>, usize)> {
    let n = p.degree();
    let dp = p.derivative();
    if n == 1 {
        let c = p.coeffs();
        return Ok((vec![-c[0] / c[1]], 0));
    }
    let mut z: Vec<Complex64> = (0..n)
        .map(|j| Complex64::from_polar(radius, 2.0 * PI * (j as f64 + 0.25) / n as f64))
        .collect();
    let mut done = vec![false; n];
    let mut iterations = 0;

    while iterations < max_iter && done.iter().any(|d| !d) {
        iterations += 1;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (value, magnitude) = p.evaluate_with_magnitude(z[i]);
            if value.norm() <= noise_bound(n, magnitude) {
                done[i] = true;
                continue;
            }
            let ratio = value / dp.evaluate(z[i]);
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| z[i] - z[j])
                .filter(|d| *d != ZERO)
                .map(|d| d.inv())
                .sum();
            let correction = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !correction.is_finite() {
                return Err(Error::Numerical(format!(
                    "non-finite Aberth correction at iteration {iterations}"
                )));
            }
            z[i] -= correction;
            if correction.norm() <= tol * (1.0 + z[i].norm()) {
                done[i] = true;
            }
        }
    }

    if done.iter().any(|d| !d) {
        return Err(Error::NoConvergence {
            iterations,
            residual: max_residual(p, &z),
            best: z,
        });
    }

    for r in z.iter_mut() {
        polish(p, &dp, r);
    }
    Ok((z, iterations))
}

fn polish(p: &ComplexPoly, dp: &ComplexPoly, root: &mut Complex64) {
    let mut value = p.evaluate_compensated(*root);
    for _ in 0..POLISH_STEPS {
        if value == ZERO {
            break;
        }
        let step = value / dp.evaluate(*root);
        if !step.is_finite() {
            break;
        }
        let candidate = *root - step;
        let candidate_value = p.evaluate_compensated(candidate);
        if candidate_value.norm() < value.norm() {
            value = candidate_value;
            *root = candidate;
        } else {
            break;
        }
    }
}
