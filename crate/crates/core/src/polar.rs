//! k-polar polynomials.
//!
//! `Q_{n;k}(z; ξ)` is the degree-`n` polynomial solution of
//! `d^k/dz^k [(z - ξ)^k Q] = (n+1)···(n+k) L_n(z)`. Writing both sides in
//! powers of `ω = z - ξ`, coefficient `l` of `Q` is coefficient `l` of `L_n`
//! times `(n+1)···(n+k) / ((l+1)···(l+k))`.
//!
//! Besides that construction this module carries the identities used in the
//! disk-bound argument: the binomial polynomial `g_{n;k}`, its derivative
//! identity, its hypergeometric/Jacobi representation and the Grace
//! composition.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::opuc::MeasureSpec;
use crate::poly::{CenteredExpansion, ComplexPoly};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Inputs to a monic `L_n` must have leading coefficient within this of 1.
pub const MONIC_TOL: f64 = 1e-10;

/// Pole location and polar order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarParams {
    pub xi: Complex64,
    pub k: usize,
}

impl PolarParams {
    pub fn new(xi: Complex64, k: usize) -> Self {
        PolarParams { xi, k }
    }
}

/// `(n+1)···(n+k)`.
pub fn rising_product(n: usize, k: usize) -> f64 {
    (1..=k).map(|i| (n + i) as f64).product()
}

/// `(n+1)···(n+k) / ((l+1)···(l+k))`, accumulated factor by factor.
fn scale_factor(n: usize, l: usize, k: usize) -> f64 {
    (1..=k).map(|i| (n + i) as f64 / (l + i) as f64).product()
}

/// Binomial coefficient, exact in integer arithmetic and rounded once.
pub fn binomial(n: usize, r: usize) -> f64 {
    if r > n {
        return 0.0;
    }
    let r = r.min(n - r);
    if n <= 120 {
        let mut acc: u128 = 1;
        for i in 1..=r {
            acc = acc * (n - r + i) as u128 / i as u128;
        }
        acc as f64
    } else {
        (1..=r).fold(1.0, |acc, i| acc * (n - r + i) as f64 / i as f64)
    }
}

fn check_monic(l: &ComplexPoly) -> Result<()> {
    if l.degree() == 0 {
        return Err(invalid("polar polynomials need a nonconstant L_n"));
    }
    if !l.is_monic(MONIC_TOL) {
        return Err(Error::NotMonic(l.leading()));
    }
    Ok(())
}

/// Builds `Q_{n;k}(z; ξ)` from a monic `L_n`.
///
/// The coefficient map is applied in the monomial basis directly:
///
/// `Q_i = Σ_{j≥i} c_j ξ^{j-i} · (n+k)!/n! · j!/(j+k)! · C(j-i+k-1, k-1)`
///
/// which is what shifting to `ξ`, scaling and shifting back reduce to. All
/// weights are positive, so coefficients of very different magnitude keep
/// their relative accuracy; the literal round trip
/// ([`polar_polynomial_centered`]) loses the small ones to cancellation once
/// `n` or `|ξ|` grows.
pub fn polar_polynomial(l: &ComplexPoly, params: PolarParams) -> Result<ComplexPoly> {
    check_monic(l)?;
    let PolarParams { xi, k } = params;
    if k == 0 {
        return Ok(l.clone());
    }
    let n = l.degree();
    let c = l.coeffs();
    let weights: Vec<f64> = (0..=n).map(|j| scale_factor(n, j, k)).collect();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut acc = ZERO;
        let mut power = ONE;
        let mut multiset = 1.0; // C(d+k-1, k-1)
        for d in 0..=(n - i) {
            let j = i + d;
            acc += c[j] * power * (weights[j] * multiset);
            power *= xi;
            multiset = multiset * (d + k) as f64 / (d + 1) as f64;
        }
        out.push(acc);
    }
    // the leading coefficient is carried over exactly
    out[n] = c[n];
    Ok(ComplexPoly::from_exact(out))
}

/// Same construction via an explicit Taylor shift to `ξ`, coefficient scaling
/// and shift back.
pub fn polar_polynomial_centered(l: &ComplexPoly, params: PolarParams) -> Result<ComplexPoly> {
    check_monic(l)?;
    let PolarParams { xi, k } = params;
    if k == 0 {
        return Ok(l.clone());
    }
    let n = l.degree();
    let shifted = l.taylor_shift(xi);
    let scaled = CenteredExpansion::new(
        xi,
        shifted
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &a)| a * scale_factor(n, i, k))
            .collect(),
    );
    Ok(scaled.to_monomial())
}

/// First-order polar polynomial from `(n+1) ∫_ξ^z L_n(t) dt = (z - ξ) Q_{n;1}(z; ξ)`.
pub fn polar_integral_k1(l: &ComplexPoly, xi: Complex64) -> Result<ComplexPoly> {
    if l.degree() == 0 {
        return Err(invalid("polar polynomials need a nonconstant L_n"));
    }
    let n = l.degree();
    let integral = l.antiderivative_from(xi).scale(Complex64::new((n + 1) as f64, 0.0));
    let (q, rem) = integral.div_linear(xi);
    let tol = 1e-11 * (1.0 + integral.max_abs_coeff());
    if rem.norm() > tol {
        return Err(Error::Numerical(format!(
            "integral does not vanish at the pole: remainder {:e} exceeds {tol:e}",
            rem.norm()
        )));
    }
    Ok(q)
}

/// Coefficient residual of `d^k/dz^k [(z - ξ)^k Q] - (n+1)···(n+k) L`,
/// divided by `(n+1)···(n+k) (1 + max |Q coeff|)`. The identity cancels terms
/// of size `max |Q|`, which grows like `|ξ|^n`, so the division makes the
/// residual a relative one.
pub fn ode_residual(l: &ComplexPoly, q: &ComplexPoly, params: PolarParams) -> f64 {
    let n = l.degree();
    let factor = rising_product(n, params.k);
    let mut lifted = q.clone();
    let linear = ComplexPoly::linear(params.xi);
    for _ in 0..params.k {
        lifted = &lifted * &linear;
    }
    let lhs = lifted.nth_derivative(params.k);
    let residual = &lhs - &l.scale(Complex64::new(factor, 0.0));
    residual.max_abs_coeff() / (factor * (1.0 + q.max_abs_coeff()))
}

/// Divides `num` by `(z - root)`, failing when the remainder is not negligible.
fn exact_div_linear(num: &ComplexPoly, root: Complex64, what: &str) -> Result<ComplexPoly> {
    let (q, rem) = num.div_linear(root);
    let tol = 1e-10 * (1.0 + num.max_abs_coeff());
    if rem.norm() > tol {
        return Err(Error::Numerical(format!(
            "{what}: division by (z - {root}) left remainder {:e} (tolerance {tol:e})",
            rem.norm()
        )));
    }
    Ok(q)
}

fn poly_from_terms(terms: &[(usize, Complex64)]) -> ComplexPoly {
    let len = terms.iter().map(|&(p, _)| p + 1).max().unwrap_or(1);
    let mut coeffs = vec![ZERO; len];
    for &(p, c) in terms {
        coeffs[p] += c;
    }
    ComplexPoly::from_exact(coeffs)
}

/// Polar polynomials of the three closed-form families, evaluated from their
/// rational closed forms by exact polynomial division.
///
/// Supported: Bernstein–Szegő with `k ∈ {1, 2}`, mass point with `k = 1`,
/// geometric weight with `k = 1` and `ξ ≠ 1`.
pub fn closed_form_polar(spec: &MeasureSpec, n: usize, params: PolarParams) -> Result<ComplexPoly> {
    spec.validate()?;
    if n == 0 {
        return Err(invalid("closed forms are stated for n >= 1"));
    }
    let PolarParams { xi, k } = params;
    let nf = n as f64;
    let q = match (spec, k) {
        (MeasureSpec::BernsteinSzego { beta }, 1) => {
            // z^n (n z + (n+1)β) - ξ^n (n ξ + (n+1)β), over n (z - ξ)
            let tail = xi.powu(n as u32) * (xi * nf + beta * (nf + 1.0));
            let num = poly_from_terms(&[
                (n + 1, Complex64::new(nf, 0.0)),
                (n, beta * (nf + 1.0)),
                (0, -tail),
            ]);
            exact_div_linear(&num, xi, "Bernstein-Szegő k=1")?.scale(Complex64::new(1.0 / nf, 0.0))
        }
        (MeasureSpec::BernsteinSzego { beta }, 2) => {
            // z^{n+1}(n z + βn + 2β) + ξ^n (n(n+1)ξ² + n(n+2)ξ(β - z) - β(n+1)(n+2) z),
            // over n (z - ξ)^2
            let xin = xi.powu(n as u32);
            let num = poly_from_terms(&[
                (n + 2, Complex64::new(nf, 0.0)),
                (n + 1, beta * (nf + 2.0)),
                (
                    1,
                    -xin * (beta * ((nf + 1.0) * (nf + 2.0)) + xi * (nf * (nf + 2.0))),
                ),
                (
                    0,
                    xin * (xi * xi * (nf * (nf + 1.0)) + xi * beta * (nf * (nf + 2.0))),
                ),
            ]);
            let once = exact_div_linear(&num, xi, "Bernstein-Szegő k=2")?;
            exact_div_linear(&once, xi, "Bernstein-Szegő k=2")?.scale(Complex64::new(1.0 / nf, 0.0))
        }
        (MeasureSpec::MassPoint { mass }, 1) => {
            // z^{n+1} - ξ^{n+1} - m(n+1)/(1+nm) Σ_{j<n} (z^{j+1} - ξ^{j+1})/(j+1), over (z - ξ)
            let weight = mass * (nf + 1.0) / (1.0 + nf * mass);
            let mut terms = vec![(n + 1, ONE), (0, -xi.powu(n as u32 + 1))];
            for j in 0..n {
                let c = weight / (j as f64 + 1.0);
                terms.push((j + 1, Complex64::new(-c, 0.0)));
                terms.push((0, xi.powu(j as u32 + 1) * c));
            }
            exact_div_linear(&poly_from_terms(&terms), xi, "mass point k=1")?
        }
        (MeasureSpec::GeometricWeight, 1) => {
            let shift = xi - ONE;
            if shift.norm() < 1e-12 {
                return Err(Error::Unsupported(
                    "geometric-weight closed form is singular at xi = 1".into(),
                ));
            }
            // z(z^{n+1} - 1)(ξ - 1) - ξ(ξ^{n+1} - 1)(z - 1), over (ξ - 1)(z - ξ)(z - 1)
            let s = xi * (xi.powu(n as u32 + 1) - ONE);
            let num = poly_from_terms(&[(n + 2, shift), (1, -shift - s), (0, s)]);
            let once = exact_div_linear(&num, ONE, "geometric k=1")?;
            exact_div_linear(&once, xi, "geometric k=1")?.scale(ONE / shift)
        }
        (MeasureSpec::Verblunsky { .. }, _) => {
            return Err(Error::Unsupported(
                "no closed form for Verblunsky-driven families".into(),
            ))
        }
        (other, k) => {
            return Err(Error::Unsupported(format!(
                "no closed form for {} with k = {k}",
                other.name()
            )))
        }
    };
    Ok(q)
}

/// Largest `n + k` for which `g_{n;k}` is built.
pub const G_MAX_ORDER: usize = 60;

/// `g_{n;k}(ω) = Σ_{l=0}^n C(n+k, l+k) ω^l`.
pub fn g_polynomial(n: usize, k: usize) -> Result<ComplexPoly> {
    if k == 0 {
        return Err(invalid("g_{n;k} is defined for k >= 1"));
    }
    if n + k > G_MAX_ORDER {
        return Err(invalid(format!(
            "n + k = {} exceeds {G_MAX_ORDER}; binomial coefficients would not be integral in f64",
            n + k
        )));
    }
    Ok(ComplexPoly::from_exact(
        (0..=n)
            .map(|l| Complex64::new(binomial(n + k, l + k), 0.0))
            .collect(),
    ))
}

/// Coefficient residual of `d^k/dω^k [ω^k g_{n;k}] - (n+1)···(n+k)(1+ω)^n`,
/// divided by `(n+1)···(n+k)`.
pub fn g_derivative_identity_residual(n: usize, k: usize) -> Result<f64> {
    let g = g_polynomial(n, k)?;
    let lhs = g.shift_up(k).nth_derivative(k);
    let factor = rising_product(n, k);
    let rhs = ComplexPoly::from_exact(
        (0..=n)
            .map(|l| Complex64::new(factor * binomial(n, l), 0.0))
            .collect(),
    );
    Ok((&lhs - &rhs).max_abs_coeff() / factor)
}

/// Pochhammer symbol `(a)_m`.
pub fn pochhammer(a: f64, m: usize) -> f64 {
    (0..m).map(|i| a + i as f64).product()
}

/// Terminating Gauss series `F(-n, b; c; z)`.
pub fn hyp2f1_terminating(n: usize, b: f64, c: f64, z: Complex64) -> Complex64 {
    let mut term = ONE;
    let mut sum = ONE;
    for j in 0..n {
        let jf = j as f64;
        term *= z * ((jf - n as f64) * (b + jf) / ((c + jf) * (jf + 1.0)));
        sum += term;
    }
    sum
}

/// Jacobi polynomial `P_n^{(α,β)}(x)` from its explicit finite sum
/// `Σ_l (n+α+β+1)_l (α+l+1)_{n-l} / (l! (n-l)!) ((x-1)/2)^l`, valid for any
/// real parameters (including negative `β`).
pub fn jacobi_p(n: usize, alpha: f64, beta: f64, x: Complex64) -> Complex64 {
    let half = (x - ONE) * 0.5;
    let nf = n as f64;
    let mut sum = ZERO;
    let mut power = ONE;
    let mut l_fact = 1.0;
    for l in 0..=n {
        if l > 0 {
            l_fact *= l as f64;
        }
        let nl_fact: f64 = (1..=(n - l)).map(|i| i as f64).product();
        let coef = pochhammer(nf + alpha + beta + 1.0, l)
            * pochhammer(alpha + l as f64 + 1.0, n - l)
            / (l_fact * nl_fact);
        sum += power * coef;
        power *= half;
    }
    sum
}

/// Largest `n + k` accepted by [`jacobi_identity_residual`].
pub const JACOBI_MAX_ORDER: usize = 30;

/// Max deviation over `samples` between `F(-n, 1; k+1; z)` and
/// `n! / ((k+1)···(k+n)) · P_n^{(k, -k-n)}(1 - 2z)`.
pub fn jacobi_identity_residual(n: usize, k: usize, samples: &[Complex64]) -> Result<f64> {
    if n + k > JACOBI_MAX_ORDER {
        return Err(invalid(format!(
            "n + k = {} exceeds {JACOBI_MAX_ORDER}",
            n + k
        )));
    }
    let kf = k as f64;
    let prefactor: f64 = (1..=n).map(|i| i as f64 / (kf + i as f64)).product();
    Ok(samples
        .iter()
        .map(|&z| {
            let lhs = hyp2f1_terminating(n, 1.0, kf + 1.0, z);
            let rhs = jacobi_p(n, kf, -kf - n as f64, ONE - z * 2.0) * prefactor;
            (lhs - rhs).norm()
        })
        .fold(0.0, f64::max))
}

/// Grace composition `c(z) = Σ a_l b_l C(n, l) z^l` of two polynomials given
/// by their normalized coefficients `a_l`, `b_l` (the polynomials themselves
/// are `Σ a_l C(n,l) z^l` and `Σ b_l C(n,l) z^l`).
pub fn grace_composition(a: &[Complex64], b: &[Complex64]) -> Result<ComplexPoly> {
    if a.len() != b.len() {
        return Err(invalid(format!(
            "composition needs equal lengths, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    if a.is_empty() {
        return Ok(ComplexPoly::zero());
    }
    let n = a.len() - 1;
    Ok(ComplexPoly::from_exact(
        a.iter()
            .zip(b)
            .enumerate()
            .map(|(l, (&x, &y))| x * y * binomial(n, l))
            .collect(),
    ))
}

/// Normalized coefficients `p_l / C(n, l)` of a degree-`n` polynomial, the
/// inverse of the normal form used by [`grace_composition`].
pub fn binomial_normal_form(p: &ComplexPoly, n: usize) -> Vec<Complex64> {
    (0..=n).map(|l| p.coeff(l) / binomial(n, l)).collect()
}
