//! Dense complex polynomials in the monomial basis.
//!
//! Coefficients are stored in ascending order: `coeffs[l]` multiplies `z^l`.
//! Construction trims trailing coefficients that are negligible relative to
//! the largest one, so `degree()` is always well defined.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Relative magnitude below which trailing coefficients are dropped.
pub const TRIM_RELATIVE: f64 = 1e-14;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolyRepr", into = "PolyRepr")]
pub struct ComplexPoly {
    coeffs: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    basis: String,
    coeffs: Vec<Complex64>,
}

impl TryFrom<PolyRepr> for ComplexPoly {
    type Error = Error;

    fn try_from(repr: PolyRepr) -> Result<Self> {
        if repr.basis != "monomial" {
            return Err(invalid(format!("unsupported basis '{}'", repr.basis)));
        }
        Ok(ComplexPoly::new(repr.coeffs))
    }
}

impl From<ComplexPoly> for PolyRepr {
    fn from(p: ComplexPoly) -> Self {
        PolyRepr {
            basis: "monomial".to_string(),
            coeffs: p.coeffs,
        }
    }
}

impl fmt::Debug for ComplexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl ComplexPoly {
    /// Builds a polynomial from ascending coefficients, trimming negligible
    /// trailing terms. An empty vector yields the zero polynomial.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let cutoff = TRIM_RELATIVE * scale;
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.norm() <= cutoff) {
            coeffs.pop();
        }
        if coeffs.is_empty() || scale == 0.0 {
            coeffs = vec![ZERO];
        }
        ComplexPoly { coeffs }
    }

    /// Builds a polynomial whose trailing coefficients are exact: only exact
    /// zeros are dropped. Structural operations (products, derivatives,
    /// shifts, scaling) use this so that a known nonzero leading coefficient
    /// survives even when it is tiny next to the others.
    pub fn from_exact(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&ZERO) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(ZERO);
        }
        ComplexPoly { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        ComplexPoly { coeffs: vec![ZERO] }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(ONE)
    }

    /// `z^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![ZERO; n + 1];
        coeffs[n] = ONE;
        ComplexPoly { coeffs }
    }

    /// `z - root`.
    pub fn linear(root: Complex64) -> Self {
        ComplexPoly {
            coeffs: vec![-root, ONE],
        }
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut coeffs = vec![ONE];
        for &r in roots {
            coeffs.push(ZERO);
            for l in (1..coeffs.len()).rev() {
                coeffs[l] = coeffs[l - 1] - r * coeffs[l];
            }
            coeffs[0] = -r * coeffs[0];
        }
        ComplexPoly::from_exact(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == ZERO
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs[self.degree()]
    }

    /// Coefficient of `z^l`, zero beyond the degree.
    pub fn coeff(&self, l: usize) -> Complex64 {
        self.coeffs.get(l).copied().unwrap_or(ZERO)
    }

    pub fn is_monic(&self, tol: f64) -> bool {
        (self.leading() - ONE).norm() <= tol
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest coefficientwise difference, padding the shorter operand with zeros.
    pub fn max_abs_diff(&self, other: &ComplexPoly) -> f64 {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len)
            .map(|l| (self.coeff(l) - other.coeff(l)).norm())
            .fold(0.0, f64::max)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::from_exact(self.coeffs.iter().map(|&c| c * factor).collect())
    }

    /// Horner evaluation.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    /// Horner evaluation together with `sum |c_l| |z|^l`, the magnitude that
    /// bounds the rounding error of the computed value.
    pub fn evaluate_with_magnitude(&self, z: Complex64) -> (Complex64, f64) {
        let r = z.norm();
        let mut value = ZERO;
        let mut magnitude = 0.0;
        for &c in self.coeffs.iter().rev() {
            value = value * z + c;
            magnitude = magnitude * r + c.norm();
        }
        (value, magnitude)
    }

    /// Compensated Horner evaluation: about as accurate as plain Horner in
    /// twice the working precision.
    pub fn evaluate_compensated(&self, z: Complex64) -> Complex64 {
        let mut iter = self.coeffs.iter().rev();
        let Some(&lead) = iter.next() else {
            return ZERO;
        };
        let mut value = lead;
        let mut error = ZERO;
        for &c in iter {
            let (product, product_err) = two_prod_complex(value, z);
            let (sum, sum_err) = two_sum_complex(product, c);
            value = sum;
            error = error * z + product_err + sum_err;
        }
        value + error
    }

    pub fn derivative(&self) -> Self {
        if self.degree() == 0 {
            return Self::zero();
        }
        Self::from_exact(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(l, &c)| c * l as f64)
                .collect(),
        )
    }

    pub fn nth_derivative(&self, order: usize) -> Self {
        (0..order).fold(self.clone(), |p, _| p.derivative())
    }

    /// The antiderivative that vanishes at `xi`.
    pub fn antiderivative_from(&self, xi: Complex64) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ZERO);
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(l, &c)| c / (l + 1) as f64),
        );
        let tmp = ComplexPoly { coeffs };
        let offset = tmp.evaluate(xi);
        let mut coeffs = tmp.coeffs;
        coeffs[0] = -offset;
        Self::from_exact(coeffs)
    }

    /// Re-expands the polynomial in powers of `z - xi` by repeated synthetic
    /// division.
    pub fn taylor_shift(&self, xi: Complex64) -> CenteredExpansion {
        let mut work = self.coeffs.clone();
        let n = work.len();
        let mut out = Vec::with_capacity(n);
        for pass in 0..n {
            // after this sweep work[pass] holds the remainder of the current quotient
            for l in (pass..n - 1).rev() {
                let carry = work[l + 1] * xi;
                work[l] += carry;
            }
            out.push(work[pass]);
        }
        CenteredExpansion {
            center: xi,
            coeffs: out,
        }
    }

    /// `z^n * conj(p(1 / conj(z)))`: coefficient `l` of the result is the
    /// conjugate of coefficient `n - l` of `p`.
    pub fn reverse_star(&self, n: usize) -> Result<Self> {
        if n < self.degree() {
            return Err(invalid(format!(
                "reverse_star order {n} is below the degree {}",
                self.degree()
            )));
        }
        Ok(Self::new(
            (0..=n).map(|l| self.coeff(n - l).conj()).collect(),
        ))
    }

    /// Division by `z - root`, returning quotient and remainder.
    pub fn div_linear(&self, root: Complex64) -> (Self, Complex64) {
        if self.degree() == 0 {
            return (Self::zero(), self.coeffs[0]);
        }
        let n = self.degree();
        let mut quotient = vec![ZERO; n];
        let mut acc = self.coeffs[n];
        for l in (0..n).rev() {
            quotient[l] = acc;
            acc = self.coeffs[l] + acc * root;
        }
        (Self::from_exact(quotient), acc)
    }

    /// Polynomial long division.
    pub fn div_rem(&self, divisor: &ComplexPoly) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(invalid("division by the zero polynomial"));
        }
        let d = divisor.degree();
        if self.degree() < d {
            return Ok((Self::zero(), self.clone()));
        }
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let qlen = self.degree() - d + 1;
        let mut quotient = vec![ZERO; qlen];
        for q in (0..qlen).rev() {
            let factor = rem[q + d] / lead;
            quotient[q] = factor;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[q + j] -= factor * dc;
            }
        }
        // entries at and above degree d are eliminated by construction
        rem.truncate(d);
        if rem.is_empty() {
            rem.push(ZERO);
        }
        Ok((Self::from_exact(quotient), Self::new(rem)))
    }

    /// Multiplication by `z^shift`.
    pub fn shift_up(&self, shift: usize) -> Self {
        let mut coeffs = vec![ZERO; shift];
        coeffs.extend_from_slice(&self.coeffs);
        Self::from_exact(coeffs)
    }

    pub fn pow(&self, exp: usize) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl fmt::Display for ComplexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (l, c) in self.coeffs.iter().enumerate().rev() {
            if *c == ZERO && self.degree() > 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match l {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{l}")?,
            }
        }
        Ok(())
    }
}

/// Coefficients of a polynomial in powers of `z - center`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CenteredExpansion {
    pub center: Complex64,
    pub coeffs: Vec<Complex64>,
}

impl CenteredExpansion {
    pub fn new(center: Complex64, coeffs: Vec<Complex64>) -> Self {
        CenteredExpansion { center, coeffs }
    }

    /// Value at `z = center + omega`.
    pub fn evaluate_offset(&self, omega: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * omega + c)
    }

    /// Expands back into the monomial basis (Horner in `z - center`).
    pub fn to_monomial(&self) -> ComplexPoly {
        let mut acc: Vec<Complex64> = Vec::with_capacity(self.coeffs.len());
        for &c in self.coeffs.iter().rev() {
            // acc <- acc * (z - center) + c
            acc.push(ZERO);
            for l in (1..acc.len()).rev() {
                acc[l] = acc[l - 1] - self.center * acc[l];
            }
            acc[0] = c - self.center * acc[0];
        }
        ComplexPoly::from_exact(acc)
    }
}

impl From<&CenteredExpansion> for ComplexPoly {
    fn from(c: &CenteredExpansion) -> Self {
        c.to_monomial()
    }
}

/// Free-function form of [`CenteredExpansion::to_monomial`].
pub fn from_centered(c: &CenteredExpansion) -> ComplexPoly {
    c.to_monomial()
}

impl Add for &ComplexPoly {
    type Output = ComplexPoly;

    fn add(self, rhs: &ComplexPoly) -> ComplexPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ComplexPoly::from_exact((0..len).map(|l| self.coeff(l) + rhs.coeff(l)).collect())
    }
}

impl Sub for &ComplexPoly {
    type Output = ComplexPoly;

    fn sub(self, rhs: &ComplexPoly) -> ComplexPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ComplexPoly::from_exact((0..len).map(|l| self.coeff(l) - rhs.coeff(l)).collect())
    }
}

impl Mul for &ComplexPoly {
    type Output = ComplexPoly;

    fn mul(self, rhs: &ComplexPoly) -> ComplexPoly {
        let mut out = vec![ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ComplexPoly::from_exact(out)
    }
}

impl Mul<Complex64> for &ComplexPoly {
    type Output = ComplexPoly;

    fn mul(self, rhs: Complex64) -> ComplexPoly {
        self.scale(rhs)
    }
}

impl Neg for &ComplexPoly {
    type Output = ComplexPoly;

    fn neg(self) -> ComplexPoly {
        self.scale(-ONE)
    }
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

fn two_sum_complex(x: Complex64, y: Complex64) -> (Complex64, Complex64) {
    let (re, re_err) = two_sum(x.re, y.re);
    let (im, im_err) = two_sum(x.im, y.im);
    (Complex64::new(re, im), Complex64::new(re_err, im_err))
}

/// `x y = p + e` with `e` exact up to one rounding per component.
fn two_prod_complex(x: Complex64, y: Complex64) -> (Complex64, Complex64) {
    let (ac, ac_err) = two_prod(x.re, y.re);
    let (bd, bd_err) = two_prod(x.im, y.im);
    let (ad, ad_err) = two_prod(x.re, y.im);
    let (bc, bc_err) = two_prod(x.im, y.re);
    let (re, re_err) = two_sum(ac, -bd);
    let (im, im_err) = two_sum(ad, bc);
    (
        Complex64::new(re, im),
        Complex64::new(ac_err - bd_err + re_err, ad_err + bc_err + im_err),
    )
}
