//! Zero-localization regions and diagnostics: the polar disk, the Cauchy
//! bound, the Datt–Govil ring, Gauss–Lucas containment and Sendov distances.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::hull::ConvexHull;
use crate::poly::ComplexPoly;
use crate::roots::{RootOptions, RootSet};

/// Outward slack for hull membership and radius checks.
pub const CONTAINMENT_TOL: f64 = 1e-9;
/// Tolerance on `|leading - 1|` for the ring's monic normal form.
pub const RING_MONIC_TOL: f64 = 1e-10;
const LAMBDA0_GRID: usize = 4096;
const LAMBDA0_FLOOR: f64 = 1e-9;

/// `|ξ| + (k + 1)(1 + |ξ|)`, the radius of the disk holding every zero of
/// `Q_{n;k}(·; ξ)`.
pub fn polar_disk_radius(xi: Complex64, k: usize) -> f64 {
    let m = xi.norm();
    m + (k as f64 + 1.0) * (1.0 + m)
}

/// `1 + max_{j<n} |a_j| / |a_n|`.
pub fn cauchy_bound(p: &ComplexPoly) -> f64 {
    let n = p.degree();
    let lead = p.leading().norm();
    1.0 + p.coeffs()[..n]
        .iter()
        .map(|c| c.norm() / lead)
        .fold(0.0, f64::max)
}

/// `(x - 1)(1 + Bx)^n + 1`, written as `x P - (P - 1)` with `P - 1` from
/// `expm1` so that the only cancellation left is the final subtraction.
pub fn lambda0_equation(b: f64, n: usize, x: f64) -> f64 {
    let log_growth = n as f64 * (b * x).ln_1p();
    x * log_growth.exp() - log_growth.exp_m1()
}

/// `f(x) / x` for `x > 0`, free of the cancellation in `f` near zero.
fn lambda0_reduced(b: f64, n: usize, x: f64) -> f64 {
    let log_growth = n as f64 * (b * x).ln_1p();
    log_growth.exp() - log_growth.exp_m1() / x
}

/// Largest root in `[0, 1]` of `(x - 1)(1 + Bx)^n + 1`.
///
/// `x = 0` always solves the equation; an interior root exists only when
/// `nB > 1`. Returns 0 when there is none, and for `B <= 0`.
pub fn lambda0_solve(b: f64, n: usize) -> f64 {
    if !(b > 0.0) || n == 0 || !b.is_finite() {
        return 0.0;
    }
    // f(x) = x g(x) with g(1) = 1 > 0; scan down from 1 for the last
    // nonpositive sample of g
    let f = |x: f64| lambda0_reduced(b, n, x);
    let step = (1.0 - LAMBDA0_FLOOR) / LAMBDA0_GRID as f64;
    let mut bracket = None;
    for i in (0..LAMBDA0_GRID).rev() {
        let x = LAMBDA0_FLOOR + step * i as f64;
        if f(x) <= 0.0 {
            bracket = Some((x, (x + step).min(1.0)));
            break;
        }
    }
    let Some((mut lo, mut hi)) = bracket else {
        return 0.0;
    };
    while hi - lo > f64::EPSILON * hi {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let residual = |x: f64| lambda0_equation(b, n, x).abs();
    if residual(lo) <= residual(hi) {
        lo
    } else {
        hi
    }
}

/// Annulus `inner <= |z| <= outer` holding every zero of a monic polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ring {
    pub inner: f64,
    pub outer: f64,
    /// `max_{j<n} |a_j|`.
    pub b: f64,
    pub lambda0: f64,
}

impl Ring {
    pub fn contains(&self, z: Complex64, tol: f64) -> bool {
        let m = z.norm();
        m >= self.inner - tol && m <= self.outer + tol
    }
}

/// Datt–Govil ring of a monic polynomial of degree ≥ 1.
pub fn datt_govil_ring(p: &ComplexPoly) -> Result<Ring> {
    let n = p.degree();
    if n == 0 || p.is_zero() {
        return Err(invalid("the ring needs a polynomial of degree >= 1"));
    }
    if !p.is_monic(RING_MONIC_TOL) {
        return Err(Error::NotMonic(p.leading()));
    }
    let b = p.coeffs()[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let a0 = p.coeff(0).norm();
    let nf = n as f64;
    let inner = if a0 == 0.0 {
        0.0
    } else {
        a0 / (2.0 * (1.0 + b).powi(n as i32 - 1) * (1.0 + nf * b))
    };
    let lambda0 = lambda0_solve(b, n);
    Ok(Ring {
        inner,
        outer: 1.0 + lambda0 * b,
        b,
        lambda0,
    })
}

/// Critical point of `p` together with its distance to the zero hull.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HullVerdict {
    pub critical_point: Complex64,
    pub distance: f64,
    pub inside: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaussLucasReport {
    pub hull: Vec<Complex64>,
    pub verdicts: Vec<HullVerdict>,
    pub all_inside: bool,
}

fn critical_points(p: &ComplexPoly, opts: &RootOptions) -> Result<RootSet> {
    if p.degree() < 2 {
        return Err(invalid("critical points need a polynomial of degree >= 2"));
    }
    opts.find(&p.derivative())
}

/// Tests every critical point of `p` against the convex hull of `rs.roots`.
pub fn gauss_lucas_report(p: &ComplexPoly, rs: &RootSet) -> Result<GaussLucasReport> {
    gauss_lucas_report_with(p, rs, &RootOptions::default())
}

pub fn gauss_lucas_report_with(
    p: &ComplexPoly,
    rs: &RootSet,
    opts: &RootOptions,
) -> Result<GaussLucasReport> {
    let crit = critical_points(p, opts)?;
    let hull = ConvexHull::new(&rs.roots);
    let verdicts: Vec<HullVerdict> = crit
        .roots
        .iter()
        .map(|&w| {
            let distance = hull.distance(w);
            HullVerdict {
                critical_point: w,
                distance,
                inside: distance <= CONTAINMENT_TOL,
            }
        })
        .collect();
    Ok(GaussLucasReport {
        hull: hull.vertices(),
        all_inside: verdicts.iter().all(|v| v.inside),
        verdicts,
    })
}

/// Distances from one zero to the critical points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SendovRow {
    pub zero: Complex64,
    /// Distance to the nearest critical point.
    pub nearest: f64,
    /// Distance to the farthest critical point.
    pub farthest: f64,
}

/// How a zero's distance to the critical set is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SendovMetric {
    /// `max_z min_w |z - w|`.
    Nearest,
    /// `max_z max_w |z - w|`.
    Farthest,
}

impl std::str::FromStr for SendovMetric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nearest" => Ok(SendovMetric::Nearest),
            "farthest" => Ok(SendovMetric::Farthest),
            other => Err(invalid(format!("unknown metric '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SendovReport {
    pub critical_points: Vec<Complex64>,
    pub rows: Vec<SendovRow>,
    /// Largest nearest-critical-point distance.
    pub max_distance: f64,
    pub witness: Complex64,
    /// Largest distance over all (zero, critical point) pairs.
    pub max_pair_distance: f64,
    pub pair_witness: Complex64,
}

impl SendovReport {
    /// `(distance, witness zero)` under the given metric.
    pub fn metric(&self, metric: SendovMetric) -> (f64, Complex64) {
        match metric {
            SendovMetric::Nearest => (self.max_distance, self.witness),
            SendovMetric::Farthest => (self.max_pair_distance, self.pair_witness),
        }
    }
}

/// Relative gap below which two distances count as tied.
const TIE_TOL: f64 = 1e-12;

fn arg_max(rows: &[SendovRow], key: impl Fn(&SendovRow) -> f64) -> (f64, Complex64) {
    let best = rows.iter().map(&key).fold(f64::NEG_INFINITY, f64::max);
    // among tied maxima the last zero in sort order is the witness
    let witness = rows
        .iter()
        .rev()
        .find(|row| key(row) >= best - TIE_TOL * best.abs())
        .map_or(Complex64::new(0.0, 0.0), |row| row.zero);
    (best, witness)
}

/// Sendov distances of every zero in `rs` to the critical points of `p`.
pub fn sendov_report(p: &ComplexPoly, rs: &RootSet) -> Result<SendovReport> {
    sendov_report_with(p, rs, &RootOptions::default())
}

pub fn sendov_report_with(p: &ComplexPoly, rs: &RootSet, opts: &RootOptions) -> Result<SendovReport> {
    let crit = critical_points(p, opts)?;
    if rs.roots.is_empty() {
        return Err(invalid("the root set is empty"));
    }
    let rows: Vec<SendovRow> = rs
        .roots
        .iter()
        .map(|&z| {
            let d = crit.roots.iter().map(|w| (z - w).norm());
            SendovRow {
                zero: z,
                nearest: d.clone().fold(f64::INFINITY, f64::min),
                farthest: d.fold(0.0, f64::max),
            }
        })
        .collect();
    let (max_distance, witness) = arg_max(&rows, |r| r.nearest);
    let (max_pair_distance, pair_witness) = arg_max(&rows, |r| r.farthest);
    Ok(SendovReport {
        critical_points: crit.roots,
        rows,
        max_distance,
        witness,
        max_pair_distance,
        pair_witness,
    })
}

/// Per-root verdict against the polar disk and, when available, the ring.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootVerdict {
    pub root: Complex64,
    pub inside_disk: bool,
    pub inside_ring: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Containment {
    pub radius: f64,
    pub outside: Vec<Complex64>,
    pub pass: bool,
}

/// Checks `|root| <= polar_disk_radius(ξ, k) + 1e-9` for every root.
pub fn containment_report(rs: &RootSet, xi: Complex64, k: usize) -> Containment {
    let radius = polar_disk_radius(xi, k);
    let outside: Vec<Complex64> = rs
        .roots
        .iter()
        .copied()
        .filter(|r| r.norm() > radius + CONTAINMENT_TOL)
        .collect();
    Containment {
        radius,
        pass: outside.is_empty(),
        outside,
    }
}

/// Every localization region for one polar polynomial and its zeros.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub polar_disk_radius: f64,
    pub cauchy_radius: f64,
    pub ring_inner: f64,
    pub ring_outer: f64,
    pub lambda0: f64,
    pub per_root_verdicts: Vec<RootVerdict>,
    /// Absent below degree 2.
    pub sendov_max_distance: Option<f64>,
    pub sendov_witness: Option<Complex64>,
    pub sendov_max_pair_distance: Option<f64>,
    pub gauss_lucas_inside: Option<bool>,
}

impl BoundReport {
    /// Roots outside the disk, the ring or the Cauchy circle, plus critical
    /// points outside the zero hull.
    pub fn violations(&self) -> usize {
        let roots = self
            .per_root_verdicts
            .iter()
            .filter(|v| {
                !v.inside_disk || !v.inside_ring || v.root.norm() > self.cauchy_radius + CONTAINMENT_TOL
            })
            .count();
        roots + usize::from(self.gauss_lucas_inside == Some(false))
    }

    pub fn pass(&self) -> bool {
        self.violations() == 0
    }
}

/// Assembles a [`BoundReport`] for `q = Q_{n;k}(·; ξ)` and its roots.
///
/// The ring is evaluated on `q / leading(q)`, which has the same zeros.
pub fn bound_report(q: &ComplexPoly, rs: &RootSet, xi: Complex64, k: usize) -> Result<BoundReport> {
    bound_report_with(q, rs, xi, k, &RootOptions::default())
}

pub fn bound_report_with(
    q: &ComplexPoly,
    rs: &RootSet,
    xi: Complex64,
    k: usize,
    opts: &RootOptions,
) -> Result<BoundReport> {
    if q.degree() == 0 {
        return Err(invalid("bounds need a polynomial of degree >= 1"));
    }
    let lead = q.leading();
    let mut monic: Vec<Complex64> = q.coeffs().iter().map(|c| c / lead).collect();
    *monic.last_mut().expect("degree >= 1") = Complex64::new(1.0, 0.0);
    let ring = datt_govil_ring(&ComplexPoly::from_exact(monic))?;
    let radius = polar_disk_radius(xi, k);
    let per_root_verdicts = rs
        .roots
        .iter()
        .map(|&root| RootVerdict {
            root,
            inside_disk: root.norm() <= radius + CONTAINMENT_TOL,
            inside_ring: ring.contains(root, CONTAINMENT_TOL),
        })
        .collect();

    let (sendov, gauss_lucas) = if q.degree() >= 2 {
        (
            Some(sendov_report_with(q, rs, opts)?),
            Some(gauss_lucas_report_with(q, rs, opts)?),
        )
    } else {
        (None, None)
    };
    Ok(BoundReport {
        polar_disk_radius: radius,
        cauchy_radius: cauchy_bound(q),
        ring_inner: ring.inner,
        ring_outer: ring.outer,
        lambda0: ring.lambda0,
        per_root_verdicts,
        sendov_max_distance: sendov.as_ref().map(|s| s.max_distance),
        sendov_witness: sendov.as_ref().map(|s| s.witness),
        sendov_max_pair_distance: sendov.as_ref().map(|s| s.max_pair_distance),
        gauss_lucas_inside: gauss_lucas.map(|g| g.all_inside),
    })
}
