//! Run configuration, flag value parsers and the reproduction presets.

use std::fmt;
use std::str::FromStr;

use polarzeros::corpus::{reference_beta, reference_pole, REFERENCE_MASS};
use polarzeros::roots::{DEFAULT_MAX_ITER, DEFAULT_TOL};
use polarzeros::{Complex64, MeasureSpec, RootOptions};
use polarzeros::opuc::DEFAULT_QUAD_POINTS;
use serde::Serialize;

use crate::error::CliError;

/// Largest degree accepted by the sweeps.
pub const MAX_DEGREE: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Svg,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "svg" => Ok(OutputFormat::Svg),
            other => Err(format!("unknown format '{other}' (expected json, csv or svg)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Svg => "svg",
        })
    }
}

/// Measure family selected by `--measure`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureKind {
    BernsteinSzego,
    MassPoint,
    Geometric,
    Verblunsky,
}

impl FromStr for MeasureKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "bs" | "bernstein-szego" => Ok(MeasureKind::BernsteinSzego),
            "masspoint" | "mass-point" => Ok(MeasureKind::MassPoint),
            "geometric" => Ok(MeasureKind::Geometric),
            "verblunsky" => Ok(MeasureKind::Verblunsky),
            other => Err(format!(
                "unknown measure '{other}' (expected bs, masspoint, geometric or verblunsky)"
            )),
        }
    }
}

/// Reference parameter sets for the Sendov tables and zero figures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Table1,
    Table2,
    Table3,
    Table4,
    Fig1,
    Fig2,
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "table1" => Ok(Preset::Table1),
            "table2" => Ok(Preset::Table2),
            "table3" => Ok(Preset::Table3),
            "table4" => Ok(Preset::Table4),
            "fig1" => Ok(Preset::Fig1),
            "fig2" => Ok(Preset::Fig2),
            other => Err(format!(
                "unknown preset '{other}' (expected table1..table4, fig1 or fig2)"
            )),
        }
    }
}

impl Preset {
    pub fn measure(self) -> MeasureSpec {
        match self {
            Preset::Table1 | Preset::Table2 | Preset::Fig1 => {
                MeasureSpec::BernsteinSzego { beta: reference_beta() }
            }
            Preset::Table3 | Preset::Table4 | Preset::Fig2 => {
                MeasureSpec::MassPoint { mass: REFERENCE_MASS }
            }
        }
    }

    pub fn xi(self) -> Complex64 {
        match self {
            Preset::Table1 | Preset::Table2 | Preset::Fig1 => reference_pole(),
            Preset::Table3 | Preset::Fig2 => Complex64::new(1.0 / 3.0, 0.0),
            Preset::Table4 => Complex64::new(4.0 / 3.0, 0.0),
        }
    }

    pub fn k(self) -> usize {
        match self {
            Preset::Table2 => 2,
            _ => 1,
        }
    }

    pub fn degrees(self) -> Vec<usize> {
        match self {
            Preset::Fig1 | Preset::Fig2 => vec![10, 20, 30, 40],
            _ => (2..=20).collect(),
        }
    }

    /// Plot window of the reference panel for the given pole.
    pub fn window(self, xi: Complex64) -> Option<Window> {
        match self {
            Preset::Fig1 => Some(Window::new(-0.5, 0.7, -0.5, 0.7)),
            Preset::Fig2 if xi.norm() > 1.0 => Some(Window::new(-1.5, 1.5, -1.5, 1.5)),
            Preset::Fig2 => Some(Window::new(-1.0, 1.2, -1.0, 1.0)),
            _ => None,
        }
    }
}

/// Axis-aligned plot rectangle `[x_min, x_max] × [y_min, y_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Window {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Window {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Self {
        Window { x_min, x_max, y_min, y_max }
    }

    pub fn is_valid(&self) -> bool {
        [self.x_min, self.x_max, self.y_min, self.y_max].iter().all(|v| v.is_finite())
            && self.x_min < self.x_max
            && self.y_min < self.y_max
    }

    /// Smallest window holding every point, padded by 10% (at least 0.1).
    pub fn around(points: &[Complex64]) -> Self {
        if points.is_empty() {
            return Window::new(-1.0, 1.0, -1.0, 1.0);
        }
        let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for p in points {
            x0 = x0.min(p.re);
            x1 = x1.max(p.re);
            y0 = y0.min(p.im);
            y1 = y1.max(p.im);
        }
        let pad = (0.1 * (x1 - x0).max(y1 - y0)).max(0.1);
        Window::new(x0 - pad, x1 + pad, y0 - pad, y1 + pad)
    }
}

impl FromStr for Window {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let v = parse_floats(s, 4)?;
        let w = Window::new(v[0], v[1], v[2], v[3]);
        if !w.is_valid() {
            return Err(format!("window '{s}' must satisfy x_min < x_max and y_min < y_max"));
        }
        Ok(w)
    }
}

fn parse_floats(s: &str, count: usize) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != count {
        return Err(format!("expected {count} comma-separated numbers, got '{s}'"));
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("'{p}' is not a finite number"))
        })
        .collect()
}

/// Parses `re,im` (a bare `re` is accepted as a real number).
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    if s.contains(',') {
        let v = parse_floats(s, 2)?;
        Ok(Complex64::new(v[0], v[1]))
    } else {
        parse_floats(s, 1).map(|v| Complex64::new(v[0], 0.0))
    }
}

/// Parses a degree list such as `10,20,30,40`, `2-20` or `2-5,10`. Ranges are
/// inclusive. The result is sorted and deduplicated.
pub fn parse_degrees(s: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim) {
        let bad = || format!("'{item}' is not a degree or an inclusive range a-b");
        match item.split_once('-') {
            Some((a, b)) => {
                let a: usize = a.trim().parse().map_err(|_| bad())?;
                let b: usize = b.trim().parse().map_err(|_| bad())?;
                if a > b {
                    return Err(format!("empty range '{item}'"));
                }
                out.extend(a..=b);
            }
            None => out.push(item.parse().map_err(|_| bad())?),
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Parses the contents of an `--alphas-file`: a JSON list whose entries are
/// `[re, im]` pairs, `{"re": .., "im": ..}` objects or plain reals.
pub fn parse_alphas(json: &str) -> Result<Vec<Complex64>, String> {
    #[derive(serde::Deserialize)]
    #[serde(untagged)]
    enum Entry {
        Pair([f64; 2]),
        Object { re: f64, im: f64 },
        Real(f64),
    }
    let entries: Vec<Entry> =
        serde_json::from_str(json).map_err(|e| format!("invalid alphas file: {e}"))?;
    Ok(entries
        .into_iter()
        .map(|e| match e {
            Entry::Pair([re, im]) | Entry::Object { re, im } => Complex64::new(re, im),
            Entry::Real(re) => Complex64::new(re, 0.0),
        })
        .collect())
}

/// Assembles a [`MeasureSpec`] from the measure flags.
///
/// Without `--measure` the kind is implied by whichever parameter flag is
/// present, then by the preset.
pub fn resolve_measure(
    kind: Option<MeasureKind>,
    beta: Option<Complex64>,
    mass: Option<f64>,
    alphas: Option<Vec<Complex64>>,
    preset: Option<Preset>,
) -> Result<MeasureSpec, CliError> {
    let kind = kind
        .or(beta.map(|_| MeasureKind::BernsteinSzego))
        .or(mass.map(|_| MeasureKind::MassPoint))
        .or(alphas.as_ref().map(|_| MeasureKind::Verblunsky));
    let spec = match kind {
        None => match preset {
            Some(p) => p.measure(),
            None => return Err(CliError::usage("no measure given (use --measure or --preset)")),
        },
        Some(MeasureKind::BernsteinSzego) => MeasureSpec::BernsteinSzego {
            beta: beta.or(preset.and_then(|p| match p.measure() {
                MeasureSpec::BernsteinSzego { beta } => Some(beta),
                _ => None,
            }))
            .ok_or_else(|| CliError::usage("--measure bs needs --beta re,im"))?,
        },
        Some(MeasureKind::MassPoint) => MeasureSpec::MassPoint {
            mass: mass
                .or(preset.and_then(|p| match p.measure() {
                    MeasureSpec::MassPoint { mass } => Some(mass),
                    _ => None,
                }))
                .ok_or_else(|| CliError::usage("--measure masspoint needs --mass"))?,
        },
        Some(MeasureKind::Geometric) => MeasureSpec::GeometricWeight,
        Some(MeasureKind::Verblunsky) => MeasureSpec::Verblunsky {
            alphas: alphas.ok_or_else(|| CliError::usage("--measure verblunsky needs --alphas-file"))?,
        },
    };
    spec.validate().map_err(CliError::from)?;
    Ok(spec)
}

/// Everything a command needs to build and solve `Q_{n;k}(z; ξ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub measure: MeasureSpec,
    pub k: usize,
    pub xi: Complex64,
    pub degrees: Vec<usize>,
    pub format: OutputFormat,
    pub output: Option<std::path::PathBuf>,
    pub tol: f64,
    pub max_iter: usize,
    pub quad_points: usize,
}

impl RunConfig {
    /// Parameters of a preset with default numerics and CSV output.
    pub fn from_preset(preset: Preset) -> Self {
        RunConfig {
            measure: preset.measure(),
            k: preset.k(),
            xi: preset.xi(),
            degrees: preset.degrees(),
            format: OutputFormat::Csv,
            output: None,
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
            quad_points: DEFAULT_QUAD_POINTS,
        }
    }

    /// Checks the invariants: nonempty degree list, positive finite
    /// tolerance, at least one iteration, valid measure and finite pole.
    pub fn validate(&self) -> Result<(), CliError> {
        if self.degrees.is_empty() {
            return Err(CliError::usage("the degree list is empty"));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(CliError::usage(format!("tolerance must be positive, got {}", self.tol)));
        }
        if self.max_iter == 0 {
            return Err(CliError::usage("max iterations must be positive"));
        }
        if !(self.xi.re.is_finite() && self.xi.im.is_finite()) {
            return Err(CliError::usage("pole must be finite"));
        }
        self.measure.validate().map_err(CliError::from)
    }

    pub fn root_options(&self) -> RootOptions {
        RootOptions {
            tol: self.tol,
            max_iter: self.max_iter,
        }
    }
}
