//! Argument definitions and command dispatch for the `polarzeros` binary.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use polarzeros::localize::bound_report_with;
use polarzeros::opuc::{orthogonality_residual, DEFAULT_QUAD_POINTS};
use polarzeros::polar::ode_residual;
use polarzeros::roots::{DEFAULT_MAX_ITER, DEFAULT_TOL};
use polarzeros::{
    build_family, containment_report, polar_disk_radius, Complex64, MeasureSpec, SendovMetric,
};
use serde::Serialize;

use crate::config::{
    parse_alphas, parse_complex, parse_degrees, resolve_measure, MeasureKind, OutputFormat, Preset,
    RunConfig, Window,
};
use crate::error::CliError;
use crate::output;
use crate::svg::{render_svg_scatter, Guide};
use crate::sweep::{build_polar, reproduce_sendov_table, zero_scatter_dataset};

#[derive(Debug, Parser)]
#[command(
    name = "polarzeros",
    version,
    about = "Orthogonal polynomials on the unit circle, their k-polar polynomials and the location of their zeros",
    after_help = "Exit codes: 0 success, 1 I/O error, 2 invalid flags, 3 numerical failure, 4 bound violation (bounds --assert)."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients of the monic orthogonal polynomial L_n.
    Family(FamilyArgs),
    /// Coefficients of the k-polar polynomial Q_{n;k}(z; xi).
    Polar(PolyArgs),
    /// Zeros of Q_{n;k}(z; xi) with their polar disk verdicts.
    Roots(PolyArgs),
    /// Every localization bound for the zeros of Q_{n;k}(z; xi).
    Bounds(BoundsArgs),
    /// Tables over a range of degrees.
    #[command(subcommand)]
    Table(TableCommand),
    /// Figure datasets.
    #[command(subcommand)]
    Figure(FigureCommand),
}

#[derive(Debug, Subcommand)]
pub enum TableCommand {
    /// Largest zero to critical point distance of Q_{n;k} for each degree.
    Sendov(TableArgs),
}

#[derive(Debug, Subcommand)]
pub enum FigureCommand {
    /// Zeros of Q_{n;k} for each degree, as CSV, JSON or an SVG scatter plot.
    Zeros(FigureArgs),
}

/// Degree list flag value, e.g. `2-20` or `10,20,30,40`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degrees(pub Vec<usize>);

impl FromStr for Degrees {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        parse_degrees(s).map(Degrees)
    }
}

#[derive(Debug, Clone, Args)]
pub struct MeasureArgs {
    /// Measure family: bs, masspoint, geometric or verblunsky.
    #[arg(long)]
    pub measure: Option<MeasureKind>,
    /// Bernstein-Szegő parameter as re,im (|beta| < 1).
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub beta: Option<Complex64>,
    /// Mass of the point mass at z = 1.
    #[arg(long)]
    pub mass: Option<f64>,
    /// JSON list of Verblunsky coefficients alpha_1, alpha_2, ... as [re, im] pairs.
    #[arg(long)]
    pub alphas_file: Option<PathBuf>,
    /// Reference parameter set: table1, table2, table3, table4, fig1 or fig2.
    /// Explicit flags override its values.
    #[arg(long)]
    pub preset: Option<Preset>,
}

#[derive(Debug, Clone, Args)]
pub struct PoleArgs {
    /// Polar order k (0 gives L_n itself).
    #[arg(long)]
    pub k: Option<usize>,
    /// Pole xi as re,im.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub xi: Option<Complex64>,
}

#[derive(Debug, Clone, Args)]
pub struct NumericArgs {
    /// Root finder tolerance on corrections and scaled residuals.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Root finder iteration cap.
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    pub max_iter: usize,
    /// Trapezoid nodes for orthogonality checks.
    #[arg(long, default_value_t = DEFAULT_QUAD_POINTS)]
    pub quad_points: usize,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output format: json, csv or svg (not every command supports all three).
    #[arg(long)]
    pub format: Option<OutputFormat>,
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[command(flatten)]
    pub measure: MeasureArgs,
    /// Degree n.
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub numeric: NumericArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct PolyArgs {
    #[command(flatten)]
    pub measure: MeasureArgs,
    #[command(flatten)]
    pub pole: PoleArgs,
    /// Degree n.
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub numeric: NumericArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub poly: PolyArgs,
    /// Exit with status 4 if any zero or critical point violates a bound.
    #[arg(long)]
    pub assert: bool,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub measure: MeasureArgs,
    #[command(flatten)]
    pub pole: PoleArgs,
    /// Degrees, e.g. 2-20 or 5,10,20 (ranges inclusive).
    #[arg(long, alias = "n")]
    pub degrees: Option<Degrees>,
    /// Distance of a zero to the critical set: farthest (max over critical
    /// points) or nearest (min over critical points).
    #[arg(long, default_value = "farthest")]
    pub metric: SendovMetric,
    #[command(flatten)]
    pub numeric: NumericArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct FigureArgs {
    #[command(flatten)]
    pub measure: MeasureArgs,
    #[command(flatten)]
    pub pole: PoleArgs,
    /// Degrees, e.g. 10,20,30,40 or 5-8 (ranges inclusive).
    #[arg(long, alias = "n")]
    pub degrees: Option<Degrees>,
    /// SVG plot window as x_min,x_max,y_min,y_max.
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<Window>,
    #[command(flatten)]
    pub numeric: NumericArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

fn read_alphas(path: &Path) -> Result<Vec<Complex64>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::io(format!("reading {}", path.display()), e))?;
    parse_alphas(&text).map_err(CliError::Usage)
}

fn measure_spec(m: &MeasureArgs) -> Result<MeasureSpec, CliError> {
    let alphas = m.alphas_file.as_deref().map(read_alphas).transpose()?;
    resolve_measure(m.measure, m.beta, m.mass, alphas, m.preset)
}

fn run_config(
    measure: &MeasureArgs,
    pole: Option<&PoleArgs>,
    degrees: Vec<usize>,
    numeric: &NumericArgs,
    out: &OutputArgs,
    default_format: OutputFormat,
) -> Result<RunConfig, CliError> {
    let preset = measure.preset;
    let cfg = RunConfig {
        measure: measure_spec(measure)?,
        k: pole.and_then(|p| p.k).or(preset.map(Preset::k)).unwrap_or(1),
        xi: pole
            .and_then(|p| p.xi)
            .or(preset.map(Preset::xi))
            .unwrap_or(Complex64::new(0.0, 0.0)),
        degrees,
        format: out.format.unwrap_or(default_format),
        output: out.output.clone(),
        tol: numeric.tol,
        max_iter: numeric.max_iter,
        quad_points: numeric.quad_points,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn sweep_degrees(flag: &Option<Degrees>, preset: Option<Preset>) -> Result<Vec<usize>, CliError> {
    match (flag, preset) {
        (Some(d), _) => Ok(d.0.clone()),
        (None, Some(p)) => Ok(p.degrees()),
        (None, None) => Err(CliError::usage("no degrees given (use --degrees or --preset)")),
    }
}

fn unsupported(cmd: &str, format: OutputFormat) -> CliError {
    CliError::usage(format!("{cmd} does not support --format {format}"))
}

fn emit(cfg: &RunConfig, text: &str) -> Result<(), CliError> {
    match &cfg.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::io(format!("writing {}", path.display()), e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::io("writing standard output", e))
        }
    }
}

#[derive(Serialize)]
struct FamilyDoc<'a> {
    measure: &'a MeasureSpec,
    n: usize,
    polynomial: &'a polarzeros::ComplexPoly,
    verblunsky: Vec<Complex64>,
    orthogonality_residual: f64,
}

fn family(args: &FamilyArgs) -> Result<(), CliError> {
    let cfg = run_config(&args.measure, None, vec![args.n], &args.numeric, &args.out, OutputFormat::Json)?;
    let n = args.n;
    let l = build_family(&cfg.measure, n).map_err(|e| CliError::at_degree(n, e))?;
    let text = match cfg.format {
        OutputFormat::Json => {
            let verblunsky = (1..=n)
                .map(|j| cfg.measure.verblunsky(j))
                .collect::<Result<Vec<_>, _>>()?;
            let mut orth = 0.0f64;
            for j in 0..n {
                orth = orth.max(orthogonality_residual(&cfg.measure, n, j, cfg.quad_points)?);
            }
            output::json_text(&FamilyDoc {
                measure: &cfg.measure,
                n,
                polynomial: &l,
                verblunsky,
                orthogonality_residual: orth,
            })?
        }
        OutputFormat::Csv => output::coeffs_csv(&l),
        f => return Err(unsupported("family", f)),
    };
    emit(&cfg, &text)
}

fn poly_config(args: &PolyArgs) -> Result<RunConfig, CliError> {
    run_config(&args.measure, Some(&args.pole), vec![args.n], &args.numeric, &args.out, OutputFormat::Json)
}

#[derive(Serialize)]
struct PolarDoc<'a> {
    measure: &'a MeasureSpec,
    n: usize,
    k: usize,
    xi: Complex64,
    polynomial: &'a polarzeros::ComplexPoly,
    ode_residual: f64,
    polar_disk_radius: f64,
}

fn polar(args: &PolyArgs) -> Result<(), CliError> {
    let cfg = poly_config(args)?;
    let (l, q) = build_polar(&cfg, args.n)?;
    let text = match cfg.format {
        OutputFormat::Json => output::json_text(&PolarDoc {
            measure: &cfg.measure,
            n: args.n,
            k: cfg.k,
            xi: cfg.xi,
            polynomial: &q,
            ode_residual: ode_residual(&l, &q, polarzeros::PolarParams::new(cfg.xi, cfg.k)),
            polar_disk_radius: polar_disk_radius(cfg.xi, cfg.k),
        })?,
        OutputFormat::Csv => output::coeffs_csv(&q),
        f => return Err(unsupported("polar", f)),
    };
    emit(&cfg, &text)
}

#[derive(Serialize)]
struct RootsDoc<'a> {
    measure: &'a MeasureSpec,
    n: usize,
    k: usize,
    xi: Complex64,
    roots: &'a polarzeros::RootSet,
    containment: polarzeros::Containment,
}

fn roots(args: &PolyArgs) -> Result<(), CliError> {
    let cfg = poly_config(args)?;
    let n = args.n;
    let (_, q) = build_polar(&cfg, n)?;
    let rs = cfg.root_options().find(&q).map_err(|e| CliError::at_degree(n, e))?;
    let containment = containment_report(&rs, cfg.xi, cfg.k);
    let text = match cfg.format {
        OutputFormat::Json => output::json_text(&RootsDoc {
            measure: &cfg.measure,
            n,
            k: cfg.k,
            xi: cfg.xi,
            roots: &rs,
            containment,
        })?,
        OutputFormat::Csv => output::roots_csv(n, &rs, containment.radius),
        OutputFormat::Svg => {
            let label = format!("degree {n}");
            let points: Vec<(String, Complex64)> = rs.roots.iter().map(|&z| (label.clone(), z)).collect();
            let window = args
                .measure
                .preset
                .and_then(|p| p.window(cfg.xi))
                .unwrap_or_else(|| Window::around(&rs.roots));
            render_svg_scatter(&points, window, &guides(&cfg))
        }
    };
    emit(&cfg, &text)
}

#[derive(Serialize)]
struct BoundsDoc<'a> {
    measure: &'a MeasureSpec,
    n: usize,
    k: usize,
    xi: Complex64,
    report: &'a polarzeros::BoundReport,
    violations: usize,
    pass: bool,
}

fn bounds(args: &BoundsArgs) -> Result<(), CliError> {
    let p = &args.poly;
    let cfg = poly_config(p)?;
    let n = p.n;
    let (_, q) = build_polar(&cfg, n)?;
    let opts = cfg.root_options();
    let rs = opts.find(&q).map_err(|e| CliError::at_degree(n, e))?;
    let report = bound_report_with(&q, &rs, cfg.xi, cfg.k, &opts).map_err(|e| CliError::at_degree(n, e))?;
    let violations = report.violations();
    let text = match cfg.format {
        OutputFormat::Json => output::json_text(&BoundsDoc {
            measure: &cfg.measure,
            n,
            k: cfg.k,
            xi: cfg.xi,
            report: &report,
            violations,
            pass: violations == 0,
        })?,
        OutputFormat::Csv => output::bounds_csv(&report),
        f => return Err(unsupported("bounds", f)),
    };
    emit(&cfg, &text)?;
    if args.assert && violations > 0 {
        return Err(CliError::Violation(violations));
    }
    Ok(())
}

#[derive(Serialize)]
struct TableDoc<'a> {
    measure: &'a MeasureSpec,
    k: usize,
    xi: Complex64,
    metric: SendovMetric,
    rows: &'a [crate::sweep::TableRow],
}

fn table_sendov(args: &TableArgs) -> Result<(), CliError> {
    let degrees = sweep_degrees(&args.degrees, args.measure.preset)?;
    let cfg = run_config(&args.measure, Some(&args.pole), degrees, &args.numeric, &args.out, OutputFormat::Csv)?;
    if cfg.format == OutputFormat::Svg {
        return Err(unsupported("table sendov", cfg.format));
    }
    let rows = reproduce_sendov_table(&cfg, args.metric)?;
    let text = match cfg.format {
        OutputFormat::Csv => output::table_csv(&rows),
        _ => output::json_text(&TableDoc {
            measure: &cfg.measure,
            k: cfg.k,
            xi: cfg.xi,
            metric: args.metric,
            rows: &rows,
        })?,
    };
    emit(&cfg, &text)
}

/// Unit circle and the polar disk `|z| <= |ξ| + (k+1)(1+|ξ|)`.
fn guides(cfg: &RunConfig) -> Vec<Guide> {
    let origin = Complex64::new(0.0, 0.0);
    vec![
        Guide::new("unit circle", origin, 1.0),
        Guide::new("polar disk", origin, polar_disk_radius(cfg.xi, cfg.k)),
    ]
}

#[derive(Serialize)]
struct FigureDoc<'a> {
    measure: &'a MeasureSpec,
    k: usize,
    xi: Complex64,
    datasets: &'a [crate::sweep::ScatterSeries],
}

fn figure_zeros(args: &FigureArgs) -> Result<(), CliError> {
    let degrees = sweep_degrees(&args.degrees, args.measure.preset)?;
    let cfg = run_config(&args.measure, Some(&args.pole), degrees, &args.numeric, &args.out, OutputFormat::Csv)?;
    let data = zero_scatter_dataset(&cfg)?;
    let text = match cfg.format {
        OutputFormat::Csv => output::scatter_csv(&data),
        OutputFormat::Json => output::json_text(&FigureDoc {
            measure: &cfg.measure,
            k: cfg.k,
            xi: cfg.xi,
            datasets: &data,
        })?,
        OutputFormat::Svg => {
            let points: Vec<(String, Complex64)> = data
                .iter()
                .flat_map(|s| {
                    let label = format!("degree {}", s.degree);
                    s.roots.roots.iter().map(move |&z| (label.clone(), z))
                })
                .collect();
            let window = args
                .window
                .or_else(|| args.measure.preset.and_then(|p| p.window(cfg.xi)))
                .unwrap_or_else(|| {
                    let all: Vec<Complex64> = points.iter().map(|(_, z)| *z).collect();
                    Window::around(&all)
                });
            render_svg_scatter(&points, window, &guides(&cfg))
        }
    };
    emit(&cfg, &text)
}

/// Executes one parsed command line.
pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Family(a) => family(a),
        Command::Polar(a) => polar(a),
        Command::Roots(a) => roots(a),
        Command::Bounds(a) => bounds(a),
        Command::Table(TableCommand::Sendov(a)) => table_sendov(a),
        Command::Figure(FigureCommand::Zeros(a)) => figure_zeros(a),
    }
}
