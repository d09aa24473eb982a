//! Command-line front end for `polarzeros`: builds families and polar
//! polynomials from flags, reports their zeros and bounds, and sweeps
//! degrees to produce Sendov tables and zero scatter datasets.

pub mod app;
pub mod config;
pub mod error;
pub mod output;
pub mod svg;
pub mod sweep;

pub use config::{OutputFormat, Preset, RunConfig, Window};
pub use error::CliError;
pub use svg::{render_svg_scatter, Guide};
pub use sweep::{reproduce_sendov_table, zero_scatter_dataset, ScatterSeries, TableRow};
