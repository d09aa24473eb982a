//! CSV and JSON encoders.
//!
//! CSV files have a header row, `,` separators, `.` decimals, LF line
//! endings and floats at 17 significant digits.

use polarzeros::json::format_f64;
use polarzeros::{BoundReport, ComplexPoly, RootSet};
use serde::Serialize;

use crate::error::CliError;
use crate::sweep::{ScatterSeries, TableRow};

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let write = |w: &mut csv::Writer<Vec<u8>>, rec: &[String]| {
        w.write_record(rec).expect("writing to memory cannot fail");
    };
    write(&mut w, &header.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    for row in rows {
        write(&mut w, &row);
    }
    let bytes = w.into_inner().expect("flushing to memory cannot fail");
    String::from_utf8(bytes).expect("CSV fields are ASCII")
}

pub fn table_csv(rows: &[TableRow]) -> String {
    csv_text(
        &["n", "zero_re", "zero_im", "distance"],
        rows.iter().map(|r| {
            vec![
                r.n.to_string(),
                format_f64(r.zero.re),
                format_f64(r.zero.im),
                format_f64(r.distance),
            ]
        }),
    )
}

pub fn scatter_csv(series: &[ScatterSeries]) -> String {
    csv_text(
        &["degree", "re", "im"],
        series.iter().flat_map(|s| {
            s.roots
                .roots
                .iter()
                .map(move |z| vec![s.degree.to_string(), format_f64(z.re), format_f64(z.im)])
        }),
    )
}

/// Root rows with the polar disk verdict of each root.
pub fn roots_csv(degree: usize, rs: &RootSet, disk_radius: f64) -> String {
    csv_text(
        &["degree", "re", "im", "inside_disk"],
        rs.roots.iter().map(|z| {
            vec![
                degree.to_string(),
                format_f64(z.re),
                format_f64(z.im),
                (z.norm() <= disk_radius + polarzeros::localize::CONTAINMENT_TOL).to_string(),
            ]
        }),
    )
}

pub fn coeffs_csv(p: &ComplexPoly) -> String {
    csv_text(
        &["power", "re", "im"],
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| vec![i.to_string(), format_f64(c.re), format_f64(c.im)]),
    )
}

pub fn bounds_csv(report: &BoundReport) -> String {
    csv_text(
        &["re", "im", "modulus", "inside_disk", "inside_ring"],
        report.per_root_verdicts.iter().map(|v| {
            vec![
                format_f64(v.root.re),
                format_f64(v.root.im),
                format_f64(v.root.norm()),
                v.inside_disk.to_string(),
                v.inside_ring.to_string(),
            ]
        }),
    )
}

/// Pretty JSON with 17-digit floats and a trailing newline.
pub fn json_text<T: Serialize + ?Sized>(value: &T) -> Result<String, CliError> {
    let mut s = polarzeros::json::to_string_pretty(value)
        .map_err(|e| CliError::io("serializing JSON", e.into()))?;
    s.push('\n');
    Ok(s)
}
