use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Destination chosen by `--out`, or standard output.
pub fn sink(out: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Write rows as CSV (header included unless `header` is false) or as a
/// JSON array. Empty input yields no CSV output and `[]` in JSON.
pub fn write_rows<T: Serialize>(
    rows: &[T],
    format: Format,
    header: bool,
    w: &mut dyn Write,
) -> Result<(), String> {
    match format {
        Format::Csv => {
            let mut csv = csv::WriterBuilder::new()
                .has_headers(header)
                .from_writer(&mut *w);
            for r in rows {
                csv.serialize(r).map_err(|e| e.to_string())?;
            }
            csv.flush().map_err(|e| e.to_string())?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *w, rows).map_err(|e| e.to_string())?;
            writeln!(w).map_err(|e| e.to_string())?;
        }
    }
    w.flush().map_err(|e| e.to_string())
}
