//! Random-graph sweeps, average energies, growth tables and their output.

mod average;
mod growth;
mod plot;
mod sweep;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};

pub use average::{
    average_from_graph6, average_over, average_square_energies, AverageRow, AverageTable,
};
pub use growth::{ratio_growth_study, GrowthRow, GrowthStudy};
pub use plot::{energy_by_p_chart, s_minus_bounds_chart, LineChart, Series};
pub use sweep::{
    almost_all_check, parse_p_grid, random_sweep, sample_seed, splitmix64, AlmostAllStats, SweepRow,
};

/// Write rows as CSV with a header taken from the field order.
pub fn write_csv<T: Serialize, W: Write>(rows: &[T], writer: W) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::Empty("no rows to write"));
    }
    let mut w = csv::Writer::from_writer(writer);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn emit_csv<T: Serialize>(rows: &[T], path: &Path) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::Empty("no rows to write"));
    }
    write_csv(rows, BufWriter::new(File::create(path)?))
}

/// Which chart to draw from sweep rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlotKind {
    /// Mean `s⁺` and `s⁻` against `p`.
    EnergyByP,
    /// Mean `s⁻` against mean `m`, with its upper bounds.
    SMinusBounds,
}

pub fn emit_svg_plot(rows: &[SweepRow], kind: PlotKind, path: &Path) -> Result<()> {
    let chart = match kind {
        PlotKind::EnergyByP => energy_by_p_chart(rows)?,
        PlotKind::SMinusBounds => s_minus_bounds_chart(rows)?,
    };
    std::fs::write(path, chart.to_svg())?;
    Ok(())
}
