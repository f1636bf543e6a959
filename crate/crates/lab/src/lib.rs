//! Figure sweeps, CSV output and verification for `bispinor-core`.

pub mod config;
pub mod error;
pub mod sweep;
pub mod table;
pub mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

pub use config::{ConfigOverrides, Grid, Scenario, ScenarioConfig};
pub use error::{LabError, Result};
pub use table::Table;

/// Writes a table to `path`, or to standard output for `-`.
pub fn write_table(table: &Table, path: &Path) -> Result<()> {
    if path == Path::new("-") {
        let stdout = io::stdout();
        return table.write_csv(stdout.lock()).map_err(|e| LabError::io(path, e));
    }
    let file = File::create(path).map_err(|e| LabError::io(path, e))?;
    let mut out = BufWriter::new(file);
    table.write_csv(&mut out).and_then(|_| out.flush()).map_err(|e| LabError::io(path, e))
}
