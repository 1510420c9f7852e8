use std::path::Path;

use moeadde_core::indicators::{normalized_hypervolume, NormalizationBounds};
use moeadde_core::problems::ProblemSpec;
use moeadde_core::nondominated_filter;

use crate::error::{csv_err, HarnessError, Result};

/// Reads objective vectors, one per row. A first row that does not parse
/// as numbers is taken as a header.
pub fn read_front(path: &Path) -> Result<Vec<Vec<f64>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(csv_err(path))?;
    let mut out = Vec::new();
    for (i, row) in reader.records().enumerate() {
        let row = row.map_err(csv_err(path))?;
        let parsed: std::result::Result<Vec<f64>, _> = row.iter().map(str::parse::<f64>).collect();
        match parsed {
            Ok(v) => out.push(v),
            Err(_) if i == 0 => continue,
            Err(e) => {
                return Err(HarnessError::Plan(format!("{}: row {}: {e}", path.display(), i + 1)));
            }
        }
    }
    Ok(out)
}

/// Normalized hypervolume of the nondominated part of `front` on `problem`.
pub fn front_hypervolume(front: &[Vec<f64>], problem: &ProblemSpec) -> Result<f64> {
    let front = nondominated_filter(front)?;
    Ok(normalized_hypervolume(&front, &NormalizationBounds::for_problem(problem))?)
}
