use std::fs::{self, File, OpenOptions};
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{csv_err, io_err, Result};

/// One finished run. Column order is the CSV header.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub problem: String,
    #[serde(rename = "M")]
    pub m: usize,
    pub config: String,
    pub seed: u64,
    /// Normalized hypervolume of the final nondominated front.
    pub hv: f64,
    pub evals: usize,
    pub wall_ms: u64,
    /// Resampling repairs that hit the retry cap.
    pub fallbacks: u64,
}

/// Identifies a record; replays skip rows whose key already exists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RecordKey {
    pub problem: String,
    pub m: usize,
    pub config: String,
    pub seed: u64,
}

impl RunRecord {
    pub fn key(&self) -> RecordKey {
        RecordKey {
            problem: self.problem.clone(),
            m: self.m,
            config: self.config.clone(),
            seed: self.seed,
        }
    }
}

/// A run that panicked or returned an error.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FailedRun {
    pub problem: String,
    #[serde(rename = "M")]
    pub m: usize,
    pub config: String,
    pub seed: u64,
    pub error: String,
}

pub fn read_records(path: &Path) -> Result<Vec<RunRecord>> {
    read_rows(path)
}

pub(crate) fn read_rows<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<Vec<T>> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let mut reader = csv::Reader::from_path(path).map_err(csv_err(path))?;
    reader
        .deserialize()
        .collect::<std::result::Result<Vec<T>, _>>()
        .map_err(csv_err(path))
}

/// Appends rows to a CSV file, writing the header only when the file is
/// new. Each row is flushed to disk before `append` returns.
pub(crate) struct Appender {
    file: File,
    path: std::path::PathBuf,
    header_pending: bool,
}

impl Appender {
    pub fn open(path: &Path) -> Result<Self> {
        let header_pending = fs::metadata(path).map(|m| m.len() == 0).unwrap_or(true);
        let file = OpenOptions::new().create(true).append(true).open(path).map_err(io_err(path))?;
        Ok(Self {
            file,
            path: path.to_path_buf(),
            header_pending,
        })
    }

    pub fn append<T: Serialize>(&mut self, row: &T) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .has_headers(self.header_pending)
            .from_writer(Vec::new());
        w.serialize(row).map_err(csv_err(&self.path))?;
        let bytes = w.into_inner().map_err(|e| io_err(&self.path)(e.into_error()))?;
        self.file.write_all(&bytes).map_err(io_err(&self.path))?;
        self.file.sync_data().map_err(io_err(&self.path))?;
        self.header_pending = false;
        Ok(())
    }
}

/// Rewrites `path` to hold exactly `rows`, via a temporary file and rename.
pub(crate) fn write_rows<T: Serialize>(path: &Path, rows: &[T]) -> Result<()> {
    let tmp = path.with_extension("csv.tmp");
    {
        let mut w = csv::Writer::from_path(&tmp).map_err(csv_err(&tmp))?;
        for r in rows {
            w.serialize(r).map_err(csv_err(&tmp))?;
        }
        w.flush().map_err(io_err(&tmp))?;
    }
    fs::rename(&tmp, path).map_err(io_err(path))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(seed: u64, hv: f64) -> RunRecord {
        RunRecord {
            problem: "WFG4".into(),
            m: 3,
            config: "replacement/current1/WR".into(),
            seed,
            hv,
            evals: 1000,
            wall_ms: 0,
            fallbacks: 0,
        }
    }

    #[test]
    fn append_then_read_round_trips_exactly() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("records.csv");
        let rows = [record(1, 0.1 + 0.2), record(u64::MAX, 1.0 / 3.0)];
        for r in &rows {
            Appender::open(&path).unwrap().append(r).unwrap();
        }
        let text = fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("problem,M,config,seed,hv,evals,wall_ms,fallbacks\n"));
        assert_eq!(text.lines().count(), 3);
        assert_eq!(read_records(&path).unwrap(), rows);
    }

    #[test]
    fn rewrite_replaces_contents() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("records.csv");
        write_rows(&path, &[record(1, 0.5), record(2, 0.25)]).unwrap();
        write_rows(&path, &[record(2, 0.25)]).unwrap();
        assert_eq!(read_records(&path).unwrap(), vec![record(2, 0.25)]);
        assert!(read_records(&dir.path().join("missing.csv")).unwrap().is_empty());
    }
}
