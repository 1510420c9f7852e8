//! Experiment orchestration for `moeadde-core`: TOML plans, seeded
//! parallel runs with durable CSV records, and APS ranking reports.

mod error;
pub mod front;
pub mod plan;
pub mod records;
pub mod report;
pub mod runner;
pub mod seeds;

pub use error::{HarnessError, Result};
pub use plan::{ExperimentPlan, Task};
pub use records::{read_records, FailedRun, RecordKey, RunRecord};
pub use report::{format_cell, report_aps, Grouping, ProblemType, ReportTable};
pub use runner::{execute_task, run_experiment, RunSummary, FAILED_FILE, MANIFEST_FILE, RECORDS_FILE};
pub use seeds::derive_seed;
