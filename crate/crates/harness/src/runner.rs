use std::collections::{HashMap, HashSet};
use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::time::Instant;

use moeadde_core::indicators::{normalized_hypervolume, NormalizationBounds};
use moeadde_core::moead;
use moeadde_core::problems::ProblemSpec;
use moeadde_core::RandomSource;
use serde_json::json;

use crate::error::{io_err, Result};
use crate::plan::{ExperimentPlan, Task};
use crate::records::{read_records, write_rows, Appender, FailedRun, RecordKey, RunRecord};

pub const RECORDS_FILE: &str = "records.csv";
pub const FAILED_FILE: &str = "failed.csv";
pub const MANIFEST_FILE: &str = "manifest.json";

#[derive(Clone, Debug, PartialEq)]
pub struct RunSummary {
    pub executed: usize,
    pub skipped: usize,
    pub failed: Vec<FailedRun>,
    pub records_path: PathBuf,
}

/// Performs one run and measures its front.
pub fn execute_task(plan: &ExperimentPlan, task: &Task) -> Result<RunRecord> {
    let problem = ProblemSpec::new(task.problem, task.m)?;
    let config = plan.engine_config(&problem, task.config, task.seed)?;
    let start = Instant::now();
    let result = moead::run(&config, &problem)?;
    let hv = normalized_hypervolume(&result.front_objectives(), &NormalizationBounds::for_problem(&problem))?;
    let wall_ms = if plan.record_timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    };
    Ok(RunRecord {
        problem: task.problem.name().to_string(),
        m: task.m,
        config: task.config.to_string(),
        seed: task.seed,
        hv,
        evals: result.diagnostics.evaluations,
        wall_ms,
        fallbacks: result.diagnostics.resample_fallbacks,
    })
}

/// Runs every task of `plan` not yet present in its records file, on
/// `workers` threads.
///
/// Records are appended as runs finish; afterwards the file is rewritten in
/// plan order, so a completed plan always leaves the same bytes behind.
/// Failed runs go to `failed.csv` and are retried on the next call.
pub fn run_experiment(plan: &ExperimentPlan, workers: usize) -> Result<RunSummary> {
    run_with(plan, workers, execute_task)
}

pub(crate) fn run_with<F>(plan: &ExperimentPlan, workers: usize, exec: F) -> Result<RunSummary>
where
    F: Fn(&ExperimentPlan, &Task) -> Result<RunRecord> + Sync,
{
    plan.validate()?;
    let dir = &plan.output_dir;
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    write_manifest(plan, &dir.join(MANIFEST_FILE))?;

    let records_path = dir.join(RECORDS_FILE);
    let done: HashSet<RecordKey> = read_records(&records_path)?.iter().map(RunRecord::key).collect();
    let tasks = plan.tasks();
    let pending: Vec<&Task> = tasks.iter().filter(|t| !done.contains(&task_key(t))).collect();
    let skipped = tasks.len() - pending.len();

    let mut failed = Vec::new();
    let mut executed = 0;
    let mut sink = Appender::open(&records_path)?;
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<(&Task, std::result::Result<RunRecord, String>)>();
    std::thread::scope(|scope| -> Result<()> {
        for _ in 0..workers.max(1).min(pending.len().max(1)) {
            let tx = tx.clone();
            let (next, pending, exec) = (&next, &pending, &exec);
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&task) = pending.get(i) else { break };
                let outcome = match catch_unwind(AssertUnwindSafe(|| exec(plan, task))) {
                    Ok(Ok(record)) => Ok(record),
                    Ok(Err(e)) => Err(e.to_string()),
                    Err(panic) => Err(panic_message(&*panic)),
                };
                if tx.send((task, outcome)).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        for (task, outcome) in rx {
            match outcome {
                Ok(record) => {
                    sink.append(&record)?;
                    executed += 1;
                }
                Err(error) => failed.push(FailedRun {
                    problem: task.problem.name().to_string(),
                    m: task.m,
                    config: task.config.to_string(),
                    seed: task.seed,
                    error,
                }),
            }
        }
        Ok(())
    })?;
    drop(sink);

    canonicalize(&records_path, &tasks)?;
    let failed_path = dir.join(FAILED_FILE);
    if failed.is_empty() {
        if failed_path.exists() {
            fs::remove_file(&failed_path).map_err(io_err(&failed_path))?;
        }
    } else {
        let order: HashMap<RecordKey, usize> = tasks.iter().map(|t| (task_key(t), t.index)).collect();
        failed.sort_by_key(|f| order.get(&failed_key(f)).copied());
        write_rows(&failed_path, &failed)?;
    }
    Ok(RunSummary {
        executed,
        skipped,
        failed,
        records_path,
    })
}

fn task_key(t: &Task) -> RecordKey {
    RecordKey {
        problem: t.problem.name().to_string(),
        m: t.m,
        config: t.config.to_string(),
        seed: t.seed,
    }
}

fn failed_key(f: &FailedRun) -> RecordKey {
    RecordKey {
        problem: f.problem.clone(),
        m: f.m,
        config: f.config.clone(),
        seed: f.seed,
    }
}

/// Sorts the records into plan order (rows from other plans go last, by
/// key) and drops duplicate keys, keeping the first.
fn canonicalize(path: &Path, tasks: &[Task]) -> Result<()> {
    let order: HashMap<RecordKey, usize> = tasks.iter().map(|t| (task_key(t), t.index)).collect();
    let mut seen = HashSet::new();
    let mut rows: Vec<RunRecord> = read_records(path)?
        .into_iter()
        .filter(|r| seen.insert(r.key()))
        .collect();
    rows.sort_by(|a, b| {
        let (ka, kb) = (a.key(), b.key());
        (order.get(&ka).unwrap_or(&usize::MAX), ka).cmp(&(order.get(&kb).unwrap_or(&usize::MAX), kb))
    });
    write_rows(path, &rows)
}

fn write_manifest(plan: &ExperimentPlan, path: &Path) -> Result<()> {
    let manifest = json!({
        "software": { "name": env!("CARGO_PKG_NAME"), "version": env!("CARGO_PKG_VERSION") },
        "random_source": RandomSource::ALGORITHM,
        "seed_derivation": "sha256(\"{base_seed}|{config}|{problem}|M{m}|{run}\")[0..8] little endian",
        "plan": {
            "problems": plan.problems.iter().map(|p| p.name()).collect::<Vec<_>>(),
            "objectives": plan.objectives,
            "configs": plan.configs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "runs": plan.runs,
            "max_evaluations": plan.max_evaluations,
            "base_seed": plan.base_seed,
            "record_timing": plan.record_timing,
            "normalize": plan.normalize,
        },
        "engine": {
            "population": "200/210/220/210 for M = 2/3/4/5",
            "neighborhood_size": 20,
            "delta": 0.9,
            "max_replacements": 2,
            "F": 0.5,
            "CR": 1.0,
            "pm_rate": "1/D",
            "pm_eta": 20.0,
        },
        "tasks": plan.runs * plan.problems.len() * plan.objectives.len() * plan.configs.len(),
    });
    let mut text = serde_json::to_string_pretty(&manifest)?;
    text.push('\n');
    fs::write(path, text).map_err(io_err(path))
}

fn panic_message(panic: &(dyn std::any::Any + Send)) -> String {
    if let Some(s) = panic.downcast_ref::<&str>() {
        format!("panic: {s}")
    } else if let Some(s) = panic.downcast_ref::<String>() {
        format!("panic: {s}")
    } else {
        "panic".to_string()
    }
}
