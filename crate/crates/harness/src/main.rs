use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use moeadde_core::operators::MutationConfig;
use moeadde_core::problems::ProblemSpec;
use moeadde_harness::{front, read_records, report_aps, run_experiment, ExperimentPlan, Grouping};

#[derive(Parser)]
#[command(name = "moeadde", version, about = "MOEA/D-DE experiments with pluggable DE mutation components")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute (or resume) an experiment plan.
    Run {
        #[arg(long)]
        plan: PathBuf,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// APS tables from a records file.
    Report {
        #[arg(long)]
        records: PathBuf,
        /// M, problem-type or problem.
        #[arg(long = "group-by", default_value = "M")]
        group_by: String,
    },
    /// The 30 mutation configurations.
    ListConfigs,
    /// Normalized hypervolume of a front stored as CSV rows of objectives.
    Hv {
        #[arg(long)]
        front: PathBuf,
        /// Problem key such as WFG4/M3.
        #[arg(long)]
        problem: String,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Run { plan, workers } => {
            let plan = ExperimentPlan::load(&plan)?;
            let summary = run_experiment(&plan, workers)?;
            println!(
                "{} runs executed, {} already recorded, {} failed -> {}",
                summary.executed,
                summary.skipped,
                summary.failed.len(),
                summary.records_path.display()
            );
            for f in &summary.failed {
                eprintln!("failed: {}/M{} {} seed {}: {}", f.problem, f.m, f.config, f.seed, f.error);
            }
            Ok(if summary.failed.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Report { records, group_by } => {
            let grouping: Grouping = group_by.parse()?;
            let rows = read_records(&records)?;
            let table = report_aps(&rows, grouping)?;
            for w in &table.warnings {
                eprintln!("warning: {w}");
            }
            print!("{table}");
            Ok(ExitCode::SUCCESS)
        }
        Command::ListConfigs => {
            for c in MutationConfig::all() {
                match c.label() {
                    Some(label) => println!("{c}\t{label}"),
                    None => println!("{c}"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hv { front: path, problem } => {
            let problem = ProblemSpec::from_key(&problem)?;
            let points = front::read_front(&path)?;
            println!("{}", front::front_hypervolume(&points, &problem)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}
