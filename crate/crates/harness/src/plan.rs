//! Experiment plans and their TOML form.
//!
//! ```toml
//! problems = ["DTLZ1", "WFG4"]        # or "all"
//! objectives = [2, 3]
//! configs = ["#B", "replacement/current1/WR",
//!            { strategy = "rand1", selection = "WOR", repair = "reflection" }]
//! runs = 11
//! max_evaluations = 20000
//! base_seed = 1
//! output_dir = "results/desk"
//! record_timing = true                # optional, default true
//! normalize = true                    # optional, default true
//! ```
//!
//! A config entry may also be `"all"` (the 30 combinations) or `"named"`
//! (`#A`..`#H`). `output_dir` is resolved against the plan file's directory.

use std::path::{Path, PathBuf};

use moeadde_core::moead::MoeadConfig;
use moeadde_core::operators::MutationConfig;
use moeadde_core::problems::{ProblemId, ProblemSpec};
use serde::Deserialize;

use crate::error::{io_err, HarnessError, Result};
use crate::seeds::derive_seed;

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentPlan {
    pub problems: Vec<ProblemId>,
    pub objectives: Vec<usize>,
    pub configs: Vec<MutationConfig>,
    pub runs: usize,
    pub max_evaluations: usize,
    pub base_seed: u64,
    pub output_dir: PathBuf,
    /// Write measured wall time; when false `wall_ms` is 0 so that result
    /// files are byte-identical across fresh executions.
    pub record_timing: bool,
    /// Objective normalization inside the scalarizing comparison.
    pub normalize: bool,
}

/// One independent run of the plan.
#[derive(Clone, Debug, PartialEq)]
pub struct Task {
    /// Position in the plan's canonical order.
    pub index: usize,
    pub problem: ProblemId,
    pub m: usize,
    pub config: MutationConfig,
    pub run: usize,
    pub seed: u64,
}

impl ExperimentPlan {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(HarnessError::Plan(msg));
        if self.problems.is_empty() {
            return fail("no problems".into());
        }
        if self.objectives.is_empty() {
            return fail("no objective counts".into());
        }
        if self.configs.is_empty() {
            return fail("no configurations".into());
        }
        if self.runs == 0 {
            return fail("runs must be at least 1".into());
        }
        for &m in &self.objectives {
            for &id in &self.problems {
                let problem = ProblemSpec::new(id, m)?;
                let config = self.engine_config(&problem, self.configs[0], 0)?;
                config.validate()?;
            }
        }
        Ok(())
    }

    pub fn engine_config(&self, problem: &ProblemSpec, mutation: MutationConfig, seed: u64) -> Result<MoeadConfig> {
        let mut c = MoeadConfig::standard(problem, mutation, self.max_evaluations, seed)?;
        c.normalize = self.normalize;
        Ok(c)
    }

    /// The cartesian product problem x M x config x run, in that nesting.
    pub fn tasks(&self) -> Vec<Task> {
        let mut out = Vec::new();
        for &problem in &self.problems {
            for &m in &self.objectives {
                for &config in &self.configs {
                    for run in 0..self.runs {
                        out.push(Task {
                            index: out.len(),
                            problem,
                            m,
                            config,
                            run,
                            seed: derive_seed(self.base_seed, &config, problem, m, run),
                        });
                    }
                }
            }
        }
        out
    }

    pub fn from_toml(text: &str, base_dir: &Path) -> Result<Self> {
        let raw: PlanFile = toml::from_str(text)?;
        raw.resolve(base_dir)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(io_err(path))?;
        let dir = path.parent().unwrap_or(Path::new("."));
        let plan = Self::from_toml(&text, dir)?;
        plan.validate()?;
        Ok(plan)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PlanFile {
    problems: OneOrMany,
    objectives: Vec<usize>,
    configs: ConfigList,
    runs: usize,
    max_evaluations: usize,
    base_seed: u64,
    output_dir: PathBuf,
    #[serde(default = "yes")]
    record_timing: bool,
    #[serde(default = "yes")]
    normalize: bool,
}

fn yes() -> bool {
    true
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(String),
    Many(Vec<String>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ConfigList {
    One(ConfigEntry),
    Many(Vec<ConfigEntry>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ConfigEntry {
    Text(String),
    Fields { strategy: String, selection: String, repair: String },
}

impl PlanFile {
    fn resolve(self, base_dir: &Path) -> Result<ExperimentPlan> {
        let names = match self.problems {
            OneOrMany::One(s) => vec![s],
            OneOrMany::Many(v) => v,
        };
        let mut problems = Vec::new();
        for name in names {
            if name.eq_ignore_ascii_case("all") {
                problems.extend(ProblemId::ALL);
            } else {
                problems.push(name.parse()?);
            }
        }
        let entries = match self.configs {
            ConfigList::One(e) => vec![e],
            ConfigList::Many(v) => v,
        };
        let mut configs = Vec::new();
        for entry in entries {
            match entry {
                ConfigEntry::Text(s) if s.eq_ignore_ascii_case("all") => configs.extend(MutationConfig::all()),
                ConfigEntry::Text(s) if s.eq_ignore_ascii_case("named") => {
                    configs.extend(MutationConfig::NAMED.iter().map(|(_, c)| *c))
                }
                ConfigEntry::Text(s) => configs.push(s.parse()?),
                ConfigEntry::Fields { strategy, selection, repair } => {
                    configs.push(MutationConfig::from_fields(&strategy, &selection, &repair)?)
                }
            }
        }
        dedup_in_order(&mut problems);
        dedup_in_order(&mut configs);
        let mut objectives = self.objectives;
        dedup_in_order(&mut objectives);
        Ok(ExperimentPlan {
            problems,
            objectives,
            configs,
            runs: self.runs,
            max_evaluations: self.max_evaluations,
            base_seed: self.base_seed,
            output_dir: base_dir.join(self.output_dir),
            record_timing: self.record_timing,
            normalize: self.normalize,
        })
    }
}

fn dedup_in_order<T: PartialEq + Clone>(v: &mut Vec<T>) {
    let mut out: Vec<T> = Vec::with_capacity(v.len());
    for x in v.drain(..) {
        if !out.contains(&x) {
            out.push(x);
        }
    }
    *v = out;
}
