use std::fs;
use std::path::Path;

use moeadde_harness::{read_records, report_aps, run_experiment, ExperimentPlan, Grouping, RunRecord, RECORDS_FILE};

fn small_plan(dir: &Path) -> ExperimentPlan {
    let text = r##"
problems = ["DTLZ1", "WFG4"]
objectives = [2]
configs = ["#B"]
runs = 3
max_evaluations = 1000
base_seed = 5
output_dir = "out"
record_timing = false
"##;
    ExperimentPlan::from_toml(text, dir).unwrap()
}

#[test]
fn small_plan_writes_one_record_per_run() {
    let dir = tempfile::tempdir().unwrap();
    let plan = small_plan(dir.path());
    assert_eq!(plan.configs.len(), 1);
    assert_eq!(plan.configs[0].to_string(), "replacement/current1/WPR");
    let summary = run_experiment(&plan, 2).unwrap();
    assert_eq!(summary.executed, 6);
    assert!(summary.failed.is_empty());
    let records = read_records(&summary.records_path).unwrap();
    assert_eq!(records.len(), 6);
    for r in &records {
        assert_eq!(r.evals, 1000);
        assert_eq!(r.m, 2);
        assert!((0.0..=1.0).contains(&r.hv), "{r:?}");
    }
    let problems: Vec<&str> = records.iter().map(|r| r.problem.as_str()).collect();
    assert_eq!(problems, ["DTLZ1", "DTLZ1", "DTLZ1", "WFG4", "WFG4", "WFG4"]);
}

#[test]
fn replay_is_byte_identical_and_resume_skips() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let sa = run_experiment(&small_plan(a.path()), 1).unwrap();
    let sb = run_experiment(&small_plan(b.path()), 3).unwrap();
    let bytes_a = fs::read(&sa.records_path).unwrap();
    assert_eq!(bytes_a, fs::read(&sb.records_path).unwrap());

    let again = run_experiment(&small_plan(a.path()), 2).unwrap();
    assert_eq!((again.executed, again.skipped), (0, 6));
    assert_eq!(bytes_a, fs::read(&sa.records_path).unwrap());
}

#[test]
fn interrupted_run_resumes_to_the_same_file() {
    let full = tempfile::tempdir().unwrap();
    let part = tempfile::tempdir().unwrap();
    let s = run_experiment(&small_plan(full.path()), 1).unwrap();
    let expected = fs::read_to_string(&s.records_path).unwrap();

    // Keep the header and two rows, as if the process died mid-way.
    let out = part.path().join("out");
    fs::create_dir_all(&out).unwrap();
    let truncated: Vec<&str> = expected.lines().take(3).collect();
    fs::write(out.join(RECORDS_FILE), truncated.join("\n") + "\n").unwrap();
    let resumed = run_experiment(&small_plan(part.path()), 2).unwrap();
    assert_eq!((resumed.executed, resumed.skipped), (4, 2));
    assert_eq!(fs::read_to_string(out.join(RECORDS_FILE)).unwrap(), expected);
}

fn record(problem: &str, config: &str, seed: u64, hv: f64) -> RunRecord {
    RunRecord {
        problem: problem.into(),
        m: 2,
        config: config.into(),
        seed,
        hv,
        evals: 100,
        wall_ms: 0,
        fallbacks: 0,
    }
}

#[test]
fn report_over_synthetic_records() {
    // Config a always wins clearly on DTLZ2, the two tie on WFG9.
    let mut rows = Vec::new();
    for s in 0..8u64 {
        let jitter = s as f64 * 1e-3;
        rows.push(record("DTLZ2", "replacement/current1/WR", s, 0.9 + jitter));
        rows.push(record("DTLZ2", "reflection/rand1/WOR", s, 0.5 + jitter));
        rows.push(record("WFG9", "replacement/current1/WR", s, 0.7 + jitter));
        rows.push(record("WFG9", "reflection/rand1/WOR", s, 0.7 + jitter));
    }
    let t = report_aps(&rows, Grouping::Problem).unwrap();
    assert_eq!(t.groups, ["DTLZ2", "WFG9"]);
    assert_eq!(t.aps[0], [Some(0.0), Some(0.0)]);
    assert_eq!(t.aps[1], [Some(1.0), Some(0.0)]);
    assert_eq!(t.ranks[0], [Some(1), Some(1)]);
    assert_eq!(t.ranks[1], [Some(2), Some(1)]);
    assert_eq!(t.average_rank, [Some(1.0), Some(1.5)]);

    let by_type = report_aps(&rows, Grouping::ProblemType).unwrap();
    // DTLZ2 is unimodal and separable, WFG9 multimodal and nonseparable.
    assert_eq!(by_type.aps[1], [Some(1.0), Some(0.0), Some(1.0), Some(0.0)]);
    let text = by_type.to_string();
    assert!(text.contains("1.00 (2)"), "{text}");
}

#[test]
fn report_marks_gaps() {
    let mut rows = Vec::new();
    for s in 0..4u64 {
        rows.push(record("DTLZ2", "replacement/current1/WR", s, 0.9));
        rows.push(record("DTLZ2", "reflection/rand1/WOR", s, 0.8));
    }
    rows.push(record("DTLZ1", "replacement/current1/WR", 0, 0.9));
    let t = report_aps(&rows, Grouping::Problem).unwrap();
    assert_eq!(t.aps[0], [None, Some(0.0)]);
    assert!(t.warnings.iter().any(|w| w.contains("DTLZ1/M2")), "{:?}", t.warnings);
    assert!(t.to_string().contains(" - "), "{t}");

    let single: Vec<RunRecord> = rows.iter().filter(|r| r.config.starts_with("reflection")).cloned().collect();
    let t = report_aps(&single, Grouping::Objectives).unwrap();
    assert_eq!(t.aps, [[Some(0.0)]]);
    assert_eq!(t.ranks, [[Some(1)]]);
}
