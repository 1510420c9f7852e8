use alloc::format;
use alloc::vec::Vec;

use super::neighborhood::NeighborhoodTable;
use super::scalarize::{tchebycheff, tchebycheff_normalized};
use super::weights::{default_population_size, generate_weights, WeightSet};
use crate::error::{Error, Result};
use crate::operators::{
    binomial_crossover, mutate_into, polynomial_mutation, repair, select_indices, DeParams,
    MutationConfig, PolynomialMutationParams, ResampleContext,
};
use crate::pareto::nondominated_indices;
use crate::problems::ProblemSpec;
use crate::random::{RandomSource, UniformDraws};
use crate::types::Individual;

#[derive(Clone, Debug, PartialEq)]
pub struct MoeadConfig {
    /// Population size `mu`; must be a simplex-lattice size for `M`.
    pub mu: usize,
    /// Neighborhood size `T`.
    pub neighborhood_size: usize,
    /// Probability `delta` of mating inside the neighborhood.
    pub delta: f64,
    /// Maximum replacements per child, `n_rep`.
    pub max_replacements: usize,
    pub de: DeParams,
    pub pm: PolynomialMutationParams,
    pub mutation: MutationConfig,
    pub max_evaluations: usize,
    pub seed: u64,
    /// Scalarize on objectives normalized by the running ideal point and the
    /// current population's per-objective maximum.
    pub normalize: bool,
    /// Stands in for zero weight components when scalarizing, so that an
    /// extreme sub-problem still prefers smaller values of the objectives
    /// it otherwise ignores. `0.0` gives the plain Tchebycheff function.
    pub zero_weight: f64,
}

/// Default [`MoeadConfig::zero_weight`].
pub const ZERO_WEIGHT: f64 = 1e-4;

impl MoeadConfig {
    /// Standard settings for `problem`: `mu` from the objective count,
    /// `T = 20`, `delta = 0.9`, `n_rep = 2`, `F = 0.5`, `CR = 1`,
    /// `p_m = 1/D`, `eta = 20`, normalization on, zero weights read as
    /// [`ZERO_WEIGHT`].
    pub fn standard(
        problem: &ProblemSpec,
        mutation: MutationConfig,
        max_evaluations: usize,
        seed: u64,
    ) -> Result<Self> {
        let mu = default_population_size(problem.m).ok_or_else(|| {
            Error::Config(format!("no standard population size for M = {}", problem.m))
        })?;
        Ok(Self {
            mu,
            neighborhood_size: 20,
            delta: 0.9,
            max_replacements: 2,
            de: DeParams::default(),
            pm: PolynomialMutationParams::for_dimension(problem.d),
            mutation,
            max_evaluations,
            seed,
            normalize: true,
            zero_weight: ZERO_WEIGHT,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: alloc::string::String| Err(Error::Config(msg));
        if self.neighborhood_size == 0 || self.neighborhood_size > self.mu {
            return fail(format!("neighborhood size T = {} must lie in 1..={}", self.neighborhood_size, self.mu));
        }
        if !(0.0..=1.0).contains(&self.delta) {
            return fail(format!("delta = {} must lie in [0, 1]", self.delta));
        }
        if self.max_replacements == 0 {
            return fail("n_rep must be at least 1".into());
        }
        if self.max_evaluations < self.mu {
            return fail(format!(
                "max_evaluations = {} cannot cover the initial population of {}",
                self.max_evaluations, self.mu
            ));
        }
        if !(0.0..1.0).contains(&self.zero_weight) {
            return fail(format!("zero_weight = {} must lie in [0, 1)", self.zero_weight));
        }
        DeParams::new(self.de.scale, self.de.crossover_rate)?;
        PolynomialMutationParams::new(self.pm.rate, self.pm.eta)?;
        Ok(())
    }
}

/// Counters collected during a run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub evaluations: usize,
    pub generations: usize,
    /// Mutants that left the box and went through repair.
    pub repaired_mutants: u64,
    /// Mutants regenerated by resampling.
    pub resample_regenerations: u64,
    /// Resampling gave up and clamped.
    pub resample_fallbacks: u64,
    pub replacements: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MoeadState {
    /// `population[i]` belongs to sub-problem `i`.
    pub population: Vec<Individual>,
    pub z_star: Vec<f64>,
    /// Per-objective maximum over the population at the start of the
    /// current generation.
    pub z_nadir_est: Vec<f64>,
    pub evaluations: usize,
}

/// What one call of [`Moead::step_subproblem`] did.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StepOutcome {
    pub mated_in_neighborhood: bool,
    pub repaired: bool,
    pub replaced: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunResult {
    pub population: Vec<Individual>,
    /// Nondominated members of the final population, duplicates removed.
    pub front: Vec<Individual>,
    pub z_star: Vec<f64>,
    pub diagnostics: Diagnostics,
}

impl RunResult {
    pub fn front_objectives(&self) -> Vec<Vec<f64>> {
        self.front.iter().map(|ind| ind.f.clone()).collect()
    }
}

/// A single-threaded engine instance.
pub struct Moead<'p, R: UniformDraws = RandomSource> {
    problem: &'p ProblemSpec,
    config: MoeadConfig,
    weights: WeightSet,
    /// `weights` with zero components replaced by `config.zero_weight`.
    scalar_weights: Vec<Vec<f64>>,
    neighbors: NeighborhoodTable,
    everyone: Vec<usize>,
    state: MoeadState,
    diagnostics: Diagnostics,
    rng: R,
    mutant: Vec<f64>,
    pool: Vec<usize>,
}

impl<'p> Moead<'p, RandomSource> {
    /// Validates `config`, builds weights and neighborhoods, then samples
    /// and evaluates the initial population (`mu` evaluations).
    pub fn new(config: MoeadConfig, problem: &'p ProblemSpec) -> Result<Self> {
        let rng = RandomSource::new(config.seed);
        Self::with_rng(config, problem, rng)
    }
}

impl<'p, R: UniformDraws> Moead<'p, R> {
    pub fn with_rng(config: MoeadConfig, problem: &'p ProblemSpec, mut rng: R) -> Result<Self> {
        config.validate()?;
        let weights = generate_weights(problem.m, config.mu)?;
        let neighbors = NeighborhoodTable::new(&weights, config.neighborhood_size);
        let scalar_weights = (0..weights.len())
            .map(|j| {
                let w = weights.get(j);
                w.iter().map(|&wi| if wi == 0.0 { config.zero_weight } else { wi }).collect()
            })
            .collect();
        let bounds = &problem.bounds;
        let population: Vec<Individual> = (0..config.mu)
            .map(|_| {
                let x: Vec<f64> = (0..problem.d)
                    .map(|j| bounds.lower()[j] + rng.uniform() * bounds.width(j))
                    .collect();
                let mut f = alloc::vec![0.0; problem.m];
                problem.evaluate_into(&x, &mut f);
                Individual::evaluated(x, f)
            })
            .collect();
        let mut z_star = alloc::vec![f64::INFINITY; problem.m];
        for ind in &population {
            for (z, &fi) in z_star.iter_mut().zip(&ind.f) {
                *z = z.min(fi);
            }
        }
        let mut state = MoeadState {
            population,
            z_star,
            z_nadir_est: Vec::new(),
            evaluations: config.mu,
        };
        state.z_nadir_est = population_max(&state.population, problem.m);
        Ok(Self {
            problem,
            weights,
            scalar_weights,
            neighbors,
            everyone: (0..config.mu).collect(),
            diagnostics: Diagnostics {
                evaluations: config.mu,
                ..Diagnostics::default()
            },
            mutant: alloc::vec![0.0; problem.d],
            pool: Vec::with_capacity(config.mu),
            state,
            config,
            rng,
        })
    }

    pub fn state(&self) -> &MoeadState {
        &self.state
    }

    pub fn config(&self) -> &MoeadConfig {
        &self.config
    }

    pub fn weights(&self) -> &WeightSet {
        &self.weights
    }

    pub fn neighbors(&self) -> &NeighborhoodTable {
        &self.neighbors
    }

    pub fn diagnostics(&self) -> &Diagnostics {
        &self.diagnostics
    }

    pub fn budget_left(&self) -> usize {
        self.config.max_evaluations - self.state.evaluations
    }

    /// Scalarized value of `f` on sub-problem `j` under the current
    /// reference points.
    pub fn scalarize(&self, f: &[f64], j: usize) -> f64 {
        let w = &self.scalar_weights[j];
        if self.config.normalize {
            tchebycheff_normalized(f, w, &self.state.z_star, &self.state.z_nadir_est)
        } else {
            tchebycheff(f, w, &self.state.z_star)
        }
    }

    /// Produces, evaluates and inserts one child for sub-problem `i`.
    pub fn step_subproblem(&mut self, i: usize) -> Result<StepOutcome> {
        if i >= self.config.mu {
            return Err(Error::InvalidArgument(format!("sub-problem {i} outside 0..{}", self.config.mu)));
        }
        if self.budget_left() == 0 {
            return Err(Error::InvalidArgument("evaluation budget exhausted".into()));
        }
        let mut outcome = StepOutcome::default();
        let mutation = self.config.mutation;
        let bounds = &self.problem.bounds;

        outcome.mated_in_neighborhood = self.rng.uniform() <= self.config.delta;
        let pool: &[usize] = if outcome.mated_in_neighborhood {
            self.neighbors.get(i)
        } else {
            &self.everyone
        };

        let parents = select_indices(
            mutation.selection,
            pool,
            i,
            mutation.strategy.parent_count(),
            &mut self.rng,
        )?;
        let population = &self.state.population;
        mutate_into(mutation.strategy, i, &parents, population, self.config.de.scale, &mut self.mutant)?;
        if !bounds.contains(&self.mutant) {
            outcome.repaired = true;
            let ctx = ResampleContext {
                strategy: mutation.strategy,
                selection: mutation.selection,
                target: i,
                pool,
                scale: self.config.de.scale,
                population,
            };
            let r = repair(mutation.repair, &mut self.mutant, bounds, &mut self.rng, Some(&ctx))?;
            self.diagnostics.repaired_mutants += 1;
            self.diagnostics.resample_regenerations += r.regenerations as u64;
            self.diagnostics.resample_fallbacks += u64::from(r.fell_back);
        }
        let mut child = binomial_crossover(&population[i].x, &self.mutant, self.config.de.crossover_rate, &mut self.rng)?;
        polynomial_mutation(&mut child, &self.config.pm, bounds, &mut self.rng)?;

        let mut f = alloc::vec![0.0; self.problem.m];
        self.problem.evaluate_into(&child, &mut f);
        self.state.evaluations += 1;
        self.diagnostics.evaluations += 1;
        for (z, &fi) in self.state.z_star.iter_mut().zip(&f) {
            *z = z.min(fi);
        }

        self.pool.clear();
        self.pool.extend_from_slice(pool);
        let child = Individual::evaluated(child, f);
        while outcome.replaced < self.config.max_replacements && !self.pool.is_empty() {
            let j = self.pool.swap_remove(self.rng.below(self.pool.len()));
            if self.scalarize(&child.f, j) <= self.scalarize(&self.state.population[j].f, j) {
                self.state.population[j] = child.clone();
                outcome.replaced += 1;
            }
        }
        self.diagnostics.replacements += outcome.replaced as u64;
        Ok(outcome)
    }

    /// Visits sub-problems `0..mu` in order, stopping early when the budget
    /// runs out. Returns the number of children produced.
    pub fn run_generation(&mut self) -> Result<usize> {
        self.state.z_nadir_est = population_max(&self.state.population, self.problem.m);
        let mut produced = 0;
        for i in 0..self.config.mu {
            if self.budget_left() == 0 {
                break;
            }
            self.step_subproblem(i)?;
            produced += 1;
        }
        self.diagnostics.generations += 1;
        Ok(produced)
    }

    /// Runs until exactly `max_evaluations` evaluations have been spent.
    pub fn run(mut self) -> Result<RunResult> {
        while self.budget_left() > 0 {
            self.run_generation()?;
        }
        Ok(self.finish())
    }

    pub fn finish(self) -> RunResult {
        let objectives: Vec<&[f64]> = self.state.population.iter().map(|p| p.f.as_slice()).collect();
        let front = nondominated_indices(&objectives)
            .expect("objective vectors share one length")
            .into_iter()
            .map(|k| self.state.population[k].clone())
            .collect();
        RunResult {
            population: self.state.population,
            front,
            z_star: self.state.z_star,
            diagnostics: self.diagnostics,
        }
    }
}

/// Runs MOEA/D-DE on `problem` with `config`.
pub fn run(config: &MoeadConfig, problem: &ProblemSpec) -> Result<RunResult> {
    Moead::new(config.clone(), problem)?.run()
}

fn population_max(population: &[Individual], m: usize) -> Vec<f64> {
    let mut max = alloc::vec![f64::NEG_INFINITY; m];
    for ind in population {
        for (z, &fi) in max.iter_mut().zip(&ind.f) {
            *z = z.max(fi);
        }
    }
    max
}
