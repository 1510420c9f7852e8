//! The MOEA/D-DE engine.
//!
//! Each of the `mu` sub-problems owns one weight vector and one individual.
//! Per generation the sub-problems are visited in index order; each visit
//! picks a mating pool (the neighborhood with probability `delta`, else the
//! whole population), builds a child with the configured DE mutation,
//! binomial crossover and polynomial mutation, and lets it replace at most
//! `n_rep` pool members whose Tchebycheff value it does not worsen.

mod engine;
mod neighborhood;
mod scalarize;
mod weights;

pub use engine::{run, Diagnostics, Moead, MoeadConfig, MoeadState, RunResult, StepOutcome, ZERO_WEIGHT};
pub use neighborhood::NeighborhoodTable;
pub use scalarize::{normalize_objectives, tchebycheff, NORMALIZATION_FLOOR};
pub use weights::{default_divisions, default_population_size, generate_weights, lattice_size, WeightSet};
