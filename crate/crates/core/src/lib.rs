//! MOEA/D-DE with an independently configurable differential-evolution
//! mutation operator.
//!
//! The DE mutation is split into three pluggable parts: the mutation
//! strategy (`rand/1`, `current/1`), the parent index selection method
//! (WOR, WR, WPR) and the bound-handling method (replacement,
//! reinitialization, reflection, randomized reflection, resampling).
//! Together they span 30 configurations, see [`operators::MutationConfig`].
//!
//! The crate is `no_std` (it needs `alloc`). All transcendental functions
//! go through `libm` so results are bit-identical across platforms, and
//! every random draw comes from a [`RandomSource`].
//!
//! Modules:
//! - [`problems`]: the DTLZ1-7 and WFG1-9 suites, addressable as `"WFG4/M3"`.
//! - [`operators`]: index selection, mutation strategies, repair, binomial
//!   crossover and polynomial mutation.
//! - [`moead`]: weight vectors, neighborhoods, Tchebycheff scalarization and
//!   the engine itself.
//! - [`indicators`]: normalized hypervolume, Wilcoxon rank-sum test,
//!   performance scores and APS.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod indicators;
pub mod moead;
pub mod operators;
mod pareto;
pub mod problems;
mod random;
mod types;

pub use error::{Error, Result};
pub use pareto::{dominates, nondominated_filter, nondominated_indices};
pub use random::{RandomSource, UniformDraws};
pub use types::{Bounds, Individual};
