use alloc::vec;
use alloc::vec::Vec;

use super::Strategy;
use crate::error::{invalid, Result};
use crate::types::Individual;

/// Mutant vector for `target` from the parents `parents` of `population`.
/// The result may violate the bounds.
pub fn mutate(
    strategy: Strategy,
    target: usize,
    parents: &[usize],
    population: &[Individual],
    scale: f64,
) -> Result<Vec<f64>> {
    let d = population
        .get(target)
        .ok_or_else(|| invalid!("target {target} outside population of {}", population.len()))?
        .x
        .len();
    let mut v = vec![0.0; d];
    mutate_into(strategy, target, parents, population, scale, &mut v)?;
    Ok(v)
}

pub fn mutate_into(
    strategy: Strategy,
    target: usize,
    parents: &[usize],
    population: &[Individual],
    scale: f64,
    out: &mut [f64],
) -> Result<()> {
    if parents.len() != strategy.parent_count() {
        return Err(invalid!(
            "{strategy} needs {} parents, got {}",
            strategy.parent_count(),
            parents.len()
        ));
    }
    if let Some(&bad) = parents.iter().chain([&target]).find(|&&p| p >= population.len()) {
        return Err(invalid!("index {bad} outside population of {}", population.len()));
    }
    let (base, a, b) = match strategy {
        Strategy::Rand1 => (parents[0], parents[1], parents[2]),
        Strategy::Current1 => (target, parents[0], parents[1]),
    };
    let (base, a, b) = (&population[base].x, &population[a].x, &population[b].x);
    if out.len() != base.len() {
        return Err(invalid!("mutant buffer has length {}, expected {}", out.len(), base.len()));
    }
    for (j, o) in out.iter_mut().enumerate() {
        *o = base[j] + scale * (a[j] - b[j]);
    }
    Ok(())
}
