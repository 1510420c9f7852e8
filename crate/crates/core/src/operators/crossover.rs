use alloc::vec::Vec;

use super::PolynomialMutationParams;
use crate::error::{invalid, Result};
use crate::random::UniformDraws;
use crate::types::Bounds;

/// Binomial crossover: `u_j = v_j` if `rand <= CR` or `j == j_rand`, else `x_j`.
///
/// `j_rand` is drawn first, then one uniform per coordinate.
pub fn binomial_crossover<R: UniformDraws + ?Sized>(
    x: &[f64],
    v: &[f64],
    crossover_rate: f64,
    rng: &mut R,
) -> Result<Vec<f64>> {
    if x.len() != v.len() || x.is_empty() {
        return Err(invalid!("crossover of vectors with lengths {} and {}", x.len(), v.len()));
    }
    let j_rand = rng.below(x.len());
    Ok(x.iter()
        .zip(v)
        .enumerate()
        .map(|(j, (&xj, &vj))| {
            let from_mutant = rng.uniform() <= crossover_rate;
            if from_mutant || j == j_rand {
                vj
            } else {
                xj
            }
        })
        .collect())
}

/// Perturbation of polynomial mutation. `branch` selects the formula
/// (`<= 0.5` first), `magnitude` is the uniform draw inside it.
pub fn pm_sigma(branch: f64, magnitude: f64, eta: f64) -> f64 {
    let exponent = 1.0 / (eta + 1.0);
    if branch <= 0.5 {
        libm::pow(2.0 * magnitude, exponent) - 1.0
    } else {
        1.0 - libm::pow(2.0 - 2.0 * magnitude, exponent)
    }
}

/// Polynomial mutation in place. Each coordinate mutates with probability
/// `params.rate`, drawing the branch and the magnitude independently, and
/// is clamped to its bounds afterwards.
pub fn polynomial_mutation<R: UniformDraws + ?Sized>(
    u: &mut [f64],
    params: &PolynomialMutationParams,
    bounds: &Bounds,
    rng: &mut R,
) -> Result<()> {
    if u.len() != bounds.dim() {
        return Err(invalid!("child has length {}, bounds {}", u.len(), bounds.dim()));
    }
    for (j, uj) in u.iter_mut().enumerate() {
        if rng.uniform() <= params.rate {
            let branch = rng.uniform();
            let magnitude = rng.uniform();
            let sigma = pm_sigma(branch, magnitude, params.eta);
            let (lo, hi) = (bounds.lower()[j], bounds.upper()[j]);
            *uj = (*uj + sigma * (hi - lo)).clamp(lo, hi);
        }
    }
    Ok(())
}
