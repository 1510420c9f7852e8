use super::{mutate_into, select_indices, Repair, Selection, Strategy};
use crate::error::{invalid, Result};
use crate::random::UniformDraws;
use crate::types::{Bounds, Individual};

/// Regenerations attempted by [`Repair::Resampling`] before it gives up
/// and clamps the last mutant.
pub const RESAMPLE_LIMIT: usize = 100;

/// Everything needed to regenerate a mutant from scratch.
#[derive(Clone, Copy, Debug)]
pub struct ResampleContext<'a> {
    pub strategy: Strategy,
    pub selection: Selection,
    pub target: usize,
    pub pool: &'a [usize],
    pub scale: f64,
    pub population: &'a [Individual],
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Repaired {
    /// Mutants regenerated by resampling.
    pub regenerations: usize,
    /// Resampling hit [`RESAMPLE_LIMIT`] and fell back to replacement.
    pub fell_back: bool,
}

/// Repairs one coordinate. Feasible values pass through untouched and no
/// draw is consumed for them.
///
/// Reflection is applied once; if the reflected value overshoots the
/// opposite bound it is clamped there. [`Repair::Resampling`] is not a
/// per-coordinate method and is treated as replacement here.
pub fn repair_coordinate<R: UniformDraws + ?Sized>(
    method: Repair,
    v: f64,
    lo: f64,
    hi: f64,
    rng: &mut R,
) -> f64 {
    if lo <= v && v <= hi {
        return v;
    }
    let below = v < lo;
    let out = match method {
        Repair::Replacement | Repair::Resampling => {
            if below {
                lo
            } else {
                hi
            }
        }
        Repair::Reinitialization => (hi - lo) * rng.uniform() + lo,
        Repair::Reflection => {
            if below {
                lo + (lo - v)
            } else {
                hi + (hi - v)
            }
        }
        Repair::RandomReflection => {
            let r = rng.uniform();
            if below {
                lo + r * (lo - v)
            } else {
                hi + r * (hi - v)
            }
        }
    };
    // NaN mutants land on the lower bound.
    if out.is_nan() {
        lo
    } else {
        out.clamp(lo, hi)
    }
}

/// Maps the mutant `v` into `bounds` in place.
///
/// [`Repair::Resampling`] regenerates `v` with freshly selected parents
/// (same strategy, selection method and pool) until it is feasible, at most
/// [`RESAMPLE_LIMIT`] times, then clamps; it requires `ctx`.
pub fn repair<R: UniformDraws + ?Sized>(
    method: Repair,
    v: &mut [f64],
    bounds: &Bounds,
    rng: &mut R,
    ctx: Option<&ResampleContext<'_>>,
) -> Result<Repaired> {
    if v.len() != bounds.dim() {
        return Err(invalid!("mutant has length {}, bounds {}", v.len(), bounds.dim()));
    }
    let mut outcome = Repaired::default();
    if bounds.contains(v) {
        return Ok(outcome);
    }
    if method == Repair::Resampling {
        let ctx = ctx.ok_or_else(|| invalid!("resampling needs a resample context"))?;
        while outcome.regenerations < RESAMPLE_LIMIT {
            let parents = select_indices(
                ctx.selection,
                ctx.pool,
                ctx.target,
                ctx.strategy.parent_count(),
                rng,
            )?;
            mutate_into(ctx.strategy, ctx.target, &parents, ctx.population, ctx.scale, v)?;
            outcome.regenerations += 1;
            if bounds.contains(v) {
                return Ok(outcome);
            }
        }
        outcome.fell_back = true;
    }
    for (j, vj) in v.iter_mut().enumerate() {
        *vj = repair_coordinate(method, *vj, bounds.lower()[j], bounds.upper()[j], rng);
    }
    Ok(outcome)
}
