use core::ops::Deref;

use super::Selection;
use crate::error::{invalid, Error, Result};
use crate::random::UniformDraws;

/// Up to three parent indices, in draw order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Parents {
    idx: [usize; 3],
    len: usize,
}

impl Parents {
    fn push(&mut self, i: usize) {
        self.idx[self.len] = i;
        self.len += 1;
    }

    fn contains(&self, i: usize) -> bool {
        self[..].contains(&i)
    }
}

impl Deref for Parents {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.idx[..self.len]
    }
}

/// Draws `n` parent indices from `pool` for the sub-problem `target`.
///
/// Every draw picks a uniformly random element of `pool`; WOR and WPR
/// redraw until the candidate is admissible:
///
/// - WOR rejects the target and any index already chosen,
/// - WR accepts every draw,
/// - WPR rejects only indices already chosen (the target may be drawn).
///
/// `pool` must not contain duplicates.
pub fn select_indices<R: UniformDraws + ?Sized>(
    method: Selection,
    pool: &[usize],
    target: usize,
    n: usize,
    rng: &mut R,
) -> Result<Parents> {
    if !(2..=3).contains(&n) {
        return Err(invalid!("parent count must be 2 or 3, got {n}"));
    }
    let admissible = match method {
        Selection::Wor => pool.iter().filter(|&&r| r != target).count(),
        Selection::Wr if pool.is_empty() => 0,
        Selection::Wr => n,
        Selection::Wpr => pool.len(),
    };
    if admissible < n {
        return Err(Error::InfeasibleSelection {
            method: method.as_str(),
            pool: admissible,
            needed: n,
        });
    }
    let mut out = Parents { idx: [0; 3], len: 0 };
    while out.len < n {
        let r = pool[rng.below(pool.len())];
        let accept = match method {
            Selection::Wor => r != target && !out.contains(r),
            Selection::Wr => true,
            Selection::Wpr => !out.contains(r),
        };
        if accept {
            out.push(r);
        }
    }
    Ok(out)
}
