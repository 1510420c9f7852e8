use alloc::vec::Vec;

use crate::error::{invalid, Result};

/// Pareto dominance for minimization: `a` is no worse than `b` everywhere
/// and strictly better somewhere.
pub fn dominates(a: &[f64], b: &[f64]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(invalid!(
            "objective vectors differ in length ({} vs {})",
            a.len(),
            b.len()
        ));
    }
    Ok(dominates_unchecked(a, b))
}

#[inline]
pub(crate) fn dominates_unchecked(a: &[f64], b: &[f64]) -> bool {
    let mut strict = false;
    for (&x, &y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        if x < y {
            strict = true;
        }
    }
    strict
}

/// Indices of the members not dominated by any other member. Exact
/// duplicates are reported once, at their first occurrence.
pub fn nondominated_indices<V: AsRef<[f64]>>(points: &[V]) -> Result<Vec<usize>> {
    if let Some(first) = points.first() {
        let m = first.as_ref().len();
        if let Some(bad) = points.iter().position(|p| p.as_ref().len() != m) {
            return Err(invalid!(
                "point {bad} has {} objectives, expected {m}",
                points[bad].as_ref().len()
            ));
        }
    }
    let mut keep = Vec::new();
    'outer: for (i, p) in points.iter().enumerate() {
        let p = p.as_ref();
        for (j, q) in points.iter().enumerate() {
            let q = q.as_ref();
            if dominates_unchecked(q, p) || (j < i && q == p) {
                continue 'outer;
            }
        }
        keep.push(i);
    }
    Ok(keep)
}

/// The nondominated subset, duplicates collapsed.
pub fn nondominated_filter<V: AsRef<[f64]> + Clone>(points: &[V]) -> Result<Vec<V>> {
    Ok(nondominated_indices(points)?
        .into_iter()
        .map(|i| points[i].clone())
        .collect())
}
