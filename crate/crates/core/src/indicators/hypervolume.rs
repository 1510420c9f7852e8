use alloc::vec::Vec;

use super::NormalizationBounds;
use crate::error::{invalid, Result};

/// Reference coordinate used for normalized fronts.
pub const HV_REFERENCE: f64 = 1.1;

/// Exact hypervolume dominated by `front` and bounded by `reference`
/// (minimization). Points that do not strictly dominate the reference
/// contribute nothing.
///
/// Points are swept in decreasing order of the last objective; each adds
/// its slab height times its exclusive `(M-1)`-dimensional contribution
/// over the points after it, which recurses down to a 2-D sweep.
pub fn hypervolume<V: AsRef<[f64]>>(front: &[V], reference: &[f64]) -> Result<f64> {
    let m = reference.len();
    if m == 0 {
        return Err(invalid!("empty reference point"));
    }
    let mut points = Vec::with_capacity(front.len());
    for p in front {
        let p = p.as_ref();
        if p.len() != m {
            return Err(invalid!("point has {} objectives, reference {m}", p.len()));
        }
        if p.iter().any(|v| v.is_nan()) {
            return Err(invalid!("point contains NaN"));
        }
        if p.iter().zip(reference).all(|(a, r)| a < r) {
            points.push(p.to_vec());
        }
    }
    let points = filter_weakly_dominated(points, m);
    Ok(sweep(points, reference, m))
}

/// Hypervolume of `front` after normalization by `bounds`, against
/// `(1.1, ..., 1.1)`.
pub fn normalized_hypervolume<V: AsRef<[f64]>>(front: &[V], bounds: &NormalizationBounds) -> Result<f64> {
    let normalized = super::normalize_front(front, bounds)?;
    hypervolume(&normalized, &alloc::vec![HV_REFERENCE; bounds.objectives()])
}

/// Volume over the first `dim` coordinates of mutually nondominated points.
fn sweep(mut points: Vec<Vec<f64>>, r: &[f64], dim: usize) -> f64 {
    match (points.len(), dim) {
        (0, _) => 0.0,
        (1, _) => box_volume(&points[0], r, dim),
        (_, 1) => r[0] - points.iter().map(|p| p[0]).fold(f64::INFINITY, f64::min),
        (_, 2) => {
            points.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
            let mut area = 0.0;
            let mut ceiling = r[1];
            for p in &points {
                if p[1] < ceiling {
                    area += (r[0] - p[0]) * (ceiling - p[1]);
                    ceiling = p[1];
                }
            }
            area
        }
        _ => {
            let last = dim - 1;
            points.sort_by(|a, b| b[last].total_cmp(&a[last]));
            let mut total = 0.0;
            for i in 0..points.len() {
                let p = &points[i];
                let limited: Vec<Vec<f64>> = points[i + 1..]
                    .iter()
                    .map(|q| (0..last).map(|k| p[k].max(q[k])).collect())
                    .collect();
                let limited = filter_weakly_dominated(limited, last);
                let exclusive = box_volume(p, r, last) - sweep(limited, r, last);
                total += (r[last] - p[last]) * exclusive;
            }
            total
        }
    }
}

fn box_volume(p: &[f64], r: &[f64], dim: usize) -> f64 {
    (0..dim).map(|k| r[k] - p[k]).product()
}

/// Drops points weakly dominated by another (keeps one of duplicates),
/// looking only at the first `dim` coordinates.
fn filter_weakly_dominated(mut points: Vec<Vec<f64>>, dim: usize) -> Vec<Vec<f64>> {
    // After a lexicographic sort a point can only be weakly dominated by
    // points before it.
    points.sort_by(|a, b| {
        (0..dim)
            .map(|k| a[k].total_cmp(&b[k]))
            .find(|o| o.is_ne())
            .unwrap_or(core::cmp::Ordering::Equal)
    });
    let mut kept: Vec<Vec<f64>> = Vec::with_capacity(points.len());
    if dim == 2 {
        let mut lowest = f64::INFINITY;
        for p in points {
            if p[1] < lowest {
                lowest = p[1];
                kept.push(p);
            }
        }
        return kept;
    }
    for p in points {
        if !kept.iter().any(|q| (0..dim).all(|k| q[k] <= p[k])) {
            kept.push(p);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RandomSource;
    use crate::UniformDraws;
    use alloc::vec;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    /// Inclusion-exclusion over all subsets: sum of (-1)^{|S|+1} vol(join S).
    fn inclusion_exclusion(points: &[Vec<f64>], r: &[f64]) -> f64 {
        let n = points.len();
        let mut total = 0.0;
        for mask in 1u32..(1 << n) {
            let mut corner = vec![f64::NEG_INFINITY; r.len()];
            for (i, p) in points.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    for k in 0..r.len() {
                        corner[k] = corner[k].max(p[k]);
                    }
                }
            }
            let vol: f64 = corner.iter().zip(r).map(|(c, rk)| (rk - c).max(0.0)).product();
            total += if mask.count_ones() % 2 == 1 { vol } else { -vol };
        }
        total
    }

    #[test]
    fn single_point_at_origin() {
        assert!(close(hypervolume(&[[0.0, 0.0]], &[1.1, 1.1]).unwrap(), 1.21));
        assert!(close(hypervolume(&[[0.0; 5]], &[1.1; 5]).unwrap(), libm::pow(1.1, 5.0)));
    }

    #[test]
    fn two_boxes() {
        let hv = hypervolume(&[[0.25, 0.75], [0.75, 0.25]], &[1.1, 1.1]).unwrap();
        assert!(close(hv, 0.4725), "{hv}");
    }

    #[test]
    fn empty_and_non_contributing() {
        let empty: [[f64; 2]; 0] = [];
        assert_eq!(hypervolume(&empty, &[1.1, 1.1]).unwrap(), 0.0);
        assert_eq!(hypervolume(&[[1.1, 0.0], [2.0, 2.0]], &[1.1, 1.1]).unwrap(), 0.0);
    }

    #[test]
    fn matches_inclusion_exclusion() {
        let mut rng = RandomSource::new(11);
        for m in 2..=5 {
            for _ in 0..30 {
                let n = 1 + rng.below(9);
                let pts: Vec<Vec<f64>> = (0..n).map(|_| (0..m).map(|_| rng.uniform()).collect()).collect();
                let r = vec![1.1; m];
                let exact = inclusion_exclusion(&pts, &r);
                let hv = hypervolume(&pts, &r).unwrap();
                assert!((hv - exact).abs() < 1e-12, "m={m} n={n}: {hv} vs {exact}");
            }
        }
    }

    #[test]
    fn dominated_points_and_duplicates_do_not_matter() {
        let front = vec![vec![0.1, 0.5, 0.9], vec![0.5, 0.1, 0.6], vec![0.9, 0.8, 0.05]];
        let base = hypervolume(&front, &[1.1; 3]).unwrap();
        let mut more = front.clone();
        more.push(vec![0.95, 0.95, 0.95]);
        more.push(front[1].clone());
        more.reverse();
        assert!(close(hypervolume(&more, &[1.1; 3]).unwrap(), base));
    }

    #[test]
    fn rejects_mismatched_lengths() {
        assert!(hypervolume(&[vec![0.0, 0.0, 0.0]], &[1.1, 1.1]).is_err());
    }
}
