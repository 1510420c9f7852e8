use alloc::vec::Vec;

use crate::error::{invalid, Result};

/// Two-sided p-value of the Wilcoxon rank-sum (Mann-Whitney) test.
///
/// Uses the normal approximation of the rank sum of `a`, with midranks for
/// ties, the tie-corrected variance and a continuity correction of 0.5.
/// Returns 1 when every value is identical.
pub fn wilcoxon_rank_sum(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(invalid!("rank-sum test needs two nonempty samples"));
    }
    if a.iter().chain(b).any(|v| v.is_nan()) {
        return Err(invalid!("rank-sum test on NaN"));
    }
    let (n1, n2) = (a.len() as f64, b.len() as f64);
    let n = n1 + n2;
    let mut pooled: Vec<(f64, bool)> = a.iter().map(|&v| (v, true)).chain(b.iter().map(|&v| (v, false))).collect();
    pooled.sort_by(|x, y| x.0.total_cmp(&y.0));

    let mut rank_sum_a = 0.0;
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < pooled.len() {
        let mut j = i + 1;
        while j < pooled.len() && pooled[j].0 == pooled[i].0 {
            j += 1;
        }
        let t = (j - i) as f64;
        let midrank = (i + j + 1) as f64 / 2.0;
        rank_sum_a += midrank * pooled[i..j].iter().filter(|e| e.1).count() as f64;
        tie_term += t * t * t - t;
        i = j;
    }

    let mean = n1 * (n + 1.0) / 2.0;
    let variance = n1 * n2 / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if variance <= 0.0 {
        return Ok(1.0);
    }
    let z = ((rank_sum_a - mean).abs() - 0.5).max(0.0) / libm::sqrt(variance);
    Ok(libm::erfc(z / core::f64::consts::SQRT_2).min(1.0))
}
