use alloc::string::String;
use alloc::vec::Vec;

use super::wilcoxon_rank_sum;
use crate::error::{invalid, Result};

/// Significance level of the pairwise comparisons.
pub const ALPHA: f64 = 0.05;

pub fn median(sample: &[f64]) -> f64 {
    let mut s = sample.to_vec();
    s.sort_by(f64::total_cmp);
    let n = s.len();
    if n == 0 {
        f64::NAN
    } else if n % 2 == 1 {
        s[n / 2]
    } else {
        (s[n / 2 - 1] + s[n / 2]) / 2.0
    }
}

/// Whether `winner` significantly outperforms `loser` on a
/// larger-is-better measure: rank-sum `p < alpha` and a strictly greater
/// median.
pub fn outperforms(winner: &[f64], loser: &[f64], alpha: f64) -> Result<bool> {
    Ok(median(winner) > median(loser) && wilcoxon_rank_sum(winner, loser)? < alpha)
}

/// `P(A_i)`: how many of the other algorithms significantly outperform
/// algorithm `i`, for each `i`.
pub fn performance_scores<S: AsRef<[f64]>>(samples: &[S], alpha: f64) -> Result<Vec<usize>> {
    if samples.len() < 2 {
        return Err(invalid!("performance scores need at least two algorithms"));
    }
    if let Some(i) = samples.iter().position(|s| s.as_ref().len() < 2) {
        return Err(invalid!("algorithm {i} has fewer than two runs"));
    }
    let n = samples.len();
    let mut scores = alloc::vec![0; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (samples[i].as_ref(), samples[j].as_ref());
            if outperforms(b, a, alpha)? {
                scores[i] += 1;
            } else if outperforms(a, b, alpha)? {
                scores[j] += 1;
            }
        }
    }
    Ok(scores)
}

/// Column means of an instances-by-algorithms score matrix.
pub fn aps<R: AsRef<[usize]>>(scores: &[R]) -> Result<Vec<f64>> {
    let Some(first) = scores.first() else {
        return Err(invalid!("APS of an empty score matrix"));
    };
    let n = first.as_ref().len();
    if scores.iter().any(|r| r.as_ref().len() != n) {
        return Err(invalid!("ragged score matrix"));
    }
    let mut sums = alloc::vec![0usize; n];
    for row in scores {
        for (s, &v) in sums.iter_mut().zip(row.as_ref()) {
            *s += v;
        }
    }
    Ok(sums.into_iter().map(|s| s as f64 / scores.len() as f64).collect())
}

/// Competition ranks of `values`, smallest first: equal values share a
/// rank and the next rank skips (`1, 1, 3`).
pub fn competition_ranks(values: &[f64]) -> Vec<usize> {
    values
        .iter()
        .map(|v| 1 + values.iter().filter(|w| w < &v).count())
        .collect()
}

/// Scores and APS of several algorithms over a set of instances.
#[derive(Clone, Debug, PartialEq)]
pub struct ApsTable {
    pub algorithms: Vec<String>,
    pub instances: Vec<String>,
    /// `scores[instance][algorithm]`.
    pub scores: Vec<Vec<usize>>,
    pub aps: Vec<f64>,
}

impl ApsTable {
    /// `samples[instance][algorithm]` holds that algorithm's indicator
    /// values (larger is better) on that instance.
    pub fn from_samples<S: AsRef<[f64]>>(
        algorithms: Vec<String>,
        instances: Vec<String>,
        samples: &[Vec<S>],
        alpha: f64,
    ) -> Result<Self> {
        if samples.len() != instances.len() {
            return Err(invalid!("{} instance labels for {} instances", instances.len(), samples.len()));
        }
        let scores = samples
            .iter()
            .map(|row| {
                if row.len() != algorithms.len() {
                    return Err(invalid!("instance has {} algorithms, expected {}", row.len(), algorithms.len()));
                }
                performance_scores(row, alpha)
            })
            .collect::<Result<Vec<_>>>()?;
        let aps = aps(&scores)?;
        Ok(Self {
            algorithms,
            instances,
            scores,
            aps,
        })
    }

    pub fn ranks(&self) -> Vec<usize> {
        competition_ranks(&self.aps)
    }
}
