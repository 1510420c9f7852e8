use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::problems::ProblemSpec;

/// True ideal and nadir points of a problem's Pareto front.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizationBounds {
    ideal: Vec<f64>,
    nadir: Vec<f64>,
}

impl NormalizationBounds {
    pub fn new(ideal: Vec<f64>, nadir: Vec<f64>) -> Result<Self> {
        if ideal.len() != nadir.len() || ideal.is_empty() {
            return Err(Error::InvalidArgument(format!(
                "ideal has {} entries, nadir {}",
                ideal.len(),
                nadir.len()
            )));
        }
        if let Some(i) = (0..ideal.len()).find(|&i| !(nadir[i] > ideal[i])) {
            return Err(Error::InvalidArgument(format!(
                "nadir[{i}] = {} does not exceed ideal[{i}] = {}",
                nadir[i], ideal[i]
            )));
        }
        Ok(Self { ideal, nadir })
    }

    pub fn for_problem(problem: &ProblemSpec) -> Self {
        let (ideal, nadir) = problem.reference_points();
        Self::new(ideal, nadir).expect("analytic reference points are well ordered")
    }

    pub fn ideal(&self) -> &[f64] {
        &self.ideal
    }

    pub fn nadir(&self) -> &[f64] {
        &self.nadir
    }

    pub fn objectives(&self) -> usize {
        self.ideal.len()
    }

    /// Maps one objective vector. Values are not clipped.
    pub fn apply(&self, f: &[f64]) -> Vec<f64> {
        f.iter()
            .zip(&self.ideal)
            .zip(&self.nadir)
            .map(|((fi, lo), hi)| (fi - lo) / (hi - lo))
            .collect()
    }
}

pub fn normalize_front<V: AsRef<[f64]>>(front: &[V], bounds: &NormalizationBounds) -> Result<Vec<Vec<f64>>> {
    front
        .iter()
        .map(|f| {
            let f = f.as_ref();
            if f.len() != bounds.objectives() {
                return Err(Error::InvalidArgument(format!(
                    "point has {} objectives, bounds {}",
                    f.len(),
                    bounds.objectives()
                )));
            }
            Ok(bounds.apply(f))
        })
        .collect()
}
