use alloc::vec::Vec;

use crate::error::{invalid, Result};

/// Box constraints `lower[j] <= x[j] <= upper[j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(invalid!(
                "bounds length mismatch: {} lower vs {} upper",
                lower.len(),
                upper.len()
            ));
        }
        if lower.is_empty() {
            return Err(invalid!("bounds must have at least one dimension"));
        }
        if let Some(j) = (0..lower.len()).find(|&j| !(lower[j] < upper[j])) {
            return Err(invalid!(
                "bound {j} is empty: lower {} >= upper {}",
                lower[j],
                upper[j]
            ));
        }
        Ok(Self { lower, upper })
    }

    /// `[0, 1]^dim`.
    pub fn unit(dim: usize) -> Self {
        Self {
            lower: alloc::vec![0.0; dim],
            upper: alloc::vec![1.0; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn width(&self, j: usize) -> f64 {
        self.upper[j] - self.lower[j]
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(&v, (&lo, &hi))| lo <= v && v <= hi)
    }

    pub fn check(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(invalid!(
                "decision vector has length {}, expected {}",
                x.len(),
                self.dim()
            ));
        }
        if let Some(j) = (0..x.len()).find(|&j| !(self.lower[j] <= x[j] && x[j] <= self.upper[j])) {
            return Err(invalid!(
                "x[{j}] = {} outside [{}, {}]",
                x[j],
                self.lower[j],
                self.upper[j]
            ));
        }
        Ok(())
    }
}

/// A decision vector together with its cached objective vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Individual {
    pub x: Vec<f64>,
    pub f: Vec<f64>,
    pub evaluated: bool,
}

impl Individual {
    pub fn unevaluated(x: Vec<f64>) -> Self {
        Self {
            x,
            f: Vec::new(),
            evaluated: false,
        }
    }

    pub fn evaluated(x: Vec<f64>, f: Vec<f64>) -> Self {
        Self {
            x,
            f,
            evaluated: true,
        }
    }
}
