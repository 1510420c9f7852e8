use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Uniformly spread weight vectors on the unit simplex.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightSet {
    vectors: Vec<Vec<f64>>,
    divisions: usize,
}

impl WeightSet {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn objectives(&self) -> usize {
        self.vectors.first().map_or(0, Vec::len)
    }

    /// Lattice divisions `H`.
    pub fn divisions(&self) -> usize {
        self.divisions
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    pub fn get(&self, i: usize) -> &[f64] {
        &self.vectors[i]
    }
}

/// `C(H + M - 1, M - 1)`, the number of simplex-lattice points.
pub fn lattice_size(m: usize, divisions: usize) -> usize {
    // Multiplicative binomial, exact in u128 for the sizes used here.
    let (n, k) = ((divisions + m - 1) as u128, (m - 1) as u128);
    let mut c: u128 = 1;
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c as usize
}

/// Population sizes used with `M = 2, 3, 4, 5` objectives.
pub fn default_population_size(m: usize) -> Option<usize> {
    match m {
        2 => Some(200),
        3 => Some(210),
        4 => Some(220),
        5 => Some(210),
        _ => None,
    }
}

/// Lattice divisions that reproduce [`default_population_size`].
pub fn default_divisions(m: usize) -> Option<usize> {
    match m {
        2 => Some(199),
        3 => Some(19),
        4 => Some(9),
        5 => Some(6),
        _ => None,
    }
}

/// Das-Dennis simplex lattice with exactly `mu_target` vectors, i.e. the
/// divisions `H` with `C(H + M - 1, M - 1) = mu_target`.
pub fn generate_weights(m: usize, mu_target: usize) -> Result<WeightSet> {
    if !(2..=5).contains(&m) {
        return Err(Error::Config(format!("weight vectors need 2 <= M <= 5, got {m}")));
    }
    let mut h = 1;
    let mut below = 0;
    while lattice_size(m, h) < mu_target {
        below = lattice_size(m, h);
        h += 1;
    }
    let size = lattice_size(m, h);
    if size != mu_target {
        return Err(Error::Config(format!(
            "no simplex lattice with M = {m} has {mu_target} points; nearest sizes are {below} (H = {}) and {size} (H = {h})",
            h - 1
        )));
    }
    let mut vectors = Vec::with_capacity(size);
    let mut parts = vec![0usize; m];
    compositions(h, 0, &mut parts, &mut |p| {
        vectors.push(p.iter().map(|&a| a as f64 / h as f64).collect());
    });
    Ok(WeightSet {
        vectors,
        divisions: h,
    })
}

/// Visits every composition of `left` into `parts[at..]`, lexicographically.
fn compositions(left: usize, at: usize, parts: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    if at == parts.len() - 1 {
        parts[at] = left;
        visit(parts);
        return;
    }
    for a in 0..=left {
        parts[at] = a;
        compositions(left - a, at + 1, parts, visit);
    }
}
