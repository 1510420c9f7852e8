/// Smallest denominator used when normalizing objectives by a running
/// ideal/nadir estimate.
pub const NORMALIZATION_FLOOR: f64 = 1e-10;

/// Tchebycheff value `max_i w_i |f_i - z*_i|`, to be minimized. A zero
/// weight removes its objective from the maximum.
pub fn tchebycheff(f: &[f64], w: &[f64], z_star: &[f64]) -> f64 {
    debug_assert!(f.len() == w.len() && w.len() == z_star.len());
    f.iter()
        .zip(w)
        .zip(z_star)
        .map(|((fi, wi), zi)| wi * (fi - zi).abs())
        .fold(0.0, f64::max)
}

/// `(f_i - z*_i) / (znad_i - z*_i)`, with the denominator floored at
/// [`NORMALIZATION_FLOOR`].
pub fn normalize_objectives(f: &[f64], z_star: &[f64], z_nadir: &[f64]) -> alloc::vec::Vec<f64> {
    f.iter()
        .zip(z_star)
        .zip(z_nadir)
        .map(|((fi, zi), ni)| (fi - zi) / (ni - zi).max(NORMALIZATION_FLOOR))
        .collect()
}

/// Tchebycheff value of the normalized objectives, without allocating.
pub(crate) fn tchebycheff_normalized(f: &[f64], w: &[f64], z_star: &[f64], z_nadir: &[f64]) -> f64 {
    let mut g: f64 = 0.0;
    for i in 0..f.len() {
        let scale = (z_nadir[i] - z_star[i]).max(NORMALIZATION_FLOOR);
        g = g.max(w[i] * ((f[i] - z_star[i]) / scale).abs());
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn tchebycheff_examples() {
        assert_eq!(tchebycheff(&[2.0, 4.0], &[0.5, 0.5], &[0.0, 0.0]), 2.0);
        assert_eq!(tchebycheff(&[1.5, 3.0], &[0.3, 0.7], &[1.5, 3.0]), 0.0);
        assert_eq!(tchebycheff(&[3.0, 100.0], &[1.0, 0.0], &[1.0, 0.0]), 2.0);
    }

    #[test]
    fn normalization_examples() {
        let z = [1.0, -2.0];
        let n = [3.0, 2.0];
        assert_eq!(normalize_objectives(&z, &z, &n), vec![0.0, 0.0]);
        assert_eq!(normalize_objectives(&n, &z, &n), vec![1.0, 1.0]);
        assert_eq!(normalize_objectives(&[2.0, 0.0], &z, &n), vec![0.5, 0.5]);
    }

    #[test]
    fn degenerate_range_is_floored() {
        let v = normalize_objectives(&[1.0 + 1e-12], &[1.0], &[1.0]);
        assert!((v[0] - 1e-2).abs() < 1e-6);
        assert!(tchebycheff_normalized(&[1.0 + 1e-12], &[1.0], &[1.0], &[1.0]).is_finite());
    }

    #[test]
    fn normalized_matches_composition() {
        let (f, w, z, n) = ([0.7, 2.0, 5.0], [0.2, 0.3, 0.5], [0.1, 0.5, 1.0], [1.0, 4.0, 9.0]);
        let direct = tchebycheff(&normalize_objectives(&f, &z, &n), &w, &[0.0; 3]);
        assert!((tchebycheff_normalized(&f, &w, &z, &n) - direct).abs() < 1e-15);
    }
}
