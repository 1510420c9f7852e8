use moeadde_core::indicators::{
    aps, hypervolume, outperforms, performance_scores, wilcoxon_rank_sum, ALPHA,
};
use moeadde_core::{RandomSource, UniformDraws};
use proptest::prelude::*;

fn random_front(rng: &mut RandomSource, m: usize, n: usize) -> Vec<Vec<f64>> {
    (0..n).map(|_| (0..m).map(|_| rng.uniform()).collect()).collect()
}

/// Fraction of uniform samples in the reference box that some point
/// dominates, scaled to the box volume, with its standard error.
fn monte_carlo(front: &[Vec<f64>], r: f64, samples: usize, rng: &mut RandomSource) -> (f64, f64) {
    let m = front[0].len();
    let mut hits = 0usize;
    let mut s = vec![0.0; m];
    for _ in 0..samples {
        for v in s.iter_mut() {
            *v = r * rng.uniform();
        }
        if front.iter().any(|p| p.iter().zip(&s).all(|(a, b)| a <= b)) {
            hits += 1;
        }
    }
    let vol = r.powi(m as i32);
    let q = hits as f64 / samples as f64;
    (q * vol, vol * (q * (1.0 - q) / samples as f64).sqrt())
}

#[test]
fn hypervolume_agrees_with_monte_carlo() {
    let mut rng = RandomSource::new(8);
    for m in 3..=5 {
        for _ in 0..4 {
            let front = random_front(&mut rng, m, 20);
            let exact = hypervolume(&front, &vec![1.1; m]).unwrap();
            let (est, se) = monte_carlo(&front, 1.1, 1_000_000, &mut rng);
            assert!((exact - est).abs() <= 3.0 * se + 1e-12, "m={m}: {exact} vs {est} ± {se}");
        }
    }
}

/// Exact two-sided permutation p-value of the rank sum, over every split
/// of the pooled sample.
fn permutation_p(a: &[f64], b: &[f64]) -> f64 {
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let n = pooled.len();
    let ranks: Vec<f64> = pooled
        .iter()
        .map(|v| {
            let below = pooled.iter().filter(|w| *w < v).count() as f64;
            let equal = pooled.iter().filter(|w| *w == v).count() as f64;
            below + (equal + 1.0) / 2.0
        })
        .collect();
    let mean = a.len() as f64 * (n as f64 + 1.0) / 2.0;
    let observed = (ranks[..a.len()].iter().sum::<f64>() - mean).abs();
    let (mut extreme, mut total) = (0u64, 0u64);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != a.len() {
            continue;
        }
        total += 1;
        let w: f64 = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| ranks[i]).sum();
        if (w - mean).abs() >= observed - 1e-9 {
            extreme += 1;
        }
    }
    assert_eq!(total, 12_870);
    extreme as f64 / total as f64
}

#[test]
fn wilcoxon_agrees_with_permutation_oracle() {
    let mut rng = RandomSource::new(3);
    for case in 0..40 {
        let shift = 0.25 * (case % 5) as f64;
        let a: Vec<f64> = (0..8).map(|_| rng.uniform()).collect();
        let mut b: Vec<f64> = (0..8).map(|_| rng.uniform() + shift).collect();
        if case % 4 == 0 {
            // Introduce ties.
            b[0] = a[0];
            b[1] = a[1];
        }
        let approx = wilcoxon_rank_sum(&a, &b).unwrap();
        let exact = permutation_p(&a, &b);
        assert!((approx - exact).abs() < 0.02, "case {case}: {approx} vs {exact}");
    }
}

#[test]
fn aps_of_example_matrix_is_exact() {
    assert_eq!(
        aps(&[[2, 1, 0], [0, 0, 2], [1, 0, 1], [2, 0, 1]]).unwrap(),
        vec![1.25, 0.25, 1.0]
    );
}

fn point(m: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0..1.0f64, m)
}

fn front() -> impl Strategy<Value = Vec<Vec<f64>>> {
    (2usize..=5).prop_flat_map(|m| prop::collection::vec(point(m), 1..12))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hypervolume_permutation_and_duplication_invariant(f in front(), seed in any::<u64>()) {
        let r = vec![1.1; f[0].len()];
        let base = hypervolume(&f, &r).unwrap();
        let mut g = f.clone();
        g.extend(f.iter().take(3).cloned());
        RandomSource::new(seed).shuffle(&mut g);
        prop_assert!((hypervolume(&g, &r).unwrap() - base).abs() < 1e-12);
    }

    #[test]
    fn hypervolume_monotone_and_bounded(f in front(), extra in point(5)) {
        let m = f[0].len();
        let r = vec![1.1; m];
        let base = hypervolume(&f, &r).unwrap();
        prop_assert!(base >= 0.0 && base <= 1.1f64.powi(m as i32) + 1e-12);
        let mut g = f.clone();
        g.push(extra[..m].to_vec());
        prop_assert!(hypervolume(&g, &r).unwrap() >= base - 1e-12);
    }

    #[test]
    fn wilcoxon_is_symmetric(a in prop::collection::vec(0.0..1.0f64, 2..20), b in prop::collection::vec(0.0..1.0f64, 2..20)) {
        let p = wilcoxon_rank_sum(&a, &b).unwrap();
        prop_assert_eq!(p, wilcoxon_rank_sum(&b, &a).unwrap());
        prop_assert!((0.0..=1.0).contains(&p));
    }

    #[test]
    fn no_mutual_outperformance(samples in prop::collection::vec(prop::collection::vec(0.0..1.0f64, 5..15), 2..6)) {
        let scores = performance_scores(&samples, ALPHA).unwrap();
        let n = samples.len();
        prop_assert!(scores.iter().all(|&s| s < n));
        for a in &samples {
            for b in &samples {
                prop_assert!(!(outperforms(a, b, ALPHA).unwrap() && outperforms(b, a, ALPHA).unwrap()));
            }
        }
    }
}
