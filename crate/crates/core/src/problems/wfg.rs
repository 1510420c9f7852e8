//! WFG toolkit: normalization, transformation functions, shape functions.
//!
//! Every transformation output is passed through [`to_01`], which snaps
//! values within 1e-10 outside `[0, 1]` back onto the interval, as the
//! toolkit's reference code does.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use libm::{ceil, cos, fabs, floor, pow, sin};

const EPS: f64 = 1.0e-10;
const PARAM_A: f64 = 0.98 / 49.98;

fn to_01(a: f64) -> f64 {
    if (-EPS..=0.0).contains(&a) {
        0.0
    } else if (1.0..=1.0 + EPS).contains(&a) {
        1.0
    } else {
        a
    }
}

fn b_poly(y: f64, alpha: f64) -> f64 {
    to_01(pow(y, alpha))
}

fn b_flat(y: f64, a: f64, b: f64, c: f64) -> f64 {
    let t1 = floor(y - b).min(0.0) * a * (b - y) / b;
    let t2 = floor(c - y).min(0.0) * (1.0 - a) * (y - c) / (1.0 - c);
    to_01(a + t1 - t2)
}

fn b_param(y: f64, u: f64, a: f64, b: f64, c: f64) -> f64 {
    let v = a - (1.0 - 2.0 * u) * fabs(floor(0.5 - u) + a);
    to_01(pow(y, b + (c - b) * v))
}

fn s_linear(y: f64, a: f64) -> f64 {
    to_01(fabs(y - a) / fabs(floor(a - y) + a))
}

fn s_decept(y: f64, a: f64, b: f64, c: f64) -> f64 {
    let t1 = floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b);
    let t2 = floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
    to_01(1.0 + (fabs(y - a) - b) * (t1 + t2 + 1.0 / b))
}

fn s_multi(y: f64, a: f64, b: f64, c: f64) -> f64 {
    let t1 = fabs(y - c) / (2.0 * (floor(c - y) + c));
    let t2 = (4.0 * a + 2.0) * PI * (0.5 - t1);
    to_01((1.0 + cos(t2) + 4.0 * b * t1 * t1) / (b + 2.0))
}

fn r_sum(y: &[f64], w: &[f64]) -> f64 {
    let num: f64 = y.iter().zip(w).map(|(a, b)| a * b).sum();
    let den: f64 = w.iter().sum();
    to_01(num / den)
}

fn r_sum_unit(y: &[f64]) -> f64 {
    to_01(y.iter().sum::<f64>() / y.len() as f64)
}

fn r_nonsep(y: &[f64], a: usize) -> f64 {
    let n = y.len();
    let mut num = 0.0;
    for j in 0..n {
        num += y[j];
        for k in 0..a - 1 {
            num += fabs(y[j] - y[(j + k + 1) % n]);
        }
    }
    let half = ceil(a as f64 / 2.0);
    let den = n as f64 * half * (1.0 + 2.0 * a as f64 - 2.0 * half) / a as f64;
    to_01(num / den)
}

fn linear(x: &[f64], m: usize) -> f64 {
    let len = x.len();
    let mut r: f64 = x[..len - m].iter().product();
    if m != 1 {
        r *= 1.0 - x[len - m];
    }
    to_01(r)
}

fn convex(x: &[f64], m: usize) -> f64 {
    let len = x.len();
    let mut r: f64 = x[..len - m].iter().map(|&v| 1.0 - cos(v * FRAC_PI_2)).product();
    if m != 1 {
        r *= 1.0 - sin(x[len - m] * FRAC_PI_2);
    }
    to_01(r)
}

fn concave(x: &[f64], m: usize) -> f64 {
    let len = x.len();
    let mut r: f64 = x[..len - m].iter().map(|&v| sin(v * FRAC_PI_2)).product();
    if m != 1 {
        r *= cos(x[len - m] * FRAC_PI_2);
    }
    to_01(r)
}

fn mixed(x: &[f64], a: f64, alpha: f64) -> f64 {
    let t = 2.0 * a * PI;
    to_01(pow(1.0 - x[0] - cos(t * x[0] + FRAC_PI_2) / t, alpha))
}

fn disc(x: &[f64], a: f64, alpha: f64, beta: f64) -> f64 {
    let c = cos(a * pow(x[0], beta) * PI);
    to_01(1.0 - pow(x[0], alpha) * c * c)
}

/// `z_i / (2 i)` for 1-based `i`.
fn normalize(z: &[f64]) -> Vec<f64> {
    z.iter()
        .enumerate()
        .map(|(i, &v)| v / (2.0 * (i + 1) as f64))
        .collect()
}

/// Reduces to `M` values: `M - 1` position groups of size `k / (M - 1)`
/// and one distance group, each combined by `reduce`.
fn reduce_groups(y: &[f64], k: usize, m: usize, mut reduce: impl FnMut(usize, usize) -> f64) -> Vec<f64> {
    let gap = k / (m - 1);
    let mut t: Vec<f64> = (0..m - 1).map(|i| reduce(i * gap, (i + 1) * gap)).collect();
    t.push(reduce(k, y.len()));
    t
}

#[derive(Clone, Copy)]
enum Shape {
    Convex { last_mixed: bool },
    Concave,
    Linear,
}

/// Maps the reduced parameters to objectives. `degenerate` fixes
/// `A = (1, 0, ..., 0)`, otherwise all `A_i = 1`.
fn finish(t: &[f64], shape: Shape, degenerate: bool, f: &mut [f64]) {
    let m = t.len();
    let tm = t[m - 1];
    let mut x: Vec<f64> = (0..m - 1)
        .map(|i| {
            let a = if degenerate && i > 0 { 0.0 } else { 1.0 };
            tm.max(a) * (t[i] - 0.5) + 0.5
        })
        .collect();
    x.push(tm);
    for (idx, fi) in f.iter_mut().enumerate() {
        let mm = idx + 1;
        let h = match shape {
            Shape::Convex { last_mixed } if mm == m => {
                if last_mixed {
                    mixed(&x, 5.0, 1.0)
                } else {
                    disc(&x, 5.0, 1.0, 1.0)
                }
            }
            Shape::Convex { .. } => convex(&x, mm),
            Shape::Concave => concave(&x, mm),
            Shape::Linear => linear(&x, mm),
        };
        *fi = tm + 2.0 * mm as f64 * h;
    }
}

fn distance_s_linear(y: &mut [f64], k: usize) {
    for v in &mut y[k..] {
        *v = s_linear(*v, 0.35);
    }
}

/// Shared by WFG2 and WFG3: pairwise non-separable reduction of the
/// distance parameters followed by unweighted sums.
fn wfg2_reduce(z: &[f64], k: usize, m: usize) -> Vec<f64> {
    let mut y = normalize(z);
    distance_s_linear(&mut y, k);
    let l = y.len() - k;
    let mut y2: Vec<f64> = y[..k].to_vec();
    for i in 0..l / 2 {
        y2.push(r_nonsep(&y[k + 2 * i..k + 2 * i + 2], 2));
    }
    reduce_groups(&y2, k, m, |a, b| r_sum_unit(&y2[a..b]))
}

pub(super) fn wfg1(z: &[f64], m: usize, k: usize, f: &mut [f64]) {
    let mut y = normalize(z);
    distance_s_linear(&mut y, k);
    for v in &mut y[k..] {
        *v = b_flat(*v, 0.8, 0.75, 0.85);
    }
    for v in &mut y {
        *v = b_poly(*v, 0.02);
    }
    let w: Vec<f64> = (1..=y.len()).map(|i| 2.0 * i as f64).collect();
    let t = reduce_groups(&y, k, m, |a, b| r_sum(&y[a..b], &w[a..b]));
    finish(&t, Shape::Convex { last_mixed: true }, false, f);
}

pub(super) fn wfg2(z: &[f64], m: usize, k: usize, f: &mut [f64]) {
    let t = wfg2_reduce(z, k, m);
    finish(&t, Shape::Convex { last_mixed: false }, false, f);
}

pub(super) fn wfg3(z: &[f64], m: usize, k: usize, f: &mut [f64]) {
    let t = wfg2_reduce(z, k, m);
    finish(&t, Shape::Linear, true, f);
}

pub(super) fn wfg4(z: &[f64], m: usize, k: usize, f: &mut [f64]) {
    let y: Vec<f64> = normalize(z).into_iter().map(|v| s_multi(v, 30.0, 10.0, 0.35)).collect();
    let t = reduce_groups(&y, k, m, |a, b| r_sum_unit(&y[a..b]));
    finish(&t, Shape::Concave, false, f);
}

pub(super) fn wfg5(z: &[f64], m: usize, k: usize, f: &mut [f64]) {
    let y: Vec<f64> = normalize(z)
        .into_iter()
        .map(|v| s_decept(v, 0.35, 0.001, 0.05))
        .collect();
    let t = reduce_groups(&y, k, m, |a, b| r_sum_unit(&y[a..b]));
    finish(&t, Shape::Concave, false, f);
}

pub(super) fn wfg6(z: &[f64], m: usize, k: usize, f: &mut [f64]) {
    let mut y = normalize(z);
    distance_s_linear(&mut y, k);
    let t = reduce_groups(&y, k, m, |a, b| r_nonsep(&y[a..b], b - a));
    finish(&t, Shape::Concave, false, f);
}

pub(super) fn wfg7(z: &[f64], m: usize, k: usize, f: &mut [f64]) {
    let y = normalize(z);
    let mut y1 = y.clone();
    for i in 0..k {
        let u = r_sum_unit(&y[i + 1..]);
        y1[i] = b_param(y[i], u, PARAM_A, 0.02, 50.0);
    }
    distance_s_linear(&mut y1, k);
    let t = reduce_groups(&y1, k, m, |a, b| r_sum_unit(&y1[a..b]));
    finish(&t, Shape::Concave, false, f);
}

pub(super) fn wfg8(z: &[f64], m: usize, k: usize, f: &mut [f64]) {
    let y = normalize(z);
    let mut y1 = y.clone();
    for i in k..y.len() {
        let u = r_sum_unit(&y[..i]);
        y1[i] = b_param(y[i], u, PARAM_A, 0.02, 50.0);
    }
    distance_s_linear(&mut y1, k);
    let t = reduce_groups(&y1, k, m, |a, b| r_sum_unit(&y1[a..b]));
    finish(&t, Shape::Concave, false, f);
}

pub(super) fn wfg9(z: &[f64], m: usize, k: usize, f: &mut [f64]) {
    let y = normalize(z);
    let n = y.len();
    let mut y1 = y.clone();
    for i in 0..n - 1 {
        let u = r_sum_unit(&y[i + 1..]);
        y1[i] = b_param(y[i], u, PARAM_A, 0.02, 50.0);
    }
    for (i, v) in y1.iter_mut().enumerate() {
        *v = if i < k {
            s_decept(*v, 0.35, 0.001, 0.05)
        } else {
            s_multi(*v, 30.0, 95.0, 0.35)
        };
    }
    let t = reduce_groups(&y1, k, m, |a, b| r_nonsep(&y1[a..b], b - a));
    finish(&t, Shape::Concave, false, f);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transformation_landmarks() {
        // s_linear maps its optimum to zero.
        assert_eq!(s_linear(0.35, 0.35), 0.0);
        // b_flat is flat at A inside [B, C].
        assert!((b_flat(0.8, 0.8, 0.75, 0.85) - 0.8).abs() < 1e-15);
        // s_multi and s_decept have their global minimum at the optimum.
        assert!(s_multi(0.35, 30.0, 10.0, 0.35).abs() < 1e-12);
        assert!(s_decept(0.35, 0.35, 0.001, 0.05).abs() < 1e-12);
        // With A = 1 r_nonsep is the plain mean.
        assert!((r_nonsep(&[0.1, 0.2, 0.3, 0.6], 1) - 0.3).abs() < 1e-15);
    }

    #[test]
    fn shapes_at_corners() {
        let x = [1.0, 0.0];
        assert_eq!(concave(&x, 1), 1.0);
        assert!(concave(&x, 2) < 1e-15);
        assert_eq!(linear(&[0.0, 0.0], 2), 1.0);
        assert!((mixed(&[0.0], 5.0, 1.0) - 1.0).abs() < 1e-12);
        assert!((disc(&[0.0], 5.0, 1.0, 1.0) - 1.0).abs() < 1e-15);
    }
}
