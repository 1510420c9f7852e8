use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use libm::{cos, pow, sin};

fn g_rastrigin(xm: &[f64]) -> f64 {
    let s: f64 = xm
        .iter()
        .map(|&x| (x - 0.5) * (x - 0.5) - cos(20.0 * PI * (x - 0.5)))
        .sum();
    100.0 * (xm.len() as f64 + s)
}

fn g_sphere(xm: &[f64]) -> f64 {
    xm.iter().map(|&x| (x - 0.5) * (x - 0.5)).sum()
}

/// `f_i = scale * prod_{j < M-i} x_j * (1 - x_{M-i})` (0-based `i`).
fn linear_front(pos: &[f64], scale: f64, f: &mut [f64]) {
    let m = f.len();
    for (i, fi) in f.iter_mut().enumerate() {
        let mut v = scale;
        for &p in &pos[..m - 1 - i] {
            v *= p;
        }
        if i > 0 {
            v *= 1.0 - pos[m - 1 - i];
        }
        *fi = v;
    }
}

/// Spherical front over angles `theta` (already in radians).
fn spherical_front(theta: &[f64], scale: f64, f: &mut [f64]) {
    let m = f.len();
    for (i, fi) in f.iter_mut().enumerate() {
        let mut v = scale;
        for &t in &theta[..m - 1 - i] {
            v *= cos(t);
        }
        if i > 0 {
            v *= sin(theta[m - 1 - i]);
        }
        *fi = v;
    }
}

pub(super) fn dtlz1(x: &[f64], m: usize, f: &mut [f64]) {
    let g = g_rastrigin(&x[m - 1..]);
    linear_front(&x[..m - 1], 0.5 * (1.0 + g), f);
}

fn sphere_angles(pos: &[f64], alpha: f64) -> [f64; 4] {
    let mut theta = [0.0; 4];
    for (t, &p) in theta.iter_mut().zip(pos) {
        let p = if alpha == 1.0 { p } else { pow(p, alpha) };
        *t = p * FRAC_PI_2;
    }
    theta
}

pub(super) fn dtlz2(x: &[f64], m: usize, f: &mut [f64]) {
    let g = g_sphere(&x[m - 1..]);
    spherical_front(&sphere_angles(&x[..m - 1], 1.0), 1.0 + g, f);
}

pub(super) fn dtlz3(x: &[f64], m: usize, f: &mut [f64]) {
    let g = g_rastrigin(&x[m - 1..]);
    spherical_front(&sphere_angles(&x[..m - 1], 1.0), 1.0 + g, f);
}

pub(super) fn dtlz4(x: &[f64], m: usize, f: &mut [f64]) {
    let g = g_sphere(&x[m - 1..]);
    spherical_front(&sphere_angles(&x[..m - 1], 100.0), 1.0 + g, f);
}

fn degenerate_angles(pos: &[f64], g: f64) -> [f64; 4] {
    let mut theta = [0.0; 4];
    let scale = FRAC_PI_4 / (1.0 + g);
    for (i, (t, &p)) in theta.iter_mut().zip(pos).enumerate() {
        *t = if i == 0 {
            p * FRAC_PI_2
        } else {
            scale * (1.0 + 2.0 * g * p)
        };
    }
    theta
}

pub(super) fn dtlz5(x: &[f64], m: usize, f: &mut [f64]) {
    let g = g_sphere(&x[m - 1..]);
    spherical_front(&degenerate_angles(&x[..m - 1], g), 1.0 + g, f);
}

pub(super) fn dtlz6(x: &[f64], m: usize, f: &mut [f64]) {
    let g: f64 = x[m - 1..].iter().map(|&v| pow(v, 0.1)).sum();
    spherical_front(&degenerate_angles(&x[..m - 1], g), 1.0 + g, f);
}

pub(super) fn dtlz7(x: &[f64], m: usize, f: &mut [f64]) {
    let xm = &x[m - 1..];
    let g = 1.0 + 9.0 * xm.iter().sum::<f64>() / xm.len() as f64;
    f[..m - 1].copy_from_slice(&x[..m - 1]);
    let h = m as f64
        - x[..m - 1]
            .iter()
            .map(|&fi| fi / (1.0 + g) * (1.0 + sin(3.0 * PI * fi)))
            .sum::<f64>();
    f[m - 1] = (1.0 + g) * h;
}
