#![allow(dead_code)]

use littlegroup::lie_core::{CMatrix4, RMatrix4};
use num_complex::Complex64;

pub const SERIES_TERMS: usize = 20;

/// `exp(−iθG)` from a 20-term Taylor series, applied after scaling the
/// argument down to unit norm and undone by repeated squaring.
pub fn series_exp(g: &CMatrix4, theta: f64) -> RMatrix4 {
    let x = g * Complex64::new(0.0, -theta);
    let norm = x.iter().map(|c| c.norm()).sum::<f64>().max(1e-300);
    let squarings = norm.log2().ceil().max(0.0) as u32;
    let scaled = x * Complex64::new(0.5f64.powi(squarings as i32), 0.0);
    let mut term = CMatrix4::identity();
    let mut sum = CMatrix4::identity();
    for k in 1..SERIES_TERMS {
        term = term * scaled * Complex64::new(1.0 / k as f64, 0.0);
        sum += term;
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    sum.map(|c| c.re)
}

pub fn max_abs_diff(a: &RMatrix4, b: &RMatrix4) -> f64 {
    (a - b).iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// Plain Gaussian density moment oracle on a fine grid, independent of the
/// crate's grid sampler.
pub fn brute_force_moments<F: Fn(f64, f64) -> f64>(f: F, half: f64, n: usize) -> [[f64; 2]; 2] {
    let h = 2.0 * half / (n - 1) as f64;
    let (mut m0, mut maa, mut mbb, mut mab) = (0.0, 0.0, 0.0, 0.0);
    for i in 0..n {
        let a = -half + i as f64 * h;
        for j in 0..n {
            let b = -half + j as f64 * h;
            let d = f(a, b).powi(2);
            m0 += d;
            maa += a * a * d;
            mbb += b * b * d;
            mab += a * b * d;
        }
    }
    [[maa / m0, mab / m0], [mab / m0, mbb / m0]]
}
