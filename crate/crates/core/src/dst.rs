//! Type-I discrete sine transform in the orthonormal convention.
//!
//! For input x of length n and N = n + 1 the transform is
//!
//!   X_j = sqrt(2/N) * sum_{i=1..n} x_i sin(pi i j / N),   j = 1..n.
//!
//! With this scaling the transform matrix is symmetric and orthogonal, so the
//! transform is its own inverse. Two routes are provided: a naive O(n^2)
//! summation used as the reference oracle, and an FFT-backed O(n log n) path
//! that embeds the input into an odd extension of length 2N. The FFT length
//! 2N can be any integer (prime N is fine), which matters because chain sizes
//! are not restricted to powers of two.

use rustfft::{num_complex::Complex, Fft, FftPlanner};
use std::sync::Arc;

/// Reference O(n^2) transform.
///
/// Sine arguments are reduced modulo the 2N periodicity in integer arithmetic
/// before any floating-point multiplication, so accuracy does not degrade for
/// large i*j products.
pub fn dst1_naive(input: &[f64]) -> Vec<f64> {
    let n = input.len();
    let den = n + 1;
    let table = sin_table(den);
    let scale = (2.0 / den as f64).sqrt();
    let mut out = vec![0.0; n];
    for (j, slot) in out.iter_mut().enumerate() {
        let j1 = j + 1;
        let mut acc = 0.0;
        for (i, &x) in input.iter().enumerate() {
            let idx = ((i + 1) * j1) % (2 * den);
            acc += x * table[idx];
        }
        *slot = scale * acc;
    }
    out
}

/// Table of sin(pi k / den) for k in [0, 2*den).
pub(crate) fn sin_table(den: usize) -> Vec<f64> {
    let mut table = Vec::with_capacity(2 * den);
    for k in 0..2 * den {
        table.push((std::f64::consts::PI * k as f64 / den as f64).sin());
    }
    table
}

/// FFT-backed transform with a reusable plan.
pub struct Dst1 {
    len: usize,
    fft: Arc<dyn Fft<f64>>,
    scale: f64,
}

impl Dst1 {
    pub fn new(len: usize) -> Self {
        assert!(len >= 1, "transform length must be positive");
        let mut planner = FftPlanner::new();
        let fft = planner.plan_fft_forward(2 * (len + 1));
        let scale = (2.0 / (len + 1) as f64).sqrt();
        Self { len, fft, scale }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Transform one vector. Scratch buffers are local so calls may run
    /// concurrently on a shared plan.
    pub fn transform(&self, input: &[f64]) -> Vec<f64> {
        assert_eq!(input.len(), self.len, "input length mismatch");
        let den = self.len + 1;
        let m = 2 * den;
        let mut buf = vec![Complex::new(0.0, 0.0); m];
        for (i, &x) in input.iter().enumerate() {
            buf[i + 1].re = x;
            buf[m - 1 - i].re = -x;
        }
        let mut scratch = vec![Complex::new(0.0, 0.0); self.fft.get_inplace_scratch_len()];
        self.fft.process_with_scratch(&mut buf, &mut scratch);
        // The odd extension turns the FFT bin j into -2i * sum x_i sin(pi i j / den).
        (1..den).map(|j| -0.5 * buf[j].im * self.scale).collect()
    }
}
