//! Exact solution of the linearized chain in the discrete sine basis.
//!
//! With gap deviations q_k = x_{k+1} - x_k - a (k = 1..N-1) the quadratic
//! nearest-neighbor chain decouples: the vectors y_j(k) = sqrt(2/N) sin(pi j k / N)
//! diagonalize the Dirichlet difference operator, each mode oscillating at
//!
//!   omega_j = 2 omega sin(pi j / 2N).
//!
//! Projecting the initial deviations and velocity differences once gives
//! amplitudes (Q_j, P_j); positions and velocities at any later time follow in
//! closed form, with no time stepping and no accumulated error. The first
//! particle's worldline is recovered separately by integrating its equation of
//! motion x1'' = omega^2 q_1 mode by mode.

use crate::dst::{dst1_naive, sin_table, Dst1};
use crate::kernels::{kernel_cos, kernel_cos_dt, kernel_sin, kernel_sin_dt};
use crate::model::{ChainParams, ChainState};
use crate::{ChainError, Result};

/// Discrete sine basis of the chain with N particles (N - 1 internal modes).
pub struct SpectralBasis {
    n: usize,
    omega: f64,
    freqs: Vec<f64>,
    /// sin(pi k / N) for k in 0..2N; index arithmetic stays exact mod 2N.
    table: Vec<f64>,
    dst: Dst1,
}

impl SpectralBasis {
    pub fn new(params: &ChainParams) -> Self {
        let n = params.n();
        let omega = params.omega();
        let freqs = (1..n)
            .map(|j| 2.0 * omega * (std::f64::consts::PI * j as f64 / (2.0 * n as f64)).sin())
            .collect();
        Self {
            n,
            omega,
            freqs,
            table: sin_table(n),
            dst: Dst1::new(n - 1),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// omega_j for 1-based mode index j.
    pub fn frequency(&self, j: usize) -> f64 {
        self.freqs[j - 1]
    }

    pub fn frequencies(&self) -> &[f64] {
        &self.freqs
    }

    /// Component k of eigenvector j, both 1-based, k in 1..N-1.
    pub fn eigenvector_component(&self, j: usize, k: usize) -> f64 {
        let norm = (2.0 / self.n as f64).sqrt();
        norm * self.table[(j * k) % (2 * self.n)]
    }
}

/// Mode amplitudes of one initial state, ready for evaluation at any time.
pub struct ModeCoefficients {
    basis: SpectralBasis,
    /// Deviation amplitudes Q_j.
    q: Vec<f64>,
    /// Velocity-difference amplitudes P_j.
    p: Vec<f64>,
    a: f64,
    x1_0: f64,
    v1_0: f64,
}

impl ModeCoefficients {
    /// Projects a state onto the sine basis (FFT-backed transform).
    pub fn project(state: &ChainState, params: &ChainParams) -> Result<Self> {
        Self::project_impl(state, params, false)
    }

    /// Same projection through the O(N^2) direct sum, kept as a cross-check.
    pub fn project_naive(state: &ChainState, params: &ChainParams) -> Result<Self> {
        Self::project_impl(state, params, true)
    }

    fn project_impl(state: &ChainState, params: &ChainParams, naive: bool) -> Result<Self> {
        let n = params.n();
        if state.n() != n {
            return Err(ChainError::InvalidParameter(format!(
                "state has {} particles, parameters say {n}",
                state.n()
            )));
        }
        let basis = SpectralBasis::new(params);
        let devs = state.deviations(params);
        let wdiffs: Vec<f64> = state.vel.windows(2).map(|w| w[1] - w[0]).collect();
        let (q, p) = if naive {
            (dst1_naive(&devs), dst1_naive(&wdiffs))
        } else {
            (basis.dst.transform(&devs), basis.dst.transform(&wdiffs))
        };
        Ok(Self {
            basis,
            q,
            p,
            a: params.a(),
            x1_0: state.pos[0],
            v1_0: state.vel[0],
        })
    }

    pub fn basis(&self) -> &SpectralBasis {
        &self.basis
    }

    pub fn amplitudes(&self) -> (&[f64], &[f64]) {
        (&self.q, &self.p)
    }

    fn mode_values(&self, t: f64) -> (Vec<f64>, Vec<f64>) {
        let m = self.q.len();
        let mut amp = Vec::with_capacity(m);
        let mut amp_dt = Vec::with_capacity(m);
        for j in 0..m {
            let w = self.basis.freqs[j];
            let (s, c) = (w * t).sin_cos();
            amp.push(self.q[j] * c + self.p[j] * s / w);
            amp_dt.push(-self.q[j] * w * s + self.p[j] * c);
        }
        (amp, amp_dt)
    }

    /// Gap deviations and their time derivatives at time t.
    pub fn deviations_at(&self, t: f64) -> (Vec<f64>, Vec<f64>) {
        let (amp, amp_dt) = self.mode_values(t);
        (self.basis.dst.transform(&amp), self.basis.dst.transform(&amp_dt))
    }

    /// Direct-sum evaluation of [`ModeCoefficients::deviations_at`].
    pub fn deviations_at_naive(&self, t: f64) -> (Vec<f64>, Vec<f64>) {
        let (amp, amp_dt) = self.mode_values(t);
        (dst1_naive(&amp), dst1_naive(&amp_dt))
    }

    /// Gaps x_{k+1} - x_k at time t.
    pub fn gaps_at(&self, t: f64) -> Vec<f64> {
        self.deviations_at(t).0.iter().map(|q| self.a + q).collect()
    }

    /// Position and velocity of the first particle at time t, from
    ///
    ///   x1(t) = x1(0) + v1(0) t
    ///         + omega^2 sqrt(2/N) sum_j sin(pi j / N) [Q_j Kc(omega_j, t) + P_j Ks(omega_j, t)].
    pub fn first_particle_at(&self, t: f64) -> (f64, f64) {
        let n = self.basis.n;
        let norm = (2.0 / n as f64).sqrt();
        let scale = self.basis.omega * self.basis.omega * norm;
        let mut dx = 0.0;
        let mut dv = 0.0;
        for j in 1..n {
            let w = self.basis.freqs[j - 1];
            let s = self.basis.table[j];
            dx += s * (self.q[j - 1] * kernel_cos(w, t) + self.p[j - 1] * kernel_sin(w, t));
            dv += s * (self.q[j - 1] * kernel_cos_dt(w, t) + self.p[j - 1] * kernel_sin_dt(w, t));
        }
        (
            self.x1_0 + self.v1_0 * t + scale * dx,
            self.v1_0 + scale * dv,
        )
    }

    /// Full chain state at time t: first particle plus prefix sums of gaps and
    /// velocity differences.
    pub fn positions_at(&self, t: f64) -> ChainState {
        let n = self.basis.n;
        let (x1, v1) = self.first_particle_at(t);
        let (dev, dev_dt) = self.deviations_at(t);
        let mut pos = Vec::with_capacity(n);
        let mut vel = Vec::with_capacity(n);
        pos.push(x1);
        vel.push(v1);
        for k in 0..n - 1 {
            pos.push(pos[k] + self.a + dev[k]);
            vel.push(vel[k] + dev_dt[k]);
        }
        ChainState { t, pos, vel }
    }
}

/// Energy of the quadratic nearest-neighbor chain,
/// sum v_k^2 / 2 + (omega^2 / 2) sum q_k^2. Conserved by the exact flow.
pub fn total_energy(state: &ChainState, params: &ChainParams) -> f64 {
    let kinetic: f64 = state.vel.iter().map(|v| 0.5 * v * v).sum();
    let w2 = params.omega() * params.omega();
    let potential: f64 = state
        .deviations(params)
        .iter()
        .map(|q| 0.5 * w2 * q * q)
        .sum();
    kinetic + potential
}
