//! Continuum limit of the chain: the wave equation for the gap field, the
//! Lagrangian flow map it generates, and the Eulerian gas fields.
//!
//! As N grows the gap deviations converge to N^-1 q(t, z) where q solves
//!
//!   q_tt = omega'^2 q_zz,   q(t, 0) = q(t, 1) = 0,
//!
//! with the profile data as initial condition. Material labels z in [0, 1]
//! move along the flow map G(t, z); its z-derivative 1 + q(t, z) is the local
//! specific volume, which turns the label dynamics into a one-dimensional gas
//! with density, velocity and pressure fields satisfying the continuity and
//! Euler equations.

use crate::kernels::{kernel_cos, kernel_cos_dt, kernel_sin, kernel_sin_dt};
use crate::model::Profile;
use crate::quad::{self, CumulativeIntegral};
use crate::{ChainError, Result};
use std::f64::consts::PI;

/// One standing mode of the gap field: amplitude pair (a, b) at angular
/// frequency w = m pi omega'.
#[derive(Clone, Copy, Debug)]
pub struct WaveMode {
    pub m: u32,
    pub a: f64,
    pub b: f64,
    pub w: f64,
}

impl WaveMode {
    /// T_m(t) = a cos(w t) + b sin(w t) / w.
    fn at(&self, t: f64) -> f64 {
        let (s, c) = (self.w * t).sin_cos();
        self.a * c + self.b * s / self.w
    }

    fn at_dt(&self, t: f64) -> f64 {
        let (s, c) = (self.w * t).sin_cos();
        -self.a * self.w * s + self.b * c
    }
}

/// Solution of the boundary-value wave problem as a finite sine series.
#[derive(Clone, Debug)]
pub struct WaveSolution {
    omega_prime: f64,
    modes: Vec<WaveMode>,
}

impl WaveSolution {
    /// Reads the mode amplitudes straight off a sine-series profile:
    /// a_m = epsilon c_m from X, b_m = d_m from V. Exact, no quadrature.
    pub fn from_profile(profile: &Profile, omega_prime: f64) -> Result<Self> {
        let Some((x_modes, epsilon)) = profile.x_modes() else {
            return Err(ChainError::NotSerializable(
                "profile has no sine-series form; use the quadrature constructor".into(),
            ));
        };
        let v_modes = profile.v_modes().unwrap();
        let mut by_mode: std::collections::BTreeMap<u32, (f64, f64)> = Default::default();
        for &(m, c) in x_modes {
            by_mode.entry(m).or_insert((0.0, 0.0)).0 = epsilon * c;
        }
        for &(m, d) in v_modes {
            by_mode.entry(m).or_insert((0.0, 0.0)).1 = d;
        }
        let modes = by_mode
            .into_iter()
            .map(|(m, (a, b))| WaveMode {
                m,
                a,
                b,
                w: m as f64 * PI * omega_prime,
            })
            .collect();
        Ok(Self { omega_prime, modes })
    }

    /// Projects an arbitrary profile onto the sine basis by quadrature,
    /// a_m = 2 Integral (X - 1) sin(pi m y), b_m = 2 Integral V sin(pi m y),
    /// stopping once three consecutive modes contribute below 1e-12 (or at
    /// `max_modes`).
    pub fn from_profile_quadrature(
        profile: &Profile,
        omega_prime: f64,
        max_modes: u32,
    ) -> Self {
        let mut modes = Vec::new();
        let mut quiet = 0;
        for m in 1..=max_modes {
            let panels = (2048 * m as usize).min(1 << 17);
            let a = 2.0 * quad::integrate(
                &|y: f64| (profile.x(y) - 1.0) * (PI * m as f64 * y).sin(),
                0.0,
                1.0,
                panels,
            );
            let b = 2.0 * quad::integrate(
                &|y: f64| profile.v(y) * (PI * m as f64 * y).sin(),
                0.0,
                1.0,
                panels,
            );
            let w = m as f64 * PI * omega_prime;
            if a.abs() + b.abs() / w < 1e-12 {
                quiet += 1;
                if quiet >= 3 {
                    break;
                }
            } else {
                quiet = 0;
                modes.push(WaveMode { m, a, b, w });
            }
        }
        Self { omega_prime, modes }
    }

    pub fn omega_prime(&self) -> f64 {
        self.omega_prime
    }

    pub fn modes(&self) -> &[WaveMode] {
        &self.modes
    }

    /// Highest mode number present; 0 for the trivial solution.
    pub fn max_mode(&self) -> u32 {
        self.modes.iter().map(|md| md.m).max().unwrap_or(0)
    }

    /// q(t, z).
    pub fn q(&self, t: f64, z: f64) -> f64 {
        self.modes
            .iter()
            .map(|md| md.at(t) * (md.m as f64 * PI * z).sin())
            .sum()
    }

    /// dq/dt.
    pub fn q_t(&self, t: f64, z: f64) -> f64 {
        self.modes
            .iter()
            .map(|md| md.at_dt(t) * (md.m as f64 * PI * z).sin())
            .sum()
    }

    /// dq/dz.
    pub fn q_z(&self, t: f64, z: f64) -> f64 {
        self.modes
            .iter()
            .map(|md| md.at(t) * (md.m as f64 * PI) * (md.m as f64 * PI * z).cos())
            .sum()
    }

    /// d2q/dt2; equals omega'^2 q_zz mode by mode.
    pub fn q_tt(&self, t: f64, z: f64) -> f64 {
        self.modes
            .iter()
            .map(|md| -md.w * md.w * md.at(t) * (md.m as f64 * PI * z).sin())
            .sum()
    }

    /// d2q/dz2.
    pub fn q_zz(&self, t: f64, z: f64) -> f64 {
        self.modes
            .iter()
            .map(|md| {
                let k = md.m as f64 * PI;
                -md.at(t) * k * k * (k * z).sin()
            })
            .sum()
    }

    /// Integral_0^z q(t, s) ds, term by term.
    pub fn q_int(&self, t: f64, z: f64) -> f64 {
        self.modes
            .iter()
            .map(|md| {
                let k = md.m as f64 * PI;
                md.at(t) * (1.0 - (k * z).cos()) / k
            })
            .sum()
    }

    /// d/dt of [`WaveSolution::q_int`].
    pub fn q_int_dt(&self, t: f64, z: f64) -> f64 {
        self.modes
            .iter()
            .map(|md| {
                let k = md.m as f64 * PI;
                md.at_dt(t) * (1.0 - (k * z).cos()) / k
            })
            .sum()
    }
}

/// Eulerian gas fields at one point (t, y) of the occupied interval.
#[derive(Clone, Copy, Debug)]
pub struct EulerianFields {
    /// Particle density relative to the initial count, rho = 1 / (1 + q).
    pub density: f64,
    /// Flow velocity u = dG/dt at the material label passing through y.
    pub velocity: f64,
    /// Pressure p = omega'^2 (1 - 1/rho) = -omega'^2 q.
    pub pressure: f64,
    /// Acceleration field omega'^2 dq/dz, the continuum force per particle.
    pub force: f64,
    /// Potential energy density omega'^2 q^2 / 2.
    pub potential_energy: f64,
    /// Kinetic energy density u^2 / 2.
    pub kinetic_energy: f64,
    /// Fraction of particles to the left of y; equals the material label.
    pub mass_fraction: f64,
}

/// Lagrangian flow map G(t, z) of the continuum chain and everything derived
/// from it. The label z is the limiting particle index fraction k/N; G(t, z)
/// is that particle's position.
pub struct ContinuumMap {
    wave: WaveSolution,
    profile: Profile,
    v: f64,
    cum: Option<CumulativeIntegral>,
    l0: f64,
}

/// Iteration cap for the monotone root solves.
const MAX_SOLVE_ITER: usize = 200;

impl ContinuumMap {
    /// Builds the map for a profile; the drift `v` is the common initial
    /// velocity of the leftmost particle.
    pub fn new(profile: &Profile, omega_prime: f64, v: f64) -> Result<Self> {
        if !(omega_prime > 0.0) || !omega_prime.is_finite() {
            return Err(ChainError::InvalidParameter(format!(
                "omega' must be positive and finite, got {omega_prime}"
            )));
        }
        let (wave, cum) = if profile.x_modes().is_some() {
            (WaveSolution::from_profile(profile, omega_prime)?, None)
        } else {
            let f = {
                let p = profile.clone();
                move |y: f64| p.x(y) - 1.0
            };
            (
                WaveSolution::from_profile_quadrature(profile, omega_prime, 512),
                Some(CumulativeIntegral::build(&f, 0.0, 1.0, quad::PANELS)),
            )
        };
        let mut map = Self {
            wave,
            profile: profile.clone(),
            v,
            cum,
            l0: 0.0,
        };
        map.l0 = map.f_of_z(1.0);
        Ok(map)
    }

    pub fn wave(&self) -> &WaveSolution {
        &self.wave
    }

    pub fn omega_prime(&self) -> f64 {
        self.wave.omega_prime
    }

    /// Initial position of material label z: f(z) = Integral_0^z X.
    pub fn f_of_z(&self, z: f64) -> f64 {
        match self.profile.x_modes() {
            Some((modes, epsilon)) => {
                let series: f64 = modes
                    .iter()
                    .map(|&(m, c)| {
                        let k = m as f64 * PI;
                        c * (1.0 - (k * z).cos()) / k
                    })
                    .sum();
                z + epsilon * series
            }
            None => {
                let p = self.profile.clone();
                z + self.cum.as_ref().unwrap().eval(&move |y| p.x(y) - 1.0, z)
            }
        }
    }

    /// Inverts f on [0, 1]: the label whose initial position is x.
    pub fn z_of_x(&self, x: f64) -> Result<f64> {
        self.invert(x, 0.0, self.l0, |map, z| map.f_of_z(z), |map, z| {
            map.profile.x(z)
        })
    }

    /// Length of the occupied interval at time t, 1 + Integral_0^1 q.
    pub fn chain_length(&self, t: f64) -> f64 {
        1.0 + self.wave.q_int(t, 1.0)
    }

    /// Occupied interval [G(t, 0), G(t, 1)].
    pub fn domain(&self, t: f64) -> (f64, f64) {
        let left = self.g0(t);
        (left, left + self.chain_length(t))
    }

    /// Position of the left edge,
    /// g0(t) = v t + omega'^2 sum_m (m pi) [a_m Kc(w_m, t) + b_m Ks(w_m, t)].
    pub fn g0(&self, t: f64) -> f64 {
        let w2 = self.wave.omega_prime * self.wave.omega_prime;
        let series: f64 = self
            .wave
            .modes
            .iter()
            .map(|md| {
                let k = md.m as f64 * PI;
                k * (md.a * kernel_cos(md.w, t) + md.b * kernel_sin(md.w, t))
            })
            .sum();
        self.v * t + w2 * series
    }

    /// Velocity of the left edge.
    pub fn g0_dt(&self, t: f64) -> f64 {
        let w2 = self.wave.omega_prime * self.wave.omega_prime;
        let series: f64 = self
            .wave
            .modes
            .iter()
            .map(|md| {
                let k = md.m as f64 * PI;
                k * (md.a * kernel_cos_dt(md.w, t) + md.b * kernel_sin_dt(md.w, t))
            })
            .sum();
        self.v + w2 * series
    }

    /// The flow map G(t, z) = g0(t) + z + Integral_0^z q.
    pub fn g(&self, t: f64, z: f64) -> f64 {
        self.g0(t) + z + self.wave.q_int(t, z)
    }

    /// dG/dt, the velocity of label z.
    pub fn g_t(&self, t: f64, z: f64) -> f64 {
        self.g0_dt(t) + self.wave.q_int_dt(t, z)
    }

    /// dG/dz = 1 + q, the specific volume at label z.
    pub fn g_z(&self, t: f64, z: f64) -> f64 {
        1.0 + self.wave.q(t, z)
    }

    /// d2G/dz2 = dq/dz.
    pub fn g_zz(&self, t: f64, z: f64) -> f64 {
        self.wave.q_z(t, z)
    }

    /// d2G/dt2; equals omega'^2 d2G/dz2 identically.
    pub fn g_tt(&self, t: f64, z: f64) -> f64 {
        let w2 = self.wave.omega_prime * self.wave.omega_prime;
        w2 * self.wave.q_z(t, z)
    }

    /// The label occupying position y at time t; G(t, .) is strictly
    /// increasing, so the root is unique.
    pub fn material_label(&self, t: f64, y: f64) -> Result<f64> {
        let left = self.g0(t);
        let right = left + self.chain_length(t);
        self.invert(y, left, right, |map, z| map.g(t, z), |map, z| map.g_z(t, z))
    }

    /// Initial position of the label found by [`ContinuumMap::material_label`].
    pub fn x_of_ty(&self, t: f64, y: f64) -> Result<f64> {
        Ok(self.f_of_z(self.material_label(t, y)?))
    }

    /// All Eulerian fields at (t, y).
    pub fn fields(&self, t: f64, y: f64) -> Result<EulerianFields> {
        let z = self.material_label(t, y)?;
        let w2 = self.wave.omega_prime * self.wave.omega_prime;
        let q = self.wave.q(t, z);
        let u = self.g_t(t, z);
        Ok(EulerianFields {
            density: 1.0 / (1.0 + q),
            velocity: u,
            pressure: -w2 * q,
            force: w2 * self.wave.q_z(t, z),
            potential_energy: 0.5 * w2 * q * q,
            kinetic_energy: 0.5 * u * u,
            mass_fraction: z,
        })
    }

    /// Safeguarded Newton iteration for the monotone maps f and G(t, .).
    fn invert(
        &self,
        target: f64,
        left: f64,
        right: f64,
        value: impl Fn(&Self, f64) -> f64,
        slope: impl Fn(&Self, f64) -> f64,
    ) -> Result<f64> {
        let span = right - left;
        let slack = 1e-9 * span.abs().max(1.0);
        if target < left - slack || target > right + slack {
            return Err(ChainError::OutOfDomain {
                value: target,
                domain: format!("[{left:.12}, {right:.12}]"),
            });
        }
        let scale = target.abs().max(1.0);
        let (mut zlo, mut zhi) = (0.0_f64, 1.0_f64);
        let mut z = ((target - left) / span).clamp(0.0, 1.0);
        for _ in 0..MAX_SOLVE_ITER {
            let r = value(self, z) - target;
            if r > 0.0 {
                zhi = zhi.min(z);
            } else {
                zlo = zlo.max(z);
            }
            let mut z_next = z - r / slope(self, z);
            if !(z_next > zlo && z_next < zhi) {
                z_next = 0.5 * (zlo + zhi);
            }
            if (z_next - z).abs() < 1e-13 && r.abs() < 1e-12 * scale {
                return Ok(z_next.clamp(0.0, 1.0));
            }
            z = z_next;
        }
        Err(ChainError::NoConvergence(MAX_SOLVE_ITER))
    }
}
