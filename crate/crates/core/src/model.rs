//! Chain setup: macroscopic profiles, scaled parameters, particle states and
//! the short-range pair potential.
//!
//! A profile is a pair of smooth functions on [0, 1]: `X` prescribes the
//! initial gap pattern (gap k is `X(k/N)/N`) and `V` the initial velocity
//! increments (`V(k/N)/N`). Admissible profiles pin the endpoints,
//! `X(0) = X(1) = 1` and `V(0) = V(1) = 0`, stay strictly positive, and carry
//! the curvature budgets
//!
//!   alpha = Integral_0^1 |X''|,   beta = Integral_0^1 |V''|.
//!
//! The combination `gamma = 2 alpha + beta / omega'` controls how far gaps can
//! drift from the rest spacing: every gap stays inside
//! `[(1 - gamma)/N, (1 + gamma)/N]` for all time.

use crate::quad;
use crate::rng::SeededRng;
use crate::{ChainError, Result};
use std::fmt::Write as _;
use std::sync::Arc;

/// Grid resolution for the positivity and envelope checks.
pub const CHECK_GRID: usize = 10_000;

/// Tolerance for the pinned endpoint values of admissible profiles.
pub const ENDPOINT_TOL: f64 = 1e-12;

/// Gaps closer than this fraction of the rest spacing count as collisions.
pub const COLLISION_FRACTION: f64 = 1e-3;

type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Finite sine series sum_m c_m sin(pi m y) with analytic derivatives.
#[derive(Clone, Debug, Default)]
struct SineSeries {
    /// (mode, coefficient), strictly increasing in mode.
    modes: Vec<(u32, f64)>,
}

impl SineSeries {
    fn new(modes: &[(u32, f64)]) -> Result<Self> {
        let mut sorted: Vec<(u32, f64)> = modes.iter().copied().filter(|&(_, c)| c != 0.0).collect();
        sorted.sort_by_key(|&(m, _)| m);
        for pair in sorted.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(ChainError::InvalidParameter(format!(
                    "duplicate mode {} in sine series",
                    pair[0].0
                )));
            }
        }
        if sorted.iter().any(|&(m, _)| m == 0) {
            return Err(ChainError::InvalidParameter(
                "sine series modes start at 1".into(),
            ));
        }
        Ok(Self { modes: sorted })
    }

    fn is_zero(&self) -> bool {
        self.modes.is_empty()
    }

    /// d^order/dy^order of the series; order 0..=2 plus 4.
    fn deriv(&self, y: f64, order: u32) -> f64 {
        let pi = std::f64::consts::PI;
        let mut acc = 0.0;
        for &(m, c) in &self.modes {
            let w = pi * m as f64;
            let phase = w * y;
            let factor = w.powi(order as i32);
            let wave = match order % 4 {
                0 => phase.sin(),
                1 => phase.cos(),
                2 => -phase.sin(),
                _ => -phase.cos(),
            };
            acc += c * factor * wave;
        }
        acc
    }
}

#[derive(Clone)]
enum Repr {
    Sine {
        x: SineSeries,
        epsilon: f64,
        v: SineSeries,
        seed: Option<u64>,
    },
    Callbacks {
        x: ScalarFn,
        dx: ScalarFn,
        ddx: ScalarFn,
        v: ScalarFn,
        dv: ScalarFn,
        ddv: ScalarFn,
    },
}

/// Initial-condition profile (X, V) with its curvature budgets.
#[derive(Clone)]
pub struct Profile {
    repr: Repr,
    alpha: f64,
    beta: f64,
}

impl std::fmt::Debug for Profile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = match &self.repr {
            Repr::Sine { x, v, .. } => format!("sine[{} + {} modes]", x.modes.len(), v.modes.len()),
            Repr::Callbacks { .. } => "callbacks".into(),
        };
        f.debug_struct("Profile")
            .field("kind", &kind)
            .field("alpha", &self.alpha)
            .field("beta", &self.beta)
            .finish()
    }
}

impl Profile {
    /// X == 1, V == 0: the perfectly spaced chain.
    pub fn equilibrium() -> Self {
        Self {
            repr: Repr::Sine {
                x: SineSeries::default(),
                epsilon: 0.0,
                v: SineSeries::default(),
                seed: None,
            },
            alpha: 0.0,
            beta: 0.0,
        }
    }

    /// X = 1 + epsilon * sum c_m sin(pi m y), V = 0.
    pub fn sine(x_modes: &[(u32, f64)], epsilon: f64) -> Result<Self> {
        Self::sine_with_velocity(x_modes, epsilon, &[])
    }

    /// X = 1 + epsilon * sum c_m sin(pi m y), V = sum d_m sin(pi m y).
    pub fn sine_with_velocity(
        x_modes: &[(u32, f64)],
        epsilon: f64,
        v_modes: &[(u32, f64)],
    ) -> Result<Self> {
        if !epsilon.is_finite() {
            return Err(ChainError::InvalidParameter("epsilon must be finite".into()));
        }
        let repr = Repr::Sine {
            x: SineSeries::new(x_modes)?,
            epsilon,
            v: SineSeries::new(v_modes)?,
            seed: None,
        };
        Self::finish(repr)
    }

    /// Random multi-mode profile: modes 4..=100 with coefficients s_k / k^2,
    /// s_k drawn uniformly from [0, 1) by a ChaCha8 stream, and amplitude
    /// epsilon = theta / (2 s) where s = Integral |S''| for the unit series.
    /// Since alpha = epsilon * s this makes gamma = 2 alpha = theta exactly,
    /// so theta must lie in (0, 1).
    pub fn random_fourier(seed: u64, theta: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&theta) || theta == 0.0 {
            return Err(ChainError::InvalidParameter(format!(
                "theta must lie in (0, 1), got {theta}"
            )));
        }
        let mut rng = SeededRng::new(seed);
        let mut modes = Vec::with_capacity(97);
        for k in 4u32..=100 {
            let s_k = rng.next_unit();
            modes.push((k, s_k / (k as f64 * k as f64)));
        }
        let series = SineSeries::new(&modes)?;
        let s = quad::integrate_abs(&|y| series.deriv(y, 2), 0.0, 1.0, quad::PANELS);
        let epsilon = theta / (2.0 * s);
        let repr = Repr::Sine {
            x: series,
            epsilon,
            v: SineSeries::default(),
            seed: Some(seed),
        };
        Self::finish(repr)
    }

    /// Arbitrary smooth profile given by callbacks for X, V and their first
    /// two derivatives.
    pub fn from_callbacks(
        x: ScalarFn,
        dx: ScalarFn,
        ddx: ScalarFn,
        v: ScalarFn,
        dv: ScalarFn,
        ddv: ScalarFn,
    ) -> Result<Self> {
        Self::finish(Repr::Callbacks {
            x,
            dx,
            ddx,
            v,
            dv,
            ddv,
        })
    }

    fn finish(repr: Repr) -> Result<Self> {
        let (alpha, beta) = alpha_beta_of(&repr);
        let profile = Self { repr, alpha, beta };
        profile.validate()?;
        Ok(profile)
    }

    fn validate(&self) -> Result<()> {
        for (val, name, want) in [
            (self.x(0.0), "X(0)", 1.0),
            (self.x(1.0), "X(1)", 1.0),
            (self.v(0.0), "V(0)", 0.0),
            (self.v(1.0), "V(1)", 0.0),
        ] {
            if (val - want).abs() > ENDPOINT_TOL {
                return Err(ChainError::ProfileRejected(format!(
                    "{name} = {val:.3e}, expected {want}"
                )));
            }
        }
        for i in 0..=CHECK_GRID {
            let y = i as f64 / CHECK_GRID as f64;
            let x = self.x(y);
            if !(x > 0.0) {
                return Err(ChainError::ProfileRejected(format!(
                    "X({y:.6}) = {x:.6e} is not strictly positive"
                )));
            }
        }
        Ok(())
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn x(&self, y: f64) -> f64 {
        match &self.repr {
            Repr::Sine { x, epsilon, .. } => 1.0 + epsilon * x.deriv(y, 0),
            Repr::Callbacks { x, .. } => x(y),
        }
    }

    pub fn dx(&self, y: f64) -> f64 {
        match &self.repr {
            Repr::Sine { x, epsilon, .. } => epsilon * x.deriv(y, 1),
            Repr::Callbacks { dx, .. } => dx(y),
        }
    }

    pub fn ddx(&self, y: f64) -> f64 {
        match &self.repr {
            Repr::Sine { x, epsilon, .. } => epsilon * x.deriv(y, 2),
            Repr::Callbacks { ddx, .. } => ddx(y),
        }
    }

    /// Fourth derivative of X; only sine-series profiles provide it.
    pub fn d4x(&self, y: f64) -> Option<f64> {
        match &self.repr {
            Repr::Sine { x, epsilon, .. } => Some(epsilon * x.deriv(y, 4)),
            Repr::Callbacks { .. } => None,
        }
    }

    pub fn v(&self, y: f64) -> f64 {
        match &self.repr {
            Repr::Sine { v, .. } => v.deriv(y, 0),
            Repr::Callbacks { v, .. } => v(y),
        }
    }

    pub fn dv(&self, y: f64) -> f64 {
        match &self.repr {
            Repr::Sine { v, .. } => v.deriv(y, 1),
            Repr::Callbacks { dv, .. } => dv(y),
        }
    }

    pub fn ddv(&self, y: f64) -> f64 {
        match &self.repr {
            Repr::Sine { v, .. } => v.deriv(y, 2),
            Repr::Callbacks { ddv, .. } => ddv(y),
        }
    }

    /// Sine-series view: (modes of X, epsilon) when available.
    pub fn x_modes(&self) -> Option<(&[(u32, f64)], f64)> {
        match &self.repr {
            Repr::Sine { x, epsilon, .. } => Some((&x.modes, *epsilon)),
            Repr::Callbacks { .. } => None,
        }
    }

    /// Sine-series view of V when available.
    pub fn v_modes(&self) -> Option<&[(u32, f64)]> {
        match &self.repr {
            Repr::Sine { v, .. } => Some(&v.modes),
            Repr::Callbacks { .. } => None,
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match &self.repr {
            Repr::Sine { seed, .. } => *seed,
            Repr::Callbacks { .. } => None,
        }
    }

    /// Key/value text block for sine-series profiles; numbers are written with
    /// 17 significant digits so a round trip is bit-exact.
    pub fn to_text(&self) -> Result<String> {
        let Repr::Sine {
            x,
            epsilon,
            v,
            seed,
        } = &self.repr
        else {
            return Err(ChainError::NotSerializable(
                "profile is defined by callbacks".into(),
            ));
        };
        let mut out = String::new();
        let _ = writeln!(out, "epsilon = {epsilon:.16e}");
        if let Some(seed) = seed {
            let _ = writeln!(out, "seed = {seed}");
        }
        for &(m, c) in &x.modes {
            let _ = writeln!(out, "mode {m} = {c:.16e}");
        }
        for &(m, c) in &v.modes {
            let _ = writeln!(out, "vmode {m} = {c:.16e}");
        }
        Ok(out)
    }

    /// Inverse of [`Profile::to_text`].
    pub fn from_text(text: &str) -> Result<Self> {
        let mut epsilon = None;
        let mut seed = None;
        let mut x_modes = Vec::new();
        let mut v_modes = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |reason: &str| ChainError::BadProfileText {
                line: idx + 1,
                reason: reason.into(),
            };
            let (key, value) = line.split_once('=').ok_or_else(|| bad("missing '='"))?;
            let (key, value) = (key.trim(), value.trim());
            if key == "epsilon" {
                epsilon = Some(value.parse::<f64>().map_err(|_| bad("bad epsilon"))?);
            } else if key == "seed" {
                seed = Some(value.parse::<u64>().map_err(|_| bad("bad seed"))?);
            } else if let Some(m) = key.strip_prefix("mode ") {
                let m: u32 = m.trim().parse().map_err(|_| bad("bad mode index"))?;
                let c: f64 = value.parse().map_err(|_| bad("bad mode coefficient"))?;
                x_modes.push((m, c));
            } else if let Some(m) = key.strip_prefix("vmode ") {
                let m: u32 = m.trim().parse().map_err(|_| bad("bad vmode index"))?;
                let c: f64 = value.parse().map_err(|_| bad("bad vmode coefficient"))?;
                v_modes.push((m, c));
            } else {
                return Err(bad(&format!("unknown key '{key}'")));
            }
        }
        let epsilon = epsilon.ok_or(ChainError::BadProfileText {
            line: 0,
            reason: "missing epsilon".into(),
        })?;
        let repr = Repr::Sine {
            x: SineSeries::new(&x_modes)?,
            epsilon,
            v: SineSeries::new(&v_modes)?,
            seed,
        };
        Self::finish(repr)
    }

    /// Measures sup|X - 1| and sup|V| on the check grid and compares them with
    /// the curvature budgets (both sups are bounded by alpha resp. beta for
    /// admissible profiles).
    pub fn bounds_report(&self) -> ProfileBounds {
        let mut sup_x = 0.0_f64;
        let mut sup_v = 0.0_f64;
        for i in 0..=CHECK_GRID {
            let y = i as f64 / CHECK_GRID as f64;
            sup_x = sup_x.max((self.x(y) - 1.0).abs());
            sup_v = sup_v.max(self.v(y).abs());
        }
        ProfileBounds {
            sup_x_dev: sup_x,
            alpha: self.alpha,
            sup_v,
            beta: self.beta,
            ok: sup_x <= self.alpha + 1e-9 && sup_v <= self.beta + 1e-9,
        }
    }
}

/// Result of [`Profile::bounds_report`].
#[derive(Clone, Copy, Debug)]
pub struct ProfileBounds {
    pub sup_x_dev: f64,
    pub alpha: f64,
    pub sup_v: f64,
    pub beta: f64,
    pub ok: bool,
}

fn alpha_beta_of(repr: &Repr) -> (f64, f64) {
    match repr {
        Repr::Sine { x, epsilon, v, .. } => {
            let alpha = if x.is_zero() || *epsilon == 0.0 {
                0.0
            } else {
                quad::integrate_abs(&|y| epsilon * x.deriv(y, 2), 0.0, 1.0, quad::PANELS)
            };
            let beta = if v.is_zero() {
                0.0
            } else {
                quad::integrate_abs(&|y| v.deriv(y, 2), 0.0, 1.0, quad::PANELS)
            };
            (alpha, beta)
        }
        Repr::Callbacks { ddx, ddv, .. } => (
            quad::integrate_abs(&|y| ddx(y), 0.0, 1.0, quad::PANELS),
            quad::integrate_abs(&|y| ddv(y), 0.0, 1.0, quad::PANELS),
        ),
    }
}

/// Curvature budgets (alpha, beta) of a profile, recomputed by quadrature.
pub fn compute_alpha_beta(profile: &Profile) -> (f64, f64) {
    alpha_beta_of(&profile.repr)
}

/// Scaled chain parameters.
///
/// `omega = omega' * N` is the stiffness scaling that keeps the dynamics
/// finite in the continuum limit; `a = 1/N` and `a1 = r/N` are the rest
/// spacing and the half-width of the quadratic well.
#[derive(Clone, Copy, Debug)]
pub struct ChainParams {
    n: usize,
    omega_prime: f64,
    v: f64,
    r: f64,
    omega: f64,
    gamma: f64,
}

/// Default well-width fraction; maximizes min(r, (1 - r)/2).
pub const DEFAULT_R: f64 = 1.0 / 3.0;

impl ChainParams {
    /// Full validation: gamma < min(r, (1 - r)/2), which is what the
    /// general short-range potential needs so that nearest neighbors stay in
    /// the quadratic well and farther pairs stay on the plateau.
    pub fn new(n: usize, omega_prime: f64, v: f64, r: f64, profile: &Profile) -> Result<Self> {
        let params = Self::build(n, omega_prime, v, r, profile)?;
        let limit = r.min((1.0 - r) / 2.0);
        if params.gamma >= limit {
            return Err(ChainError::InvalidParameter(format!(
                "gamma = {:.6} must stay below min(r, (1-r)/2) = {:.6}",
                params.gamma, limit
            )));
        }
        Ok(params)
    }

    /// Relaxed validation for runs that use the quadratic nearest-neighbor
    /// force only. The deviation bound needs just gamma < 1 there (gaps stay
    /// positive); the stricter window of [`ChainParams::new`] matters only
    /// when the full potential with its plateau cutoff is in play.
    pub fn new_linear(n: usize, omega_prime: f64, v: f64, r: f64, profile: &Profile) -> Result<Self> {
        let params = Self::build(n, omega_prime, v, r, profile)?;
        if params.gamma >= 1.0 {
            return Err(ChainError::InvalidParameter(format!(
                "gamma = {:.6} must stay below 1",
                params.gamma
            )));
        }
        Ok(params)
    }

    fn build(n: usize, omega_prime: f64, v: f64, r: f64, profile: &Profile) -> Result<Self> {
        if n < 2 {
            return Err(ChainError::InvalidParameter(format!(
                "need at least 2 particles, got {n}"
            )));
        }
        if !(omega_prime > 0.0) || !omega_prime.is_finite() {
            return Err(ChainError::InvalidParameter(format!(
                "omega' must be positive and finite, got {omega_prime}"
            )));
        }
        if !(0.0 < r && r < 1.0) {
            return Err(ChainError::InvalidParameter(format!(
                "r must lie in (0, 1), got {r}"
            )));
        }
        if !v.is_finite() {
            return Err(ChainError::InvalidParameter("v must be finite".into()));
        }
        let gamma = 2.0 * profile.alpha() + profile.beta() / omega_prime;
        Ok(Self {
            n,
            omega_prime,
            v,
            r,
            omega: omega_prime * n as f64,
            gamma,
        })
    }

    /// Drops the N factor from the stiffness (omega := omega') while keeping
    /// every other derived quantity, gamma included. Used as a negative
    /// control: the gap band promised under the proper scaling is then checked
    /// against dynamics run without it.
    pub fn without_stiffness_scaling(mut self) -> Self {
        self.omega = self.omega_prime;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn omega_prime(&self) -> f64 {
        self.omega_prime
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Rest spacing a = 1/N.
    pub fn a(&self) -> f64 {
        1.0 / self.n as f64
    }

    /// Well half-width a1 = r/N.
    pub fn a1(&self) -> f64 {
        self.r / self.n as f64
    }

    /// Admissible gap band [(1 - gamma)/N, (1 + gamma)/N].
    pub fn gap_band(&self) -> (f64, f64) {
        let n = self.n as f64;
        ((1.0 - self.gamma) / n, (1.0 + self.gamma) / n)
    }
}

/// Positions and velocities of the chain at one instant. Positions are
/// strictly increasing in index for every state this crate produces.
#[derive(Clone, Debug)]
pub struct ChainState {
    pub t: f64,
    pub pos: Vec<f64>,
    pub vel: Vec<f64>,
}

impl ChainState {
    pub fn n(&self) -> usize {
        self.pos.len()
    }

    pub fn gaps(&self) -> Vec<f64> {
        self.pos.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Gap deviations q_k = x_{k+1} - x_k - a, k = 1..N-1.
    pub fn deviations(&self, params: &ChainParams) -> Vec<f64> {
        let a = params.a();
        self.pos.windows(2).map(|w| w[1] - w[0] - a).collect()
    }
}

/// Builds the initial state from a profile: x_1 = 0, v_1 = v, gap k equal to
/// X(k/N)/N and velocity increment V(k/N)/N. Fails if any initial gap falls
/// outside the admissible band.
pub fn build_initial_state(profile: &Profile, params: &ChainParams) -> Result<ChainState> {
    let n = params.n();
    let scale = 1.0 / n as f64;
    let (lo, hi) = params.gap_band();
    let mut pos = Vec::with_capacity(n);
    let mut vel = Vec::with_capacity(n);
    pos.push(0.0);
    vel.push(params.v());
    for k in 1..n {
        let y = k as f64 * scale;
        let gap = profile.x(y) * scale;
        if !(lo..=hi).contains(&gap) {
            return Err(ChainError::GapOutOfBand {
                site: k,
                gap,
                lo,
                hi,
            });
        }
        pos.push(pos[k - 1] + gap);
        vel.push(vel[k - 1] + profile.v(y) * scale);
    }
    Ok(ChainState { t: 0.0, pos, vel })
}

/// Behavior of the pair interaction below the quadratic well.
#[derive(Clone)]
pub enum CoreModel {
    /// Continue the parabola (x - a)^2 below a - a1. The default; runs that
    /// respect the gap band never probe it.
    QuadraticContinuation,
    /// User-supplied value and slope on (0, a - a1], value-matched to the well
    /// at a - a1.
    Custom { value: ScalarFn, slope: ScalarFn },
    /// No core provided: evaluating there is an error.
    Unspecified,
}

/// Short-range interaction of the chain:
///
///   I(x) = (x - a)^2            on (a - a1, a + a1),
///   I(x) = a1^2                 for x >= a + a1 (flat, force-free),
///   I(x) = core(x)              for x <= a - a1.
///
/// The pair energy is (omega^2 / 2) I(|x_k - x_l|).
#[derive(Clone)]
pub struct PairPotential {
    a: f64,
    a1: f64,
    omega: f64,
    core: CoreModel,
}

impl PairPotential {
    pub fn from_params(params: &ChainParams) -> Self {
        Self {
            a: params.a(),
            a1: params.a1(),
            omega: params.omega(),
            core: CoreModel::QuadraticContinuation,
        }
    }

    /// Replaces the core model; custom cores must match the well value a1^2
    /// at the junction a - a1.
    pub fn with_core(mut self, core: CoreModel) -> Result<Self> {
        if let CoreModel::Custom { value, .. } = &core {
            let junction = self.a - self.a1;
            let got = value(junction);
            let want = self.a1 * self.a1;
            if (got - want).abs() > 1e-9 * want.max(1.0) {
                return Err(ChainError::InvalidParameter(format!(
                    "core value {got:.6e} at {junction:.6e} does not match the well value {want:.6e}"
                )));
            }
        }
        self.core = core;
        Ok(self)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn a1(&self) -> f64 {
        self.a1
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Interactions vanish at and beyond this distance.
    pub fn cutoff(&self) -> f64 {
        self.a + self.a1
    }

    /// I(d).
    pub fn value(&self, d: f64) -> Result<f64> {
        if !(d > 0.0) {
            return Err(ChainError::InvalidParameter(format!(
                "pair distance must be positive, got {d:.6e}"
            )));
        }
        if d >= self.a + self.a1 {
            Ok(self.a1 * self.a1)
        } else if d > self.a - self.a1 {
            Ok((d - self.a) * (d - self.a))
        } else {
            match &self.core {
                CoreModel::QuadraticContinuation => Ok((d - self.a) * (d - self.a)),
                CoreModel::Custom { value, .. } => Ok(value(d)),
                CoreModel::Unspecified => Err(ChainError::UndefinedCore {
                    dist: d,
                    limit: self.a - self.a1,
                }),
            }
        }
    }

    /// I'(d); zero on the plateau.
    pub fn slope(&self, d: f64) -> Result<f64> {
        if !(d > 0.0) {
            return Err(ChainError::InvalidParameter(format!(
                "pair distance must be positive, got {d:.6e}"
            )));
        }
        if d >= self.a + self.a1 {
            Ok(0.0)
        } else if d > self.a - self.a1 {
            Ok(2.0 * (d - self.a))
        } else {
            match &self.core {
                CoreModel::QuadraticContinuation => Ok(2.0 * (d - self.a)),
                CoreModel::Custom { slope, .. } => Ok(slope(d)),
                CoreModel::Unspecified => Err(ChainError::UndefinedCore {
                    dist: d,
                    limit: self.a - self.a1,
                }),
            }
        }
    }
}
