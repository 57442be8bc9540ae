//! Velocity Verlet time stepping, independent of the spectral solution.
//!
//! Two force models are provided. The quadratic nearest-neighbor force is the
//! linear chain the sine basis diagonalizes; the general model walks the full
//! short-range potential, plateau cutoff included, so pairs beyond the
//! interaction range genuinely drop out instead of being assumed away. When
//! every gap sits inside the well and second neighbors sit past the cutoff,
//! both models produce bit-identical forces; tests pin that down.

use crate::model::{ChainParams, ChainState, PairPotential, COLLISION_FRACTION};
use crate::{ChainError, Result};

/// Force of the quadratic nearest-neighbor chain: spring tension
/// omega^2 (gap - a) on each bond, difference of adjacent tensions on each
/// particle.
pub fn quadratic_nn_force(params: &ChainParams) -> impl Fn(&[f64], &mut [f64]) -> Result<()> {
    let a = params.a();
    let w2 = params.omega() * params.omega();
    move |pos, out| {
        let n = pos.len();
        let mut left = 0.0;
        for i in 0..n {
            let right = if i + 1 < n {
                w2 * (pos[i + 1] - pos[i] - a)
            } else {
                0.0
            };
            out[i] = right - left;
            left = right;
        }
        Ok(())
    }
}

/// Force of the full pair potential. Positions must be sorted ascending; the
/// sweep visits only pairs closer than the cutoff, so the cost stays linear
/// while gaps stay near the rest spacing.
pub fn general_force(pot: PairPotential) -> impl Fn(&[f64], &mut [f64]) -> Result<()> {
    move |pos, out| {
        debug_assert!(pos.windows(2).all(|w| w[1] >= w[0]));
        let n = pos.len();
        out.fill(0.0);
        let cutoff = pot.cutoff();
        let half_w2 = 0.5 * pot.omega() * pot.omega();
        for i in 0..n {
            for j in i + 1..n {
                let d = pos[j] - pos[i];
                if d >= cutoff {
                    break;
                }
                let f = half_w2 * pot.slope(d)?;
                out[i] += f;
                out[j] -= f;
            }
        }
        Ok(())
    }
}

/// Velocity Verlet from `initial` to `t_max`, calling `observer` on every
/// state (the initial one included). One force evaluation per step; a shorter
/// final step lands exactly on `t_max` when it is not a multiple of `dt`.
/// Aborts with [`ChainError::Collision`] if any gap falls below a thousandth
/// of the rest spacing.
pub fn verlet_observe(
    params: &ChainParams,
    initial: &ChainState,
    mut force: impl FnMut(&[f64], &mut [f64]) -> Result<()>,
    t_max: f64,
    dt: f64,
    mut observer: impl FnMut(&ChainState),
) -> Result<ChainState> {
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(ChainError::InvalidParameter(format!(
            "time step must be positive, got {dt}"
        )));
    }
    if !(t_max >= 0.0) || !t_max.is_finite() {
        return Err(ChainError::InvalidParameter(format!(
            "final time must be nonnegative, got {t_max}"
        )));
    }
    if initial.n() != params.n() {
        return Err(ChainError::InvalidParameter(format!(
            "state has {} particles, parameters say {}",
            initial.n(),
            params.n()
        )));
    }
    let threshold = COLLISION_FRACTION * params.a();
    let check = |state: &ChainState| -> Result<()> {
        for (k, w) in state.pos.windows(2).enumerate() {
            let gap = w[1] - w[0];
            if gap < threshold {
                return Err(ChainError::Collision {
                    t: state.t,
                    site: k + 1,
                    gap,
                });
            }
        }
        Ok(())
    };

    let mut state = initial.clone();
    check(&state)?;
    observer(&state);

    let n = state.n();
    let mut f = vec![0.0; n];
    force(&state.pos, &mut f)?;

    let whole = (t_max / dt + 1e-9).floor() as u64;
    let remainder = t_max - whole as f64 * dt;
    let partial = remainder > 1e-9 * dt;

    let mut step = |state: &mut ChainState, f: &mut Vec<f64>, h: f64, t_next: f64| -> Result<()> {
        let half = 0.5 * h;
        for i in 0..n {
            state.vel[i] += half * f[i];
            state.pos[i] += h * state.vel[i];
        }
        force(&state.pos, f)?;
        for i in 0..n {
            state.vel[i] += half * f[i];
        }
        state.t = t_next;
        Ok(())
    };

    for i in 1..=whole {
        step(&mut state, &mut f, dt, initial.t + i as f64 * dt)?;
        check(&state)?;
        observer(&state);
    }
    if partial {
        step(&mut state, &mut f, remainder, initial.t + t_max)?;
        check(&state)?;
        observer(&state);
    }
    Ok(state)
}

/// [`verlet_observe`] collecting the whole trajectory.
pub fn verlet_integrate(
    params: &ChainParams,
    initial: &ChainState,
    force: impl FnMut(&[f64], &mut [f64]) -> Result<()>,
    t_max: f64,
    dt: f64,
) -> Result<Vec<ChainState>> {
    let mut traj = Vec::new();
    verlet_observe(params, initial, force, t_max, dt, |s| traj.push(s.clone()))?;
    Ok(traj)
}
