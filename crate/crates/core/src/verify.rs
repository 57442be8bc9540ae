//! Quantitative comparisons between the three solution routes: spectral chain,
//! time-stepped chain, and continuum flow map.
//!
//! Every function here measures a discrepancy and returns it in a small report
//! struct; thresholds live with the callers. Where a supremum over a continuum
//! of points is measured against a discrete object, the sampling is chosen so
//! the supremum is hit exactly rather than aliased: a particle's position is a
//! step function of the label, so the worst disagreement over an index cell
//! always sits at one of the cell's two edges, and the distribution function
//! jumps at the particle positions themselves.

use crate::continuum::ContinuumMap;
use crate::model::{ChainParams, ChainState, Profile};
use crate::spectral::ModeCoefficients;
use crate::Result;

/// `samples` evenly spaced times from 0 to `t_max` inclusive.
pub fn time_grid(t_max: f64, samples: usize) -> Vec<f64> {
    if samples <= 1 {
        return vec![t_max];
    }
    (0..samples)
        .map(|i| t_max * i as f64 / (samples - 1) as f64)
        .collect()
}

/// Extremes of the gaps over a sampled time span, against the invariant band
/// [(1 - gamma)/N, (1 + gamma)/N].
#[derive(Clone, Copy, Debug)]
pub struct GapBandReport {
    pub n: usize,
    pub t_max: f64,
    pub samples: usize,
    pub min_gap: f64,
    pub max_gap: f64,
    pub lo: f64,
    pub hi: f64,
    pub passed: bool,
}

pub fn check_gap_band(
    coeffs: &ModeCoefficients,
    params: &ChainParams,
    t_max: f64,
    samples: usize,
) -> GapBandReport {
    let (lo, hi) = params.gap_band();
    let mut min_gap = f64::INFINITY;
    let mut max_gap = f64::NEG_INFINITY;
    for t in time_grid(t_max, samples) {
        for gap in coeffs.gaps_at(t) {
            min_gap = min_gap.min(gap);
            max_gap = max_gap.max(gap);
        }
    }
    let slack = 1e-12 * params.a();
    GapBandReport {
        n: params.n(),
        t_max,
        samples,
        min_gap,
        max_gap,
        lo,
        hi,
        passed: min_gap >= lo - slack && max_gap <= hi + slack,
    }
}

/// Worst deviation error of one chain size against the continuum gap field,
/// with the N^3 / ln N normalization that should stay bounded.
#[derive(Clone, Copy, Debug)]
pub struct ConvergenceRow {
    pub n: usize,
    pub err: f64,
    pub normalized: f64,
}

/// E(N) = max over sampled times and sites of |q_k(t) - q(t, k/N)/N|,
/// for each chain size in `n_list`.
pub fn deviation_convergence(
    profile: &Profile,
    omega_prime: f64,
    v: f64,
    r: f64,
    n_list: &[usize],
    t_max: f64,
    samples: usize,
) -> Result<Vec<ConvergenceRow>> {
    let map = ContinuumMap::new(profile, omega_prime, v)?;
    let wave = map.wave();
    let times = time_grid(t_max, samples);
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let params = ChainParams::new_linear(n, omega_prime, v, r, profile)?;
        let state = crate::model::build_initial_state(profile, &params)?;
        let coeffs = ModeCoefficients::project(&state, &params)?;
        let mut err = 0.0_f64;
        for &t in &times {
            let (dev, _) = coeffs.deviations_at(t);
            for (i, d) in dev.iter().enumerate() {
                let z = (i + 1) as f64 / n as f64;
                err = err.max((d - wave.q(t, z) / n as f64).abs());
            }
        }
        let nf = n as f64;
        rows.push(ConvergenceRow {
            n,
            err,
            normalized: err * nf.powi(3) / nf.ln(),
        });
    }
    Ok(rows)
}

/// Distance between particle worldlines and the continuum flow map at one
/// time, measured two ways.
#[derive(Clone, Copy, Debug)]
pub struct FlowMapReport {
    pub n: usize,
    pub t: f64,
    /// sup over labels z of |x_{[zN]+1}(t) - G(t, z)|, found at cell edges.
    pub sup_indexed: f64,
    /// sup over particles of |x_k(t) - G(t, z_k)| at each particle's own
    /// material label z_k.
    pub sup_material: f64,
    /// max |dG/dz - 1| over the sampled labels; stays below gamma.
    pub max_slope_dev: f64,
    pub gamma: f64,
    pub slopes_ok: bool,
    /// max of |q(t, 0)| and |q(t, 1)|.
    pub boundary_residual: f64,
}

pub fn flow_map_comparison(
    coeffs: &ModeCoefficients,
    params: &ChainParams,
    map: &ContinuumMap,
    t: f64,
) -> Result<FlowMapReport> {
    let n = params.n();
    let nf = n as f64;
    let state = coeffs.positions_at(t);
    let state0 = coeffs.positions_at(0.0);

    let mut sup_indexed = 0.0_f64;
    let mut max_slope_dev = 0.0_f64;
    // G(t, k/N) for k = 0..N: each particle's cell is bounded by two of them.
    let edges: Vec<f64> = (0..=n).map(|k| map.g(t, k as f64 / nf)).collect();
    for k in 0..n {
        let x = state.pos[k];
        sup_indexed = sup_indexed
            .max((x - edges[k]).abs())
            .max((x - edges[k + 1]).abs());
    }
    for k in 0..=4 * n {
        let z = k as f64 / (4.0 * nf);
        max_slope_dev = max_slope_dev.max((map.g_z(t, z) - 1.0).abs());
    }

    let mut sup_material = 0.0_f64;
    for k in 0..n {
        let z = map.z_of_x(state0.pos[k])?;
        sup_material = sup_material.max((state.pos[k] - map.g(t, z)).abs());
    }

    let boundary_residual = map.wave().q(t, 0.0).abs().max(map.wave().q(t, 1.0).abs());
    Ok(FlowMapReport {
        n,
        t,
        sup_indexed,
        sup_material,
        max_slope_dev,
        gamma: params.gamma(),
        slopes_ok: max_slope_dev <= params.gamma() + 1e-12,
        boundary_residual,
    })
}

/// Sup distance between the empirical particle distribution and the continuum
/// mass fraction.
#[derive(Clone, Copy, Debug)]
pub struct DistributionReport {
    pub n: usize,
    pub t: f64,
    pub sup: f64,
    /// The proven envelope 2/N.
    pub bound: f64,
    pub passed: bool,
}

/// Compares F_N(t, y) = #{k : x_k <= y}/N with the material label of y on a
/// uniform grid plus points straddling every particle, where F_N jumps.
pub fn distribution_comparison(
    coeffs: &ModeCoefficients,
    params: &ChainParams,
    map: &ContinuumMap,
    t: f64,
    grid: usize,
) -> Result<DistributionReport> {
    let n = params.n();
    let nf = n as f64;
    let state = coeffs.positions_at(t);
    let (left, right) = map.domain(t);

    let continuum_f = |y: f64| -> Result<f64> {
        if y <= left {
            Ok(0.0)
        } else if y >= right {
            Ok(1.0)
        } else {
            map.material_label(t, y)
        }
    };
    let empirical_f = |y: f64| state.pos.partition_point(|&x| x <= y) as f64 / nf;

    let mut candidates: Vec<f64> = Vec::with_capacity(grid + 2 * n + 2);
    let pad = 0.05 * (right - left);
    for i in 0..=grid {
        candidates.push(left - pad + (right - left + 2.0 * pad) * i as f64 / grid as f64);
    }
    for &x in &state.pos {
        candidates.push(x - 1e-9);
        candidates.push(x + 1e-9);
    }

    let mut sup = 0.0_f64;
    for y in candidates {
        sup = sup.max((empirical_f(y) - continuum_f(y)?).abs());
    }
    let bound = 2.0 / nf;
    Ok(DistributionReport {
        n,
        t,
        sup,
        bound,
        passed: sup <= bound,
    })
}

/// Largest residuals of the continuity and momentum equations, measured by
/// central differences of the Eulerian fields.
#[derive(Clone, Copy, Debug)]
pub struct PdeResiduals {
    pub h: f64,
    pub max_continuity: f64,
    pub max_euler: f64,
}

/// Checks rho_t + (u rho)_y = 0 and u_t + u u_y + p_y / rho = 0 on each time
/// of `t_grid`, at `y_samples` points kept a safe margin inside the occupied
/// interval at all three stencil times.
pub fn pde_residuals(
    map: &ContinuumMap,
    t_grid: &[f64],
    y_samples: usize,
    h: f64,
) -> Result<PdeResiduals> {
    let mut max_continuity = 0.0_f64;
    let mut max_euler = 0.0_f64;
    for &t in t_grid {
        let mut left = f64::NEG_INFINITY;
        let mut right = f64::INFINITY;
        for tau in [t - h, t, t + h] {
            let (l, r) = map.domain(tau);
            left = left.max(l);
            right = right.min(r);
        }
        let lo = left + 2.0 * h;
        let hi = right - 2.0 * h;
        for i in 0..y_samples {
            let y = lo + (hi - lo) * i as f64 / (y_samples - 1) as f64;
            let mid = map.fields(t, y)?;
            let tp = map.fields(t + h, y)?;
            let tm = map.fields(t - h, y)?;
            let yp = map.fields(t, y + h)?;
            let ym = map.fields(t, y - h)?;

            let rho_t = (tp.density - tm.density) / (2.0 * h);
            let flux_y = (yp.density * yp.velocity - ym.density * ym.velocity) / (2.0 * h);
            max_continuity = max_continuity.max((rho_t + flux_y).abs());

            let u_t = (tp.velocity - tm.velocity) / (2.0 * h);
            let u_y = (yp.velocity - ym.velocity) / (2.0 * h);
            let p_y = (yp.pressure - ym.pressure) / (2.0 * h);
            max_euler =
                max_euler.max((u_t + mid.velocity * u_y + p_y / mid.density).abs());
        }
    }
    Ok(PdeResiduals {
        h,
        max_continuity,
        max_euler,
    })
}

/// Sup distances between the discrete force and energy observables and their
/// continuum fields, plus the exactness of the algebraic field identities.
#[derive(Clone, Copy, Debug)]
pub struct FieldComparison {
    pub n: usize,
    pub t: f64,
    pub sup_force: f64,
    pub sup_potential: f64,
    pub sup_kinetic: f64,
    /// max |p - omega'^2 (1 - 1/rho)| over the sampled points.
    pub max_pressure_identity: f64,
    /// max |U - p^2 / (2 omega'^2)|.
    pub max_energy_identity: f64,
}

/// Compares the per-particle observables with the continuum fields on a grid
/// of spatial points. At each y the chain is read through the particle k
/// bracketing it, x_k(t) <= y < x_{k+1}(t): net force omega^2 (q_k - q_{k-1}),
/// potential energy (omega^2/4)(q_k^2 + q_{k-1}^2), kinetic energy v_k^2/2.
pub fn field_comparison(
    coeffs: &ModeCoefficients,
    params: &ChainParams,
    map: &ContinuumMap,
    t: f64,
    grid: usize,
) -> Result<FieldComparison> {
    let n = params.n();
    let w2 = params.omega() * params.omega();
    let op2 = map.omega_prime() * map.omega_prime();
    let state = coeffs.positions_at(t);
    let dev = state.deviations(params);

    // Sample where both descriptions are defined: inside the continuum
    // domain, with a full pair of gaps around the bracketing particle.
    let (dom_lo, dom_hi) = map.domain(t);
    let lo = dom_lo.max(state.pos[1]);
    let hi = dom_hi.min(state.pos[n - 1]);

    let mut sup_force = 0.0_f64;
    let mut sup_potential = 0.0_f64;
    let mut sup_kinetic = 0.0_f64;
    let mut max_pressure_identity = 0.0_f64;
    let mut max_energy_identity = 0.0_f64;

    for i in 0..grid {
        let y = lo + (hi - lo) * i as f64 / (grid - 1) as f64;
        let k = state
            .pos
            .partition_point(|&x| x <= y)
            .clamp(2, n - 1)
            - 1;
        let f = map.fields(t, y)?;

        let force_disc = w2 * (dev[k] - dev[k - 1]);
        sup_force = sup_force.max((force_disc - f.force).abs());

        let pot_disc = 0.25 * w2 * (dev[k] * dev[k] + dev[k - 1] * dev[k - 1]);
        sup_potential = sup_potential.max((pot_disc - f.potential_energy).abs());

        let kin_disc = 0.5 * state.vel[k] * state.vel[k];
        sup_kinetic = sup_kinetic.max((kin_disc - f.kinetic_energy).abs());

        max_pressure_identity = max_pressure_identity
            .max((f.pressure - op2 * (1.0 - 1.0 / f.density)).abs());
        max_energy_identity = max_energy_identity
            .max((f.potential_energy - f.pressure * f.pressure / (2.0 * op2)).abs());
    }

    Ok(FieldComparison {
        n,
        t,
        sup_force,
        sup_potential,
        sup_kinetic,
        max_pressure_identity,
        max_energy_identity,
    })
}

/// Whether a trajectory keeps nearest neighbors inside the quadratic well and
/// second neighbors beyond the interaction cutoff, the two conditions under
/// which the full potential reduces to the linear chain.
#[derive(Clone, Copy, Debug)]
pub struct ReductionReport {
    pub wells_ok: bool,
    pub cutoff_ok: bool,
    /// Worst |gap - a| relative to the well half-width; below 1 means inside.
    pub worst_well_fraction: f64,
    /// Smallest second-neighbor distance relative to the cutoff; above 1
    /// means free.
    pub min_cutoff_fraction: f64,
}

pub fn reduction_check(traj: &[ChainState], params: &ChainParams) -> ReductionReport {
    let a = params.a();
    let a1 = params.a1();
    let cutoff = a + a1;
    let mut worst_well = 0.0_f64;
    let mut min_cutoff = f64::INFINITY;
    for state in traj {
        for w in state.pos.windows(2) {
            worst_well = worst_well.max((w[1] - w[0] - a).abs() / a1);
        }
        for w in state.pos.windows(3) {
            min_cutoff = min_cutoff.min((w[2] - w[0]) / cutoff);
        }
    }
    ReductionReport {
        wells_ok: worst_well < 1.0,
        cutoff_ok: min_cutoff > 1.0,
        worst_well_fraction: worst_well,
        min_cutoff_fraction: min_cutoff,
    }
}
