//! Subcommand implementations, written against `io::Write` so the binary and
//! the tests share them. Simulation and field output is CSV with `#` comment
//! headers carrying every parameter needed to reproduce the run; `verify`
//! prints one PASS/FAIL line per check and reports whether all of them held.

use crate::config::{Engine, ProfileKind, RunConfig};
use crate::csv;
use crate::Result;
use chain_core::continuum::ContinuumMap;
use chain_core::integrator::{general_force, quadratic_nn_force, verlet_integrate, verlet_observe};
use chain_core::model::CoreModel;
use chain_core::rng::GENERATOR_ID;
use chain_core::spectral::ModeCoefficients;
use chain_core::verify::{self, time_grid};
use chain_core::{build_initial_state, ChainParams, ChainState, PairPotential, Profile};
use std::io::Write;

fn profile_name(kind: ProfileKind) -> &'static str {
    match kind {
        ProfileKind::Equilibrium => "equilibrium",
        ProfileKind::Sine => "sine",
        ProfileKind::RandomFourier => "random-fourier",
    }
}

fn header(
    out: &mut dyn Write,
    cfg: &RunConfig,
    profile: &Profile,
    params: Option<&ChainParams>,
) -> Result<()> {
    match params {
        Some(p) => {
            csv::comment(out, "N", p.n())?;
            csv::comment(out, "omega_prime", csv::fmt(p.omega_prime()))?;
            csv::comment(out, "omega", csv::fmt(p.omega()))?;
            csv::comment(out, "r", csv::fmt(p.r()))?;
            csv::comment(out, "gamma", csv::fmt(p.gamma()))?;
            csv::comment(out, "v", csv::fmt(p.v()))?;
        }
        None => {
            csv::comment(out, "omega_prime", csv::fmt(cfg.omega_prime()?))?;
            csv::comment(out, "v", csv::fmt(cfg.v))?;
        }
    }
    csv::comment(out, "T", csv::fmt(cfg.t_max))?;
    csv::comment(out, "profile", profile_name(cfg.profile))?;
    if cfg.profile == ProfileKind::RandomFourier {
        csv::comment(out, "prng", GENERATOR_ID)?;
        csv::comment(out, "theta", csv::fmt(cfg.theta))?;
    }
    if let Ok(text) = profile.to_text() {
        for line in text.lines() {
            writeln!(out, "# {line}")?;
        }
    }
    Ok(())
}

fn emit_state(out: &mut dyn Write, s: &ChainState) -> Result<()> {
    for k in 0..s.n() {
        csv::row(
            out,
            &[
                csv::fmt(s.t),
                (k + 1).to_string(),
                csv::fmt(s.pos[k]),
                csv::fmt(s.vel[k]),
            ],
        )?;
    }
    Ok(())
}

/// Particle trajectories at the sampled times, by either engine.
pub fn cmd_simulate(cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let profile = cfg.build_profile()?;
    let params = cfg.build_params(&profile)?;
    let state0 = build_initial_state(&profile, &params)?;
    header(out, cfg, &profile, Some(&params))?;
    let engine = match cfg.engine {
        Engine::Spectral => "spectral",
        Engine::Verlet => "verlet",
    };
    csv::comment(out, "engine", engine)?;
    csv::comment(out, "samples", cfg.samples)?;
    writeln!(out, "t,k,x,v")?;
    let times = time_grid(cfg.t_max, cfg.samples);
    match cfg.engine {
        Engine::Spectral => {
            let coeffs = ModeCoefficients::project(&state0, &params)?;
            for &t in &times {
                emit_state(out, &coeffs.positions_at(t))?;
            }
        }
        Engine::Verlet => {
            let dt = cfg.dt.unwrap_or(0.05 / params.omega());
            let force = quadratic_nn_force(&params);
            let mut current = state0;
            emit_state(out, &current)?;
            for pair in times.windows(2) {
                current = verlet_observe(&params, &current, &force, pair[1] - pair[0], dt, |_| {})?;
                emit_state(out, &current)?;
            }
        }
    }
    Ok(())
}

/// Eulerian fields across the occupied interval at the final time.
pub fn cmd_fields(cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let profile = cfg.build_profile()?;
    let map = ContinuumMap::new(&profile, cfg.omega_prime()?, cfg.v)?;
    header(out, cfg, &profile, None)?;
    csv::comment(out, "grid", cfg.grid)?;
    writeln!(
        out,
        "y,density,velocity,pressure,force,potential_energy,kinetic_energy,mass_fraction"
    )?;
    let t = cfg.t_max;
    let (left, right) = map.domain(t);
    for i in 0..cfg.grid {
        let y = left + (right - left) * i as f64 / (cfg.grid - 1) as f64;
        let f = map.fields(t, y)?;
        csv::row(
            out,
            &[
                csv::fmt(y),
                csv::fmt(f.density),
                csv::fmt(f.velocity),
                csv::fmt(f.pressure),
                csv::fmt(f.force),
                csv::fmt(f.potential_energy),
                csv::fmt(f.kinetic_energy),
                csv::fmt(f.mass_fraction),
            ],
        )?;
    }
    Ok(())
}

/// Deviation error against the continuum gap field for each size in N_list.
pub fn cmd_converge(cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let profile = cfg.build_profile()?;
    let rows = verify::deviation_convergence(
        &profile,
        cfg.omega_prime()?,
        cfg.v,
        cfg.r,
        &cfg.n_list,
        cfg.t_max,
        cfg.samples,
    )?;
    header(out, cfg, &profile, None)?;
    writeln!(out, "n,err,normalized")?;
    for r in rows {
        csv::row(
            out,
            &[r.n.to_string(), csv::fmt(r.err), csv::fmt(r.normalized)],
        )?;
    }
    Ok(())
}

/// The density deviation surface rho(t, y) - 1 on a samples-by-grid mesh.
/// Deterministic: equal configurations produce byte-equal output.
pub fn cmd_experiment_density(cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let profile = cfg.build_profile()?;
    let op = cfg.omega_prime()?;
    let map = ContinuumMap::new(&profile, op, cfg.v)?;
    header(out, cfg, &profile, None)?;
    let gamma = 2.0 * profile.alpha() + profile.beta() / op;
    csv::comment(out, "gamma", csv::fmt(gamma))?;
    csv::comment(out, "density_band", csv::fmt(gamma / (1.0 - gamma)))?;
    csv::comment(out, "samples", cfg.samples)?;
    csv::comment(out, "grid", cfg.grid)?;
    writeln!(out, "t,y,rho_minus_1")?;
    for &t in &time_grid(cfg.t_max, cfg.samples) {
        let (left, right) = map.domain(t);
        for i in 0..cfg.grid {
            let y = left + (right - left) * i as f64 / (cfg.grid - 1) as f64;
            let f = map.fields(t, y)?;
            csv::row(out, &[csv::fmt(t), csv::fmt(y), csv::fmt(f.density - 1.0)])?;
        }
    }
    Ok(())
}

const ALL_CHECKS: &[&str] = &[
    "gap-band",
    "convergence",
    "flow-map",
    "distribution",
    "residuals",
    "fields",
    "reduction",
    "negative-control",
];

/// Runs the configured checks, printing one PASS/FAIL line each; returns
/// whether every check held.
pub fn cmd_verify(cfg: &RunConfig, out: &mut dyn Write) -> Result<bool> {
    let names: Vec<String> = if cfg.checks.is_empty() {
        ALL_CHECKS.iter().map(|s| s.to_string()).collect()
    } else {
        cfg.checks.clone()
    };
    let mut all = true;
    for name in &names {
        let (passed, detail) = run_check(cfg, name)?;
        writeln!(out, "{} {name}: {detail}", if passed { "PASS" } else { "FAIL" })?;
        all &= passed;
    }
    writeln!(out, "{}", if all { "all checks passed" } else { "some checks failed" })?;
    Ok(all)
}

fn run_check(cfg: &RunConfig, name: &str) -> Result<(bool, String)> {
    match name {
        "gap-band" => check_gap_band(cfg),
        "convergence" => check_convergence(cfg),
        "flow-map" => check_flow_map(cfg),
        "distribution" => check_distribution(cfg),
        "residuals" => check_residuals(cfg),
        "fields" => check_fields(cfg),
        "reduction" => check_reduction(cfg),
        "negative-control" => check_negative_control(cfg),
        other => Err(crate::config::ConfigError::UnknownCheck(other.into()).into()),
    }
}

fn chain_setup(cfg: &RunConfig) -> Result<(Profile, ChainParams, ModeCoefficients)> {
    let profile = cfg.build_profile()?;
    let params = cfg.build_params(&profile)?;
    let state = build_initial_state(&profile, &params)?;
    let coeffs = ModeCoefficients::project(&state, &params)?;
    Ok((profile, params, coeffs))
}

fn check_gap_band(cfg: &RunConfig) -> Result<(bool, String)> {
    let (_, params, coeffs) = chain_setup(cfg)?;
    let r = verify::check_gap_band(&coeffs, &params, cfg.t_max, cfg.samples);
    Ok((
        r.passed,
        format!(
            "gaps in [{:.6e}, {:.6e}], band [{:.6e}, {:.6e}]",
            r.min_gap, r.max_gap, r.lo, r.hi
        ),
    ))
}

fn check_convergence(cfg: &RunConfig) -> Result<(bool, String)> {
    let profile = cfg.build_profile()?;
    let rows = verify::deviation_convergence(
        &profile,
        cfg.omega_prime()?,
        cfg.v,
        cfg.r,
        &cfg.n_list,
        cfg.t_max,
        cfg.samples,
    )?;
    let mut ok = true;
    let mut ratios = Vec::new();
    for pair in rows.windows(2) {
        let (n1, n2) = (pair[0].n as f64, pair[1].n as f64);
        let ratio = pair[1].err / pair[0].err;
        // Cubic decay with a logarithmic factor, allowed threefold slack.
        let allowed = 3.0 * (n1 / n2).powi(3) * (n2.ln() / n1.ln());
        ok &= ratio <= allowed;
        ratios.push(format!("{ratio:.4}<={allowed:.4}"));
    }
    let norms: Vec<String> = rows.iter().map(|r| format!("{:.3e}", r.normalized)).collect();
    Ok((
        ok,
        format!("E*N^3/lnN = [{}], ratios [{}]", norms.join(", "), ratios.join(", ")),
    ))
}

fn check_flow_map(cfg: &RunConfig) -> Result<(bool, String)> {
    let profile = cfg.build_profile()?;
    let op = cfg.omega_prime()?;
    let map = ContinuumMap::new(&profile, op, cfg.v)?;
    let mut ok = true;
    let mut reports = Vec::new();
    for &n in &cfg.n_list {
        let params = ChainParams::new_linear(n, op, cfg.v, cfg.r, &profile)?;
        let state = build_initial_state(&profile, &params)?;
        let coeffs = ModeCoefficients::project(&state, &params)?;
        let r = verify::flow_map_comparison(&coeffs, &params, &map, cfg.t_max)?;
        ok &= r.slopes_ok && r.boundary_residual <= 1e-12;
        reports.push(r);
    }
    let mut sups = Vec::new();
    for pair in reports.windows(2) {
        let expected = pair[0].n as f64 / pair[1].n as f64;
        // The index-read sup carries an irreducible half-cell offset, so it
        // scales like 1/N on the nose. The label-matched sup only has 1/N as
        // an upper rate; smooth profiles beat it.
        let ratio_ix = pair[1].sup_indexed / pair[0].sup_indexed;
        ok &= ratio_ix >= 0.7 * expected && ratio_ix <= 1.3 * expected;
        let ratio_mat = pair[1].sup_material / pair[0].sup_material;
        ok &= ratio_mat <= 1.3 * expected;
        sups.push(format!("{ratio_ix:.3}"));
        sups.push(format!("{ratio_mat:.3}"));
    }
    let vals: Vec<String> = reports
        .iter()
        .map(|r| format!("N={}: {:.3e}/{:.3e}", r.n, r.sup_indexed, r.sup_material))
        .collect();
    Ok((
        ok,
        format!("sups {}; decay ratios [{}]", vals.join(", "), sups.join(", ")),
    ))
}

fn check_distribution(cfg: &RunConfig) -> Result<(bool, String)> {
    let profile = cfg.build_profile()?;
    let op = cfg.omega_prime()?;
    let map = ContinuumMap::new(&profile, op, cfg.v)?;
    let mut times: Vec<f64> = [0.0, 1.0, 5.0]
        .into_iter()
        .filter(|&t| t <= cfg.t_max)
        .collect();
    if times.is_empty() {
        times.push(cfg.t_max);
    }
    let sizes = [cfg.n_list[0], *cfg.n_list.last().unwrap()];
    let mut ok = true;
    let mut details = Vec::new();
    for &n in &sizes {
        let params = ChainParams::new_linear(n, op, cfg.v, cfg.r, &profile)?;
        let state = build_initial_state(&profile, &params)?;
        let coeffs = ModeCoefficients::project(&state, &params)?;
        for &t in &times {
            let r = verify::distribution_comparison(&coeffs, &params, &map, t, cfg.grid)?;
            ok &= r.passed;
            details.push(format!("N={n},t={t}: {:.3e}<={:.3e}", r.sup, r.bound));
        }
    }
    Ok((ok, details.join("; ")))
}

fn check_residuals(cfg: &RunConfig) -> Result<(bool, String)> {
    let profile = cfg.build_profile()?;
    let map = ContinuumMap::new(&profile, cfg.omega_prime()?, cfg.v)?;
    let t_grid: Vec<f64> = [0.3, 0.6, 0.9].iter().map(|f| f * cfg.t_max).collect();
    let coarse = verify::pde_residuals(&map, &t_grid, 40, cfg.h)?;
    if profile.alpha() == 0.0 && profile.beta() == 0.0 {
        let ok = coarse.max_continuity <= 1e-12 && coarse.max_euler <= 1e-12;
        return Ok((
            ok,
            format!(
                "uniform flow residuals {:.3e}, {:.3e}",
                coarse.max_continuity, coarse.max_euler
            ),
        ));
    }
    let fine = verify::pde_residuals(&map, &t_grid, 40, cfg.h / 2.0)?;
    let rc = coarse.max_continuity / fine.max_continuity;
    let re = coarse.max_euler / fine.max_euler;
    // Second-order stencils: halving h divides the residual by about four.
    let band = 8.0 / 3.0..6.0;
    let ok = band.contains(&rc) && band.contains(&re);
    Ok((
        ok,
        format!(
            "continuity {:.3e} -> {:.3e} (x{rc:.2}), momentum {:.3e} -> {:.3e} (x{re:.2})",
            coarse.max_continuity, fine.max_continuity, coarse.max_euler, fine.max_euler
        ),
    ))
}

fn check_fields(cfg: &RunConfig) -> Result<(bool, String)> {
    let profile = cfg.build_profile()?;
    let op = cfg.omega_prime()?;
    let map = ContinuumMap::new(&profile, op, cfg.v)?;
    let mut ok = true;
    let mut reports = Vec::new();
    for &n in &cfg.n_list {
        let params = ChainParams::new_linear(n, op, cfg.v, cfg.r, &profile)?;
        let state = build_initial_state(&profile, &params)?;
        let coeffs = ModeCoefficients::project(&state, &params)?;
        let r = verify::field_comparison(&coeffs, &params, &map, cfg.t_max, cfg.grid)?;
        ok &= r.max_pressure_identity <= 1e-12 && r.max_energy_identity <= 1e-12;
        reports.push(r);
    }
    // The decaying-error clause only means something once the chain resolves
    // the profile; below that the comparison is dominated by unresolved
    // high modes, not by the limit the theorem states.
    let bandwidth = map.wave().max_mode().max(1) as usize;
    let resolved = cfg.n_list.iter().all(|&n| n >= 8 * bandwidth);
    if resolved {
        for pair in reports.windows(2) {
            for (a, b) in [
                (pair[0].sup_force, pair[1].sup_force),
                (pair[0].sup_potential, pair[1].sup_potential),
                (pair[0].sup_kinetic, pair[1].sup_kinetic),
            ] {
                ok &= b < a || (a <= 1e-14 && b <= 1e-14);
            }
        }
    }
    let vals: Vec<String> = reports
        .iter()
        .map(|r| {
            format!(
                "N={}: {:.2e}/{:.2e}/{:.2e}",
                r.n, r.sup_force, r.sup_potential, r.sup_kinetic
            )
        })
        .collect();
    let note = if resolved {
        String::new()
    } else {
        format!("; decay clause skipped, sizes under 8x bandwidth {bandwidth}")
    };
    Ok((
        ok,
        format!("force/potential/kinetic sups {}{note}", vals.join(", ")),
    ))
}

fn check_reduction(cfg: &RunConfig) -> Result<(bool, String)> {
    let (profile, params, _) = chain_setup(cfg)?;
    let state = build_initial_state(&profile, &params)?;
    let dt = cfg.dt.unwrap_or(0.05 / params.omega());
    // Leave the potential core unspecified: if the dynamics ever needed it,
    // the run itself would fail.
    let pot = PairPotential::from_params(&params).with_core(CoreModel::Unspecified)?;
    let traj = verlet_integrate(&params, &state, general_force(pot), cfg.t_max, dt)?;
    let report = verify::reduction_check(&traj, &params);
    let linear_end = verlet_observe(
        &params,
        &state,
        quadratic_nn_force(&params),
        cfg.t_max,
        dt,
        |_| {},
    )?;
    let general_end = traj.last().unwrap();
    let max_diff = general_end
        .pos
        .iter()
        .zip(&linear_end.pos)
        .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()));
    let ok = report.wells_ok && report.cutoff_ok && max_diff <= 1e-10;
    Ok((
        ok,
        format!(
            "well fraction {:.3}, cutoff fraction {:.3}, linear-model gap {max_diff:.3e}",
            report.worst_well_fraction, report.min_cutoff_fraction
        ),
    ))
}

fn check_negative_control(cfg: &RunConfig) -> Result<(bool, String)> {
    let profile = cfg.build_profile()?;
    let op = cfg.omega_prime()?;
    let scaled = ChainParams::new_linear(cfg.n, op, cfg.v, cfg.r, &profile)?;
    let state = build_initial_state(&profile, &scaled)?;
    let good = verify::check_gap_band(
        &ModeCoefficients::project(&state, &scaled)?,
        &scaled,
        cfg.t_max,
        cfg.samples,
    );
    let unscaled = scaled.without_stiffness_scaling();
    let bad = verify::check_gap_band(
        &ModeCoefficients::project(&state, &unscaled)?,
        &unscaled,
        cfg.t_max,
        cfg.samples,
    );
    Ok((
        good.passed && !bad.passed,
        format!(
            "scaled max gap {:.6e} (band top {:.6e}); unscaled max gap {:.6e}",
            good.max_gap, good.hi, bad.max_gap
        ),
    ))
}
