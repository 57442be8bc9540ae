//! Acceptance suite: one test per shipping criterion, each printing a
//! PASS/FAIL line with its measured numbers (visible under --nocapture, and
//! always on failure). Two criteria are asserted exactly as specified even
//! though the specified behavior is unreachable for the default initial data;
//! see the comments on those tests.

use chain_cli::commands;
use chain_cli::config::RunConfig;
use chain_core::continuum::ContinuumMap;
use chain_core::integrator::{general_force, quadratic_nn_force, verlet_integrate, verlet_observe};
use chain_core::model::DEFAULT_R;
use chain_core::spectral::total_energy;
use chain_core::verify::{
    check_gap_band, deviation_convergence, distribution_comparison, field_comparison,
    flow_map_comparison, pde_residuals,
};
use chain_core::{build_initial_state, ChainParams, ModeCoefficients, PairPotential, Profile};
use std::time::Instant;

fn reference_profile() -> Profile {
    Profile::random_fourier(42, 0.5).unwrap()
}

fn single_mode() -> Profile {
    Profile::sine(&[(1, 1.0)], 0.01).unwrap()
}

fn coeffs_for(profile: &Profile, params: &ChainParams) -> ModeCoefficients {
    let state = build_initial_state(profile, params).unwrap();
    ModeCoefficients::project(&state, params).unwrap()
}

#[test]
fn c01_gap_band_witness_large_chain() {
    let start = Instant::now();
    let profile = reference_profile();
    let params = ChainParams::new_linear(200, 1.0, 0.0, DEFAULT_R, &profile).unwrap();
    let coeffs = coeffs_for(&profile, &params);
    let report = check_gap_band(&coeffs, &params, 10.0, 201);
    let elapsed = start.elapsed().as_secs_f64();
    let ok = report.passed && elapsed < 5.0;
    println!(
        "{} c01 gap band: gaps [{:.6e}, {:.6e}] inside [{:.6e}, {:.6e}], {elapsed:.2}s",
        if ok { "PASS" } else { "FAIL" },
        report.min_gap,
        report.max_gap,
        report.lo,
        report.hi
    );
    assert!(ok, "{report:?}, elapsed {elapsed:.2}s");
}

#[test]
fn c02_deviation_convergence_rate() {
    let start = Instant::now();
    let profile = single_mode();
    let rows = deviation_convergence(&profile, 1.0, 0.0, DEFAULT_R, &[64, 128, 256, 512], 2.0, 21)
        .unwrap();
    let mut ok = true;
    for row in &rows {
        ok &= row.normalized <= rows[0].normalized * 1.5;
    }
    let mut ratios = Vec::new();
    for pair in rows.windows(2) {
        let ratio = pair[1].err / pair[0].err;
        let allowed = 0.25 * ((2.0 * pair[0].n as f64).ln() / (pair[0].n as f64).ln()) * 1.5;
        ok &= ratio <= allowed;
        ratios.push(format!("{ratio:.4}<={allowed:.4}"));
    }
    let elapsed = start.elapsed().as_secs_f64();
    ok &= elapsed < 30.0;
    let norms: Vec<String> = rows.iter().map(|r| format!("{:.3e}", r.normalized)).collect();
    println!(
        "{} c02 convergence: E*N^3/lnN [{}], ratios [{}], {elapsed:.1}s",
        if ok { "PASS" } else { "FAIL" },
        norms.join(", "),
        ratios.join(", ")
    );
    assert!(ok, "normalized [{}] ratios [{}]", norms.join(", "), ratios.join(", "));
}

#[test]
fn c03_verlet_matches_spectral() {
    let profile = single_mode();
    let params = ChainParams::new(32, 1.0, 0.0, DEFAULT_R, &profile).unwrap();
    let state0 = build_initial_state(&profile, &params).unwrap();
    let coeffs = ModeCoefficients::project(&state0, &params).unwrap();
    let exact = coeffs.positions_at(1.0);

    let sup_at = |dt: f64| {
        let end = verlet_observe(&params, &state0, quadratic_nn_force(&params), 1.0, dt, |_| {})
            .unwrap();
        end.pos
            .iter()
            .zip(&exact.pos)
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()))
    };
    let coarse = sup_at(1e-4);
    let fine = sup_at(5e-5);
    let ratio = coarse / fine;
    let ok = coarse < 1e-8 && (3.0..=5.0).contains(&ratio);
    println!(
        "{} c03 integrator vs exact: sup {coarse:.3e} at dt=1e-4, halving shrinks x{ratio:.2}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "coarse {coarse:.3e}, fine {fine:.3e}, ratio {ratio:.2}");
}

#[test]
fn c04_energy_conservation() {
    // Single-mode data. A broadband profile spreads energy into modes whose
    // (omega_j dt)^2 fluctuation terms add up to a few 1e-6 at this step,
    // which is the integrator working as designed, not a defect; the drift
    // threshold below is calibrated for data concentrated in low modes.
    let profile = single_mode();
    let params = ChainParams::new_linear(128, 1.0, 0.0, DEFAULT_R, &profile).unwrap();
    let state0 = build_initial_state(&profile, &params).unwrap();
    let coeffs = ModeCoefficients::project(&state0, &params).unwrap();
    let e0 = total_energy(&state0, &params);
    let mut spectral_drift = 0.0_f64;
    for i in 0..=100 {
        let state = coeffs.positions_at(i as f64);
        spectral_drift = spectral_drift.max((total_energy(&state, &params) - e0).abs() / e0);
    }

    let dt = 0.05 / params.omega();
    let mut verlet_drift = 0.0_f64;
    verlet_observe(&params, &state0, quadratic_nn_force(&params), 10.0, dt, |s| {
        verlet_drift = verlet_drift.max((total_energy(s, &params) - e0).abs() / e0);
    })
    .unwrap();

    let ok = spectral_drift < 1e-10 && verlet_drift < 1e-6;
    println!(
        "{} c04 energy: spectral drift {spectral_drift:.3e} over T=100, verlet drift {verlet_drift:.3e} over T=10",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "spectral {spectral_drift:.3e}, verlet {verlet_drift:.3e}");
}

#[test]
fn c05_particle_positions_converge_to_flow_map() {
    let profile = reference_profile();
    let map = ContinuumMap::new(&profile, 1.0, 0.0).unwrap();
    let mut reports = Vec::new();
    let mut ok = true;
    for n in [100, 200, 400] {
        let params = ChainParams::new_linear(n, 1.0, 0.0, DEFAULT_R, &profile).unwrap();
        let coeffs = coeffs_for(&profile, &params);
        let report = flow_map_comparison(&coeffs, &params, &map, 2.0).unwrap();
        ok &= report.slopes_ok;
        reports.push(report);
    }
    let mut ratios = Vec::new();
    for pair in reports.windows(2) {
        for (a, b) in [
            (pair[0].sup_indexed, pair[1].sup_indexed),
            (pair[0].sup_material, pair[1].sup_material),
        ] {
            let ratio = b / a;
            ok &= (0.35..=0.65).contains(&ratio);
            ratios.push(format!("{ratio:.3}"));
        }
    }
    let sups: Vec<String> = reports
        .iter()
        .map(|r| format!("N={}: {:.3e}/{:.3e}", r.n, r.sup_indexed, r.sup_material))
        .collect();
    println!(
        "{} c05 flow map: {}; halving ratios [{}], slope bounds ok",
        if ok { "PASS" } else { "FAIL" },
        sups.join(", "),
        ratios.join(", ")
    );
    assert!(ok, "sups {}, ratios [{}]", sups.join(", "), ratios.join(", "));
}

#[test]
fn c06_pde_residuals_shrink() {
    let t_grid = [0.6, 1.2, 1.8];
    let mut ok = true;
    let mut details = Vec::new();
    for (name, profile) in [("single-mode", single_mode()), ("reference", reference_profile())] {
        let map = ContinuumMap::new(&profile, 1.0, 0.0).unwrap();
        let coarse = pde_residuals(&map, &t_grid, 40, 1e-3).unwrap();
        let fine = pde_residuals(&map, &t_grid, 40, 5e-4).unwrap();
        let rc = coarse.max_continuity / fine.max_continuity;
        let re = coarse.max_euler / fine.max_euler;
        ok &= (2.0..=6.0).contains(&rc) && (2.0..=6.0).contains(&re);
        details.push(format!("{name} x{rc:.2}/x{re:.2}"));
    }
    let eq_map = ContinuumMap::new(&Profile::equilibrium(), 1.0, 0.3).unwrap();
    let eq = pde_residuals(&eq_map, &t_grid, 40, 1e-3).unwrap();
    ok &= eq.max_continuity <= 1e-12 && eq.max_euler <= 1e-12;
    details.push(format!(
        "equilibrium {:.1e}/{:.1e}",
        eq.max_continuity, eq.max_euler
    ));
    println!(
        "{} c06 residual refinement: {}",
        if ok { "PASS" } else { "FAIL" },
        details.join(", ")
    );
    assert!(ok, "{}", details.join(", "));
}

#[test]
fn c07_field_limits_and_identities() {
    let profile = single_mode();
    let map = ContinuumMap::new(&profile, 1.0, 0.0).unwrap();
    let mut ok = true;
    let mut reports = Vec::new();
    for n in [100, 200, 400] {
        let params = ChainParams::new_linear(n, 1.0, 0.0, DEFAULT_R, &profile).unwrap();
        let coeffs = coeffs_for(&profile, &params);
        let report = field_comparison(&coeffs, &params, &map, 2.0, 201).unwrap();
        ok &= report.max_pressure_identity <= 1e-12 && report.max_energy_identity <= 1e-12;
        reports.push(report);
    }
    for pair in reports.windows(2) {
        ok &= pair[1].sup_force < pair[0].sup_force;
        ok &= pair[1].sup_potential < pair[0].sup_potential;
        ok &= pair[1].sup_kinetic < pair[0].sup_kinetic;
    }
    let sups: Vec<String> = reports
        .iter()
        .map(|r| {
            format!(
                "N={}: {:.2e}/{:.2e}/{:.2e}",
                r.n, r.sup_force, r.sup_potential, r.sup_kinetic
            )
        })
        .collect();
    println!(
        "{} c07 field limits: force/potential/kinetic sups {}",
        if ok { "PASS" } else { "FAIL" },
        sups.join(", ")
    );
    assert!(ok, "{}", sups.join(", "));
}

#[test]
fn c08_mass_distribution_limit() {
    let profile = single_mode();
    let map = ContinuumMap::new(&profile, 1.0, 0.0).unwrap();
    let mut ok = true;
    let mut details = Vec::new();
    for n in [100, 400] {
        let params = ChainParams::new_linear(n, 1.0, 0.0, DEFAULT_R, &profile).unwrap();
        let coeffs = coeffs_for(&profile, &params);
        for t in [0.0, 1.0, 5.0] {
            let report = distribution_comparison(&coeffs, &params, &map, t, 201).unwrap();
            ok &= report.passed;
            details.push(format!("N={n},t={t}: {:.3e}<={:.3e}", report.sup, report.bound));
        }
    }
    println!(
        "{} c08 distribution: {}",
        if ok { "PASS" } else { "FAIL" },
        details.join("; ")
    );
    assert!(ok, "{}", details.join("; "));
}

#[test]
fn c09_general_potential_reduction() {
    let profile = reference_profile();
    let params = ChainParams::new_linear(64, 1.0, 0.0, DEFAULT_R, &profile).unwrap();
    let state0 = build_initial_state(&profile, &params).unwrap();
    let dt = 0.05 / params.omega();
    let pot = PairPotential::from_params(&params);
    let general = verlet_integrate(&params, &state0, general_force(pot), 5.0, dt).unwrap();
    let linear = verlet_integrate(&params, &state0, quadratic_nn_force(&params), 5.0, dt).unwrap();
    let report = chain_core::verify::reduction_check(&general, &params);
    let mut max_diff = 0.0_f64;
    for (a, b) in general.iter().zip(&linear) {
        for (x, y) in a.pos.iter().zip(&b.pos) {
            max_diff = max_diff.max((x - y).abs());
        }
    }
    let ok = report.wells_ok && report.cutoff_ok && max_diff <= 1e-10;
    println!(
        "{} c09 reduction: worst well fraction {:.3}, min cutoff fraction {:.3}, trajectory gap {max_diff:.3e}",
        if ok { "PASS" } else { "FAIL" },
        report.worst_well_fraction,
        report.min_cutoff_fraction
    );
    assert!(ok, "{report:?}, max diff {max_diff:.3e}");
}

#[test]
fn c10_density_surface_reproduction() {
    let mut cfg = RunConfig::default();
    cfg.omega_prime = Some(1.0);
    let mut first = Vec::new();
    commands::cmd_experiment_density(&cfg, &mut first).unwrap();
    let mut second = Vec::new();
    commands::cmd_experiment_density(&cfg, &mut second).unwrap();
    assert_eq!(first, second, "same seed must give byte-identical output");

    let text = String::from_utf8(first).unwrap();
    let gamma: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("# gamma = "))
        .unwrap()
        .parse()
        .unwrap();
    let values: Vec<f64> = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("t,"))
        .map(|l| l.split(',').nth(2).unwrap().parse().unwrap())
        .collect();
    assert_eq!(values.len(), 201 * 201, "full 201x201 surface");
    let max_dev = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let band = gamma / (1.0 - gamma);
    assert!(max_dev <= band, "density bound: {max_dev:.3e} <= {band:.3e}");

    // Structure clause, asserted as specified. It cannot hold for this
    // initial data: the deviation profile is a sum of nearly a hundred
    // incommensurate sine modes whose coefficients are sized so that
    // 2*alpha + beta/omega' = gamma, which puts the pointwise amplitude of
    // rho - 1 two orders of magnitude below gamma (the budget measures
    // integrated curvature, not pointwise height, and the modes never phase
    // align). Measured max|rho-1| is about 1.2e-3 against a demanded
    // 0.1*gamma = 5e-2. The bound clause and determinism above do hold.
    let floor = 0.1 * gamma;
    let ok = max_dev > floor;
    println!(
        "{} c10 density surface: max|rho-1| {max_dev:.3e}, bound {band:.3e}, structure floor {floor:.3e}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "structure clause: max|rho-1| = {max_dev:.3e} is not above 0.1*gamma = {floor:.3e}");
}

#[test]
fn c11_negative_control_unscaled_stiffness() {
    let profile = reference_profile();
    let scaled = ChainParams::new_linear(200, 1.0, 0.0, DEFAULT_R, &profile).unwrap();
    let coeffs = coeffs_for(&profile, &scaled);
    let good = check_gap_band(&coeffs, &scaled, 10.0, 201);
    assert!(good.passed, "scaled run must stay in the band: {good:?}");

    let unscaled = scaled.without_stiffness_scaling();
    let coeffs_un = coeffs_for(&profile, &unscaled);
    let bad = check_gap_band(&coeffs_un, &unscaled, 10.0, 201);

    // Asserted as specified: removing the stiffness scaling is supposed to
    // break the gap band. For this initial data it cannot: the initial
    // velocities are zero, so every mode amplitude is a projection of the
    // initial gaps alone and is independent of the stiffness; the motion
    // traces the same gap envelope at a slower clock and the band holds at
    // any stiffness. A perturbation with a velocity component does break
    // the band unscaled (see the negative-control check in the CLI), but
    // the specified initial data has none.
    let ok = !bad.passed;
    println!(
        "{} c11 negative control: unscaled max gap {:.6e} vs band top {:.6e} (expected a violation)",
        if ok { "PASS" } else { "FAIL" },
        bad.max_gap,
        bad.hi
    );
    assert!(
        ok,
        "unscaled run stayed in the band: gaps [{:.6e}, {:.6e}] within [{:.6e}, {:.6e}]",
        bad.min_gap, bad.max_gap, bad.lo, bad.hi
    );
}
