//! End-to-end agreement checks between the three solution routes and the
//! continuum identities that tie the Eulerian fields together.

use chain_core::integrator::{general_force, quadratic_nn_force, verlet_observe};
use chain_core::model::DEFAULT_R;
use chain_core::quad;
use chain_core::verify::check_gap_band;
use chain_core::{
    build_initial_state, ChainParams, ModeCoefficients, PairPotential, Profile,
};
use chain_core::continuum::ContinuumMap;

#[test]
fn verlet_and_spectral_agree_on_a_multimode_chain() {
    let p = Profile::sine_with_velocity(&[(1, 0.5), (2, -0.3), (5, 0.1)], 0.002, &[(3, 0.002)])
        .unwrap();
    let params = ChainParams::new(32, 1.0, 0.4, DEFAULT_R, &p).unwrap();
    let state = build_initial_state(&p, &params).unwrap();
    let coeffs = ModeCoefficients::project(&state, &params).unwrap();
    let end = verlet_observe(
        &params,
        &state,
        quadratic_nn_force(&params),
        1.0,
        1e-4 / params.omega_prime(),
        |_| {},
    )
    .unwrap();
    let exact = coeffs.positions_at(1.0);
    for k in 0..32 {
        let diff = (end.pos[k] - exact.pos[k]).abs();
        assert!(diff < 1e-8, "particle {k}: {diff:.3e}");
        let vdiff = (end.vel[k] - exact.vel[k]).abs();
        assert!(vdiff < 1e-6, "particle {k} velocity: {vdiff:.3e}");
    }
}

#[test]
fn full_potential_reproduces_the_linear_dynamics_when_gaps_stay_in_the_well() {
    let p = Profile::random_fourier(12, 0.3).unwrap();
    let params = ChainParams::new(24, 1.0, 0.0, DEFAULT_R, &p).unwrap();
    let state = build_initial_state(&p, &params).unwrap();
    let coeffs = ModeCoefficients::project(&state, &params).unwrap();
    let pot = PairPotential::from_params(&params);
    let end = verlet_observe(
        &params,
        &state,
        general_force(pot),
        0.5,
        5e-5,
        |_| {},
    )
    .unwrap();
    let exact = coeffs.positions_at(0.5);
    for k in 0..24 {
        let diff = (end.pos[k] - exact.pos[k]).abs();
        assert!(diff < 1e-8, "particle {k}: {diff:.3e}");
    }
}

#[test]
fn projection_round_trips_on_a_large_chain() {
    let p = Profile::random_fourier(77, 0.5).unwrap();
    let params = ChainParams::new_linear(1024, 1.0, 0.2, DEFAULT_R, &p).unwrap();
    let state = build_initial_state(&p, &params).unwrap();
    let coeffs = ModeCoefficients::project(&state, &params).unwrap();
    let back = coeffs.positions_at(0.0);
    for k in 0..1024 {
        assert!((back.pos[k] - state.pos[k]).abs() < 1e-12);
        assert!((back.vel[k] - state.vel[k]).abs() < 1e-12);
    }
}

#[test]
fn density_is_the_distribution_gradient_and_force_balances_pressure() {
    let p = Profile::sine_with_velocity(&[(1, 0.9), (3, -0.1)], 0.01, &[(2, 0.01)]).unwrap();
    let map = ContinuumMap::new(&p, 1.3, 0.2).unwrap();
    let h = 1e-5;
    for &t in &[0.4, 2.1] {
        let (left, right) = map.domain(t);
        for i in 1..10 {
            let y = left + (right - left) * i as f64 / 10.0;
            let fp = map.fields(t, y + h).unwrap();
            let fm = map.fields(t, y - h).unwrap();
            let mid = map.fields(t, y).unwrap();
            // rho = dF/dy.
            let grad = (fp.mass_fraction - fm.mass_fraction) / (2.0 * h);
            assert!(
                (grad - mid.density).abs() < 1e-5,
                "t = {t}, y = {y}: dF/dy = {grad}, rho = {}",
                mid.density
            );
            // force = -p_y / rho.
            let p_y = (fp.pressure - fm.pressure) / (2.0 * h);
            assert!(
                (-p_y / mid.density - mid.force).abs() < 1e-4,
                "t = {t}, y = {y}"
            );
        }
    }
}

#[test]
fn continuum_density_integrates_to_unit_mass() {
    let p = Profile::random_fourier(3, 0.5).unwrap();
    let map = ContinuumMap::new(&p, 1.0, 0.0).unwrap();
    for &t in &[0.0, 1.9, 7.3] {
        let (left, right) = map.domain(t);
        let mass = quad::integrate(
            &|y: f64| map.fields(t, y).unwrap().density,
            left,
            right,
            1 << 10,
        );
        assert!((mass - 1.0).abs() < 1e-9, "t = {t}: mass = {mass}");
    }
}

#[test]
fn stiffness_scaling_is_what_keeps_gaps_in_the_band() {
    // A pure velocity profile drives gap excursions of size beta/(N omega_1).
    // With omega = omega' N the excursion stays inside gamma/N; dropping the
    // N factor inflates it past the band within a few time units.
    let p = Profile::sine_with_velocity(&[], 0.0, &[(1, 0.05)]).unwrap();
    let scaled = ChainParams::new(200, 1.0, 0.0, DEFAULT_R, &p).unwrap();
    let state = build_initial_state(&p, &scaled).unwrap();

    let coeffs = ModeCoefficients::project(&state, &scaled).unwrap();
    let good = check_gap_band(&coeffs, &scaled, 10.0, 201);
    assert!(good.passed, "{good:?}");

    let unscaled = scaled.without_stiffness_scaling();
    assert_eq!(unscaled.gamma(), scaled.gamma());
    let coeffs = ModeCoefficients::project(&state, &unscaled).unwrap();
    let bad = check_gap_band(&coeffs, &unscaled, 10.0, 201);
    assert!(!bad.passed, "{bad:?}");
    // The excursion is not marginal: the band is overshot by half again.
    assert!(
        bad.max_gap > bad.hi + 0.5 * (bad.hi - unscaled.a()),
        "{bad:?}"
    );
}
