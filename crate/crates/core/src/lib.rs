//! Dynamics of a long chain of unit masses coupled by stiff short-range springs,
//! and the continuum gas that emerges as the chain grows.
//!
//! The chain has `N` particles with rest spacing `a = 1/N`, interaction range
//! `a1 = r/N` and stiffness `omega = omega' * N`. Initial positions and
//! velocities are sampled from smooth macroscopic profiles. Everything the
//! crate computes flows from two exact solution routes:
//!
//! * [`spectral`] diagonalizes the linearized chain in the discrete sine basis
//!   and evaluates positions at any time in closed form, with no time stepping;
//! * [`continuum`] solves the limiting wave equation and builds the Lagrangian
//!   flow map `G(t, z)` together with the Eulerian fields (density, velocity,
//!   pressure) it induces.
//!
//! [`integrator`] provides an independent velocity Verlet oracle, including the
//! full short-range potential with its plateau cutoff, and [`verify`] packages
//! the quantitative comparisons between all three routes.

pub mod continuum;
pub mod dst;
pub mod error;
pub mod integrator;
pub(crate) mod kernels;
pub mod model;
pub mod quad;
pub mod rng;
pub mod spectral;
pub mod verify;

pub use error::{ChainError, Result};
pub use model::{build_initial_state, ChainParams, ChainState, PairPotential, Profile};
pub use spectral::{ModeCoefficients, SpectralBasis};
