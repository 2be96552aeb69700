//! Simulation and pulse-optimization engine for two-atom Rydberg controlled-Z
//! gates.
//!
//! Two five-level atoms (qubit states |0⟩, |1⟩, reservoir |D⟩, intermediate
//! |p⟩, Rydberg |r⟩) are driven by global two-photon excitation fields and
//! interact through a Rydberg-Rydberg shift on |rr⟩. The crate provides
//!
//! - the 25-dimensional two-atom Hamiltonian and spontaneous-decay channels
//!   ([`atom`]),
//! - time-dependent drive envelopes, Gaussian or Erf-blended segmented
//!   ([`pulse`]),
//! - adaptive Runge-Kutta propagation of the Lindblad master equation and of
//!   the decay-free Schrödinger limit ([`dynamics`]),
//! - the Bell-fidelity cost used to score a gate pulse ([`fidelity`]),
//! - a bounded, deterministic differential-evolution optimizer ([`de`]),
//! - Doppler-dephasing and amplitude-fluctuation robustness sweeps
//!   ([`robustness`]).
//!
//! Internal unit system: time in microseconds, frequencies as angular
//! frequencies in rad/us, decay constants as plain rates in 1/us. Conversion
//! from user-facing "MHz" values happens once at the boundary, see
//! [`units::FreqConvention`].

pub mod atom;
pub mod de;
pub mod dynamics;
pub mod error;
pub mod fidelity;
pub mod linalg;
pub mod ode;
pub mod pulse;
pub mod robustness;
pub mod units;

pub use error::{Error, Result};
pub use linalg::C64;
