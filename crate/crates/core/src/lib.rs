//! Quantum states of a particle bound to a toroidal helix.
//!
//! The crate computes the closed-form geometry of circular and elliptic
//! toroidal helices, builds the curvature-inclusive effective 1D Hamiltonian
//! in a Bloch basis, diagonalizes it, and derives probability currents and
//! toroidal moments from the eigenstates.
//!
//! Natural units are used throughout: `ħ = m_e = q_e = 1`, lengths in units
//! of whatever `R` is given (usually `R = 1`).
//!
//! ```
//! use toroidal_helix::{solve_bloch, HelixShape, SpectrumConfig};
//!
//! let shape = HelixShape::new(1.0, 0.75, 0.25, 6)?;
//! let states = solve_bloch(&shape, 1, &SpectrumConfig::new(&shape, false))?;
//! assert!((states[0].energy - 0.0724).abs() < 1e-3);
//! # Ok::<(), toroidal_helix::Error>(())
//! ```

// Range checks are written `!(x > 0.0)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod observables;
pub mod quadrature;
pub mod spectrum;

pub use error::{Error, Result};
pub use geometry::{FrenetData, HelixShape, MetricTensors, TubePoint};
pub use linalg::{eigen_decompose, fix_phase, EigenDecomposition, HermitianMatrix};
pub use observables::{
    classical_moment_closed_form, classical_moment_numeric, classical_reference, current, free_particle_current,
    sample_current_profile, thermal_average, toroidal_moment, CurrentProfile, MomentResult, StateRef, ThermalSpec,
};
pub use quadrature::{integrate_periodic, QuadratureResult, QuadratureSpec};
pub use spectrum::{
    basis_wavefunction, build_hamiltonian, hamiltonian_element, solve_bloch, solve_states, BlochBasis, EigenState,
    SpectrumConfig,
};
