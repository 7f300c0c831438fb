//! Simulation of photodetachment from a 2D model negative ion in
//! ultrastrong laser fields.
//!
//! The electron is bound by a radial square well and driven by a plane-wave
//! pulse propagating along `y` with `x` polarization. The time-dependent
//! Schrödinger equation is solved in velocity gauge with or without the
//! dipole approximation using an alternating-direction-implicit scheme;
//! classical trajectories, the Kramers-Henneberger averaged potential and a
//! 1D companion model are provided alongside for the interpretation of the
//! quantum results. All quantities are in atomic units.

pub mod classical;
pub mod config;
pub mod error;
pub mod field;
pub mod fileio;
pub mod grid;
pub mod laser;
pub mod observables;
pub mod potentials;
pub mod special;
pub mod spectral;
pub mod tdse;
pub mod tridiag;

pub use error::{Error, Result};
pub use field::{Field1D, Field2D, RealField1D, RealField2D};
pub use grid::{make_grid, Grid1D, Grid2D};

/// Speed of light in atomic units (CODATA inverse fine-structure constant).
pub const SPEED_OF_LIGHT: f64 = 137.035999;
