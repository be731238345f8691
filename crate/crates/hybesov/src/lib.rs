//! Pseudo-spectral toolkit for hybrid frequency-regime analysis on periodic grids.
//!
//! The crate provides:
//!
//! * periodic grid fields with consistent sample/spectrum pairs and Fourier
//!   calculus ([`field`]),
//! * dyadic (Littlewood-Paley) cutoffs, frequency partitions with medium
//!   regimes, Besov semi-norms and admissible exponent sequences ([`lp`]),
//! * paraproduct/remainder/commutator operators and the frequency-support
//!   vanishing check ([`bony`]),
//! * the linearized relaxation symbol, its eigenvalues and the exact
//!   per-mode propagator ([`spectral`]),
//! * nonlinear solvers for the damped Euler system in sound-speed variables
//!   and for the porous medium equation ([`euler`], [`pme`]),
//! * time-integrated hybrid functionals and relaxation-error measures
//!   accumulated from solver traces ([`functionals`]),
//! * parameter-sweep drivers and log-log rate fits ([`sweep`]).
//!
//! All core math is generic over the scalar type through [`Scalar`];
//! concrete `f64` aliases are exported at the crate root.

pub mod bony;
pub mod error;
pub mod euler;
pub mod field;
pub mod functionals;
pub mod init;
pub mod io;
pub mod lp;
pub mod pme;
pub mod scalar;
pub mod spectral;
pub mod sweep;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Double-precision grid field.
pub type Field64 = field::GridField<f64>;
/// Single-precision grid field.
pub type Field32 = field::GridField<f32>;
/// Double-precision vector field.
pub type VecField64 = field::VecField<f64>;
/// Single-precision vector field.
pub type VecField32 = field::VecField<f32>;




