//! Construction and numerical verification of positive-energy quantum field
//! models built from explicit ingredients: spin kernel matrices, conjugation
//! matrices and interaction measures. The crate evaluates n-point vacuum
//! amplitudes on Gaussian wave-packet states and checks every claim that can
//! be checked at desk scale: Gram positivity, Poincare covariance, spectral
//! support, locality, cluster decay and 2->2 scattering against the closed
//! form.

pub mod algebra;
pub mod checks;
pub mod config;
pub mod error;
pub mod geometry;
pub mod kernels;
pub mod matchings;
pub mod multinomial;
pub mod nilpotent;
pub mod phase_space;
pub mod quad;
pub mod report;
pub mod spin;
pub mod tolerances;
pub mod vev;

pub use error::QfvError;
