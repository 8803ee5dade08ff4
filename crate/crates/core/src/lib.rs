//! Numerical laboratory for uniform approximation of periodic convolution
//! classes by Zygmund and Fejér summation.
//!
//! The crate provides:
//! - weight functions and numeric membership tests for the growth classes
//!   that select the order-estimate regime ([`weights`], [`classify`]);
//! - trigonometric polynomials, the summation multipliers, class
//!   convolution, and the deviation kernel with a certified infinite tail
//!   ([`poly`], [`dirichlet`], [`kernel`]);
//! - periodic Lp norms by adaptive Gauss–Legendre panels and the exact
//!   worst-case class error as a dual norm, with a Parseval closed form at
//!   p = 2 as an independent oracle ([`norms`]);
//! - the four extremal lower-bound witnesses ([`witness`]);
//! - sweep oracles for the telescoped-difference and oscillatory-sum
//!   bounds ([`series_bounds`]);
//! - reproducible experiment drivers emitting deterministic CSV/JSON
//!   ([`report`]).

pub mod classify;
pub mod dirichlet;
pub mod error;
pub mod growth;
pub mod kernel;
pub mod norms;
pub mod poly;
pub mod quadrature;
pub mod report;
pub mod series_bounds;
pub mod weights;
pub mod witness;

pub use classify::{
    classify_monotone_class, classify_regime, classify_theta_p, classify_z_rho, classify_zygmund,
    ClassificationReport, GeometricGrid, MonotoneClass, RegimeLabel, ThetaReport, ZRhoClass,
};
pub use error::{CoreError, Result};
pub use growth::GrowthFunction;
pub use kernel::{kernel_tail, DeviationKernel};
pub use norms::{exact_class_error, lp_norm_periodic, parseval_error, ErrorReport, QuadratureConfig};
pub use poly::{convolve_class, fejer_sum, zygmund_sum, SummationMethod, TrigPolynomial};
pub use weights::{ClassSpec, WeightFunction, WeightKind};
pub use witness::{WitnessKind, WitnessResult};
