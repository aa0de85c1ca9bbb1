//! Fractional powers of the discrete Laplacian on `Z_h = h·Z` and `(h·Z)²`.
//!
//! The library evaluates the nonlocal operators `(-Δ_h)^s` (0 < s < 1) and
//! `(-Δ_h)^{-s}` (0 < s < 1/2) through their explicit convolution kernels,
//! cross-checks the kernels against the heat-semigroup integral representation
//! by adaptive quadrature, and ships a harness that measures `ℓ∞` consistency
//! rates against closed-form continuous solutions under mesh refinement.
//!
//! The main entry points are:
//!
//! - [`kernels1d`] / [`kernels2d`]: kernel values, normalization constants,
//!   and quadrature oracles,
//! - [`gridops`]: operator application on lattice functions, the semidiscrete
//!   heat semigroup, and discrete Hölder seminorms,
//! - [`mod@reference`]: closed-form solution pairs `(u, (-Δ)^s u)`,
//! - [`convergence`]: refinement studies and log-log slope fits,
//! - [`cli`]: the `fraclap` command-line surface.

// `!(x > 0.0)`-style guards are deliberate: they reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod convergence;
pub mod error;
pub mod gridops;
pub mod kernels1d;
pub mod kernels2d;
pub mod order;
pub mod quad;
pub mod reference;
pub mod specfun;
pub mod tailsum;
mod util;

pub use error::{Error, Result};
pub use order::FracOrder;
