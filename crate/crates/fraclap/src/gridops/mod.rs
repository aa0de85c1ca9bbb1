//! Lattice operators: `(-Δ_h)^{±s}`, the semidiscrete heat semigroup,
//! first-order differences, and discrete Hölder seminorms.
//!
//! Input functions are total maps on the lattice ([`Sampler1d`],
//! [`Sampler2d`]); the nonlocal operators sample them arbitrarily far outside
//! the output window, with the truncated remainder handled per [`TailMode`].
//! Output is materialized on a finite [`Window1d`]/[`Window2d`].

mod apply1;
mod apply2;
mod config;
mod grid;
mod heat;
mod holder;
mod oracle;
mod sampler;
mod window;

pub use apply1::{apply_frint_1d, apply_frlap_1d, d_minus, d_plus};
pub use apply2::{apply_frint_2d, apply_frlap_2d};
pub use config::{HeatConfig, OperatorConfig, TailMode};
pub use grid::{Grid1d, Grid2d};
pub use heat::{heat_apply_1d, heat_apply_2d, heat_truncation_for};
pub use holder::{holder_norm, holder_seminorm};
pub use oracle::{frlap_semigroup_oracle, OracleControls};
pub use sampler::{Sampler1d, Sampler2d, SupportHint};
pub use window::{Window1d, Window2d};
