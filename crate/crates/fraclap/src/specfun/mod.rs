//! Self-contained special functions: log-Gamma, overflow-free Gamma ratios,
//! exponentially scaled modified Bessel functions of integer order, the Gauss
//! hypergeometric function on `[0,1]`, and `₃F₂` at unit argument.
//!
//! Everything here is a pure function of its arguments and safe to call
//! concurrently.

mod bessel;
mod gamma;
mod hyp;

pub use bessel::bessel_i_scaled;
pub use gamma::{gamma_ratio, ln_gamma};
pub use hyp::{gauss_2f1, gauss_2f1_with, hyp_3f2_unit, hyp_3f2_unit_with};

use crate::error::{Error, Result};

/// Truncation and tolerance controls for hypergeometric series.
#[derive(Clone, Copy, Debug)]
pub struct SeriesControl {
    /// Hard cap on the number of summed terms.
    pub max_terms: usize,
    /// Relative tolerance for terminating the summation.
    pub rel_tol: f64,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            max_terms: 2_000_000,
            rel_tol: 1e-14,
        }
    }
}

impl SeriesControl {
    pub fn new(max_terms: usize, rel_tol: f64) -> Result<Self> {
        let ctl = SeriesControl { max_terms, rel_tol };
        ctl.validate()?;
        Ok(ctl)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_terms < 1 {
            return Err(Error::Parameter("max_terms must be at least 1".into()));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(Error::Parameter(format!(
                "rel_tol must lie in (0,1), got {}",
                self.rel_tol
            )));
        }
        Ok(())
    }
}
