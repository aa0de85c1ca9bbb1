//! Signed fractional order of the discrete Laplacian power.

use crate::error::{Error, Result};

/// Order of a fractional power of `-Δ_h`, encoded with its sign: positive
/// values `s ∈ (0,1)` select the Laplacian power `(-Δ_h)^s`, negative values
/// `-s` with `s ∈ (0,1/2)` select the integral power `(-Δ_h)^{-s}`.
///
/// The integral kernel grows like `|m|^{2s-1}` and its defining integral
/// diverges for `s ≥ 1/2`, so such orders are rejected outright.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FracOrder(f64);

impl FracOrder {
    /// Builds an order from its signed value.
    pub fn new(signed: f64) -> Result<Self> {
        if (signed > 0.0 && signed < 1.0) || (signed > -0.5 && signed < 0.0) {
            Ok(FracOrder(signed))
        } else {
            Err(Error::Domain(format!(
                "order must lie in (-1/2,0) for integral powers or (0,1) for Laplacian powers, got {signed}"
            )))
        }
    }

    /// Laplacian power of exponent `s ∈ (0,1)`.
    pub fn laplacian(s: f64) -> Result<Self> {
        if s > 0.0 && s < 1.0 {
            Ok(FracOrder(s))
        } else {
            Err(Error::Domain(format!("s must lie in (0,1), got {s}")))
        }
    }

    /// Integral power of exponent `s ∈ (0,1/2)`, stored as `-s`.
    pub fn integral(s: f64) -> Result<Self> {
        if s > 0.0 && s < 0.5 {
            Ok(FracOrder(-s))
        } else {
            Err(Error::Domain(format!(
                "integral powers require s in (0,1/2), got {s}"
            )))
        }
    }

    pub fn signed(self) -> f64 {
        self.0
    }

    /// `|s|`, the magnitude of the exponent.
    pub fn s(self) -> f64 {
        self.0.abs()
    }

    pub fn is_laplacian(self) -> bool {
        self.0 > 0.0
    }

    /// Power of `h` applied by the operator: `-2s` for the Laplacian power,
    /// `+2s` for the integral power.
    pub fn h_exponent(self) -> f64 {
        if self.is_laplacian() {
            -2.0 * self.0
        } else {
            2.0 * self.0.abs()
        }
    }
}
