//! Operator run configuration.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernels1d::KernelSource;
use crate::order::FracOrder;

/// Handling of the kernel sum beyond the truncation radius `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TailMode {
    /// The far field is zero (compact support inside `N`) or constant; the
    /// remainder is then exactly `(u_j - L)·mass_{>N}`. Rejected when neither
    /// a compact hint nor a constant far field can be established.
    Zero,
    /// Drop the far samples, keep the diagonal mass term with the power-law
    /// tail sum; plain truncation of the far samples.
    Ignore,
    /// Extend the sum with the asymptotic kernel out to radius `M`.
    Sampled(i64),
}

/// Configuration for one operator application.
#[derive(Clone, Copy, Debug)]
pub struct OperatorConfig {
    pub order: FracOrder,
    /// Truncation radius of the exact-kernel sum.
    pub radius: i64,
    pub tail: TailMode,
    pub kernel: KernelSource,
}

impl OperatorConfig {
    pub fn new(order: FracOrder, radius: i64) -> Self {
        OperatorConfig {
            order,
            radius,
            tail: TailMode::Ignore,
            kernel: KernelSource::ClosedForm,
        }
    }

    pub fn with_tail(mut self, tail: TailMode) -> Self {
        self.tail = tail;
        self
    }

    pub fn with_kernel(mut self, kernel: KernelSource) -> Self {
        self.kernel = kernel;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.radius < 1 {
            return Err(Error::Config(format!(
                "truncation radius must be >= 1, got {}",
                self.radius
            )));
        }
        if let TailMode::Sampled(m) = self.tail {
            if m <= self.radius {
                return Err(Error::Config(format!(
                    "sampled tail radius {m} must exceed the truncation radius {}",
                    self.radius
                )));
            }
        }
        Ok(())
    }
}

/// Heat-semigroup step configuration.
#[derive(Clone, Copy, Debug)]
pub struct HeatConfig {
    /// Diffusion time `t ≥ 0`.
    pub t: f64,
    /// Kernel-sum truncation order `K ≥ 1`.
    pub truncation: i64,
}

impl HeatConfig {
    pub fn new(t: f64, truncation: i64) -> Result<Self> {
        let hc = HeatConfig { t, truncation };
        hc.validate_basic()?;
        Ok(hc)
    }

    fn validate_basic(&self) -> Result<()> {
        if !(self.t >= 0.0) {
            return Err(Error::Domain(format!("time must be >= 0, got {}", self.t)));
        }
        if self.truncation < 1 {
            return Err(Error::Domain(format!(
                "heat truncation must be >= 1, got {}",
                self.truncation
            )));
        }
        Ok(())
    }
}
