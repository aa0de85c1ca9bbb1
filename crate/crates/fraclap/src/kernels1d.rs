//! Closed-form 1D kernels of `(-Δ_h)^{±s}`, their normalization constants,
//! and an independent quadrature oracle built from the heat-semigroup
//! representation `K_{±s}(m) ∝ ∫₀^∞ e^{-2t} I_m(2t) t^{∓s-1} dt`.
//!
//! Closed forms, for `m ≠ 0`:
//!
//! ```text
//! K_s(m)    = 4^s Γ(1/2+s) Γ(|m|-s) / (√π |Γ(-s)| Γ(|m|+1+s)),   K_s(0) = 0,
//! K_{-s}(m) = 4^{-s} Γ(1/2-s) Γ(|m|+s) / (√π Γ(s) Γ(|m|+1-s)),
//! K_{-s}(0) = 4^{-s} Γ(1/2-s) / (√π Γ(1-s)).
//! ```
//!
//! `|Γ(-s)|` is always evaluated as `Γ(1-s)/s`, which never touches log-Gamma
//! at negative arguments.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::order::FracOrder;
use crate::quad;
use crate::specfun::{bessel_i_scaled, gamma_ratio, ln_gamma};
use crate::util::KahanSum;

fn check_s_unit(s: f64, what: &str) -> Result<()> {
    if s > 0.0 && s < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{what} requires s in (0,1), got {s}"
        )))
    }
}

fn check_s_half(s: f64, what: &str) -> Result<()> {
    if s > 0.0 && s < 0.5 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{what} requires s in (0,1/2), got {s}: the defining integral diverges beyond"
        )))
    }
}

/// `|Γ(-s)| = Γ(1-s)/s` for `s ∈ (0,1)`.
pub(crate) fn abs_gamma_neg_s(s: f64) -> f64 {
    ln_gamma(1.0 - s).expect("1-s > 0").exp() / s
}

/// Normalization constant `c_s = 4^s Γ(1/2+s) / (√π |Γ(-s)|)` of the
/// Laplacian-power kernel; equals the constant of the continuous operator
/// in one dimension.
pub fn c_s(s: f64) -> Result<f64> {
    check_s_unit(s, "c_s")?;
    Ok(s * 4f64.powf(s) * ln_gamma(0.5 + s)?.exp() / (PI.sqrt() * ln_gamma(1.0 - s)?.exp()))
}

/// Constant `c_{-s} = 4^{-s} Γ(1/2-s) / (√π Γ(s))` of the integral-power
/// kernel, `s ∈ (0,1/2)`.
pub fn c_minus_s(s: f64) -> Result<f64> {
    check_s_half(s, "c_minus_s")?;
    Ok(4f64.powf(-s) * ln_gamma(0.5 - s)?.exp() / (PI.sqrt() * ln_gamma(s)?.exp()))
}

/// Kernel of `(-Δ_h)^s` at offset `m`; zero at the origin, symmetric in `m`.
pub fn kernel_ks(s: f64, m: i64) -> Result<f64> {
    check_s_unit(s, "kernel_ks")?;
    if m == 0 {
        return Ok(0.0);
    }
    let ma = m.unsigned_abs() as f64;
    Ok(c_s(s)? * gamma_ratio(ma - s, ma + 1.0 + s)?)
}

/// Kernel of `(-Δ_h)^{-s}` at offset `m`; strictly positive, symmetric.
pub fn kernel_kminus(s: f64, m: i64) -> Result<f64> {
    check_s_half(s, "kernel_kminus")?;
    if m == 0 {
        return Ok(
            4f64.powf(-s) * ln_gamma(0.5 - s)?.exp() / (PI.sqrt() * ln_gamma(1.0 - s)?.exp())
        );
    }
    let ma = m.unsigned_abs() as f64;
    Ok(c_minus_s(s)? * gamma_ratio(ma + s, ma + 1.0 - s)?)
}

/// Total kernel mass `Σ_s = Σ_{m≠0} K_s(m) = 2^{2s} Γ(1/2+s) / (√π Γ(1+s))`.
pub fn sigma_s(s: f64) -> Result<f64> {
    check_s_unit(s, "sigma_s")?;
    Ok(2f64.powf(2.0 * s) * ln_gamma(0.5 + s)?.exp() / (PI.sqrt() * ln_gamma(1.0 + s)?.exp()))
}

/// Partial kernel mass plus a tail estimate, the companion check for
/// [`sigma_s`].
#[derive(Clone, Copy, Debug)]
pub struct PartialMass {
    pub partial: f64,
    pub tail_estimate: f64,
}

impl PartialMass {
    pub fn total(&self) -> f64 {
        self.partial + self.tail_estimate
    }
}

/// Sums `K_s(m)` over `1 ≤ |m| ≤ m_max` directly and estimates the remaining
/// mass by the midpoint integral of the leading power law `c_s |m|^{-1-2s}`.
/// The `1/m` correction to the kernel vanishes identically, so the estimate
/// is accurate to `O(m_max^{-2-2s})` relative to the tail.
pub fn sigma_s_partial(s: f64, m_max: i64) -> Result<PartialMass> {
    check_s_unit(s, "sigma_s_partial")?;
    if m_max < 1 {
        return Err(Error::Domain("m_max must be >= 1".into()));
    }
    let cs = c_s(s)?;
    let mut acc = KahanSum::new();
    for m in (1..=m_max).rev() {
        let ma = m as f64;
        acc.add(gamma_ratio(ma - s, ma + 1.0 + s)?);
    }
    let partial = 2.0 * cs * acc.value();
    let tail = cs * (m_max as f64 + 0.5).powf(-2.0 * s) / s;
    Ok(PartialMass {
        partial,
        tail_estimate: tail,
    })
}

fn oracle_integral(s_exponent: f64, m: i64, rel_tol: f64) -> Result<f64> {
    // ∫₀^∞ e^{-2t} I_m(2t) t^{s_exponent-1} dt, split at t = 1; the tail goes
    // through the substitution t = e^u.
    let ma = m.unsigned_abs() as i64;
    let f = move |t: f64| bessel_i_scaled(ma, 2.0 * t) * t.powf(s_exponent - 1.0);
    let near = quad::integrate(f, 0.0, 1.0, 0.0, rel_tol, 4000)?;
    let far = quad::integrate_tail(f, 1.0, 0.0, rel_tol, 4000)?;
    Ok(near.value + far.value)
}

/// Semigroup-quadrature oracle for `K_s(m)`, `m ≠ 0`:
/// `(1/|Γ(-s)|) ∫₀^∞ e^{-2t} I_m(2t) dt / t^{1+s}`.
///
/// Independent of the Gamma-ratio closed form; adaptive quadrature targets
/// relative accuracy 1e-10.
pub fn kernel_ks_oracle(s: f64, m: i64) -> Result<f64> {
    check_s_unit(s, "kernel_ks_oracle")?;
    if m == 0 {
        return Err(Error::Domain(
            "kernel_ks_oracle requires m != 0 (the t-integral diverges at the origin)".into(),
        ));
    }
    Ok(oracle_integral(-s, m, 1e-11)? / abs_gamma_neg_s(s))
}

/// Semigroup-quadrature oracle for `K_{-s}(m)` (any `m`, `s ∈ (0,1/2)`):
/// `(1/Γ(s)) ∫₀^∞ e^{-2t} I_m(2t) t^{s-1} dt`.
pub fn kernel_kminus_oracle(s: f64, m: i64) -> Result<f64> {
    check_s_half(s, "kernel_kminus_oracle")?;
    Ok(oracle_integral(s, m, 1e-11)? / ln_gamma(s)?.exp())
}

/// How kernel-table entries are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelSource {
    /// Exact Gamma-ratio closed form (1D only).
    ClosedForm,
    /// Semigroup quadrature per entry; slow, used as a cross-check.
    Quadrature,
    /// Power-law leading term `c·|m|^{-1∓2s}` everywhere off the origin.
    Asymptotic,
    /// Exact (1D) or quadrature (2D) entries up to the crossover radius,
    /// asymptotic beyond.
    Hybrid(i64),
}

/// What lies beyond a table's truncation radius.
#[derive(Clone, Copy, Debug)]
pub enum TailInfo {
    /// Exact remaining kernel mass `Σ_{|m|>N} K(m)` (Laplacian powers only).
    ExactMass(f64),
    /// The kernel is not summable; only its power-law envelope is recorded.
    PowerLaw { coeff: f64, exponent: f64 },
}

/// Immutable table of kernel values `K(m)` for `0 ≤ m ≤ radius`.
///
/// Only nonnegative offsets are stored; the kernel is symmetric by
/// construction. Tables are built once per `(order, radius, source)` and are
/// safe to share read-only across threads.
#[derive(Clone, Debug)]
pub struct KernelTable {
    order: FracOrder,
    values: Vec<f64>,
    tail: TailInfo,
}

impl KernelTable {
    pub fn build(order: FracOrder, radius: i64, source: KernelSource) -> Result<Self> {
        if radius < 1 {
            return Err(Error::Domain("kernel table radius must be >= 1".into()));
        }
        if let KernelSource::Hybrid(c) = source {
            if c < 1 || c > radius {
                return Err(Error::Config(format!(
                    "hybrid crossover must lie in [1, radius], got {c}"
                )));
            }
        }
        let s = order.s();
        let closed = |m: i64| -> Result<f64> {
            if order.is_laplacian() {
                kernel_ks(s, m)
            } else {
                kernel_kminus(s, m)
            }
        };
        let coeff = if order.is_laplacian() {
            c_s(s)?
        } else {
            c_minus_s(s)?
        };
        let exponent = if order.is_laplacian() {
            1.0 + 2.0 * s
        } else {
            1.0 - 2.0 * s
        };

        let values: Result<Vec<f64>> = (0..=radius)
            .into_par_iter()
            .map(|m| match source {
                KernelSource::ClosedForm => closed(m),
                KernelSource::Quadrature => {
                    if m == 0 {
                        closed(0)
                    } else if order.is_laplacian() {
                        kernel_ks_oracle(s, m)
                    } else {
                        kernel_kminus_oracle(s, m)
                    }
                }
                KernelSource::Asymptotic => {
                    if m == 0 {
                        closed(0)
                    } else {
                        Ok(coeff * (m as f64).powf(-exponent))
                    }
                }
                KernelSource::Hybrid(c) => {
                    if m <= c {
                        closed(m)
                    } else {
                        Ok(coeff * (m as f64).powf(-exponent))
                    }
                }
            })
            .collect();
        let values = values?;

        let tail = if order.is_laplacian() {
            // Exact mass beyond the radius: Σ_s minus the closed-form partial
            // sum, independent of how the stored entries were produced.
            let mut acc = KahanSum::new();
            for m in (1..=radius).rev() {
                acc.add(kernel_ks(s, m)?);
            }
            TailInfo::ExactMass((sigma_s(s)? - 2.0 * acc.value()).max(0.0))
        } else {
            TailInfo::PowerLaw { coeff, exponent }
        };

        Ok(KernelTable {
            order,
            values,
            tail,
        })
    }

    pub fn order(&self) -> FracOrder {
        self.order
    }

    pub fn radius(&self) -> i64 {
        self.values.len() as i64 - 1
    }

    /// Kernel value at offset `m` (symmetric). Panics outside the radius.
    pub fn value(&self, m: i64) -> f64 {
        self.values[m.unsigned_abs() as usize]
    }

    pub fn tail(&self) -> TailInfo {
        self.tail
    }

    /// Exact kernel mass beyond the radius, when it exists.
    pub fn tail_mass(&self) -> Option<f64> {
        match self.tail {
            TailInfo::ExactMass(m) => Some(m),
            TailInfo::PowerLaw { .. } => None,
        }
    }

    /// Power-law main term `c·|m|^{-1∓2s}` at offset `m ≠ 0`.
    pub fn asymptotic_main_term(&self, m: i64) -> Option<f64> {
        if m == 0 {
            return None;
        }
        let s = self.order.s();
        let (coeff, exponent) = if self.order.is_laplacian() {
            (c_s(s).ok()?, 1.0 + 2.0 * s)
        } else {
            (c_minus_s(s).ok()?, 1.0 - 2.0 * s)
        };
        Some(coeff * (m.unsigned_abs() as f64).powf(-exponent))
    }
}
