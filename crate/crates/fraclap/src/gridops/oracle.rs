//! Semigroup-definition oracle for the fractional discrete Laplacian:
//!
//! ```text
//! (-Δ_h)^s u_j = (1/Γ(-s)) ∫₀^∞ (e^{tΔ_h} u_j - u_j) dt / t^{1+s}.
//! ```
//!
//! This route never touches the pointwise kernel and serves as the
//! independent cross-check of the kernel-sum operator. The heat difference is
//! assembled in compensated form `Σ_{m≠0} G(m,τ)(u_{j-m} - u_j)`, which is
//! `O(τ)` near `t = 0` with no cancellation; for `t ≥ 1` the integral is
//! split into per-sample Bessel integrals plus the exact `-u_j/s` piece.

use super::sampler::{Sampler1d, SupportHint};
use super::window::Window1d;
use crate::error::{Error, Result};
use crate::quad;
use crate::specfun::{bessel_i_scaled, ln_gamma};
use crate::util::KahanSum;

/// `1 - e^{-2τ} I_0(2τ)`, stable for small `τ` where direct subtraction
/// would lose every digit.
fn one_minus_g0(tau: f64) -> f64 {
    if tau < 1e-3 {
        // 2τ - 3τ² + (10/3)τ³ - (35/12)τ⁴ + O(τ⁵)
        tau * (2.0 + tau * (-3.0 + tau * (10.0 / 3.0 - tau * 35.0 / 12.0)))
    } else {
        1.0 - bessel_i_scaled(0, 2.0 * tau)
    }
}

/// Quadrature controls for the oracle.
#[derive(Clone, Copy, Debug)]
pub struct OracleControls {
    pub rel_tol: f64,
    pub max_intervals: usize,
}

impl Default for OracleControls {
    fn default() -> Self {
        OracleControls {
            rel_tol: 1e-9,
            max_intervals: 4000,
        }
    }
}

/// Evaluates the semigroup definition at a single lattice point.
///
/// Requires compactly supported `u` so that every heat sum is finite and
/// exact.
pub fn frlap_semigroup_oracle(
    u: &Sampler1d,
    w: &Window1d,
    j: i64,
    s: f64,
    ctl: &OracleControls,
) -> Result<f64> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::Domain(format!(
            "semigroup oracle requires s in (0,1), got {s}"
        )));
    }
    let SupportHint::Compact { radius } = u.hint() else {
        return Err(Error::Config(
            "semigroup oracle requires a compactly supported sampler".into(),
        ));
    };
    let h2 = w.h * w.h;
    let uj = u.value(j);

    // Collect the support samples once.
    let support: Vec<(i64, f64)> = (-radius..=radius)
        .map(|k| (k, u.value(k)))
        .filter(|&(_, v)| v != 0.0)
        .collect();

    // (e^{tΔ_h}u - u)_j = Σ_{k in supp, k≠j} u_k G(j-k, τ) - u_j (1 - G(0, τ)),
    // divided by t up front: each piece is O(1) as t → 0, so the integrand
    // (heat_diff/t)·t^{-s} neither cancels nor overflows under deep bisection.
    let heat_diff_over_t = |t: f64| {
        let tau = t / h2;
        let mut acc = KahanSum::new();
        for &(k, v) in &support {
            if k != j {
                acc.add(v * bessel_i_scaled(j - k, 2.0 * tau) / t);
            }
        }
        acc.add(-uj * one_minus_g0(tau) / t);
        acc.value()
    };

    let near = quad::integrate(
        |t: f64| heat_diff_over_t(t) * t.powf(-s),
        0.0,
        1.0,
        0.0,
        ctl.rel_tol,
        ctl.max_intervals,
    )?;

    // ∫₁^∞ e^{tΔ_h}u_j t^{-1-s} dt term by term over the support, plus the
    // exact -u_j ∫₁^∞ t^{-1-s} dt = -u_j/s.
    let mut far = KahanSum::new();
    for &(k, v) in &support {
        let m = j - k;
        let piece = quad::integrate_tail(
            move |t: f64| bessel_i_scaled(m, 2.0 * t / h2) * t.powf(-1.0 - s),
            1.0,
            0.0,
            ctl.rel_tol,
            ctl.max_intervals,
        )?;
        far.add(v * piece.value);
    }
    far.add(-uj / s);

    // 1/Γ(-s) = -s/Γ(1-s) for s in (0,1).
    let inv_gamma_neg_s = -s / ln_gamma(1.0 - s)?.exp();
    Ok(inv_gamma_neg_s * (near.value + far.value()))
}
