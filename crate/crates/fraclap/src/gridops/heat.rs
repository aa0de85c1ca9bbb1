//! Semidiscrete heat semigroup `e^{tΔ_h}` on the lattice.
//!
//! The kernel is `G(m, τ) = e^{-2τ} I_m(2τ)` with `τ = t/h²`; in two
//! dimensions it factors as `G(m1,τ)·G(m2,τ)`. Column sums equal one, so the
//! semigroup conserves mass and fixes constants; truncation at order `K`
//! commits an error controlled by `(e·z/K)^K/√(2πK)` with `z = 2t/h²`, the
//! large-order envelope of `I_K(z)`.

use rayon::prelude::*;

use super::config::HeatConfig;
use super::grid::{Grid1d, Grid2d};
use super::sampler::{Sampler1d, Sampler2d};
use super::window::{Window1d, Window2d};
use crate::error::{Error, Result};
use crate::specfun::bessel_i_scaled;
use crate::util::KahanSum;

/// `ln[(e·z/k)^k / √(2πk)]`, the truncation-bound envelope at order `k`.
fn ln_order_bound(z: f64, k: f64) -> f64 {
    if z == 0.0 {
        return f64::NEG_INFINITY;
    }
    k * (1.0 + z.ln() - k.ln()) - 0.5 * (2.0 * std::f64::consts::PI * k).ln()
}

/// Smallest truncation order whose envelope falls below 1e-16 for time `t`
/// on mesh `h`.
pub fn heat_truncation_for(t: f64, h: f64) -> i64 {
    let z = 2.0 * t / (h * h);
    if z == 0.0 {
        return 1;
    }
    let target = 1e-16f64.ln();
    let mut k = (std::f64::consts::E * z).ceil().max(4.0) as i64;
    while ln_order_bound(z, k as f64) >= target {
        k += 1 + k / 16;
    }
    k
}

impl HeatConfig {
    /// Picks the truncation automatically for the given mesh.
    pub fn auto(t: f64, h: f64) -> Result<Self> {
        HeatConfig::new(t, heat_truncation_for(t, h))
    }

    /// Rejects truncations whose envelope exceeds 1e-12.
    pub fn validate_for(&self, h: f64) -> Result<()> {
        let z = 2.0 * self.t / (h * h);
        let bound = ln_order_bound(z, self.truncation as f64);
        if bound >= 1e-12f64.ln() {
            return Err(Error::Truncation(format!(
                "K = {} is too small for 2t/h² = {z}: envelope exp({bound:.2})",
                self.truncation
            )));
        }
        Ok(())
    }
}

/// Scaled heat kernel values `G(m, τ)` for `m = 0..=k`.
fn kernel_row(tau: f64, k: i64) -> Vec<f64> {
    (0..=k)
        .into_par_iter()
        .map(|m| bessel_i_scaled(m, 2.0 * tau))
        .collect()
}

/// `e^{tΔ_h} u` on the window.
pub fn heat_apply_1d(u: &Sampler1d, w: &Window1d, hc: &HeatConfig) -> Result<Grid1d> {
    HeatConfig::new(hc.t, hc.truncation)?;
    hc.validate_for(w.h)?;
    let tau = hc.t / (w.h * w.h);
    if hc.t == 0.0 {
        let values = w.indices().map(|j| u.value(j)).collect();
        return Ok(Grid1d::new(*w, values));
    }
    let g = kernel_row(tau, hc.truncation);
    let values: Vec<f64> = w
        .indices()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|j| {
            let mut acc = KahanSum::new();
            for m in (1..=hc.truncation).rev() {
                acc.add(g[m as usize] * (u.value(j - m) + u.value(j + m)));
            }
            acc.add(g[0] * u.value(j));
            acc.value()
        })
        .collect();
    Ok(Grid1d::new(*w, values))
}

/// `e^{tΔ_h} u` on a 2D window via the product kernel.
pub fn heat_apply_2d(u: &Sampler2d, w: &Window2d, hc: &HeatConfig) -> Result<Grid2d> {
    HeatConfig::new(hc.t, hc.truncation)?;
    hc.validate_for(w.h)?;
    let tau = hc.t / (w.h * w.h);
    if hc.t == 0.0 {
        let mut values = Vec::with_capacity(w.len());
        for j1 in w.j1_min..=w.j1_max {
            for j2 in w.j2_min..=w.j2_max {
                values.push(u.value(j1, j2));
            }
        }
        return Ok(Grid2d::new(*w, values));
    }
    let g = kernel_row(tau, hc.truncation);
    let k = hc.truncation;
    let rows: Vec<Vec<f64>> = (w.j1_min..=w.j1_max)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|j1| {
            let mut row = Vec::with_capacity(w.n2());
            for j2 in w.j2_min..=w.j2_max {
                let mut acc = KahanSum::new();
                for m1 in -k..=k {
                    let g1 = g[m1.unsigned_abs() as usize];
                    if g1 == 0.0 {
                        continue;
                    }
                    let mut inner = KahanSum::new();
                    for m2 in (1..=k).rev() {
                        inner.add(
                            g[m2 as usize]
                                * (u.value(j1 - m1, j2 - m2) + u.value(j1 - m1, j2 + m2)),
                        );
                    }
                    inner.add(g[0] * u.value(j1 - m1, j2));
                    acc.add(g1 * inner.value());
                }
                row.push(acc.value());
            }
            row
        })
        .collect();
    Ok(Grid2d::new(*w, rows.into_iter().flatten().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_at_time_zero() {
        let u = Sampler1d::compact(3, |j| (j * j) as f64);
        let w = Window1d::new(0.5, -3, 3).unwrap();
        let hc = HeatConfig::new(0.0, 1).unwrap();
        let g = heat_apply_1d(&u, &w, &hc).unwrap();
        for j in -3..=3 {
            assert_eq!(g.value(j), (j * j) as f64);
        }
    }

    #[test]
    fn fixes_constants() {
        let u = Sampler1d::constant(1.0);
        let w = Window1d::new(0.5, -4, 4).unwrap();
        let hc = HeatConfig::auto(0.7, 0.5).unwrap();
        let g = heat_apply_1d(&u, &w, &hc).unwrap();
        for j in -4..=4 {
            assert!((g.value(j) - 1.0).abs() < 1e-12, "{}", g.value(j));
        }
    }

    #[test]
    fn conserves_mass() {
        // Compact initial data; the output window must cover the truncation
        // spread for the column sums to telescope.
        let u = Sampler1d::compact(2, |j| (3 - j.abs()) as f64);
        let h = 0.5;
        let hc = HeatConfig::auto(0.4, h).unwrap();
        let w = Window1d::new(h, -2 - hc.truncation, 2 + hc.truncation).unwrap();
        let g = heat_apply_1d(&u, &w, &hc).unwrap();
        let mass_in: f64 = (-2..=2).map(|j| u.value(j)).sum();
        let mass_out: f64 = g.values.iter().sum();
        assert!(
            (mass_in - mass_out).abs() < 1e-10,
            "{mass_in} vs {mass_out}"
        );
    }

    #[test]
    fn rejects_small_truncation() {
        let hc = HeatConfig::new(1.0, 2).unwrap();
        assert!(hc.validate_for(0.1).is_err());
        assert!(HeatConfig::new(-1.0, 5).is_err());
        assert!(HeatConfig::new(1.0, 0).is_err());
    }

    #[test]
    fn product_kernel_fixes_constants_2d() {
        let u = Sampler2d::constant(2.5);
        let w = Window2d::symmetric(0.5, 2).unwrap();
        let hc = HeatConfig::auto(0.3, 0.5).unwrap();
        let g = heat_apply_2d(&u, &w, &hc).unwrap();
        for (_, _, v) in g.iter() {
            assert!((v - 2.5).abs() < 1e-10);
        }
    }
}
