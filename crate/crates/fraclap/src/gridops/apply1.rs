//! Application of `(-Δ_h)^{±s}` to 1D lattice functions.
//!
//! The Laplacian power is the difference-form kernel sum
//!
//! ```text
//! (-Δ_h)^s u_j = h^{-2s} Σ_{m≠0} (u_j - u_{j-m}) K_s(m),
//! ```
//!
//! truncated at radius `N` with the remainder `Σ_{|m|>N}(u_j - u_{j-m})K_s(m)`
//! handled per [`TailMode`]. The integral power is the convolution
//! `h^{2s} Σ_m K_{-s}(j-m) f_m` (the `m = j` term included).

use rayon::prelude::*;

use super::config::{OperatorConfig, TailMode};
use super::grid::Grid1d;
use super::sampler::{Sampler1d, SupportHint};
use super::window::Window1d;
use crate::error::{Error, Result};
use crate::kernels1d::{c_minus_s, c_s, KernelTable};
use crate::tailsum::power_tail_sum;
use crate::util::KahanSum;

/// Far-field constant needed by `TailMode::Zero`: zero under a compact hint
/// that fits inside the truncation radius, otherwise established by probing
/// a handful of samples beyond it. Probes that disagree are a configuration
/// error, not a numerical one.
fn far_constant_1d(u: &Sampler1d, w: &Window1d, n: i64) -> Result<f64> {
    if let SupportHint::Compact { radius } = u.hint() {
        if radius + w.max_abs_index() > n {
            return Err(Error::Config(format!(
                "tail zero: compact support radius {radius} plus window reach {} exceeds N = {n}",
                w.max_abs_index()
            )));
        }
        return Ok(0.0);
    }
    let far = n + 1;
    let probes = [
        w.j_min - far,
        w.j_max + far,
        w.j_min - far - 37,
        w.j_max + far + 37,
        w.j_min - 4 * far,
        w.j_max + 4 * far,
    ];
    let level = u.value(probes[0]);
    for &p in &probes[1..] {
        if u.value(p) != level {
            return Err(Error::Config(
                "tail zero requires a compact support hint inside N or a constant far field".into(),
            ));
        }
    }
    Ok(level)
}

/// `(-Δ_h)^s u` on the window.
pub fn apply_frlap_1d(u: &Sampler1d, w: &Window1d, cfg: &OperatorConfig) -> Result<Grid1d> {
    if !cfg.order.is_laplacian() {
        return Err(Error::Domain(
            "apply_frlap_1d requires a positive (Laplacian) order".into(),
        ));
    }
    cfg.validate()?;
    let s = cfg.order.s();
    let n = cfg.radius;
    let table = KernelTable::build(cfg.order, n, cfg.kernel)?;
    let h_factor = w.h.powf(-2.0 * s);
    let cs = c_s(s)?;

    #[derive(Clone, Copy)]
    enum Tail {
        Constant { level: f64, mass: f64 },
        MassOnly { mass: f64 },
        Sampled { mass_beyond: f64 },
    }
    let mut band: Vec<f64> = Vec::new();
    let tail = match cfg.tail {
        TailMode::Zero => Tail::Constant {
            level: far_constant_1d(u, w, n)?,
            mass: table.tail_mass().expect("laplacian table has exact mass"),
        },
        TailMode::Ignore => Tail::MassOnly {
            // Both signs of m: 2·Σ_{m>N} c_s m^{-1-2s}.
            mass: 2.0 * cs * power_tail_sum(1.0 + 2.0 * s, n),
        },
        TailMode::Sampled(m) => {
            band = ((n + 1)..=m)
                .map(|k| cs * (k as f64).powf(-(1.0 + 2.0 * s)))
                .collect();
            Tail::Sampled {
                mass_beyond: 2.0 * cs * power_tail_sum(1.0 + 2.0 * s, m),
            }
        }
    };

    let values: Vec<f64> = w
        .indices()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|j| {
            let uj = u.value(j);
            let mut acc = KahanSum::new();
            match tail {
                Tail::Constant { level, mass } => acc.add((uj - level) * mass),
                Tail::MassOnly { mass } => acc.add(uj * mass),
                Tail::Sampled { mass_beyond } => {
                    acc.add(uj * mass_beyond);
                    for (i, kern) in band.iter().enumerate().rev() {
                        let k = n + 1 + i as i64;
                        acc.add(kern * (2.0 * uj - u.value(j - k) - u.value(j + k)));
                    }
                }
            }
            for m in (1..=n).rev() {
                acc.add(table.value(m) * (2.0 * uj - u.value(j - m) - u.value(j + m)));
            }
            h_factor * acc.value()
        })
        .collect();
    Ok(Grid1d::new(*w, values))
}

/// `(-Δ_h)^{-s} f` on the window, `s ∈ (0,1/2)`.
pub fn apply_frint_1d(f: &Sampler1d, w: &Window1d, cfg: &OperatorConfig) -> Result<Grid1d> {
    if cfg.order.is_laplacian() {
        return Err(Error::Domain(
            "apply_frint_1d requires a negative (integral) order".into(),
        ));
    }
    cfg.validate()?;
    let s = cfg.order.s();
    let n = cfg.radius;
    let table = KernelTable::build(cfg.order, n, cfg.kernel)?;
    let h_factor = w.h.powf(2.0 * s);
    let cms = c_minus_s(s)?;

    // The kernel is not summable, so a constant far field cannot be absorbed:
    // Zero demands genuinely vanishing samples beyond N.
    if cfg.tail == TailMode::Zero && far_constant_1d(f, w, n)? != 0.0 {
        return Err(Error::Config(
            "tail zero on the integral power requires a vanishing far field (the kernel has infinite mass)"
                .into(),
        ));
    }

    let band: Vec<f64> = match cfg.tail {
        TailMode::Sampled(m) => ((n + 1)..=m)
            .map(|k| cms * (k as f64).powf(-(1.0 - 2.0 * s)))
            .collect(),
        _ => Vec::new(),
    };

    let values: Vec<f64> = w
        .indices()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|j| {
            let mut acc = KahanSum::new();
            for (i, kern) in band.iter().enumerate().rev() {
                let k = n + 1 + i as i64;
                acc.add(kern * (f.value(j - k) + f.value(j + k)));
            }
            for m in (1..=n).rev() {
                acc.add(table.value(m) * (f.value(j - m) + f.value(j + m)));
            }
            acc.add(table.value(0) * f.value(j));
            h_factor * acc.value()
        })
        .collect();
    Ok(Grid1d::new(*w, values))
}

/// Forward difference `(u_{j+1} - u_j)/h` materialized on the window.
pub fn d_plus(u: &Sampler1d, w: &Window1d) -> Grid1d {
    let values = w
        .indices()
        .map(|j| (u.value(j + 1) - u.value(j)) / w.h)
        .collect();
    Grid1d::new(*w, values)
}

/// Backward difference `(u_j - u_{j-1})/h` materialized on the window.
pub fn d_minus(u: &Sampler1d, w: &Window1d) -> Grid1d {
    let values = w
        .indices()
        .map(|j| (u.value(j) - u.value(j - 1)) / w.h)
        .collect();
    Grid1d::new(*w, values)
}
