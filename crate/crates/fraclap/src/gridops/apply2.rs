//! Application of `(-Δ_h)^{±s}` on `Z²`.
//!
//! The Laplacian power is the square-truncated difference sum
//!
//! ```text
//! h^{-2s} Σ_{0<max(|m1|,|m2|)≤N} (u_j - u_{j-m}) k(m),
//! ```
//!
//! with `k` drawn from a [`Kernel2DTable`]. Dropping the remainder outright
//! (`TailMode::Ignore`) is the plain truncation; `TailMode::Zero`
//! adds `(u_j - L)·mass_{>N}` with the mass estimated from the power-law
//! kernel. The integral power is the convolution with the `₃F₂` center term.

use rayon::prelude::*;

use super::config::{OperatorConfig, TailMode};
use super::grid::Grid2d;
use super::sampler::{Sampler2d, SupportHint};
use super::window::Window2d;
use crate::error::{Error, Result};
use crate::kernels1d::KernelSource;
use crate::kernels2d::{square_tail_mass, Kernel2DTable};
use crate::util::KahanSum;

fn build_table(cfg: &OperatorConfig) -> Result<Kernel2DTable> {
    match cfg.kernel {
        KernelSource::ClosedForm => Err(Error::Domain(
            "no closed-form 2D kernel exists; use quadrature, asymptotic, or hybrid".into(),
        )),
        KernelSource::Quadrature => Kernel2DTable::build_quadrature(cfg.order, cfg.radius),
        KernelSource::Asymptotic => Kernel2DTable::build_asymptotic(cfg.order, cfg.radius),
        KernelSource::Hybrid(c) => Kernel2DTable::build_hybrid(cfg.order, cfg.radius, c),
    }
}

fn far_constant_2d(u: &Sampler2d, w: &Window2d, n: i64) -> Result<f64> {
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
    let reach = w.max_abs_index() + far;
    let probes = [
        (reach, 0),
        (-reach, 0),
        (0, reach),
        (0, -reach),
        (reach + 41, reach + 41),
        (-reach - 41, reach + 41),
        (reach + 41, -reach - 41),
        (-reach - 41, -reach - 41),
    ];
    let level = u.value(probes[0].0, probes[0].1);
    for &(p, q) in &probes[1..] {
        if u.value(p, q) != level {
            return Err(Error::Config(
                "tail zero requires a compact support hint inside N or a constant far field".into(),
            ));
        }
    }
    Ok(level)
}

/// `(-Δ_h)^s u` on a 2D window.
pub fn apply_frlap_2d(u: &Sampler2d, w: &Window2d, cfg: &OperatorConfig) -> Result<Grid2d> {
    if !cfg.order.is_laplacian() {
        return Err(Error::Domain(
            "apply_frlap_2d requires a positive (Laplacian) order".into(),
        ));
    }
    cfg.validate()?;
    if let TailMode::Sampled(_) = cfg.tail {
        return Err(Error::Config(
            "sampled tails are not implemented in 2D; use zero or ignore".into(),
        ));
    }
    let s = cfg.order.s();
    let n = cfg.radius;
    let table = build_table(cfg)?;
    let h_factor = w.h.powf(-2.0 * s);

    let tail = match cfg.tail {
        TailMode::Zero => Some((far_constant_2d(u, w, n)?, square_tail_mass(cfg.order, n)?)),
        _ => None,
    };

    let rows: Vec<Vec<f64>> = (w.j1_min..=w.j1_max)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|j1| {
            let mut row = Vec::with_capacity(w.n2());
            for j2 in w.j2_min..=w.j2_max {
                let uj = u.value(j1, j2);
                let mut acc = KahanSum::new();
                if let Some((level, mass)) = tail {
                    acc.add((uj - level) * mass);
                }
                for m1 in (0..=n).rev() {
                    // Exploit k(m1,·) symmetry in the second component only;
                    // the first runs over both signs explicitly.
                    for m2 in (1..=n).rev() {
                        let k = table.value(m1, m2);
                        if m1 == 0 {
                            acc.add(
                                k * (4.0 * uj
                                    - u.value(j1, j2 - m2)
                                    - u.value(j1, j2 + m2)
                                    - u.value(j1 - m2, j2)
                                    - u.value(j1 + m2, j2)),
                            );
                        } else {
                            acc.add(
                                k * (4.0 * uj
                                    - u.value(j1 - m1, j2 - m2)
                                    - u.value(j1 - m1, j2 + m2)
                                    - u.value(j1 + m1, j2 - m2)
                                    - u.value(j1 + m1, j2 + m2)),
                            );
                        }
                    }
                }
                row.push(h_factor * acc.value());
            }
            row
        })
        .collect();
    Ok(Grid2d::new(*w, rows.into_iter().flatten().collect()))
}

/// `(-Δ_h)^{-s} f` on a 2D window, `s ∈ (0,1/2)`.
pub fn apply_frint_2d(f: &Sampler2d, w: &Window2d, cfg: &OperatorConfig) -> Result<Grid2d> {
    if cfg.order.is_laplacian() {
        return Err(Error::Domain(
            "apply_frint_2d requires a negative (integral) order".into(),
        ));
    }
    cfg.validate()?;
    let s = cfg.order.s();
    let n = cfg.radius;
    let table = build_table(cfg)?;
    let h_factor = w.h.powf(2.0 * s);

    if cfg.tail == TailMode::Zero && far_constant_2d(f, w, n)? != 0.0 {
        return Err(Error::Config(
            "tail zero on the 2D integral power requires a vanishing far field".into(),
        ));
    }
    if let TailMode::Sampled(_) = cfg.tail {
        return Err(Error::Config(
            "sampled tails are not implemented in 2D; use zero or ignore".into(),
        ));
    }

    let rows: Vec<Vec<f64>> = (w.j1_min..=w.j1_max)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|j1| {
            let mut row = Vec::with_capacity(w.n2());
            for j2 in w.j2_min..=w.j2_max {
                let mut acc = KahanSum::new();
                for m1 in (0..=n).rev() {
                    for m2 in (1..=n).rev() {
                        let k = table.value(m1, m2);
                        if m1 == 0 {
                            acc.add(
                                k * (f.value(j1, j2 - m2)
                                    + f.value(j1, j2 + m2)
                                    + f.value(j1 - m2, j2)
                                    + f.value(j1 + m2, j2)),
                            );
                        } else {
                            acc.add(
                                k * (f.value(j1 - m1, j2 - m2)
                                    + f.value(j1 - m1, j2 + m2)
                                    + f.value(j1 + m1, j2 - m2)
                                    + f.value(j1 + m1, j2 + m2)),
                            );
                        }
                    }
                }
                acc.add(table.value(0, 0) * f.value(j1, j2));
                row.push(h_factor * acc.value());
            }
            row
        })
        .collect();
    Ok(Grid2d::new(*w, rows.into_iter().flatten().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels2d::kminus2d_center;
    use crate::order::FracOrder;

    fn lap_cfg(s: f64, n: i64) -> OperatorConfig {
        OperatorConfig::new(FracOrder::laplacian(s).unwrap(), n)
            .with_kernel(KernelSource::Hybrid(8.min(n)))
    }

    #[test]
    fn annihilates_constants() {
        let u = Sampler2d::constant(3.0);
        let w = Window2d::symmetric(0.1, 3).unwrap();
        let cfg = lap_cfg(0.25, 12).with_tail(TailMode::Zero);
        let g = apply_frlap_2d(&u, &w, &cfg).unwrap();
        for (_, _, v) in g.iter() {
            assert_eq!(v, 0.0);
        }
        // Ignore mode is a pure difference truncation: also exact on constants.
        let cfg = lap_cfg(0.25, 12).with_tail(TailMode::Ignore);
        let g = apply_frlap_2d(&u, &w, &cfg).unwrap();
        for (_, _, v) in g.iter() {
            assert_eq!(v, 0.0);
        }
    }

    #[test]
    fn rejects_closed_form_kernel() {
        let u = Sampler2d::impulse();
        let w = Window2d::symmetric(0.1, 2).unwrap();
        let cfg = OperatorConfig::new(FracOrder::laplacian(0.5).unwrap(), 8);
        assert!(matches!(
            apply_frlap_2d(&u, &w, &cfg),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn dihedral_symmetry_for_radial_input() {
        let u = Sampler2d::compact(6, |j1, j2| {
            let r2 = (j1 * j1 + j2 * j2) as f64;
            (-r2 / 8.0).exp()
        });
        let w = Window2d::symmetric(0.2, 4).unwrap();
        let cfg = lap_cfg(0.3, 16).with_tail(TailMode::Ignore);
        let g = apply_frlap_2d(&u, &w, &cfg).unwrap();
        for j1 in 0..=4i64 {
            for j2 in 0..=j1 {
                let v = g.value(j1, j2);
                for &(a, b) in &[(j2, j1), (-j1, j2), (j1, -j2), (-j2, -j1), (-j1, -j2)] {
                    assert!(
                        (g.value(a, b) - v).abs() <= 1e-12 * v.abs().max(1.0),
                        "({j1},{j2}) vs ({a},{b})"
                    );
                }
            }
        }
    }

    #[test]
    fn frlap_impulse_reads_table_negated() {
        // For δ₀ and pure truncation, out(j) = -h^{-2s}·k(j) off the origin
        // and +h^{-2s}·(near kernel mass) at it.
        let u = Sampler2d::impulse();
        let w = Window2d::symmetric(0.2, 3).unwrap();
        let s = 0.3;
        let n = 8;
        let cfg = OperatorConfig::new(FracOrder::laplacian(s).unwrap(), n)
            .with_kernel(KernelSource::Hybrid(8))
            .with_tail(TailMode::Ignore);
        let g = apply_frlap_2d(&u, &w, &cfg).unwrap();
        let t = Kernel2DTable::build_hybrid(FracOrder::laplacian(s).unwrap(), n, 8).unwrap();
        let h_factor = 0.2f64.powf(-2.0 * s);
        for j1 in -3..=3i64 {
            for j2 in -3..=3i64 {
                if (j1, j2) == (0, 0) {
                    continue;
                }
                let want = -h_factor * t.value(j1, j2);
                let got = g.value(j1, j2);
                assert!(
                    (got - want).abs() <= 1e-13 * want.abs(),
                    "({j1},{j2}): {got} vs {want}"
                );
            }
        }
        let mut mass = 0.0;
        for m1 in -n..=n {
            for m2 in -n..=n {
                if (m1, m2) != (0, 0) {
                    mass += t.value(m1, m2);
                }
            }
        }
        assert!((g.value(0, 0) - h_factor * mass).abs() <= 1e-12 * h_factor * mass);
    }

    #[test]
    fn ball_pair_consistency_scale() {
        // Descriptive: under plain truncation, the sup error
        // against the closed form sits at the dropped-tail level (~15% here)
        // and the hybrid kernel does no worse than the pure asymptotic one.
        use crate::convergence::consistency_error_2d;
        use crate::reference::pair_by_name;
        let pair = pair_by_name("ball-1s", 0.25, 2, None).unwrap();
        let asym = consistency_error_2d(&pair, 0.2, 1.2, 150, KernelSource::Asymptotic).unwrap();
        let hybrid = consistency_error_2d(&pair, 0.2, 1.2, 150, KernelSource::Hybrid(10)).unwrap();
        assert!(asym > 0.05 && asym < 0.3, "unexpected error scale {asym}");
        assert!(hybrid <= asym, "hybrid {hybrid} vs asymptotic {asym}");
    }

    #[test]
    fn frint_impulse_reads_table() {
        let f = Sampler2d::impulse();
        let w = Window2d::symmetric(0.1, 3).unwrap();
        let s = 0.25;
        let cfg = OperatorConfig::new(FracOrder::integral(s).unwrap(), 6)
            .with_kernel(KernelSource::Hybrid(4))
            .with_tail(TailMode::Zero);
        let g = apply_frint_2d(&f, &w, &cfg).unwrap();
        let h2s = 0.1f64.powf(2.0 * s);
        let want_center = h2s * kminus2d_center(s).unwrap();
        assert!((g.value(0, 0) - want_center).abs() < 1e-12 * want_center);
        let t = Kernel2DTable::build_hybrid(FracOrder::integral(s).unwrap(), 6, 4).unwrap();
        assert!((g.value(1, 2) - h2s * t.value(1, 2)).abs() < 1e-14);
    }

    #[test]
    fn rejects_sampled_tail() {
        let u = Sampler2d::impulse();
        let w = Window2d::symmetric(0.1, 2).unwrap();
        let cfg = lap_cfg(0.3, 8).with_tail(TailMode::Sampled(16));
        assert!(matches!(
            apply_frlap_2d(&u, &w, &cfg),
            Err(Error::Config(_))
        ));
    }
}
