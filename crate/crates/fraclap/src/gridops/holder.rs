//! Discrete Hölder seminorms on finite windows.
//!
//! `[u]_{C_h^{0,β}} = sup_{i≠j} |u_i - u_j| / (h^β |i-j|^β)`, the exact sup
//! over all index pairs in the window; `k = 1` applies the forward and
//! backward differences first and takes the larger seminorm. Quadratic in the
//! window size, which is fine at the window sizes the refinement studies use.

use super::grid::Grid1d;
use crate::error::{Error, Result};

fn seminorm0(g: &Grid1d, beta: f64) -> f64 {
    let n = g.values.len();
    let hb = g.window.h.powf(beta);
    let mut sup = 0.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            let q = (g.values[i] - g.values[j]).abs() / (hb * ((j - i) as f64).powf(beta));
            sup = sup.max(q);
        }
    }
    sup
}

/// `[·]_{C_h^{k,β}}` of grid values; `k ∈ {0,1}`, `β ∈ (0,1]`.
pub fn holder_seminorm(g: &Grid1d, beta: f64, k: u8) -> Result<f64> {
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::Domain(format!("beta must lie in (0,1], got {beta}")));
    }
    match k {
        0 => {
            if g.values.len() < 2 {
                return Err(Error::Domain("seminorm needs at least two points".into()));
            }
            Ok(seminorm0(g, beta))
        }
        1 => {
            let dp = g.d_plus()?;
            let dm = g.d_minus()?;
            if dp.values.len() < 2 {
                return Err(Error::Domain("seminorm needs at least two points".into()));
            }
            Ok(seminorm0(&dp, beta).max(seminorm0(&dm, beta)))
        }
        _ => Err(Error::Domain(format!(
            "only k = 0 and k = 1 seminorms are implemented, got {k}"
        ))),
    }
}

/// Full norm: max of the sup norms of the difference levels up to `k` plus
/// the level-`k` seminorm.
pub fn holder_norm(g: &Grid1d, beta: f64, k: u8) -> Result<f64> {
    let semi = holder_seminorm(g, beta, k)?;
    let mut sup = g.sup_norm();
    if k == 1 {
        sup = sup.max(g.d_plus()?.sup_norm()).max(g.d_minus()?.sup_norm());
    }
    Ok(sup + semi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gridops::window::Window1d;

    fn grid_of(h: f64, n: i64, f: impl Fn(f64) -> f64) -> Grid1d {
        let w = Window1d::new(h, -n, n).unwrap();
        let values = w.indices().map(|j| f(w.x(j))).collect();
        Grid1d::new(w, values)
    }

    #[test]
    fn constant_has_zero_seminorm() {
        let g = grid_of(0.1, 10, |_| 3.0);
        assert_eq!(holder_seminorm(&g, 0.7, 0).unwrap(), 0.0);
        assert_eq!(holder_seminorm(&g, 1.0, 1).unwrap(), 0.0);
    }

    #[test]
    fn linear_is_lipschitz_one() {
        // u_j = h·j, β = 1: |hi - hj|/(h|i-j|) = 1 for every pair.
        let g = grid_of(0.1, 12, |x| x);
        let v = holder_seminorm(&g, 1.0, 0).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn abs_power_seminorm_stable_under_refinement() {
        // r_h |x|^β on a symmetric window: seminorm in [1, 2^{1-β}+δ],
        // stable as h halves.
        let beta = 0.7;
        for &h in &[0.1f64, 0.05, 0.025] {
            let n = (1.0 / h).round() as i64;
            let g = grid_of(h, n, |x| x.abs().powf(beta));
            let v = holder_seminorm(&g, beta, 0).unwrap();
            assert!(
                (1.0..=2.0f64.powf(1.0 - beta) + 0.05).contains(&v),
                "h={h}: {v}"
            );
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        let g = grid_of(0.1, 3, |x| x);
        assert!(holder_seminorm(&g, 0.0, 0).is_err());
        assert!(holder_seminorm(&g, 1.5, 0).is_err());
        assert!(holder_seminorm(&g, 0.5, 2).is_err());
        let w = Window1d::new(0.1, 0, 0).unwrap();
        let tiny = Grid1d::new(w, vec![1.0]);
        assert!(holder_seminorm(&tiny, 0.5, 0).is_err());
    }
}
