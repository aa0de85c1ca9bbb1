//! 2D kernels of `(-Δ_h)^{±s}` on `Z²`.
//!
//! No closed form exists in two dimensions. Entries come from adaptive
//! quadrature of the product-Bessel semigroup representation
//!
//! ```text
//! K_{±s}(m) ∝ ∫₀^∞ e^{-4t} I_{m1}(2t) I_{m2}(2t) t^{∓s-1} dt,
//! ```
//!
//! or from the Mellin leading term `c_{2,±s} / ‖m‖₂^{2±2s}`. The default
//! operator table is hybrid: quadrature near the origin where the leading
//! term is weakest, asymptotic beyond a crossover radius. The center value
//! of the integral kernel is `K_{-s}(0) = 4^{-s}·₃F₂(1/2,(1+s)/2,s/2;1,1;1)`.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernels1d::abs_gamma_neg_s;
use crate::order::FracOrder;
use crate::quad;
use crate::specfun::{bessel_i_scaled, hyp_3f2_unit, ln_gamma};

fn check_s_unit(s: f64, what: &str) -> Result<()> {
    if s > 0.0 && s < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{what} requires s in (0,1), got {s}"
        )))
    }
}

/// `c_{2,s} = 4^s Γ(1+s) / (π |Γ(-s)|)`, the 2D leading-term constant.
pub fn c_2s(s: f64) -> Result<f64> {
    check_s_unit(s, "c_2s")?;
    Ok(s * 4f64.powf(s) * ln_gamma(1.0 + s)?.exp() / (PI * ln_gamma(1.0 - s)?.exp()))
}

/// `c_{2,-s} = 4^{-s} Γ(1-s) / (π Γ(s))` for the integral power,
/// `s ∈ (0,1/2)`; obtained from the same Mellin computation with `s → -s`.
pub fn c_2minus_s(s: f64) -> Result<f64> {
    if !(s > 0.0 && s < 0.5) {
        return Err(Error::Domain(format!(
            "c_2minus_s requires s in (0,1/2), got {s}"
        )));
    }
    Ok(4f64.powf(-s) * ln_gamma(1.0 - s)?.exp() / (PI * ln_gamma(s)?.exp()))
}

/// `K_{-s}(0,0) = 4^{-s}·₃F₂(1/2, (1+s)/2, s/2; 1, 1; 1)`.
pub fn kminus2d_center(s: f64) -> Result<f64> {
    if !(s > 0.0 && s < 0.5) {
        return Err(Error::Domain(format!(
            "kminus2d_center requires s in (0,1/2), got {s}"
        )));
    }
    Ok(4f64.powf(-s) * hyp_3f2_unit(0.5, 0.5 * (1.0 + s), 0.5 * s, 1.0, 1.0)?)
}

/// Quadrature value of the 2D kernel at offset `(m1, m2)`.
///
/// For Laplacian powers `(m1,m2) = (0,0)` is rejected (the integral
/// diverges); for integral powers the center is admissible and cross-checks
/// [`kminus2d_center`].
pub fn kernel2d_oracle(order: FracOrder, m1: i64, m2: i64) -> Result<f64> {
    let s = order.s();
    if order.is_laplacian() && m1 == 0 && m2 == 0 {
        return Err(Error::Domain(
            "2D Laplacian kernel quadrature requires (m1,m2) != (0,0)".into(),
        ));
    }
    let (a1, a2) = (m1.unsigned_abs() as i64, m2.unsigned_abs() as i64);
    let s_exponent = if order.is_laplacian() { -s } else { s };
    let f = move |t: f64| {
        bessel_i_scaled(a1, 2.0 * t) * bessel_i_scaled(a2, 2.0 * t) * t.powf(s_exponent - 1.0)
    };
    let near = quad::integrate(f, 0.0, 1.0, 0.0, 1e-10, 4000)?;
    let far = quad::integrate_tail(f, 1.0, 0.0, 1e-10, 4000)?;
    let norm = if order.is_laplacian() {
        abs_gamma_neg_s(s)
    } else {
        ln_gamma(s)?.exp()
    };
    Ok((near.value + far.value) / norm)
}

/// Mellin leading term `c_{2,±s} / ‖m‖₂^{2±2s}`.
pub fn kernel2d_asymptotic(order: FracOrder, m1: i64, m2: i64) -> Result<f64> {
    if m1 == 0 && m2 == 0 {
        return Err(Error::Domain(
            "asymptotic 2D kernel is undefined at the origin".into(),
        ));
    }
    let s = order.s();
    let (coeff, exponent) = if order.is_laplacian() {
        (c_2s(s)?, 2.0 + 2.0 * s)
    } else {
        (c_2minus_s(s)?, 2.0 - 2.0 * s)
    };
    let norm = ((m1 * m1 + m2 * m2) as f64).sqrt();
    Ok(coeff * norm.powf(-exponent))
}

/// Provenance of a 2D table entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntrySource {
    /// The `(0,0)` entry: zero for Laplacian powers, the ₃F₂ value for
    /// integral powers.
    Center,
    Quadrature,
    Asymptotic,
}

/// Symmetry-reduced table of 2D kernel values on the octant
/// `0 ≤ m2 ≤ m1 ≤ radius`, dihedrally extended on lookup.
#[derive(Clone, Debug)]
pub struct Kernel2DTable {
    order: FracOrder,
    radius: i64,
    values: Vec<f64>,
    sources: Vec<EntrySource>,
}

fn octant_index(m1: i64, m2: i64) -> usize {
    debug_assert!(0 <= m2 && m2 <= m1);
    (m1 * (m1 + 1) / 2 + m2) as usize
}

impl Kernel2DTable {
    /// Builds a hybrid table: entries with `max(|m1|,|m2|) ≤ crossover` by
    /// quadrature, the rest asymptotic. `crossover` must cover at least
    /// ring 1.
    pub fn build_hybrid(order: FracOrder, radius: i64, crossover: i64) -> Result<Self> {
        if crossover < 1 || crossover > radius {
            return Err(Error::Config(format!(
                "crossover must lie in [1, radius={radius}], got {crossover}"
            )));
        }
        Self::build_impl(order, radius, Some(crossover))
    }

    /// Pure power-law table (plus the exact center value); the fast, less
    /// precise variant, adequate for large operator radii.
    pub fn build_asymptotic(order: FracOrder, radius: i64) -> Result<Self> {
        Self::build_impl(order, radius, None)
    }

    /// All-quadrature table; cost grows with the square of the radius.
    pub fn build_quadrature(order: FracOrder, radius: i64) -> Result<Self> {
        Self::build_impl(order, radius, Some(radius))
    }

    fn build_impl(order: FracOrder, radius: i64, crossover: Option<i64>) -> Result<Self> {
        if radius < 1 {
            return Err(Error::Domain("2D table radius must be >= 1".into()));
        }
        let s = order.s();
        let center = if order.is_laplacian() {
            0.0
        } else {
            kminus2d_center(s)?
        };
        let cells: Vec<(i64, i64)> = (0..=radius)
            .flat_map(|m1| (0..=m1).map(move |m2| (m1, m2)))
            .collect();
        let entries: Result<Vec<(f64, EntrySource)>> = cells
            .par_iter()
            .map(|&(m1, m2)| {
                if m1 == 0 && m2 == 0 {
                    return Ok((center, EntrySource::Center));
                }
                match crossover {
                    Some(c) if m1 <= c => {
                        Ok((kernel2d_oracle(order, m1, m2)?, EntrySource::Quadrature))
                    }
                    _ => Ok((kernel2d_asymptotic(order, m1, m2)?, EntrySource::Asymptotic)),
                }
            })
            .collect();
        let (values, sources) = entries?.into_iter().unzip();
        Ok(Kernel2DTable {
            order,
            radius,
            values,
            sources,
        })
    }

    pub fn order(&self) -> FracOrder {
        self.order
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    fn fold(&self, m1: i64, m2: i64) -> usize {
        let a = m1.unsigned_abs() as i64;
        let b = m2.unsigned_abs() as i64;
        let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
        assert!(
            hi <= self.radius,
            "offset ({m1},{m2}) outside table radius {}",
            self.radius
        );
        octant_index(hi, lo)
    }

    /// Kernel value at `(m1, m2)`; invariant under the eight lattice
    /// symmetries by construction.
    pub fn value(&self, m1: i64, m2: i64) -> f64 {
        self.values[self.fold(m1, m2)]
    }

    pub fn source(&self, m1: i64, m2: i64) -> EntrySource {
        self.sources[self.fold(m1, m2)]
    }
}

/// Kernel mass outside the square `max(|m1|,|m2|) ≤ n`, estimated with the
/// power-law kernel: near rings summed directly, the rest by the radial
/// integral with the exact angular factor of the max-norm complement.
pub(crate) fn square_tail_mass(order: FracOrder, n: i64) -> Result<f64> {
    let s = order.s();
    if !order.is_laplacian() {
        return Err(Error::Domain(
            "the 2D integral kernel has no finite tail mass".into(),
        ));
    }
    let coeff = c_2s(s)?;
    let exponent = 2.0 + 2.0 * s;
    let rings_to = n + 600;
    let mut sum = 0.0f64;
    for r in (n + 1)..=rings_to {
        let mut edge = 0.0f64;
        for m2 in -r..=r {
            edge += ((r * r + m2 * m2) as f64).sqrt().powf(-exponent);
        }
        let mut side = 0.0f64;
        for m1 in (-r + 1)..r {
            side += ((m1 * m1 + r * r) as f64).sqrt().powf(-exponent);
        }
        sum += 2.0 * edge + 2.0 * side;
    }
    // ∫_{max|x|>Q} ‖x‖₂^{-2-2s} dx = Q^{-2s}/(2s) · ∫₀^{2π} max(|cosθ|,|sinθ|)^{2s} dθ.
    let angular = quad::integrate(
        |theta: f64| theta.cos().abs().max(theta.sin().abs()).powf(2.0 * s),
        0.0,
        2.0 * PI,
        0.0,
        1e-12,
        4000,
    )?
    .value;
    let q = rings_to as f64 + 0.5;
    Ok(coeff * (sum + angular * q.powf(-2.0 * s) / (2.0 * s)))
}
