//! Closed-form continuous solution pairs `(u, f = (-Δ)^s u)` used as ground
//! truth by the consistency and Poisson-solve tests.
//!
//! All catalogued pairs are radial. The ball inverses come from the Hankel
//! transform of `(1-‖x‖²)₊^{γ/2}`, which evaluates to Gamma-weighted `₂F₁`
//! branches inside and outside the unit sphere; continuity at the sphere is
//! an internal consistency check, not an assumption.

use std::f64::consts::PI;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::kernels1d::c_s;
use crate::quad;
use crate::specfun::{gauss_2f1, ln_gamma};

/// Where the reference `f` is trustworthy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RefDomain {
    Everywhere,
    /// Only the value at the origin is known in closed form.
    OriginOnly,
}

/// Which compact right-hand side the ball pair uses: `γ = 2(1-s)` or
/// `γ = 2(2-s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BallExponent {
    OneMinusS,
    TwoMinusS,
}

type Radial = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A continuous pair `(u, f)` with `f = (-Δ)^s u`, stored as radial profiles.
#[derive(Clone)]
pub struct SolutionPair {
    pub name: String,
    pub dim: u8,
    pub s: f64,
    u: Radial,
    f: Radial,
    f_deriv: Option<Radial>,
    pub f_domain: RefDomain,
    /// Hölder class of `u`, informative.
    pub regularity: String,
    /// Physical radius outside which `u` vanishes (or underflows to zero).
    pub u_compact_x: Option<f64>,
    /// Algebraic decay exponent of `u` when it is not compact.
    pub u_decay_exponent: Option<f64>,
    /// Physical support radius of `f`, when compact.
    pub f_compact_x: Option<f64>,
}

impl SolutionPair {
    /// `u` at radius `r ≥ 0`.
    pub fn u_at(&self, r: f64) -> f64 {
        (self.u)(r)
    }

    /// `u` at a signed 1D coordinate.
    pub fn u_1d(&self, x: f64) -> f64 {
        (self.u)(x.abs())
    }

    pub fn f_at(&self, r: f64) -> f64 {
        (self.f)(r)
    }

    pub fn f_1d(&self, x: f64) -> f64 {
        (self.f)(x.abs())
    }

    /// `df/dx` at a signed 1D coordinate, for pairs that expose it.
    pub fn f_deriv_1d(&self, x: f64) -> Option<f64> {
        self.f_deriv.as_ref().map(|d| {
            let v = d(x.abs());
            if x < 0.0 {
                -v
            } else {
                v
            }
        })
    }

    pub fn has_f_deriv(&self) -> bool {
        self.f_deriv.is_some()
    }

    /// Ad-hoc pair from radial profiles; no support metadata is attached, so
    /// studies fall back to far-field probing.
    pub fn custom(
        name: &str,
        dim: u8,
        s: f64,
        u: impl Fn(f64) -> f64 + Send + Sync + 'static,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        SolutionPair {
            name: name.into(),
            dim,
            s,
            u: Arc::new(u),
            f: Arc::new(f),
            f_deriv: None,
            f_domain: RefDomain::Everywhere,
            regularity: "user supplied".into(),
            u_compact_x: None,
            u_decay_exponent: None,
            f_compact_x: None,
        }
    }
}

fn gamma(x: f64) -> Result<f64> {
    Ok(ln_gamma(x)?.exp())
}

/// `(-Δ)^s e^{-x²}` at the origin: `4^s Γ(1/2+s)/√π`.
pub fn gaussian_frlap_at_zero(s: f64) -> Result<f64> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::Domain(format!("s must lie in (0,1), got {s}")));
    }
    Ok(4f64.powf(s) * gamma(0.5 + s)? / PI.sqrt())
}

/// Gaussian pair: `u = e^{-x²}`; the reference value exists at `x = 0` only.
pub fn pair_gaussian(s: f64) -> Result<SolutionPair> {
    let at_zero = gaussian_frlap_at_zero(s)?;
    Ok(SolutionPair {
        name: "gaussian".into(),
        dim: 1,
        s,
        u: Arc::new(|r| (-r * r).exp()),
        f: Arc::new(move |r| if r == 0.0 { at_zero } else { f64::NAN }),
        f_deriv: None,
        f_domain: RefDomain::OriginOnly,
        regularity: "smooth, super-exponential decay".into(),
        // e^{-x²} underflows below the smallest subnormal for |x| > 27.3.
        u_compact_x: Some(28.0),
        u_decay_exponent: None,
        f_compact_x: None,
    })
}

/// Algebraic pair: `u = (1+x²)^{-(1/2-s)}`,
/// `f = 4^s Γ(1/2+s)/Γ(1/2-s) · (1+x²)^{-(1/2+s)}`; requires `s ∈ (0,1/2)`
/// so that `u` decays.
pub fn pair_algebraic(s: f64) -> Result<SolutionPair> {
    if !(s > 0.0 && s < 0.5) {
        return Err(Error::Domain(format!(
            "the algebraic pair requires s in (0,1/2), got {s}"
        )));
    }
    let a = 4f64.powf(s) * gamma(0.5 + s)? / gamma(0.5 - s)?;
    Ok(SolutionPair {
        name: "algebraic".into(),
        dim: 1,
        s,
        u: Arc::new(move |r| (1.0 + r * r).powf(-(0.5 - s))),
        f: Arc::new(move |r| a * (1.0 + r * r).powf(-(0.5 + s))),
        f_deriv: Some(Arc::new(move |r| {
            -a * (1.0 + 2.0 * s) * r * (1.0 + r * r).powf(-(1.5 + s))
        })),
        f_domain: RefDomain::Everywhere,
        regularity: "smooth, algebraic decay".into(),
        u_compact_x: None,
        u_decay_exponent: Some(1.0 - 2.0 * s),
        f_compact_x: None,
    })
}

/// `(-Δ)^{-s} (1-‖x‖²)₊^{γ/2}` at radius `r`, in dimension `n ∈ {1,2}`.
///
/// Inside branch `C·₂F₁((n-2s)/2, -(γ+2s)/2; n/2; r²)`; outside branch
/// `C̃·r^{2s-n}·₂F₁((n-2s)/2, 1-s; (n+γ)/2+1; r^{-2})`. Requires `2s < n`
/// (the defining Riesz integral diverges otherwise).
pub fn inv_frlap_ball(gamma_exp: f64, s: f64, n: u8, r: f64) -> Result<f64> {
    if !(gamma_exp > 0.0) {
        return Err(Error::Domain(format!(
            "gamma must be positive, got {gamma_exp}"
        )));
    }
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::Domain(format!("s must lie in (0,1), got {s}")));
    }
    if n != 1 && n != 2 {
        return Err(Error::Domain(format!("dimension must be 1 or 2, got {n}")));
    }
    let nf = n as f64;
    if 2.0 * s >= nf {
        return Err(Error::Domain(format!(
            "the ball inverse requires 2s < n (got s={s}, n={n}); the Riesz potential diverges"
        )));
    }
    if !(r >= 0.0) {
        return Err(Error::Domain(format!("radius must be >= 0, got {r}")));
    }
    let half_nm2s = 0.5 * (nf - 2.0 * s);
    if r <= 1.0 {
        let c_inside = 2f64.powf(-2.0 * s) * gamma(half_nm2s)? * gamma(0.5 * gamma_exp + 1.0)?
            / (gamma(0.5 * (2.0 * s + gamma_exp) + 1.0)? * gamma(0.5 * nf)?);
        let hyp = gauss_2f1(half_nm2s, -0.5 * (gamma_exp + 2.0 * s), 0.5 * nf, r * r)?;
        Ok(c_inside * hyp)
    } else {
        let c_outside = 2f64.powf(-2.0 * s) * gamma(half_nm2s)? * gamma(0.5 * gamma_exp + 1.0)?
            / (gamma(0.5 * (nf + gamma_exp) + 1.0)? * gamma(s)?);
        let hyp = gauss_2f1(
            half_nm2s,
            1.0 - s,
            0.5 * (nf + gamma_exp) + 1.0,
            1.0 / (r * r),
        )?;
        Ok(c_outside * r.powf(2.0 * s - nf) * hyp)
    }
}

/// Ball pair: `f = (1-‖x‖²)₊^{γ/2}` with `γ = 2(1-s)` or `2(2-s)`,
/// `u = (-Δ)^{-s} f` from [`inv_frlap_ball`].
pub fn pair_ball(mode: BallExponent, s: f64, n: u8) -> Result<SolutionPair> {
    let gamma_exp = match mode {
        BallExponent::OneMinusS => 2.0 * (1.0 - s),
        BallExponent::TwoMinusS => 2.0 * (2.0 - s),
    };
    // Validate the parameter set once up front.
    inv_frlap_ball(gamma_exp, s, n, 0.0)?;
    let half = 0.5 * gamma_exp;
    let (name, regularity, f_deriv): (&str, String, Option<Radial>) = match mode {
        BallExponent::OneMinusS => (
            "ball-1s",
            format!("u in C^(1,{s}) with a kink at the sphere"),
            None,
        ),
        BallExponent::TwoMinusS => (
            "ball-2s",
            format!("u in C^(2,{s})"),
            Some(Arc::new(move |r: f64| {
                let w = 1.0 - r * r;
                if w > 0.0 {
                    -2.0 * r * half * w.powf(half - 1.0)
                } else {
                    0.0
                }
            })),
        ),
    };
    Ok(SolutionPair {
        name: name.into(),
        dim: n,
        s,
        u: Arc::new(move |r| inv_frlap_ball(gamma_exp, s, n, r).unwrap_or(f64::NAN)),
        f: Arc::new(move |r| {
            let w = 1.0 - r * r;
            if w > 0.0 {
                w.powf(half)
            } else {
                0.0
            }
        }),
        f_deriv,
        f_domain: RefDomain::Everywhere,
        regularity,
        u_compact_x: None,
        u_decay_exponent: Some(n as f64 - 2.0 * s),
        f_compact_x: Some(1.0),
    })
}

/// Riesz pair on `R²`: `u = ‖x‖^{-α}`,
/// `f = 2^{2s} Γ(α/2+s)Γ(1-α/2) / (Γ(1-α/2-s)Γ(α/2)) · ‖x‖^{-α-2s}`,
/// valid for `0 < s < 1` and `0 < α < 2-2s`. Both profiles are singular at
/// the origin; use half-cell offset windows.
pub fn pair_riesz_2d(alpha: f64, s: f64) -> Result<SolutionPair> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::Domain(format!("s must lie in (0,1), got {s}")));
    }
    if !(alpha > 0.0 && alpha < 2.0 - 2.0 * s) {
        return Err(Error::Domain(format!(
            "riesz2d requires 0 < alpha < 2-2s, got alpha={alpha}, s={s}"
        )));
    }
    let c = 2f64.powf(2.0 * s) * gamma(0.5 * alpha + s)? * gamma(1.0 - 0.5 * alpha)?
        / (gamma(1.0 - 0.5 * alpha - s)? * gamma(0.5 * alpha)?);
    Ok(SolutionPair {
        name: "riesz2d".into(),
        dim: 2,
        s,
        u: Arc::new(move |r| r.powf(-alpha)),
        f: Arc::new(move |r| c * r.powf(-alpha - 2.0 * s)),
        f_deriv: None,
        f_domain: RefDomain::Everywhere,
        regularity: "singular at the origin, homogeneous".into(),
        u_compact_x: None,
        u_decay_exponent: Some(alpha),
        f_compact_x: None,
    })
}

/// Names accepted by [`pair_by_name`].
pub const PAIR_NAMES: [&str; 5] = ["gaussian", "algebraic", "ball-1s", "ball-2s", "riesz2d"];

/// Looks up a catalogued pair. `alpha` is consumed by `riesz2d` only.
pub fn pair_by_name(name: &str, s: f64, dim: u8, alpha: Option<f64>) -> Result<SolutionPair> {
    match (name, dim) {
        ("gaussian", 1) => pair_gaussian(s),
        ("algebraic", 1) => pair_algebraic(s),
        ("ball-1s", d @ (1 | 2)) => pair_ball(BallExponent::OneMinusS, s, d),
        ("ball-2s", d @ (1 | 2)) => pair_ball(BallExponent::TwoMinusS, s, d),
        ("riesz2d", 2) => pair_riesz_2d(
            alpha.ok_or_else(|| Error::Config("riesz2d requires --alpha".into()))?,
            s,
        ),
        _ => Err(Error::Config(format!(
            "unknown pair '{name}' in dimension {dim}; catalogue: {PAIR_NAMES:?}"
        ))),
    }
}

/// Desingularized principal-value quadrature of the continuous operator:
///
/// ```text
/// (-Δ)^s u(x) = c_s ∫₀^∞ (2u(x) - u(x+z) - u(x-z)) dz / z^{1+2s},
/// ```
///
/// the symmetric second-difference form of the singular integral in one
/// dimension. Guards the closed-form catalogue against transcription errors.
pub fn pv_frlap_1d(u: &(dyn Fn(f64) -> f64 + Sync), s: f64, x: f64) -> Result<f64> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::Domain(format!("s must lie in (0,1), got {s}")));
    }
    let cs = c_s(s)?;
    let second_diff = |z: f64| 2.0 * u(x) - u(x + z) - u(x - z);
    let near = quad::integrate(
        |z: f64| second_diff(z) * z.powf(-1.0 - 2.0 * s),
        0.0,
        1.0,
        0.0,
        1e-8,
        4000,
    )?;
    let far = quad::integrate_tail(
        |z: f64| second_diff(z) * z.powf(-1.0 - 2.0 * s),
        1.0,
        0.0,
        1e-8,
        4000,
    )?;
    Ok(cs * (near.value + far.value))
}
