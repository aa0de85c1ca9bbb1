//! Refinement studies: `ℓ∞` consistency errors against the closed-form
//! catalogue, fitted log-log rates, and the h-uniformity of the discrete
//! Hölder estimates.
//!
//! The sup is taken over the central part of the window so that the measured
//! rate reflects the discretization, not the window edge where the truncated
//! far field bites. Tail handling is chosen per pair: exact (compact
//! support) or sampled out to a recorded physical radius; silent truncation
//! is rejected.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gridops::{
    apply_frlap_1d, apply_frlap_2d, holder_seminorm, Grid1d, OperatorConfig, Sampler1d, Sampler2d,
    SupportHint, TailMode, Window1d, Window2d,
};
use crate::kernels1d::KernelSource;
use crate::order::FracOrder;
use crate::reference::{RefDomain, SolutionPair};

/// Restriction `r_h u`: samples a continuous function at the window's
/// physical coordinates (half-cell offset included when the window carries
/// one).
pub fn restrict_1d(
    u: impl Fn(f64) -> f64 + Send + Sync + 'static,
    w: &Window1d,
    hint: SupportHint,
) -> Sampler1d {
    let w = *w;
    Sampler1d::new(hint, move |j| u(w.x(j)))
}

/// 2D restriction at `(x(j1), y(j2))`.
pub fn restrict_2d(
    u: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
    w: &Window2d,
    hint: SupportHint,
) -> Sampler2d {
    let w = *w;
    Sampler2d::new(hint, move |j1, j2| u(w.x(j1), w.y(j2)))
}

/// Geometry and tail policy shared by every run of a study.
#[derive(Clone, Copy, Debug)]
pub struct StudyConfig {
    /// Physical half-width of the output window.
    pub window_x: f64,
    /// Physical radius of the exact-kernel sum.
    pub exact_radius_x: f64,
    /// Physical radius of the sampled asymptotic tail (non-compact `u`).
    pub sampled_radius_x: f64,
    /// Fraction of the window over which the sup is taken.
    pub interior_fraction: f64,
    /// Slack subtracted from the theoretical exponent in the pass check.
    pub slack: f64,
}

impl Default for StudyConfig {
    fn default() -> Self {
        StudyConfig {
            window_x: 2.5,
            exact_radius_x: 20.0,
            sampled_radius_x: 1000.0,
            interior_fraction: 0.5,
            slack: 0.15,
        }
    }
}

/// Outcome of a refinement study.
#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceReport {
    pub pair: String,
    pub s: f64,
    pub derivative_level: u8,
    /// `(h, sup error)` rows, h strictly decreasing.
    pub samples: Vec<(f64, f64)>,
    pub fitted_slope: Option<f64>,
    pub theoretical_exponent: f64,
    pub slack: f64,
    /// None when the study is descriptive (2D) or degenerate.
    pub pass: Option<bool>,
    pub degenerate: bool,
    /// Physical tail radius recorded when the sampled tail was in use.
    pub tail_radius_x: Option<f64>,
}

impl ConvergenceReport {
    pub fn write_csv(&self, out: &mut dyn std::io::Write) -> Result<()> {
        writeln!(out, "h,error")?;
        for (h, e) in &self.samples {
            writeln!(out, "{h},{e}")?;
        }
        Ok(())
    }
}

/// Least-squares slope of `ln error` against `ln h`.
pub fn fit_loglog_slope(samples: &[(f64, f64)]) -> f64 {
    let n = samples.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(h, e) in samples {
        let x = h.ln();
        let y = e.ln();
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

fn build_u_sampler_1d(
    pair: &SolutionPair,
    w: &Window1d,
    study: &StudyConfig,
) -> (Sampler1d, TailMode, i64) {
    let h = w.h;
    let p = pair.clone();
    match (pair.u_compact_x, pair.u_decay_exponent) {
        (Some(rx), _) => {
            let radius = (rx / h).ceil() as i64;
            let n = ((study.exact_radius_x / h).ceil() as i64).max(radius + w.max_abs_index() + 1);
            let u = Sampler1d::compact(radius, move |j| p.u_1d(j as f64 * h));
            (u, TailMode::Zero, n)
        }
        (None, Some(exponent)) => {
            let n = (study.exact_radius_x / h).ceil() as i64;
            let m = ((study.sampled_radius_x / h).ceil() as i64).max(n + 1);
            let span = m + w.max_abs_index() + 1;
            let u = Sampler1d::memoized(-span, span, SupportHint::Decay { exponent }, move |j| {
                p.u_1d(j as f64 * h)
            });
            (u, TailMode::Sampled(m), n)
        }
        (None, None) => {
            // No metadata: only constant-far-field inputs survive the Zero
            // probe; anything else must declare its decay.
            let n = (study.exact_radius_x / h).ceil() as i64;
            let u = Sampler1d::from_fn(move |j| p.u_1d(j as f64 * h));
            (u, TailMode::Zero, n)
        }
    }
}

/// `ℓ∞` gap between the discrete operator applied to `r_h u` and the
/// restriction of the continuous `f`, over the interior of the window.
///
/// `level = 0` compares values; `level = 1` applies the forward difference
/// to the discrete output and compares against `r_h f'` (pairs without an
/// analytic `f'` are refused rather than silently differenced).
pub fn consistency_error(
    pair: &SolutionPair,
    h: f64,
    study: &StudyConfig,
    level: u8,
) -> Result<f64> {
    if pair.dim != 1 {
        return Err(Error::Config(
            "consistency_error is one-dimensional; use consistency_error_2d".into(),
        ));
    }
    if level > 1 {
        return Err(Error::Config("only levels 0 and 1 are implemented".into()));
    }
    let half_width = (study.window_x / h).round() as i64;
    if half_width < 4 {
        return Err(Error::Config(format!(
            "window too small: {} points at h={h}",
            2 * half_width + 1
        )));
    }
    let w = Window1d::symmetric(h, half_width)?;
    let (u, tail, n) = build_u_sampler_1d(pair, &w, study);
    let cfg = OperatorConfig::new(FracOrder::laplacian(pair.s)?, n)
        .with_tail(tail)
        .with_kernel(KernelSource::ClosedForm);
    let grid = apply_frlap_1d(&u, &w, &cfg)?;

    let interior = ((half_width as f64) * study.interior_fraction).floor() as i64;
    match (level, pair.f_domain) {
        (0, RefDomain::OriginOnly) => Ok((grid.value(0) - pair.f_1d(0.0)).abs()),
        (0, RefDomain::Everywhere) => {
            let mut sup = 0.0f64;
            for j in -interior..=interior {
                sup = sup.max((grid.value(j) - pair.f_1d(w.x(j))).abs());
            }
            Ok(sup)
        }
        (1, _) => {
            if !pair.has_f_deriv() {
                return Err(Error::Config(format!(
                    "pair '{}' exposes no analytic f'; refusing to difference the reference",
                    pair.name
                )));
            }
            let d = grid.d_plus()?;
            let mut sup = 0.0f64;
            for j in -interior..=interior.min(d.window.j_max) {
                let want = pair.f_deriv_1d(w.x(j)).expect("checked above");
                sup = sup.max((d.value(j) - want).abs());
            }
            Ok(sup)
        }
        _ => unreachable!(),
    }
}

/// Runs [`consistency_error`] across a refinement list and fits the rate.
///
/// `h_list` must hold at least three strictly decreasing mesh sizes. The
/// pass flag asserts `slope ≥ theoretical_exponent - slack`; identically
/// zero errors flag the study as degenerate instead of fitting.
pub fn rate_study(
    pair: &SolutionPair,
    level: u8,
    h_list: &[f64],
    study: &StudyConfig,
    theoretical_exponent: f64,
) -> Result<ConvergenceReport> {
    validate_h_list(h_list)?;
    let mut samples = Vec::with_capacity(h_list.len());
    for &h in h_list {
        samples.push((h, consistency_error(pair, h, study, level)?));
    }
    let tail_radius_x = pair.u_compact_x.is_none().then_some(study.sampled_radius_x);
    let degenerate = samples.iter().all(|&(_, e)| e <= 1e-14);
    if degenerate {
        return Ok(ConvergenceReport {
            pair: pair.name.clone(),
            s: pair.s,
            derivative_level: level,
            samples,
            fitted_slope: None,
            theoretical_exponent,
            slack: study.slack,
            pass: None,
            degenerate: true,
            tail_radius_x,
        });
    }
    let slope = fit_loglog_slope(&samples);
    Ok(ConvergenceReport {
        pair: pair.name.clone(),
        s: pair.s,
        derivative_level: level,
        samples,
        fitted_slope: Some(slope),
        theoretical_exponent,
        slack: study.slack,
        pass: Some(slope >= theoretical_exponent - study.slack),
        degenerate: false,
        tail_radius_x,
    })
}

fn validate_h_list(h_list: &[f64]) -> Result<()> {
    if h_list.len() < 3 {
        return Err(Error::Config(
            "a rate study needs at least three mesh sizes".into(),
        ));
    }
    if h_list.windows(2).any(|p| p[1] >= p[0]) || h_list.iter().any(|&h| h <= 0.0) {
        return Err(Error::Config(
            "mesh sizes must be positive and strictly decreasing".into(),
        ));
    }
    Ok(())
}

/// Descriptive 2D consistency error (no theorem backs a rate here, so no
/// pass judgment is attached).
pub fn consistency_error_2d(
    pair: &SolutionPair,
    h: f64,
    window_x: f64,
    radius: i64,
    kernel: KernelSource,
) -> Result<f64> {
    if pair.dim != 2 {
        return Err(Error::Config("pair is not two-dimensional".into()));
    }
    let half_width = (window_x / h).round() as i64;
    let w = Window2d::symmetric(h, half_width)?;
    let p = pair.clone();
    let hint = match pair.u_decay_exponent {
        Some(e) => SupportHint::Decay { exponent: e },
        None => SupportHint::None,
    };
    let u = Sampler2d::memoized_square(radius + half_width + 1, hint, move |j1, j2| {
        p.u_at(w.x(j1).hypot(w.y(j2)))
    });
    let cfg = OperatorConfig::new(FracOrder::laplacian(pair.s)?, radius)
        .with_tail(TailMode::Ignore)
        .with_kernel(kernel);
    let grid = apply_frlap_2d(&u, &w, &cfg)?;
    let mut sup = 0.0f64;
    let interior = half_width / 2;
    for j1 in -interior..=interior {
        for j2 in -interior..=interior {
            let want = pair.f_at(w.x(j1).hypot(w.y(j2)));
            sup = sup.max((grid.value(j1, j2) - want).abs());
        }
    }
    Ok(sup)
}

/// Descriptive 2D refinement report (`pass = None` always).
pub fn rate_study_2d(
    pair: &SolutionPair,
    h_list: &[f64],
    window_x: f64,
    radius_x: f64,
    kernel: KernelSource,
) -> Result<ConvergenceReport> {
    validate_h_list(h_list)?;
    let mut samples = Vec::with_capacity(h_list.len());
    for &h in h_list {
        let radius = (radius_x / h).ceil() as i64;
        samples.push((h, consistency_error_2d(pair, h, window_x, radius, kernel)?));
    }
    let degenerate = samples.iter().all(|&(_, e)| e <= 1e-14);
    let slope = (!degenerate).then(|| fit_loglog_slope(&samples));
    Ok(ConvergenceReport {
        pair: pair.name.clone(),
        s: pair.s,
        derivative_level: 0,
        samples,
        fitted_slope: slope,
        theoretical_exponent: f64::NAN,
        slack: f64::NAN,
        pass: None,
        degenerate,
        tail_radius_x: None,
    })
}

/// Which mapping estimate a Hölder study exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HolderMode {
    /// `u ∈ C^{0,β}`, `2s < β`: output measured in `C^{0,β-2s}`.
    ZeroOrder,
    /// `u ∈ C^{1,β}`, `2s > β`: output measured in `C^{0,β-2s+1}`.
    FirstOrder,
}

/// Per-h seminorm ratios for the Hölder mapping estimate.
#[derive(Clone, Debug, Serialize)]
pub struct HolderReport {
    pub beta: f64,
    pub s: f64,
    pub mode: HolderMode,
    /// `(h, input seminorm, output seminorm, ratio)` rows.
    pub rows: Vec<(f64, f64, f64, f64)>,
    /// Ratios bounded by `band × ratio(coarsest h)`.
    pub band: f64,
    pub pass: Option<bool>,
    pub degenerate: bool,
}

/// Measures the h-uniformity of the Hölder mapping constant: the ratio of
/// the output seminorm (at the mapped exponent) to the input seminorm must
/// stay within `band` times its value at the coarsest mesh.
pub fn holder_mapping_study(
    u: impl Fn(f64) -> f64 + Send + Sync + Clone + 'static,
    support_x: f64,
    beta: f64,
    s: f64,
    mode: HolderMode,
    h_list: &[f64],
    window_x: f64,
) -> Result<HolderReport> {
    validate_h_list(h_list)?;
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::Domain(format!("beta must lie in (0,1], got {beta}")));
    }
    let (input_level, out_exp) = match mode {
        HolderMode::ZeroOrder => {
            if 2.0 * s >= beta {
                return Err(Error::Config(format!(
                    "zero-order mode requires 2s < beta, got s={s}, beta={beta}"
                )));
            }
            (0u8, beta - 2.0 * s)
        }
        HolderMode::FirstOrder => {
            if 2.0 * s <= beta {
                return Err(Error::Config(format!(
                    "first-order mode requires 2s > beta, got s={s}, beta={beta}"
                )));
            }
            (1u8, beta - 2.0 * s + 1.0)
        }
    };

    let mut rows = Vec::with_capacity(h_list.len());
    for &h in h_list {
        let radius = (support_x / h).ceil() as i64;
        let half_width = (window_x / h).round() as i64;
        let w = Window1d::symmetric(h, half_width)?;
        let uf = u.clone();
        let sampler = Sampler1d::compact(radius, move |j| uf(j as f64 * h));
        let n = radius + half_width.max(radius) + 1;
        let cfg = OperatorConfig::new(FracOrder::laplacian(s)?, n).with_tail(TailMode::Zero);
        let out = apply_frlap_1d(&sampler, &w, &cfg)?;

        let w_in = Window1d::symmetric(h, radius + 1)?;
        let input = Grid1d::new(w_in, w_in.indices().map(|j| sampler.value(j)).collect());
        let in_norm = holder_seminorm(&input, beta, input_level)?;
        let out_semi = holder_seminorm(&out, out_exp.min(1.0), 0)?;
        let ratio = if in_norm > 0.0 {
            out_semi / in_norm
        } else {
            0.0
        };
        rows.push((h, in_norm, out_semi, ratio));
    }

    let degenerate = rows.iter().all(|r| r.1 == 0.0 || r.3 == 0.0);
    let band = 3.0;
    let pass = if degenerate {
        None
    } else {
        let base = rows[0].3;
        Some(rows.iter().all(|r| r.3 <= band * base && r.3 > 0.0))
    };
    Ok(HolderReport {
        beta,
        s,
        mode,
        rows,
        band,
        pass,
        degenerate,
    })
}
