//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with the measured quantities (run with `-- --nocapture`).
//!
//! Every tolerance is pinned here; the figure-reproduction error levels were
//! recorded on the first calibrated run and are regression-tested at ±10%.

use fraclap::convergence::{
    holder_mapping_study, rate_study, restrict_1d, HolderMode, StudyConfig,
};
use fraclap::gridops::{
    apply_frint_1d, apply_frlap_1d, frlap_semigroup_oracle, heat_apply_1d, HeatConfig,
    OperatorConfig, OracleControls, Sampler1d, SupportHint, TailMode, Window1d,
};
use fraclap::kernels1d::{
    kernel_kminus, kernel_kminus_oracle, kernel_ks, kernel_ks_oracle, sigma_s, sigma_s_partial,
    KernelSource,
};
use fraclap::kernels2d::{c_2minus_s, c_2s, kernel2d_oracle, kminus2d_center};
use fraclap::reference::{gaussian_frlap_at_zero, inv_frlap_ball, pair_by_name, SolutionPair};
use fraclap::specfun::{gamma_ratio, hyp_3f2_unit, ln_gamma};
use fraclap::FracOrder;

use std::f64::consts::PI;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

/// Criterion 1: closed-form kernels agree with the semigroup quadrature
/// oracle to relative 1e-8 across orders and offsets.
#[test]
fn criterion_01_kernel_oracle_equivalence() {
    let mut worst = (0.0f64, 0.0f64, 0i64);
    for &s in &[0.1, 0.3, 0.5, 0.7, 0.9] {
        for m in 1..=64i64 {
            let closed = kernel_ks(s, m).unwrap();
            let oracle = kernel_ks_oracle(s, m).unwrap();
            let r = rel(closed, oracle);
            if r > worst.0 {
                worst = (r, s, m);
            }
            assert!(r <= 1e-8, "K_s: s={s} m={m}: rel {r:e}");
        }
    }
    let mut worst_neg = (0.0f64, 0.0f64, 0i64);
    for &s in &[0.1, 0.2, 0.3, 0.4] {
        for m in 0..=64i64 {
            let closed = kernel_kminus(s, m).unwrap();
            let oracle = kernel_kminus_oracle(s, m).unwrap();
            let r = rel(closed, oracle);
            if r > worst_neg.0 {
                worst_neg = (r, s, m);
            }
            assert!(r <= 1e-8, "K_-s: s={s} m={m}: rel {r:e}");
        }
    }
    println!(
        "criterion 01 PASS: kernel vs oracle; worst K_s rel {:.2e} (s={}, m={}), worst K_-s rel {:.2e} (s={}, m={})",
        worst.0, worst.1, worst.2, worst_neg.0, worst_neg.1, worst_neg.2
    );
}

/// Criterion 2: hand-derived values K_{1/2}(1) = 4/(3π) and Σ_{1/2} = 4/π.
#[test]
fn criterion_02_hand_values() {
    let k = kernel_ks(0.5, 1).unwrap();
    assert!(rel(k, 4.0 / (3.0 * PI)) <= 1e-12, "{k}");
    let sig = sigma_s(0.5).unwrap();
    assert!(rel(sig, 4.0 / PI) <= 1e-12, "{sig}");
    let partial = sigma_s_partial(0.5, 100_000).unwrap();
    assert!(
        rel(partial.total(), 4.0 / PI) <= 1e-6,
        "partial {}",
        partial.total()
    );
    println!(
        "criterion 02 PASS: K_1/2(1) rel {:.2e}, sigma closed rel {:.2e}, partial rel {:.2e}",
        rel(k, 4.0 / (3.0 * PI)),
        rel(sig, 4.0 / PI),
        rel(partial.total(), 4.0 / PI)
    );
}

/// Criterion 3: kernel-mass identity via partial sum + tail bracket.
#[test]
fn criterion_03_sigma_identity() {
    for &s in &[0.25, 0.5, 0.75] {
        let closed = sigma_s(s).unwrap();
        let partial = sigma_s_partial(s, 100_000).unwrap();
        let r = rel(partial.total(), closed);
        assert!(r <= 1e-6, "s={s}: rel {r:e}");
        println!("criterion 03 PASS: s={s}: partial+tail vs closed rel {r:.2e}");
    }
}

/// Criterion 4: the second-order gap `m^{2+2s}|Γ-ratio - m^{-1-2s}|` does not
/// grow in m: its sup over [10, 1e4] stays within 1.1× the sup over the
/// calibration window [10, 100]. (The gap decays like 1/m, so the global sup
/// over [1, 1e4] sits at m = 1; boundedness there is asserted separately.)
#[test]
fn criterion_04_second_order_kernel_estimate() {
    for k in 1..=9 {
        let s = 0.1 * k as f64;
        let gap = |m: f64| {
            (gamma_ratio(m - s, m + 1.0 + s).unwrap() - m.powf(-1.0 - 2.0 * s)).abs()
                * m.powf(2.0 + 2.0 * s)
        };
        let mut window_sup = 0.0f64;
        for m in 10..=100 {
            window_sup = window_sup.max(gap(m as f64));
        }
        let mut wide_sup = 0.0f64;
        for m in 10..=10_000 {
            wide_sup = wide_sup.max(gap(m as f64));
        }
        assert!(
            wide_sup <= 1.1 * window_sup,
            "s={s}: wide {wide_sup} vs window {window_sup}"
        );
        // Bounded (not growing) on the head too.
        let head = gap(1.0).max(gap(2.0)).max(gap(3.0));
        assert!(head.is_finite() && head < 10.0, "s={s}: head {head}");
    }
    for &s in &[0.1, 0.2, 0.3, 0.4] {
        let gap = |m: f64| {
            (gamma_ratio(m + s, m + 1.0 - s).unwrap() - m.powf(-(1.0 - 2.0 * s))).abs()
                * m.powf(2.0 - 2.0 * s)
        };
        let mut window_sup = 0.0f64;
        for m in 10..=100 {
            window_sup = window_sup.max(gap(m as f64));
        }
        let mut wide_sup = 0.0f64;
        for m in 10..=10_000 {
            wide_sup = wide_sup.max(gap(m as f64));
        }
        assert!(
            wide_sup <= 1.1 * window_sup,
            "negative order s={s}: wide {wide_sup} vs window {window_sup}"
        );
    }
    println!("criterion 04 PASS: no growth of the normalized kernel gap on [10, 1e4], both orders");
}

fn smooth_bump(radius: i64) -> Sampler1d {
    Sampler1d::compact(radius, move |j| {
        let t = j as f64 / radius as f64;
        (0.5 * (1.0 + (PI * t).cos())).powi(2)
    })
}

/// Criterion 5: the operator approaches the identity as s → 0⁺ and the
/// discrete Laplacian as s → 1⁻, within 2% in sup norm on compact data.
#[test]
fn criterion_05_limit_laws() {
    let h = 0.5;
    let radius = 8i64;
    let u = smooth_bump(radius);
    let w = Window1d::symmetric(h, 10).unwrap();
    let n = radius + 10 + 1;

    let tiny = apply_frlap_1d(
        &u,
        &w,
        &OperatorConfig::new(FracOrder::laplacian(1e-3).unwrap(), n).with_tail(TailMode::Zero),
    )
    .unwrap();
    let sup_u: f64 = (-10..=10).map(|j| u.value(j).abs()).fold(0.0, f64::max);
    let mut dev_id = 0.0f64;
    for j in -10..=10 {
        dev_id = dev_id.max((tiny.value(j) - u.value(j)).abs());
    }
    assert!(dev_id <= 0.02 * sup_u, "s->0 deviation {dev_id}");

    let near_one = apply_frlap_1d(
        &u,
        &w,
        &OperatorConfig::new(FracOrder::laplacian(1.0 - 1e-3).unwrap(), n)
            .with_tail(TailMode::Zero),
    )
    .unwrap();
    let minus_lap = |j: i64| -(u.value(j + 1) - 2.0 * u.value(j) + u.value(j - 1)) / (h * h);
    let sup_lap: f64 = (-10..=10).map(|j| minus_lap(j).abs()).fold(0.0, f64::max);
    let mut dev_lap = 0.0f64;
    for j in -10..=10 {
        dev_lap = dev_lap.max((near_one.value(j) - minus_lap(j)).abs());
    }
    assert!(
        dev_lap <= 0.02 * sup_lap,
        "s->1 deviation {dev_lap} vs {sup_lap}"
    );
    println!(
        "criterion 05 PASS: s=1e-3 within {:.3}% of identity, s=1-1e-3 within {:.3}% of -Δ_h",
        100.0 * dev_id / sup_u,
        100.0 * dev_lap / sup_lap
    );
}

/// Criterion 6: the semigroup-definition oracle and the kernel-sum operator
/// agree to 1e-6 on an impulse and on pseudo-random compact data.
#[test]
fn criterion_06_definition_equivalence() {
    let h = 0.3;
    let w = Window1d::new(h, -2, 2).unwrap();
    let ctl = OracleControls::default();

    // Deterministic pseudo-random compact samples in [-1, 1].
    let mut state = 0x2545F4914F6CDD1Du64;
    let mut randoms = Vec::new();
    for _ in 0..21 {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        randoms.push((state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0);
    }
    let random_u = Sampler1d::compact(10, move |j| randoms[(j + 10) as usize]);

    for &s in &[0.3, 0.6] {
        for (tag, u) in [
            ("impulse", Sampler1d::impulse()),
            ("random", random_u.clone()),
        ] {
            let grid = apply_frlap_1d(
                &u,
                &w,
                &OperatorConfig::new(FracOrder::laplacian(s).unwrap(), 16)
                    .with_tail(TailMode::Zero),
            )
            .unwrap();
            let scale = grid.sup_norm();
            for j in -2..=2 {
                let o = frlap_semigroup_oracle(&u, &w, j, s, &ctl).unwrap();
                let gap = (o - grid.value(j)).abs() / scale;
                assert!(gap <= 1e-6, "{tag} s={s} j={j}: {gap:e}");
            }
        }
    }
    println!("criterion 06 PASS: semigroup oracle vs kernel sum to 1e-6 at s in {{0.3, 0.6}}");
}

fn gaussian_origin_error(h: f64, n: i64) -> f64 {
    let pair = pair_by_name("gaussian", 0.25, 1, None).unwrap();
    let w = Window1d::symmetric(h, (2.0 / h) as i64).unwrap();
    let p = pair.clone();
    let u = restrict_1d(move |x| p.u_1d(x), &w, SupportHint::None);
    let cfg = OperatorConfig::new(FracOrder::laplacian(0.25).unwrap(), n)
        .with_tail(TailMode::Ignore)
        .with_kernel(KernelSource::ClosedForm);
    let grid = apply_frlap_1d(&u, &w, &cfg).unwrap();
    (grid.value(0) - pair.f_1d(0.0)).abs()
}

/// Criterion 7: the Gaussian run at s=0.25, h=0.1, N=1000 lands within 2% of
/// `4^{1/4}Γ(3/4)/√π` at the origin and the error strictly decreases at
/// h=0.05, N=2000.
#[test]
fn criterion_07_figure1_reproduction() {
    let reference = gaussian_frlap_at_zero(0.25).unwrap();
    let e_coarse = gaussian_origin_error(0.1, 1000);
    let e_fine = gaussian_origin_error(0.05, 2000);
    assert!(e_coarse <= 0.02 * reference, "coarse error {e_coarse}");
    assert!(e_fine < e_coarse, "no decrease: {e_coarse} -> {e_fine}");
    println!(
        "criterion 07 PASS: origin error {:.3e} (rel {:.2e}) -> {:.3e} under refinement",
        e_coarse,
        e_coarse / reference,
        e_fine
    );
}

struct FigureCase {
    tag: &'static str,
    pair: &'static str,
    s: f64,
    n: i64,
    half_width: i64,
    solve: bool,
    /// Sup taken over `|j| <= interior` (tail-complete region for solves).
    interior: Option<i64>,
    /// Sup error recorded on the first calibrated run.
    frozen: f64,
}

/// Figure configurations 2-7 with their frozen error levels.
const FIGURE_BANDS: [FigureCase; 6] = [
    FigureCase {
        tag: "fig2",
        pair: "algebraic",
        s: 0.4,
        n: 1000,
        half_width: 50,
        solve: false,
        interior: None,
        frozen: 5.664636e-3,
    },
    FigureCase {
        tag: "fig3",
        pair: "algebraic",
        s: 0.4,
        n: 1000,
        half_width: 50,
        solve: true,
        interior: None,
        frozen: 5.446728e-3,
    },
    FigureCase {
        tag: "fig4",
        pair: "ball-1s",
        s: 0.25,
        n: 1000,
        half_width: 20,
        solve: false,
        interior: None,
        frozen: 3.564923e-2,
    },
    FigureCase {
        tag: "fig5",
        pair: "ball-1s",
        s: 0.25,
        n: 20,
        half_width: 20,
        solve: true,
        interior: Some(10),
        frozen: 1.402851e-2,
    },
    FigureCase {
        tag: "fig6",
        pair: "ball-2s",
        s: 0.25,
        n: 1000,
        half_width: 20,
        solve: false,
        interior: None,
        frozen: 3.466753e-3,
    },
    FigureCase {
        tag: "fig7",
        pair: "ball-2s",
        s: 0.25,
        n: 20,
        half_width: 20,
        solve: true,
        interior: Some(10),
        frozen: 6.987987e-4,
    },
];

fn figure_error_1d(case: &FigureCase, h: f64) -> (f64, f64) {
    let pair: SolutionPair = pair_by_name(case.pair, case.s, 1, None).unwrap();
    let w = Window1d::symmetric(h, case.half_width).unwrap();
    let p = pair.clone();
    let grid = if case.solve {
        let f = restrict_1d(move |x| p.f_1d(x), &w, SupportHint::None);
        let cfg = OperatorConfig::new(FracOrder::integral(case.s).unwrap(), case.n)
            .with_tail(TailMode::Ignore);
        apply_frint_1d(&f, &w, &cfg).unwrap()
    } else {
        let u = restrict_1d(move |x| p.u_1d(x), &w, SupportHint::None);
        let cfg = OperatorConfig::new(FracOrder::laplacian(case.s).unwrap(), case.n)
            .with_tail(TailMode::Ignore);
        apply_frlap_1d(&u, &w, &cfg).unwrap()
    };
    let reach = case.interior.unwrap_or(case.half_width);
    let mut sup_err = 0.0f64;
    let mut sup_ref = 0.0f64;
    for j in -reach..=reach {
        let want = if case.solve {
            pair.u_1d(w.x(j))
        } else {
            pair.f_1d(w.x(j))
        };
        sup_err = sup_err.max((grid.value(j) - want).abs());
        sup_ref = sup_ref.max(want.abs());
    }
    (sup_err, sup_ref)
}

/// Criterion 8: figures 2-7 reproduce within the frozen calibration bands
/// (±10%), and the compact-support Poisson solves stay within 2% sup-norm
/// over the tail-complete interior.
#[test]
fn criterion_08_figures_2_to_7() {
    for case in &FIGURE_BANDS {
        let (err, sup_ref) = figure_error_1d(case, 0.1);
        assert!(
            (err - case.frozen).abs() <= 0.1 * case.frozen,
            "{}: measured {err:e} vs frozen {:e}",
            case.tag,
            case.frozen
        );
        if case.solve {
            assert!(
                err <= 0.02 * sup_ref,
                "{}: solve error {err:e} above 2% of {sup_ref:e}",
                case.tag
            );
        }
        println!(
            "criterion 08 PASS: {} sup error {err:.4e} within ±10% of frozen {:.4e}{}",
            case.tag,
            case.frozen,
            if case.solve {
                " and within 2% sup-norm"
            } else {
                ""
            }
        );
    }
}

/// Criterion 9: fitted consistency rates. The Lipschitz-mode study
/// (ball-1s, s=0.25) must fit a slope ≥ 0.45 against the theoretical 0.5;
/// the C^{1,β} mode with 2s > β (ball-1s, s=0.4, β=s) must reach
/// (β-2s+1) - 0.15 = 0.45.
#[test]
fn criterion_09_rate_studies() {
    let hs = [0.2, 0.1, 0.05, 0.025];
    let study = StudyConfig::default();

    let pair = pair_by_name("ball-1s", 0.25, 1, None).unwrap();
    let report = rate_study(&pair, 0, &hs, &study, 0.5).unwrap();
    let slope = report.fitted_slope.unwrap();
    assert!(slope >= 0.45, "Lipschitz-mode slope {slope}");

    let pair_iii = pair_by_name("ball-1s", 0.4, 1, None).unwrap();
    let report_iii = rate_study(&pair_iii, 0, &hs, &study, 0.4 - 0.8 + 1.0).unwrap();
    let slope_iii = report_iii.fitted_slope.unwrap();
    assert!(
        slope_iii >= (0.4 - 0.8 + 1.0) - 0.15,
        "C1-mode slope {slope_iii}"
    );
    assert_eq!(report_iii.pass, Some(true));

    println!(
        "criterion 09 PASS: slopes {slope:.3} (>= 0.45, theory 0.5) and {slope_iii:.3} (>= 0.45, theory 0.6)"
    );
}

/// Criterion 10: the Hölder mapping ratio stays within a factor 3 of its
/// coarsest-mesh value across h ∈ {0.1, 0.05, 0.025}.
#[test]
fn criterion_10_holder_mapping() {
    let beta = 0.9;
    let s = 0.2;
    let u = move |x: f64| {
        let cut = (1.0 - (x / 4.0) * (x / 4.0)).max(0.0);
        x.abs().powf(beta) * cut * cut * cut
    };
    let report = holder_mapping_study(
        u,
        4.0,
        beta,
        s,
        HolderMode::ZeroOrder,
        &[0.1, 0.05, 0.025],
        2.0,
    )
    .unwrap();
    assert_eq!(report.pass, Some(true), "rows: {:?}", report.rows);
    let ratios: Vec<f64> = report.rows.iter().map(|r| r.3).collect();
    println!("criterion 10 PASS: seminorm ratios {ratios:?} within factor 3 of the coarsest");
}

/// Criterion 11: the 2D diagonal ratio quadrature/leading-term sits in
/// [0.95, 1.05] at (40,40) and its deviation from 1 decreases monotonically
/// over k = 10..40, for both the Laplacian and the integral kernels.
#[test]
fn criterion_11_2d_asymptotics() {
    let s = 0.25;
    for (tag, order, coeff, exponent) in [
        (
            "laplacian",
            FracOrder::laplacian(s).unwrap(),
            c_2s(s).unwrap(),
            2.0 + 2.0 * s,
        ),
        (
            "integral",
            FracOrder::integral(s).unwrap(),
            c_2minus_s(s).unwrap(),
            2.0 - 2.0 * s,
        ),
    ] {
        let mut prev = f64::INFINITY;
        let mut at_40 = 0.0;
        for k in 10..=40i64 {
            let norm = ((2 * k * k) as f64).sqrt();
            let main = coeff * norm.powf(-exponent);
            let ratio = kernel2d_oracle(order, k, k).unwrap() / main;
            let dev = (ratio - 1.0).abs();
            assert!(
                dev < prev * (1.0 + 1e-9),
                "{tag}: deviation grew at k={k}: {dev:e} vs {prev:e}"
            );
            prev = dev;
            at_40 = ratio;
        }
        assert!(
            (0.95..=1.05).contains(&at_40),
            "{tag}: ratio at (40,40) = {at_40}"
        );
        println!(
            "criterion 11 PASS: {tag} diagonal ratio at (40,40) = {at_40:.6}, deviation monotone"
        );
    }
}

/// Criterion 12: the ₃F₂ center value `4^{-s}·₃F₂(1/2,(1+s)/2,s/2;1,1;1)`
/// matches the 2D quadrature at the origin to 1e-8.
#[test]
fn criterion_12_3f2_center_value() {
    let s = 0.25;
    let closed = kminus2d_center(s).unwrap();
    let quadrature = kernel2d_oracle(FracOrder::integral(s).unwrap(), 0, 0).unwrap();
    let r = rel(closed, quadrature);
    assert!(r <= 1e-8, "{closed} vs {quadrature}: rel {r:e}");
    // And the raw ₃F₂ factors apart cleanly.
    let raw = hyp_3f2_unit(0.5, 0.625, 0.125, 1.0, 1.0).unwrap();
    assert!(rel(closed, raw * 4f64.powf(-s)) <= 1e-14);
    println!("criterion 12 PASS: 3F2 center vs quadrature rel {r:.2e}");
}

/// Criterion 13: ball-inverse internal consistency: branch continuity at the
/// sphere ≤ 1e-7 relative over a (γ, s, n) grid, and the 1D specializations
/// reproduce the quadratic/quartic polynomials to 1e-12.
#[test]
fn criterion_13_ball_inverse_consistency() {
    // Near the sphere u behaves like C + C'·|1-r²|^{γ/2+2s}; at offset 1e-9
    // the branches can only match to 1e-7 when that exponent is ≥ ~0.9, so
    // the grid stays in that regime (the softer cases are covered by the
    // coarser-offset check below).
    let mut worst_gap = 0.0f64;
    for &s in &[0.1, 0.25, 0.4] {
        for n in [1u8, 2] {
            for gamma_exp in [1.5f64, 2.0 * (1.0 - s), 2.0 * (2.0 - s), 3.0] {
                let sphere_exp: f64 = 0.5 * gamma_exp + 2.0 * s;
                // Sharp enough at offset 1e-9, and away from the integer
                // cases where the ₂F₁ connection formula turns logarithmic.
                if sphere_exp < 1.05 || (sphere_exp - sphere_exp.round()).abs() < 1e-6 {
                    continue;
                }
                let inside = inv_frlap_ball(gamma_exp, s, n, 1.0 - 1e-9).unwrap();
                let outside = inv_frlap_ball(gamma_exp, s, n, 1.0 + 1e-9).unwrap();
                let gap = rel(inside, outside);
                worst_gap = worst_gap.max(gap);
                assert!(gap <= 1e-7, "gamma={gamma_exp} s={s} n={n}: gap {gap:e}");
            }
        }
    }
    // Low-regularity corner: continuity still holds, at the Hölder rate.
    let soft_in = inv_frlap_ball(0.8, 0.1, 1, 1.0 - 1e-9).unwrap();
    let soft_out = inv_frlap_ball(0.8, 0.1, 1, 1.0 + 1e-9).unwrap();
    assert!(rel(soft_in, soft_out) <= 1e-4);

    let gamma = |x: f64| ln_gamma(x).unwrap().exp();
    let mut worst_poly = 0.0f64;
    for k in 0..8 {
        let s = 0.1 + 0.05 * k as f64;
        // γ = 2(1-s): C (1 - (1-2s)x²) with C = 4^{-s}Γ(1/2-s)Γ(2-s)/√π.
        let c1 = 4f64.powf(-s) * gamma(0.5 - s) * gamma(2.0 - s) / PI.sqrt();
        // γ = 2(2-s): C (1 - (2-4s)x² + (1-8s/3+4s²/3)x⁴) with
        // C = 4^{-s}Γ(1/2-s)Γ(3-s)/(2√π).
        let c2 = 4f64.powf(-s) * gamma(0.5 - s) * gamma(3.0 - s) / (2.0 * PI.sqrt());
        let mut x = -1.0f64;
        while x <= 1.0 {
            let want1 = c1 * (1.0 - (1.0 - 2.0 * s) * x * x);
            let got1 = inv_frlap_ball(2.0 * (1.0 - s), s, 1, x.abs()).unwrap();
            worst_poly = worst_poly.max(rel(got1, want1));

            let x2 = x * x;
            let want2 = c2
                * (1.0 - (2.0 - 4.0 * s) * x2
                    + (1.0 - 8.0 * s / 3.0 + 4.0 * s * s / 3.0) * x2 * x2);
            let got2 = inv_frlap_ball(2.0 * (2.0 - s), s, 1, x.abs()).unwrap();
            worst_poly = worst_poly.max(rel(got2, want2));
            x += 0.125;
        }
    }
    assert!(worst_poly <= 1e-12, "polynomial mismatch {worst_poly:e}");
    println!(
        "criterion 13 PASS: branch gap ≤ {worst_gap:.2e}, 1D polynomial mismatch ≤ {worst_poly:.2e}"
    );
}

/// Criterion 14: heat semigroup structure on compact data: mass
/// conservation, maximum principle, invariance of constants, and the
/// composition law within 1e-8.
#[test]
fn criterion_14_heat_semigroup() {
    let h = 0.5;
    let u = smooth_bump(6);

    // Constants are fixed points.
    let ones = Sampler1d::constant(1.0);
    let w = Window1d::symmetric(h, 8).unwrap();
    let hc = HeatConfig::auto(0.9, h).unwrap();
    let fixed = heat_apply_1d(&ones, &w, &hc).unwrap();
    for (_, v) in fixed.iter() {
        assert!((v - 1.0).abs() <= 1e-10, "constant drifted: {v}");
    }

    // Mass conservation on a window covering the spread.
    let w_wide = Window1d::symmetric(h, 6 + hc.truncation).unwrap();
    let spread = heat_apply_1d(&u, &w_wide, &hc).unwrap();
    let mass_in: f64 = (-6..=6).map(|j| u.value(j)).sum();
    let mass_out: f64 = spread.values.iter().sum();
    assert!(
        (mass_in - mass_out).abs() <= 1e-10,
        "{mass_in} vs {mass_out}"
    );

    // Maximum principle.
    let sup_in: f64 = (-6..=6).map(|j| u.value(j)).fold(0.0, f64::max);
    assert!(spread.sup_norm() <= sup_in + 1e-12);

    // Composition: e^{t1} e^{t2} = e^{t1+t2}.
    let (t1, t2) = (0.4, 0.3);
    let hc1 = HeatConfig::auto(t1, h).unwrap();
    let hc2 = HeatConfig::auto(t2, h).unwrap();
    let hc12 = HeatConfig::auto(t1 + t2, h).unwrap();
    let pad = hc1.truncation + hc2.truncation + 6;
    let w_mid = Window1d::symmetric(h, pad).unwrap();
    let first = heat_apply_1d(&u, &w_mid, &hc2).unwrap();
    let w_final = Window1d::symmetric(h, 6).unwrap();
    let second = heat_apply_1d(&first.as_compact_sampler(), &w_final, &hc1).unwrap();
    let direct = heat_apply_1d(&u, &w_final, &hc12).unwrap();
    let mut gap = 0.0f64;
    for j in -6..=6 {
        gap = gap.max((second.value(j) - direct.value(j)).abs());
    }
    assert!(gap <= 1e-8, "composition gap {gap:e}");
    println!(
        "criterion 14 PASS: mass gap {:.2e}, composition gap {gap:.2e}",
        (mass_in - mass_out).abs()
    );
}
