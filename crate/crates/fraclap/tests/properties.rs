//! Property tests over randomized inputs for the structural invariants.

use proptest::prelude::*;

use fraclap::gridops::{apply_frlap_1d, OperatorConfig, Sampler1d, TailMode, Window1d};
use fraclap::kernels1d::{kernel_kminus, kernel_ks};
use fraclap::specfun::{bessel_i_scaled, gamma_ratio, gauss_2f1, ln_gamma};
use fraclap::FracOrder;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// e^{-t} I_k(t) is symmetric in k and nonnegative.
    #[test]
    fn bessel_symmetric_nonnegative(k in -200i64..=200, t in 0.0f64..2e4) {
        let a = bessel_i_scaled(k, t);
        let b = bessel_i_scaled(-k, t);
        prop_assert_eq!(a, b);
        prop_assert!(a >= 0.0);
        prop_assert!(a <= 1.0 + 1e-12);
    }

    /// Γ(a)/Γ(b) · Γ(b)/Γ(a) = 1 whenever both ratios are representable.
    #[test]
    fn gamma_ratio_inverse(a in 1e-2f64..150.0, b in 1e-2f64..150.0) {
        prop_assume!((ln_gamma(a).unwrap() - ln_gamma(b).unwrap()).abs() < 700.0);
        let p = gamma_ratio(a, b).unwrap() * gamma_ratio(b, a).unwrap();
        prop_assert!((p - 1.0).abs() < 1e-12, "{}", p);
    }

    /// 2F1(a,b;b;z) = (1-z)^{-a}.
    #[test]
    fn hypergeometric_binomial(a in 0.05f64..3.0, b in 0.1f64..4.0, z in 0.0f64..0.95) {
        let v = gauss_2f1(a, b, b, z).unwrap();
        let want = (1.0 - z).powf(-a);
        prop_assert!((v - want).abs() <= 1e-10 * want, "{} vs {}", v, want);
    }

    /// Both 1D kernels are symmetric, positive off the origin, and strictly
    /// decreasing in |m|.
    #[test]
    fn kernel_shape(s in 0.05f64..0.95, m in 1i64..500) {
        let k1 = kernel_ks(s, m).unwrap();
        prop_assert!(k1 > 0.0);
        prop_assert_eq!(k1, kernel_ks(s, -m).unwrap());
        prop_assert!(k1 > kernel_ks(s, m + 1).unwrap());
        if s < 0.5 {
            let k2 = kernel_kminus(s, m).unwrap();
            prop_assert!(k2 > 0.0);
            prop_assert!(k2 > kernel_kminus(s, m + 1).unwrap());
            prop_assert!(kernel_kminus(s, 0).unwrap() > k2);
        }
    }

    /// The normalized kernel K_s(m)·|m|^{1+2s} decreases from its m=1 value
    /// toward c_s: the power-law bound holds with the constant fitted at m=1.
    #[test]
    fn kernel_power_law_envelope(s in 0.05f64..0.95, m in 2i64..500) {
        let cs = fraclap::kernels1d::c_s(s).unwrap();
        let norm = |m: i64| kernel_ks(s, m).unwrap() * (m as f64).powf(1.0 + 2.0 * s);
        let fitted = norm(1);
        let v = norm(m);
        prop_assert!(v <= fitted * (1.0 + 1e-12), "m={}: {} vs fitted {}", m, v, fitted);
        prop_assert!(v >= cs * (1.0 - 1e-12), "m={}: {} below c_s {}", m, v, cs);
    }

    /// The operator annihilates constants for any admissible configuration.
    #[test]
    fn constants_annihilated(s in 0.05f64..0.95, n in 4i64..64, c in -5.0f64..5.0) {
        let u = Sampler1d::constant(c);
        let w = Window1d::new(0.25, -3, 3).unwrap();
        let cfg = OperatorConfig::new(FracOrder::laplacian(s).unwrap(), n).with_tail(TailMode::Zero);
        let g = apply_frlap_1d(&u, &w, &cfg).unwrap();
        for (_, v) in g.iter() {
            prop_assert_eq!(v, 0.0);
        }
    }

    /// Translation equivariance, bit for bit.
    #[test]
    fn translation_equivariance(s in 0.05f64..0.95, shift in -5i64..=5) {
        let u = Sampler1d::compact(6, |j| 1.0 / (1.0 + (j * j) as f64));
        let w = Window1d::new(0.2, -3, 3).unwrap();
        let ws = Window1d::new(0.2, -3 + shift, 3 + shift).unwrap();
        let cfg = OperatorConfig::new(FracOrder::laplacian(s).unwrap(), 32).with_tail(TailMode::Ignore);
        let base = apply_frlap_1d(&u, &w, &cfg).unwrap();
        let moved = apply_frlap_1d(&u.shifted(shift), &ws, &cfg).unwrap();
        for j in -3..=3 {
            prop_assert_eq!(base.value(j), moved.value(j + shift));
        }
    }
}
