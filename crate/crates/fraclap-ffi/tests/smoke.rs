//! Exercises the C ABI from Rust: every call goes through the extern "C"
//! signatures exactly as a foreign caller would.

use std::f64::consts::PI;
use std::ffi::{c_void, CStr};
use std::ptr;

use fraclap_ffi::*;

#[test]
fn version_string_is_static() {
    let v = unsafe { CStr::from_ptr(fraclap_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn scalar_entry_points() {
    unsafe {
        let mut out = 0.0f64;
        assert_eq!(fraclap_ln_gamma(10.0, &mut out), FraclapStatus::Ok);
        assert!((out - 362880f64.ln()).abs() < 1e-12);
        assert_eq!(fraclap_ln_gamma(-1.0, &mut out), FraclapStatus::DomainError);
        assert_eq!(
            fraclap_ln_gamma(1.0, ptr::null_mut()),
            FraclapStatus::NullPointer
        );

        assert_eq!(fraclap_gamma_ratio(0.5, 1.5, &mut out), FraclapStatus::Ok);
        assert!((out - 2.0).abs() < 1e-13);

        assert_eq!(fraclap_bessel_i_scaled(0, 0.0, &mut out), FraclapStatus::Ok);
        assert_eq!(out, 1.0);
        assert_eq!(
            fraclap_bessel_i_scaled(0, -1.0, &mut out),
            FraclapStatus::DomainError
        );

        assert_eq!(fraclap_kernel_ks(0.5, 1, &mut out), FraclapStatus::Ok);
        assert!((out - 4.0 / (3.0 * PI)).abs() < 1e-13);
        assert_eq!(
            fraclap_kernel_ks(1.5, 1, &mut out),
            FraclapStatus::DomainError
        );

        assert_eq!(fraclap_sigma_s(0.5, &mut out), FraclapStatus::Ok);
        assert!((out - 4.0 / PI).abs() < 1e-13);

        assert_eq!(
            fraclap_gauss_2f1(0.7, 1.1, 1.1, 0.3, &mut out),
            FraclapStatus::Ok
        );
        assert!((out - (1.0f64 - 0.3).powf(-0.7)).abs() < 1e-11);

        // Divergent parameter set: b1+b2-a1-a2-a3 < 0.
        assert_eq!(
            fraclap_hyp_3f2_unit(1.0, 1.0, 1.0, 1.0, 1.0, &mut out),
            FraclapStatus::DomainError
        );

        let mut center = 0.0;
        assert_eq!(
            fraclap_kminus2d_center(0.25, &mut center),
            FraclapStatus::Ok
        );
        assert!(center > 0.0);
    }
}

#[test]
fn table_lifecycle() {
    unsafe {
        let mut table: *mut FraclapKernelTable = ptr::null_mut();
        let st = fraclap_table_1d_new(0.5, 16, FraclapKernelSource::ClosedForm, 0, &mut table);
        assert_eq!(st, FraclapStatus::Ok);
        assert_eq!(fraclap_table_1d_radius(table), 16);
        let mut v = 0.0;
        assert_eq!(fraclap_table_1d_value(table, -1, &mut v), FraclapStatus::Ok);
        assert!((v - 4.0 / (3.0 * PI)).abs() < 1e-13);
        assert_eq!(
            fraclap_table_1d_value(table, 17, &mut v),
            FraclapStatus::DomainError
        );
        fraclap_table_1d_free(table);
        fraclap_table_1d_free(ptr::null_mut());

        let mut bad: *mut FraclapKernelTable = ptr::null_mut();
        assert_eq!(
            fraclap_table_1d_new(2.0, 16, FraclapKernelSource::ClosedForm, 0, &mut bad),
            FraclapStatus::DomainError
        );

        let mut t2: *mut FraclapKernel2DTable = ptr::null_mut();
        assert_eq!(
            fraclap_table_2d_new(-0.25, 6, 3, &mut t2),
            FraclapStatus::Ok
        );
        let mut center = 0.0;
        assert_eq!(
            fraclap_table_2d_value(t2, 0, 0, &mut center),
            FraclapStatus::Ok
        );
        assert!(center > 0.0);
        fraclap_table_2d_free(t2);
    }
}

extern "C" fn impulse_cb(j: i64, _ctx: *mut c_void) -> f64 {
    if j == 0 {
        1.0
    } else {
        0.0
    }
}

extern "C" fn scaled_cb(j: i64, ctx: *mut c_void) -> f64 {
    let scale = unsafe { *(ctx as *const f64) };
    if j.abs() <= 4 {
        scale / (1.0 + (j * j) as f64)
    } else {
        0.0
    }
}

#[test]
fn apply_through_callbacks() {
    unsafe {
        // Impulse at the origin reproduces h^{-2s}·Σ_s with exact tails.
        let h = 0.5f64;
        let s = 0.5f64;
        let mut out = [0.0f64; 1];
        let st = fraclap_apply_frlap_1d(
            s,
            Some(impulse_cb),
            ptr::null_mut(),
            0,
            h,
            0,
            0,
            16,
            FraclapTailMode::Zero,
            0,
            out.as_mut_ptr(),
            1,
        );
        assert_eq!(st, FraclapStatus::Ok);
        let want = h.powf(-2.0 * s) * 4.0 / PI;
        assert!((out[0] - want).abs() < 1e-12 * want, "{} vs {want}", out[0]);

        // Context pointer carries state into the callback.
        let scale = 2.5f64;
        let mut grid = [0.0f64; 5];
        let st = fraclap_apply_frint_1d(
            0.25,
            Some(scaled_cb),
            &scale as *const f64 as *mut c_void,
            4,
            0.1,
            -2,
            2,
            12,
            FraclapTailMode::Zero,
            0,
            grid.as_mut_ptr(),
            5,
        );
        assert_eq!(st, FraclapStatus::Ok);
        assert!(grid.iter().all(|v| v.is_finite() && *v > 0.0));

        // Length mismatches are configuration errors, not UB.
        let st = fraclap_apply_frlap_1d(
            s,
            Some(impulse_cb),
            ptr::null_mut(),
            0,
            h,
            0,
            3,
            16,
            FraclapTailMode::Ignore,
            0,
            grid.as_mut_ptr(),
            5,
        );
        assert_eq!(st, FraclapStatus::ConfigError);
        let st = fraclap_apply_frlap_1d(
            s,
            None,
            ptr::null_mut(),
            0,
            h,
            0,
            0,
            16,
            FraclapTailMode::Ignore,
            0,
            out.as_mut_ptr(),
            1,
        );
        assert_eq!(st, FraclapStatus::NullPointer);
    }
}

#[test]
fn heat_through_callbacks() {
    unsafe {
        let mut out = [0.0f64; 17];
        let st = fraclap_heat_apply_1d(
            0.2,
            0,
            Some(impulse_cb),
            ptr::null_mut(),
            0,
            0.5,
            -8,
            8,
            out.as_mut_ptr(),
            17,
        );
        assert_eq!(st, FraclapStatus::Ok);
        // Positivity and near-conservation on a window that covers the spread.
        assert!(out.iter().all(|v| *v >= 0.0));
        let mass: f64 = out.iter().sum();
        assert!((mass - 1.0).abs() < 1e-6, "{mass}");

        let st = fraclap_heat_apply_1d(
            -0.5,
            0,
            Some(impulse_cb),
            ptr::null_mut(),
            0,
            0.5,
            -8,
            8,
            out.as_mut_ptr(),
            17,
        );
        assert_eq!(st, FraclapStatus::DomainError);
    }
}

#[test]
fn header_is_generated() {
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("fraclap.h");
    let text = std::fs::read_to_string(header).expect("cbindgen header present");
    for symbol in [
        "fraclap_kernel_ks",
        "fraclap_apply_frlap_1d",
        "FraclapStatus",
        "FraclapTailMode",
        "fraclap_table_1d_new",
    ] {
        assert!(text.contains(symbol), "header lacks {symbol}");
    }
}
