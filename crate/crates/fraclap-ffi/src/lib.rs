//! C ABI for the fractional discrete Laplacian library.
//!
//! Conventions:
//!
//! - every fallible call returns a [`FraclapStatus`] and writes its result
//!   through an out pointer;
//! - kernel tables are opaque handles created by `fraclap_table_*_new` and
//!   released with the matching `_free`;
//! - lattice functions cross the boundary as C callbacks
//!   `double (*)(int64_t, void*)` plus a context pointer. The operators
//!   evaluate callbacks from multiple threads, so they must be thread-safe;
//! - panics are caught at the boundary and reported as
//!   `FRACLAP_STATUS_INTERNAL_PANIC`.

use std::ffi::{c_char, c_void};
use std::panic::{catch_unwind, AssertUnwindSafe};

use fraclap::gridops::{
    apply_frint_1d, apply_frlap_1d, heat_apply_1d, HeatConfig, OperatorConfig, Sampler1d,
    SupportHint, TailMode, Window1d,
};
use fraclap::kernels1d::{KernelSource, KernelTable};
use fraclap::kernels2d::Kernel2DTable;
use fraclap::order::FracOrder;
use fraclap::Error;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FraclapStatus {
    Ok = 0,
    /// Argument outside the mathematical domain.
    DomainError = 1,
    /// Series or quadrature failed to converge.
    ConvergenceError = 2,
    /// Inconsistent configuration (radii, tail modes, windows).
    ConfigError = 3,
    NullPointer = 4,
    InternalPanic = 5,
}

fn status_of(e: &Error) -> FraclapStatus {
    match e {
        Error::Domain(_) | Error::Parameter(_) => FraclapStatus::DomainError,
        Error::Convergence(_) | Error::Quadrature { .. } => FraclapStatus::ConvergenceError,
        Error::Config(_) | Error::Truncation(_) | Error::Degenerate(_) => {
            FraclapStatus::ConfigError
        }
        Error::Io(_) | Error::Parse(_) => FraclapStatus::ConfigError,
    }
}

fn guarded<F: FnOnce() -> FraclapStatus>(f: F) -> FraclapStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => FraclapStatus::InternalPanic,
    }
}

/// Writes a scalar result through `out`, mapping errors to statuses.
fn write_result(out: *mut f64, r: fraclap::Result<f64>) -> FraclapStatus {
    if out.is_null() {
        return FraclapStatus::NullPointer;
    }
    match r {
        Ok(v) => {
            unsafe { *out = v };
            FraclapStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Library version as a NUL-terminated static string.
#[no_mangle]
pub extern "C" fn fraclap_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// `ln Γ(x)` for `x > 0`.
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_ln_gamma(x: f64, out: *mut f64) -> FraclapStatus {
    guarded(|| write_result(out, fraclap::specfun::ln_gamma(x)))
}

/// Overflow-safe `Γ(a)/Γ(b)` for positive arguments.
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_gamma_ratio(a: f64, b: f64, out: *mut f64) -> FraclapStatus {
    guarded(|| write_result(out, fraclap::specfun::gamma_ratio(a, b)))
}

/// Exponentially scaled modified Bessel function `e^{-t} I_k(t)`, `t ≥ 0`.
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_bessel_i_scaled(k: i64, t: f64, out: *mut f64) -> FraclapStatus {
    guarded(|| {
        if out.is_null() {
            return FraclapStatus::NullPointer;
        }
        if t < 0.0 || !t.is_finite() {
            return FraclapStatus::DomainError;
        }
        unsafe { *out = fraclap::specfun::bessel_i_scaled(k, t) };
        FraclapStatus::Ok
    })
}

/// Gauss hypergeometric `₂F₁(a,b;c;z)` on `z ∈ [0,1]`.
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_gauss_2f1(
    a: f64,
    b: f64,
    c: f64,
    z: f64,
    out: *mut f64,
) -> FraclapStatus {
    guarded(|| write_result(out, fraclap::specfun::gauss_2f1(a, b, c, z)))
}

/// `₃F₂(a1,a2,a3;b1,b2;1)`.
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_hyp_3f2_unit(
    a1: f64,
    a2: f64,
    a3: f64,
    b1: f64,
    b2: f64,
    out: *mut f64,
) -> FraclapStatus {
    guarded(|| write_result(out, fraclap::specfun::hyp_3f2_unit(a1, a2, a3, b1, b2)))
}

/// Normalization constant `c_s` of the 1D Laplacian-power kernel.
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_c_s(s: f64, out: *mut f64) -> FraclapStatus {
    guarded(|| write_result(out, fraclap::kernels1d::c_s(s)))
}

/// Total kernel mass `Σ_s`.
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_sigma_s(s: f64, out: *mut f64) -> FraclapStatus {
    guarded(|| write_result(out, fraclap::kernels1d::sigma_s(s)))
}

/// 1D kernel `K_s(m)` of `(-Δ_h)^s`.
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_kernel_ks(s: f64, m: i64, out: *mut f64) -> FraclapStatus {
    guarded(|| write_result(out, fraclap::kernels1d::kernel_ks(s, m)))
}

/// 1D kernel `K_{-s}(m)` of `(-Δ_h)^{-s}`, `s ∈ (0,1/2)`.
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_kernel_kminus(s: f64, m: i64, out: *mut f64) -> FraclapStatus {
    guarded(|| write_result(out, fraclap::kernels1d::kernel_kminus(s, m)))
}

/// Semigroup-quadrature oracle for `K_s(m)`, `m ≠ 0`.
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_kernel_ks_oracle(s: f64, m: i64, out: *mut f64) -> FraclapStatus {
    guarded(|| write_result(out, fraclap::kernels1d::kernel_ks_oracle(s, m)))
}

/// Mellin leading term of the 2D kernel at `(m1, m2) ≠ (0,0)`; the sign of
/// `s_signed` selects the Laplacian (+) or integral (-) power.
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_kernel2d_asymptotic(
    s_signed: f64,
    m1: i64,
    m2: i64,
    out: *mut f64,
) -> FraclapStatus {
    guarded(|| {
        let r = FracOrder::new(s_signed)
            .and_then(|o| fraclap::kernels2d::kernel2d_asymptotic(o, m1, m2));
        write_result(out, r)
    })
}

/// `K_{-s}(0,0) = 4^{-s}·₃F₂(1/2,(1+s)/2,s/2;1,1;1)`.
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_kminus2d_center(s: f64, out: *mut f64) -> FraclapStatus {
    guarded(|| write_result(out, fraclap::kernels2d::kminus2d_center(s)))
}

/// Opaque 1D kernel table handle.
pub struct FraclapKernelTable(KernelTable);

/// Opaque 2D kernel table handle.
pub struct FraclapKernel2DTable(Kernel2DTable);

/// Kernel-source selector for table construction.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FraclapKernelSource {
    ClosedForm = 0,
    Quadrature = 1,
    Asymptotic = 2,
    /// Exact/quadrature up to `crossover`, asymptotic beyond.
    Hybrid = 3,
}

fn kernel_source(source: FraclapKernelSource, crossover: i64) -> KernelSource {
    match source {
        FraclapKernelSource::ClosedForm => KernelSource::ClosedForm,
        FraclapKernelSource::Quadrature => KernelSource::Quadrature,
        FraclapKernelSource::Asymptotic => KernelSource::Asymptotic,
        FraclapKernelSource::Hybrid => KernelSource::Hybrid(crossover),
    }
}

/// Builds a 1D kernel table for the signed order; `crossover` is read only
/// by the hybrid source.
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_table_1d_new(
    s_signed: f64,
    radius: i64,
    source: FraclapKernelSource,
    crossover: i64,
    out: *mut *mut FraclapKernelTable,
) -> FraclapStatus {
    guarded(|| {
        if out.is_null() {
            return FraclapStatus::NullPointer;
        }
        match FracOrder::new(s_signed)
            .and_then(|o| KernelTable::build(o, radius, kernel_source(source, crossover)))
        {
            Ok(t) => {
                unsafe { *out = Box::into_raw(Box::new(FraclapKernelTable(t))) };
                FraclapStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Table value `K(m)`; `m` must lie within the radius.
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_table_1d_value(
    table: *const FraclapKernelTable,
    m: i64,
    out: *mut f64,
) -> FraclapStatus {
    guarded(|| {
        if table.is_null() || out.is_null() {
            return FraclapStatus::NullPointer;
        }
        let t = unsafe { &(*table).0 };
        if m.unsigned_abs() as i64 > t.radius() {
            return FraclapStatus::DomainError;
        }
        unsafe { *out = t.value(m) };
        FraclapStatus::Ok
    })
}

///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_table_1d_radius(table: *const FraclapKernelTable) -> i64 {
    if table.is_null() {
        return -1;
    }
    unsafe { &(*table).0 }.radius()
}

/// Releases a 1D table handle. A null pointer is allowed.
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_table_1d_free(table: *mut FraclapKernelTable) {
    if !table.is_null() {
        drop(unsafe { Box::from_raw(table) });
    }
}

/// Builds a hybrid 2D table (quadrature to `crossover`, asymptotic beyond).
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_table_2d_new(
    s_signed: f64,
    radius: i64,
    crossover: i64,
    out: *mut *mut FraclapKernel2DTable,
) -> FraclapStatus {
    guarded(|| {
        if out.is_null() {
            return FraclapStatus::NullPointer;
        }
        match FracOrder::new(s_signed)
            .and_then(|o| Kernel2DTable::build_hybrid(o, radius, crossover))
        {
            Ok(t) => {
                unsafe { *out = Box::into_raw(Box::new(FraclapKernel2DTable(t))) };
                FraclapStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_table_2d_value(
    table: *const FraclapKernel2DTable,
    m1: i64,
    m2: i64,
    out: *mut f64,
) -> FraclapStatus {
    guarded(|| {
        if table.is_null() || out.is_null() {
            return FraclapStatus::NullPointer;
        }
        let t = unsafe { &(*table).0 };
        if m1.unsigned_abs().max(m2.unsigned_abs()) as i64 > t.radius() {
            return FraclapStatus::DomainError;
        }
        unsafe { *out = t.value(m1, m2) };
        FraclapStatus::Ok
    })
}

///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn fraclap_table_2d_free(table: *mut FraclapKernel2DTable) {
    if !table.is_null() {
        drop(unsafe { Box::from_raw(table) });
    }
}

/// 1D lattice function callback: evaluated at arbitrary indices, possibly
/// concurrently.
pub type FraclapSampler1d = Option<extern "C" fn(j: i64, ctx: *mut c_void) -> f64>;

/// Tail handling beyond the truncation radius.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FraclapTailMode {
    /// Vanishing (or constant) far field; `support_radius` must describe the
    /// callback truthfully when nonnegative.
    Zero = 0,
    /// Plain truncation: diagonal mass term kept, far samples dropped.
    Ignore = 1,
    /// Extend with the asymptotic kernel to `sampled_radius`.
    Sampled = 2,
}

struct CallbackCtx(*mut c_void);
// Callers must hand in thread-safe callbacks; the operators fan out over a
// thread pool.
unsafe impl Send for CallbackCtx {}
unsafe impl Sync for CallbackCtx {}

fn sampler_from_callback(
    f: extern "C" fn(i64, *mut c_void) -> f64,
    ctx: *mut c_void,
    support_radius: i64,
) -> Sampler1d {
    let ctx = CallbackCtx(ctx);
    let hint = if support_radius >= 0 {
        SupportHint::Compact {
            radius: support_radius,
        }
    } else {
        SupportHint::None
    };
    // The compact wrapper would clamp to zero; trust the callback instead and
    // attach the hint unclamped. The closure must capture the whole Sync
    // wrapper, not the raw pointer field.
    Sampler1d::new(hint, move |j| {
        let c = &ctx;
        f(j, c.0)
    })
}

#[allow(clippy::too_many_arguments)]
fn apply_1d_common(
    laplacian: bool,
    s: f64,
    sampler: FraclapSampler1d,
    ctx: *mut c_void,
    support_radius: i64,
    h: f64,
    j_min: i64,
    j_max: i64,
    radius: i64,
    tail: FraclapTailMode,
    sampled_radius: i64,
    out: *mut f64,
    out_len: usize,
) -> FraclapStatus {
    let Some(f) = sampler else {
        return FraclapStatus::NullPointer;
    };
    if out.is_null() {
        return FraclapStatus::NullPointer;
    }
    let order = match if laplacian {
        FracOrder::laplacian(s)
    } else {
        FracOrder::integral(s)
    } {
        Ok(o) => o,
        Err(e) => return status_of(&e),
    };
    let w = match Window1d::new(h, j_min, j_max) {
        Ok(w) => w,
        Err(e) => return status_of(&e),
    };
    if out_len != w.len() {
        return FraclapStatus::ConfigError;
    }
    let tail = match tail {
        FraclapTailMode::Zero => TailMode::Zero,
        FraclapTailMode::Ignore => TailMode::Ignore,
        FraclapTailMode::Sampled => TailMode::Sampled(sampled_radius),
    };
    let cfg = OperatorConfig::new(order, radius).with_tail(tail);
    let u = sampler_from_callback(f, ctx, support_radius);
    let result = if laplacian {
        apply_frlap_1d(&u, &w, &cfg)
    } else {
        apply_frint_1d(&u, &w, &cfg)
    };
    match result {
        Ok(grid) => {
            let dst = unsafe { std::slice::from_raw_parts_mut(out, out_len) };
            dst.copy_from_slice(&grid.values);
            FraclapStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Applies `(-Δ_h)^s` (`0 < s < 1`) to the callback function on the index
/// window `[j_min, j_max]`; writes `j_max - j_min + 1` values.
///
/// `support_radius < 0` means undeclared support; `sampled_radius` is read
/// only by the sampled tail mode.
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn fraclap_apply_frlap_1d(
    s: f64,
    sampler: FraclapSampler1d,
    ctx: *mut c_void,
    support_radius: i64,
    h: f64,
    j_min: i64,
    j_max: i64,
    radius: i64,
    tail: FraclapTailMode,
    sampled_radius: i64,
    out: *mut f64,
    out_len: usize,
) -> FraclapStatus {
    guarded(|| {
        apply_1d_common(
            true,
            s,
            sampler,
            ctx,
            support_radius,
            h,
            j_min,
            j_max,
            radius,
            tail,
            sampled_radius,
            out,
            out_len,
        )
    })
}

/// Applies `(-Δ_h)^{-s}` (`0 < s < 1/2`); same conventions as the Laplacian
/// entry point.
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn fraclap_apply_frint_1d(
    s: f64,
    sampler: FraclapSampler1d,
    ctx: *mut c_void,
    support_radius: i64,
    h: f64,
    j_min: i64,
    j_max: i64,
    radius: i64,
    tail: FraclapTailMode,
    sampled_radius: i64,
    out: *mut f64,
    out_len: usize,
) -> FraclapStatus {
    guarded(|| {
        apply_1d_common(
            false,
            s,
            sampler,
            ctx,
            support_radius,
            h,
            j_min,
            j_max,
            radius,
            tail,
            sampled_radius,
            out,
            out_len,
        )
    })
}

/// Evolves the semidiscrete heat semigroup for time `t`; `truncation ≤ 0`
/// selects the automatic kernel cutoff.
///
/// # Safety
///
/// Pointer arguments must be valid (and, for tables, created by this
/// library and not yet freed) for the duration of the call.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn fraclap_heat_apply_1d(
    t: f64,
    truncation: i64,
    sampler: FraclapSampler1d,
    ctx: *mut c_void,
    support_radius: i64,
    h: f64,
    j_min: i64,
    j_max: i64,
    out: *mut f64,
    out_len: usize,
) -> FraclapStatus {
    guarded(|| {
        let Some(f) = sampler else {
            return FraclapStatus::NullPointer;
        };
        if out.is_null() {
            return FraclapStatus::NullPointer;
        }
        let hc = match if truncation <= 0 {
            HeatConfig::auto(t, h)
        } else {
            HeatConfig::new(t, truncation)
        } {
            Ok(hc) => hc,
            Err(e) => return status_of(&e),
        };
        let w = match Window1d::new(h, j_min, j_max) {
            Ok(w) => w,
            Err(e) => return status_of(&e),
        };
        if out_len != w.len() {
            return FraclapStatus::ConfigError;
        }
        let u = sampler_from_callback(f, ctx, support_radius);
        match heat_apply_1d(&u, &w, &hc) {
            Ok(grid) => {
                let dst = unsafe { std::slice::from_raw_parts_mut(out, out_len) };
                dst.copy_from_slice(&grid.values);
                FraclapStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}
