/* C ABI for the fraclap fractional discrete Laplacian library. */

#ifndef FRACLAP_H
#define FRACLAP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Kernel-source selector for table construction.
 */
typedef enum FraclapKernelSource {
  FRACLAP_KERNEL_SOURCE_CLOSED_FORM = 0,
  FRACLAP_KERNEL_SOURCE_QUADRATURE = 1,
  FRACLAP_KERNEL_SOURCE_ASYMPTOTIC = 2,
  /**
   * Exact/quadrature up to `crossover`, asymptotic beyond.
   */
  FRACLAP_KERNEL_SOURCE_HYBRID = 3,
} FraclapKernelSource;

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum FraclapStatus {
  FRACLAP_STATUS_OK = 0,
  /**
   * Argument outside the mathematical domain.
   */
  FRACLAP_STATUS_DOMAIN_ERROR = 1,
  /**
   * Series or quadrature failed to converge.
   */
  FRACLAP_STATUS_CONVERGENCE_ERROR = 2,
  /**
   * Inconsistent configuration (radii, tail modes, windows).
   */
  FRACLAP_STATUS_CONFIG_ERROR = 3,
  FRACLAP_STATUS_NULL_POINTER = 4,
  FRACLAP_STATUS_INTERNAL_PANIC = 5,
} FraclapStatus;

/**
 * Tail handling beyond the truncation radius.
 */
typedef enum FraclapTailMode {
  /**
   * Vanishing (or constant) far field; `support_radius` must describe the
   * callback truthfully when nonnegative.
   */
  FRACLAP_TAIL_MODE_ZERO = 0,
  /**
   * Plain truncation: diagonal mass term kept, far samples dropped.
   */
  FRACLAP_TAIL_MODE_IGNORE = 1,
  /**
   * Extend with the asymptotic kernel to `sampled_radius`.
   */
  FRACLAP_TAIL_MODE_SAMPLED = 2,
} FraclapTailMode;

/**
 * Opaque 2D kernel table handle.
 */
typedef struct FraclapKernel2DTable FraclapKernel2DTable;

/**
 * Opaque 1D kernel table handle.
 */
typedef struct FraclapKernelTable FraclapKernelTable;

/**
 * 1D lattice function callback: evaluated at arbitrary indices, possibly
 * concurrently.
 */
typedef double (*FraclapSampler1d)(int64_t j, void *ctx);

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a NUL-terminated static string.
 */
const char *fraclap_version(void);

/**
 * `ln Γ(x)` for `x > 0`.
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_ln_gamma(double x, double *out);

/**
 * Overflow-safe `Γ(a)/Γ(b)` for positive arguments.
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_gamma_ratio(double a, double b, double *out);

/**
 * Exponentially scaled modified Bessel function `e^{-t} I_k(t)`, `t ≥ 0`.
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_bessel_i_scaled(int64_t k, double t, double *out);

/**
 * Gauss hypergeometric `₂F₁(a,b;c;z)` on `z ∈ [0,1]`.
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_gauss_2f1(double a, double b, double c, double z, double *out);

/**
 * `₃F₂(a1,a2,a3;b1,b2;1)`.
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_hyp_3f2_unit(double a1,
                                        double a2,
                                        double a3,
                                        double b1,
                                        double b2,
                                        double *out);

/**
 * Normalization constant `c_s` of the 1D Laplacian-power kernel.
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_c_s(double s, double *out);

/**
 * Total kernel mass `Σ_s`.
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_sigma_s(double s, double *out);

/**
 * 1D kernel `K_s(m)` of `(-Δ_h)^s`.
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_kernel_ks(double s, int64_t m, double *out);

/**
 * 1D kernel `K_{-s}(m)` of `(-Δ_h)^{-s}`, `s ∈ (0,1/2)`.
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_kernel_kminus(double s, int64_t m, double *out);

/**
 * Semigroup-quadrature oracle for `K_s(m)`, `m ≠ 0`.
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_kernel_ks_oracle(double s, int64_t m, double *out);

/**
 * Mellin leading term of the 2D kernel at `(m1, m2) ≠ (0,0)`; the sign of
 * `s_signed` selects the Laplacian (+) or integral (-) power.
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_kernel2d_asymptotic(double s_signed,
                                               int64_t m1,
                                               int64_t m2,
                                               double *out);

/**
 * `K_{-s}(0,0) = 4^{-s}·₃F₂(1/2,(1+s)/2,s/2;1,1;1)`.
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_kminus2d_center(double s, double *out);

/**
 * Builds a 1D kernel table for the signed order; `crossover` is read only
 * by the hybrid source.
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_table_1d_new(double s_signed,
                                        int64_t radius,
                                        enum FraclapKernelSource source,
                                        int64_t crossover,
                                        struct FraclapKernelTable **out);

/**
 * Table value `K(m)`; `m` must lie within the radius.
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_table_1d_value(const struct FraclapKernelTable *table,
                                          int64_t m,
                                          double *out);

/**
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
int64_t fraclap_table_1d_radius(const struct FraclapKernelTable *table);

/**
 * Releases a 1D table handle. A null pointer is allowed.
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
void fraclap_table_1d_free(struct FraclapKernelTable *table);

/**
 * Builds a hybrid 2D table (quadrature to `crossover`, asymptotic beyond).
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_table_2d_new(double s_signed,
                                        int64_t radius,
                                        int64_t crossover,
                                        struct FraclapKernel2DTable **out);

/**
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_table_2d_value(const struct FraclapKernel2DTable *table,
                                          int64_t m1,
                                          int64_t m2,
                                          double *out);

/**
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
void fraclap_table_2d_free(struct FraclapKernel2DTable *table);

/**
 * Applies `(-Δ_h)^s` (`0 < s < 1`) to the callback function on the index
 * window `[j_min, j_max]`; writes `j_max - j_min + 1` values.
 *
 * `support_radius < 0` means undeclared support; `sampled_radius` is read
 * only by the sampled tail mode.
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_apply_frlap_1d(double s,
                                          FraclapSampler1d sampler,
                                          void *ctx,
                                          int64_t support_radius,
                                          double h,
                                          int64_t j_min,
                                          int64_t j_max,
                                          int64_t radius,
                                          enum FraclapTailMode tail,
                                          int64_t sampled_radius,
                                          double *out,
                                          size_t out_len);

/**
 * Applies `(-Δ_h)^{-s}` (`0 < s < 1/2`); same conventions as the Laplacian
 * entry point.
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_apply_frint_1d(double s,
                                          FraclapSampler1d sampler,
                                          void *ctx,
                                          int64_t support_radius,
                                          double h,
                                          int64_t j_min,
                                          int64_t j_max,
                                          int64_t radius,
                                          enum FraclapTailMode tail,
                                          int64_t sampled_radius,
                                          double *out,
                                          size_t out_len);

/**
 * Evolves the semidiscrete heat semigroup for time `t`; `truncation ≤ 0`
 * selects the automatic kernel cutoff.
 *
 * # Safety
 *
 * Pointer arguments must be valid (and, for tables, created by this
 * library and not yet freed) for the duration of the call.
 */
enum FraclapStatus fraclap_heat_apply_1d(double t,
                                         int64_t truncation,
                                         FraclapSampler1d sampler,
                                         void *ctx,
                                         int64_t support_radius,
                                         double h,
                                         int64_t j_min,
                                         int64_t j_max,
                                         double *out,
                                         size_t out_len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FRACLAP_H */
