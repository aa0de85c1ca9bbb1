//! Tail sums of power-law sequences, `Σ_{m>n} m^{-p}`.

/// `Σ_{m=n+1}^∞ m^{-p}` for `p > 1`: a direct block of 10^6 terms summed
/// smallest-first, then the midpoint-rule integral for the rest. The midpoint
/// remainder is exact to `O(p(p+1)/24 · M^{-p-1})`, far below 1e-12 here.
pub fn power_tail_sum(p: f64, n: i64) -> f64 {
    assert!(p > 1.0, "power_tail_sum requires p > 1, got {p}");
    assert!(n >= 0);
    let block_end = n + 1_000_000;
    let mut sum = 0.0f64;
    let mut m = block_end;
    while m > n {
        sum += (m as f64).powf(-p);
        m -= 1;
    }
    sum + (block_end as f64 + 0.5).powf(1.0 - p) / (p - 1.0)
}
