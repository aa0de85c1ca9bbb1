//! Total lattice functions with declared far-field behavior.

use std::sync::Arc;

/// What the caller guarantees about a sampler away from the origin. The tail
/// handling of the nonlocal operators keys off this.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SupportHint {
    /// Values vanish outside `‖index‖∞ ≤ radius` (enforced structurally).
    Compact { radius: i64 },
    /// `|u(index)| ≲ ‖h·index‖^{-exponent}` for large indices; informative.
    Decay { exponent: f64 },
    /// Nothing declared.
    None,
}

/// A total map `Z → R`, deterministic and safe for concurrent reads.
#[derive(Clone)]
pub struct Sampler1d {
    f: Arc<dyn Fn(i64) -> f64 + Send + Sync>,
    hint: SupportHint,
}

impl Sampler1d {
    pub fn new(hint: SupportHint, f: impl Fn(i64) -> f64 + Send + Sync + 'static) -> Self {
        Sampler1d {
            f: Arc::new(f),
            hint,
        }
    }

    pub fn from_fn(f: impl Fn(i64) -> f64 + Send + Sync + 'static) -> Self {
        Self::new(SupportHint::None, f)
    }

    /// Compactly supported sampler; values outside the radius are clamped to
    /// zero so the declared support is true by construction.
    pub fn compact(radius: i64, f: impl Fn(i64) -> f64 + Send + Sync + 'static) -> Self {
        assert!(radius >= 0);
        Sampler1d {
            f: Arc::new(move |j| if j.abs() <= radius { f(j) } else { 0.0 }),
            hint: SupportHint::Compact { radius },
        }
    }

    /// Unit impulse at the origin.
    pub fn impulse() -> Self {
        Self::compact(0, |_| 1.0)
    }

    /// Identically constant function.
    pub fn constant(c: f64) -> Self {
        Self::new(SupportHint::None, move |_| c)
    }

    /// Precomputes values on `[lo, hi]`, falling back to the closure outside.
    /// Worthwhile when the operator revisits the same far samples for every
    /// output point.
    pub fn memoized(
        lo: i64,
        hi: i64,
        hint: SupportHint,
        f: impl Fn(i64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        assert!(lo <= hi);
        let table: Vec<f64> = (lo..=hi).map(&f).collect();
        Sampler1d {
            f: Arc::new(move |j| {
                if j >= lo && j <= hi {
                    table[(j - lo) as usize]
                } else {
                    f(j)
                }
            }),
            hint,
        }
    }

    #[inline]
    pub fn value(&self, j: i64) -> f64 {
        (self.f)(j)
    }

    pub fn hint(&self) -> SupportHint {
        self.hint
    }

    /// Translate by `k` indices: the result samples `u(j - k)`.
    pub fn shifted(&self, k: i64) -> Self {
        let f = Arc::clone(&self.f);
        let hint = match self.hint {
            SupportHint::Compact { radius } => SupportHint::Compact {
                radius: radius + k.abs(),
            },
            other => other,
        };
        Sampler1d {
            f: Arc::new(move |j| f(j - k)),
            hint,
        }
    }

    /// Forward difference `(u_{j+1} - u_j)/h` as a new sampler.
    pub fn d_plus(&self, h: f64) -> Self {
        let f = Arc::clone(&self.f);
        let hint = match self.hint {
            SupportHint::Compact { radius } => SupportHint::Compact { radius: radius + 1 },
            other => other,
        };
        Sampler1d {
            f: Arc::new(move |j| (f(j + 1) - f(j)) / h),
            hint,
        }
    }

    /// Pointwise linear combination `a·self + b·other`.
    pub fn linear_combination(&self, a: f64, other: &Sampler1d, b: f64) -> Self {
        let fa = Arc::clone(&self.f);
        let fb = Arc::clone(&other.f);
        let hint = match (self.hint, other.hint) {
            (SupportHint::Compact { radius: r1 }, SupportHint::Compact { radius: r2 }) => {
                SupportHint::Compact { radius: r1.max(r2) }
            }
            _ => SupportHint::None,
        };
        Sampler1d {
            f: Arc::new(move |j| a * fa(j) + b * fb(j)),
            hint,
        }
    }
}

/// A total map `Z² → R`, deterministic and safe for concurrent reads.
#[derive(Clone)]
pub struct Sampler2d {
    f: Arc<dyn Fn(i64, i64) -> f64 + Send + Sync>,
    hint: SupportHint,
}

impl Sampler2d {
    pub fn new(hint: SupportHint, f: impl Fn(i64, i64) -> f64 + Send + Sync + 'static) -> Self {
        Sampler2d {
            f: Arc::new(f),
            hint,
        }
    }

    pub fn from_fn(f: impl Fn(i64, i64) -> f64 + Send + Sync + 'static) -> Self {
        Self::new(SupportHint::None, f)
    }

    /// Compact support in the sup-norm: zero outside `max(|j1|,|j2|) ≤ radius`.
    pub fn compact(radius: i64, f: impl Fn(i64, i64) -> f64 + Send + Sync + 'static) -> Self {
        assert!(radius >= 0);
        Sampler2d {
            f: Arc::new(move |j1, j2| {
                if j1.abs().max(j2.abs()) <= radius {
                    f(j1, j2)
                } else {
                    0.0
                }
            }),
            hint: SupportHint::Compact { radius },
        }
    }

    pub fn impulse() -> Self {
        Self::compact(0, |_, _| 1.0)
    }

    pub fn constant(c: f64) -> Self {
        Self::new(SupportHint::None, move |_, _| c)
    }

    /// Precomputes values on the square `max(|j1|,|j2|) ≤ reach`, falling
    /// back to the closure outside. The nonlocal operators revisit every
    /// sample once per output point, which is ruinous for expensive
    /// profiles.
    pub fn memoized_square(
        reach: i64,
        hint: SupportHint,
        f: impl Fn(i64, i64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        assert!(reach >= 0);
        let side = (2 * reach + 1) as usize;
        let mut table = Vec::with_capacity(side * side);
        for j1 in -reach..=reach {
            for j2 in -reach..=reach {
                table.push(f(j1, j2));
            }
        }
        Sampler2d {
            f: Arc::new(move |j1, j2| {
                if j1.abs() <= reach && j2.abs() <= reach {
                    table[((j1 + reach) as usize) * side + (j2 + reach) as usize]
                } else {
                    f(j1, j2)
                }
            }),
            hint,
        }
    }

    #[inline]
    pub fn value(&self, j1: i64, j2: i64) -> f64 {
        (self.f)(j1, j2)
    }

    pub fn hint(&self) -> SupportHint {
        self.hint
    }

    pub fn shifted(&self, k1: i64, k2: i64) -> Self {
        let f = Arc::clone(&self.f);
        let hint = match self.hint {
            SupportHint::Compact { radius } => SupportHint::Compact {
                radius: radius + k1.abs().max(k2.abs()),
            },
            other => other,
        };
        Sampler2d {
            f: Arc::new(move |j1, j2| f(j1 - k1, j2 - k2)),
            hint,
        }
    }
}
