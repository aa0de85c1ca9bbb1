//! Finite index windows carrying the mesh size.

use serde::Serialize;

use crate::error::{Error, Result};

/// Inclusive 1D index window on the mesh `{h·(j + offset/2)}`.
///
/// The half-cell offset shifts only the *physical* coordinates used when
/// restricting continuous functions and labeling output; operators act in
/// index space and never see it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Window1d {
    pub h: f64,
    pub j_min: i64,
    pub j_max: i64,
    /// Half-cell offset: coordinates become `(j + 1/2)·h`.
    pub offset: bool,
}

impl Window1d {
    pub fn new(h: f64, j_min: i64, j_max: i64) -> Result<Self> {
        if !(h > 0.0) {
            return Err(Error::Domain(format!(
                "mesh size must be positive, got {h}"
            )));
        }
        if j_min > j_max {
            return Err(Error::Domain(format!(
                "empty window: j_min={j_min} > j_max={j_max}"
            )));
        }
        Ok(Window1d {
            h,
            j_min,
            j_max,
            offset: false,
        })
    }

    pub fn with_offset(mut self) -> Self {
        self.offset = true;
        self
    }

    /// Symmetric window `[-n, n]`.
    pub fn symmetric(h: f64, n: i64) -> Result<Self> {
        Self::new(h, -n, n)
    }

    pub fn len(&self) -> usize {
        (self.j_max - self.j_min + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn indices(&self) -> impl Iterator<Item = i64> + '_ {
        self.j_min..=self.j_max
    }

    /// Physical coordinate of index `j`.
    pub fn x(&self, j: i64) -> f64 {
        if self.offset {
            (j as f64 + 0.5) * self.h
        } else {
            j as f64 * self.h
        }
    }

    /// Largest `|j|` in the window.
    pub fn max_abs_index(&self) -> i64 {
        self.j_min.abs().max(self.j_max.abs())
    }
}

/// Inclusive 2D index window; per-axis half-cell offsets.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Window2d {
    pub h: f64,
    pub j1_min: i64,
    pub j1_max: i64,
    pub j2_min: i64,
    pub j2_max: i64,
    pub offset1: bool,
    pub offset2: bool,
}

impl Window2d {
    pub fn new(h: f64, j1: (i64, i64), j2: (i64, i64)) -> Result<Self> {
        if !(h > 0.0) {
            return Err(Error::Domain(format!(
                "mesh size must be positive, got {h}"
            )));
        }
        if j1.0 > j1.1 || j2.0 > j2.1 {
            return Err(Error::Domain("empty 2D window".into()));
        }
        Ok(Window2d {
            h,
            j1_min: j1.0,
            j1_max: j1.1,
            j2_min: j2.0,
            j2_max: j2.1,
            offset1: false,
            offset2: false,
        })
    }

    pub fn symmetric(h: f64, n: i64) -> Result<Self> {
        Self::new(h, (-n, n), (-n, n))
    }

    /// Half-cell offset along both axes.
    pub fn with_offset(mut self) -> Self {
        self.offset1 = true;
        self.offset2 = true;
        self
    }

    pub fn n1(&self) -> usize {
        (self.j1_max - self.j1_min + 1) as usize
    }

    pub fn n2(&self) -> usize {
        (self.j2_max - self.j2_min + 1) as usize
    }

    pub fn len(&self) -> usize {
        self.n1() * self.n2()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn x(&self, j1: i64) -> f64 {
        if self.offset1 {
            (j1 as f64 + 0.5) * self.h
        } else {
            j1 as f64 * self.h
        }
    }

    pub fn y(&self, j2: i64) -> f64 {
        if self.offset2 {
            (j2 as f64 + 0.5) * self.h
        } else {
            j2 as f64 * self.h
        }
    }

    pub fn max_abs_index(&self) -> i64 {
        self.j1_min
            .abs()
            .max(self.j1_max.abs())
            .max(self.j2_min.abs())
            .max(self.j2_max.abs())
    }
}
