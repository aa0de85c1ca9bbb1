//! Materialized operator output on a window.

use std::io::Write;

use serde::Serialize;

use super::sampler::{Sampler1d, Sampler2d};
use super::window::{Window1d, Window2d};
use crate::error::Result;

/// Values on a 1D window, indexed by lattice position.
#[derive(Clone, Debug, Serialize)]
pub struct Grid1d {
    pub window: Window1d,
    /// `values[j - j_min]`.
    pub values: Vec<f64>,
}

impl Grid1d {
    pub fn new(window: Window1d, values: Vec<f64>) -> Self {
        assert_eq!(values.len(), window.len());
        Grid1d { window, values }
    }

    pub fn value(&self, j: i64) -> f64 {
        self.values[(j - self.window.j_min) as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.window.indices().zip(self.values.iter().copied())
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0f64, |a, v| a.max(v.abs()))
    }

    /// Forward difference `(g_{j+1} - g_j)/h`; the window loses its right
    /// endpoint.
    pub fn d_plus(&self) -> Result<Grid1d> {
        let w = Window1d {
            j_max: self.window.j_max - 1,
            ..self.window
        };
        if w.j_min > w.j_max {
            return Err(crate::error::Error::Domain(
                "window too small for a forward difference".into(),
            ));
        }
        let values = (w.j_min..=w.j_max)
            .map(|j| (self.value(j + 1) - self.value(j)) / self.window.h)
            .collect();
        Ok(Grid1d { window: w, values })
    }

    /// Backward difference `(g_j - g_{j-1})/h`; the window loses its left
    /// endpoint.
    pub fn d_minus(&self) -> Result<Grid1d> {
        let w = Window1d {
            j_min: self.window.j_min + 1,
            ..self.window
        };
        if w.j_min > w.j_max {
            return Err(crate::error::Error::Domain(
                "window too small for a backward difference".into(),
            ));
        }
        let values = (w.j_min..=w.j_max)
            .map(|j| (self.value(j) - self.value(j - 1)) / self.window.h)
            .collect();
        Ok(Grid1d { window: w, values })
    }

    /// Zero-extended view of this grid as a total sampler (compact hint).
    pub fn as_compact_sampler(&self) -> Sampler1d {
        let g = self.clone();
        let radius = g.window.max_abs_index();
        Sampler1d::compact(radius, move |j| {
            if j >= g.window.j_min && j <= g.window.j_max {
                g.value(j)
            } else {
                0.0
            }
        })
    }

    /// Plain CSV: `j,x,value` rows.
    pub fn write_csv(&self, out: &mut dyn Write) -> Result<()> {
        writeln!(out, "j,x,value")?;
        for (j, v) in self.iter() {
            writeln!(out, "{j},{},{v}", self.window.x(j))?;
        }
        Ok(())
    }
}

/// Values on a 2D window, row-major in `j1`.
#[derive(Clone, Debug, Serialize)]
pub struct Grid2d {
    pub window: Window2d,
    /// `values[(j1 - j1_min)·n2 + (j2 - j2_min)]`.
    pub values: Vec<f64>,
}

impl Grid2d {
    pub fn new(window: Window2d, values: Vec<f64>) -> Self {
        assert_eq!(values.len(), window.len());
        Grid2d { window, values }
    }

    pub fn value(&self, j1: i64, j2: i64) -> f64 {
        let n2 = self.window.n2() as i64;
        self.values[((j1 - self.window.j1_min) * n2 + (j2 - self.window.j2_min)) as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64, f64)> + '_ {
        let w = self.window;
        (w.j1_min..=w.j1_max)
            .flat_map(move |j1| (w.j2_min..=w.j2_max).map(move |j2| (j1, j2, self.value(j1, j2))))
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0f64, |a, v| a.max(v.abs()))
    }

    pub fn as_compact_sampler(&self) -> Sampler2d {
        let g = self.clone();
        let radius = g.window.max_abs_index();
        Sampler2d::compact(radius, move |j1, j2| {
            if j1 >= g.window.j1_min
                && j1 <= g.window.j1_max
                && j2 >= g.window.j2_min
                && j2 <= g.window.j2_max
            {
                g.value(j1, j2)
            } else {
                0.0
            }
        })
    }

    /// Plain CSV: `j1,j2,x,y,value` rows.
    pub fn write_csv(&self, out: &mut dyn Write) -> Result<()> {
        writeln!(out, "j1,j2,x,y,value")?;
        for (j1, j2, v) in self.iter() {
            writeln!(
                out,
                "{j1},{j2},{},{},{v}",
                self.window.x(j1),
                self.window.y(j2)
            )?;
        }
        Ok(())
    }
}
