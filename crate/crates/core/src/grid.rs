//! Uniform rectangular sampling of a two-variable amplitude and trapezoid
//! quadrature over the samples.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;

/// Axis-aligned sampling window given by its center and half-widths.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Window {
    pub center: (f64, f64),
    pub half_width: (f64, f64),
}

impl Window {
    pub fn new(center: (f64, f64), half_width: (f64, f64)) -> Self {
        Window { center, half_width }
    }

    /// Square window centered on the origin.
    pub fn square(half_width: f64) -> Self {
        Window::new((0.0, 0.0), (half_width, half_width))
    }

    fn validate(&self) -> Result<()> {
        let finite = [
            self.center.0,
            self.center.1,
            self.half_width.0,
            self.half_width.1,
        ]
        .iter()
        .all(|v| v.is_finite());
        if !finite {
            return Err(Error::DegenerateWindow("non-finite bounds".into()));
        }
        if !(self.half_width.0 > 0.0 && self.half_width.1 > 0.0) {
            return Err(Error::DegenerateWindow(format!(
                "half-widths must be positive, got ({}, {})",
                self.half_width.0, self.half_width.1
            )));
        }
        Ok(())
    }
}

/// Samples on a uniform grid, row-major over the first axis: the value at
/// `(i, j)` lives at `values[i * n.1 + j]` and sits at
/// `origin + (i·spacing.0, j·spacing.1)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Grid2D {
    pub origin: (f64, f64),
    pub spacing: (f64, f64),
    pub n: (usize, usize),
    pub values: Vec<f64>,
}

impl Grid2D {
    pub fn new(
        origin: (f64, f64),
        spacing: (f64, f64),
        n: (usize, usize),
        values: Vec<f64>,
    ) -> Result<Self> {
        if !(spacing.0 > 0.0 && spacing.1 > 0.0) {
            return Err(Error::InvalidGrid("spacing must be positive".into()));
        }
        if n.0 < 2 || n.1 < 2 {
            return Err(Error::InvalidGrid(
                "need at least two points per axis".into(),
            ));
        }
        if values.len() != n.0 * n.1 {
            return Err(Error::InvalidGrid(format!(
                "expected {} values, got {}",
                n.0 * n.1,
                values.len()
            )));
        }
        Ok(Grid2D {
            origin,
            spacing,
            n,
            values,
        })
    }

    pub fn coord(&self, i: usize, j: usize) -> (f64, f64) {
        (
            self.origin.0 + i as f64 * self.spacing.0,
            self.origin.1 + j as f64 * self.spacing.1,
        )
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n.1 + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.n.1..(i + 1) * self.n.1]
    }

    /// Index and value of the largest sample; ties go to the first.
    pub fn argmax(&self) -> ((usize, usize), f64) {
        let (k, v) =
            self.values
                .iter()
                .enumerate()
                .fold((0, f64::NEG_INFINITY), |(bk, bv), (k, &v)| {
                    if v > bv {
                        (k, v)
                    } else {
                        (bk, bv)
                    }
                });
        ((k / self.n.1, k % self.n.1), v)
    }

    /// Trapezoid-rule integral of `weight(a, b, value)` over the grid.
    pub fn integrate<F>(&self, exec: Execution, weight: F) -> f64
    where
        F: Fn(f64, f64, f64) -> f64 + Sync + Send,
    {
        let (n0, n1) = self.n;
        let rows = exec.map_indices(n0, |i| {
            let mut s = 0.0;
            for j in 0..n1 {
                let (a, b) = self.coord(i, j);
                s += trapezoid_weight(j, n1) * weight(a, b, self.get(i, j));
            }
            s
        });
        let total: f64 = rows
            .iter()
            .enumerate()
            .map(|(i, s)| trapezoid_weight(i, n0) * s)
            .sum();
        total * self.spacing.0 * self.spacing.1
    }
}

fn trapezoid_weight(k: usize, n: usize) -> f64 {
    if k == 0 || k + 1 == n {
        0.5
    } else {
        1.0
    }
}

/// Samples `f` on an `n.0 × n.1` grid spanning `window` (edges included).
pub fn sample_grid<F>(f: F, window: &Window, n: (usize, usize)) -> Result<Grid2D>
where
    F: Fn(f64, f64) -> f64 + Sync + Send,
{
    sample_grid_with(Execution::default(), f, window, n)
}

pub fn sample_grid_with<F>(
    exec: Execution,
    f: F,
    window: &Window,
    n: (usize, usize),
) -> Result<Grid2D>
where
    F: Fn(f64, f64) -> f64 + Sync + Send,
{
    window.validate()?;
    if n.0 < 2 || n.1 < 2 {
        return Err(Error::InvalidGrid(
            "need at least two points per axis".into(),
        ));
    }
    let origin = (
        window.center.0 - window.half_width.0,
        window.center.1 - window.half_width.1,
    );
    let spacing = (
        2.0 * window.half_width.0 / (n.0 - 1) as f64,
        2.0 * window.half_width.1 / (n.1 - 1) as f64,
    );
    let rows = exec.map_indices(n.0, |i| {
        let a = origin.0 + i as f64 * spacing.0;
        (0..n.1)
            .map(|j| f(a, origin.1 + j as f64 * spacing.1))
            .collect::<Vec<f64>>()
    });
    Grid2D::new(origin, spacing, n, rows.concat())
}

/// `∫|ψ|²` over the grid by the trapezoid rule.
pub fn norm2(g: &Grid2D) -> f64 {
    norm2_with(Execution::default(), g)
}

pub fn norm2_with(exec: Execution, g: &Grid2D) -> f64 {
    g.integrate(exec, |_, _, v| v * v)
}

/// Normalised second moments of the density `|ψ|²` sampled on the grid:
/// `[[Var a, Cov], [Cov, Var b]]` about the mean.
pub fn second_moments(exec: Execution, g: &Grid2D) -> [[f64; 2]; 2] {
    let norm = g.integrate(exec, |_, _, v| v * v);
    let ma = g.integrate(exec, |a, _, v| a * v * v) / norm;
    let mb = g.integrate(exec, |_, b, v| b * v * v) / norm;
    let vaa = g.integrate(exec, |a, _, v| (a - ma) * (a - ma) * v * v) / norm;
    let vbb = g.integrate(exec, |_, b, v| (b - mb) * (b - mb) * v * v) / norm;
    let vab = g.integrate(exec, |a, b, v| (a - ma) * (b - mb) * v * v) / norm;
    [[vaa, vab], [vab, vbb]]
}
