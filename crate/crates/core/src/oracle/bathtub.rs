//! Linear objectives over `{m <= f <= M, mass 2 pi s}` on a uniform grid.
//!
//! The solution fills the cells with the largest weights up to `M` and leaves
//! the rest at `m`, with one fractional cell absorbing the leftover mass.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::params::{RobinParams, SourceClass};
use crate::solve::check_on_rod;
use crate::source::{uniform_breakpoints, StepSource};

/// Per-cell weights `w_k` on a uniform partition of the rod, so that the
/// objective is `sum_k w_k f_k dx`.
#[derive(Debug, Clone, PartialEq)]
pub struct CellKernel {
    weights: Vec<f64>,
}

/// `\int G(x0, y) dy` as a function of `y`.
fn green_antiderivative(c: f64, x0: f64, y: f64) -> f64 {
    let d = y - x0;
    -0.25 * c * x0 * y * y - 0.25 * d.signum() * d * d + 0.5 * y / c
}

impl CellKernel {
    pub fn from_weights(weights: Vec<f64>) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::InvalidParameter {
                name: "n_cells",
                value: weights.len() as f64,
                reason: "must be at least 2",
            });
        }
        Ok(Self { weights })
    }

    pub fn constant(w: f64, n_cells: usize) -> Result<Self> {
        Self::from_weights(vec![w; n_cells])
    }

    /// Cell averages of `G(x0, .)`; the objective is then exactly `u_f(x0)`.
    pub fn point(params: &RobinParams, x0: f64, n_cells: usize) -> Result<Self> {
        let x0 = check_on_rod("x0", x0)?;
        let c = params.c_alpha();
        Self::from_weights(cell_averages(n_cells, |y| green_antiderivative(c, x0, y)))
    }

    /// Cell averages of `G(x0, .) - G(-pi, .)`; the objective is
    /// `u_f(x0) - u_f(-pi)`.
    pub fn edge_gap(params: &RobinParams, x0: f64, n_cells: usize) -> Result<Self> {
        let x0 = check_on_rod("x0", x0)?;
        let c = params.c_alpha();
        Self::from_weights(cell_averages(n_cells, |y| {
            green_antiderivative(c, x0, y) - green_antiderivative(c, -PI, y)
        }))
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn n_cells(&self) -> usize {
        self.weights.len()
    }

    fn negated(&self) -> Self {
        Self {
            weights: self.weights.iter().map(|w| -w).collect(),
        }
    }
}

fn cell_averages(n: usize, antiderivative: impl Fn(f64) -> f64) -> Vec<f64> {
    let t = uniform_breakpoints(n.max(1));
    t.windows(2)
        .map(|w| (antiderivative(w[1]) - antiderivative(w[0])) / (w[1] - w[0]))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Bathtub {
    pub value: f64,
    pub source: StepSource,
    /// Cells strictly between `m` and `M`; at most one.
    pub fractional_cells: usize,
}

/// Maximizes `sum_k w_k f_k dx` over the class restricted to the kernel's grid.
/// Ties between equal weights go to the lower cell index.
pub fn bathtub_max(cls: &SourceClass, kernel: &CellKernel) -> Result<Bathtub> {
    let n = kernel.n_cells();
    let dx = 2.0 * PI / n as f64;
    let (m, top) = (cls.ground(), cls.top());
    let mut extra = cls.mass() - 2.0 * PI * m;
    let capacity = (top - m) * dx;
    if extra < 0.0 || extra > capacity * n as f64 * (1.0 + 1e-12) {
        return Err(Error::Infeasible(format!(
            "mass {} outside [{}, {}]",
            cls.mass(),
            2.0 * PI * m,
            2.0 * PI * top
        )));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| kernel.weights[j].total_cmp(&kernel.weights[i]));

    let mut values = vec![m; n];
    for &k in &order {
        if extra <= 0.0 {
            break;
        }
        if extra >= capacity {
            values[k] = top;
            extra -= capacity;
        } else {
            values[k] = m + extra / dx;
            extra = 0.0;
        }
    }

    let value = kernel
        .weights
        .iter()
        .zip(&values)
        .map(|(w, f)| w * f)
        .sum::<f64>()
        * dx;
    let fractional_cells = values.iter().filter(|&&v| v > m && v < top).count();
    Ok(Bathtub {
        value,
        source: StepSource::uniform(values)?,
        fractional_cells,
    })
}

/// Minimizing counterpart of [`bathtub_max`].
pub fn bathtub_min(cls: &SourceClass, kernel: &CellKernel) -> Result<Bathtub> {
    let mut b = bathtub_max(cls, &kernel.negated())?;
    b.value = -b.value;
    Ok(b)
}

/// Shortfall tolerated between a bathtub optimum on `n_cells` cells and the
/// continuum bound.
pub fn bathtub_allowance(n_cells: usize) -> f64 {
    10.0 / n_cells as f64
}
