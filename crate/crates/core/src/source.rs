//! Piecewise-constant heat sources on the rod `[-pi, pi]`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::SourceClass;
use crate::DOMAIN_SLACK;

/// A heat source that is constant on each cell `[t_{k-1}, t_k]`.
///
/// Cell values are absolute densities (any baseline is folded in).
/// Zero-width cells are allowed and carry no mass.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawStepSource")]
pub struct StepSource {
    breakpoints: Vec<f64>,
    values: Vec<f64>,
}

#[derive(Deserialize)]
struct RawStepSource {
    breakpoints: Vec<f64>,
    values: Vec<f64>,
}

impl TryFrom<RawStepSource> for StepSource {
    type Error = Error;

    fn try_from(raw: RawStepSource) -> Result<Self> {
        StepSource::new(raw.breakpoints, raw.values)
    }
}

impl StepSource {
    /// Validates and pins the endpoints to exactly `-pi` and `pi`.
    pub fn new(mut breakpoints: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidSource("at least one cell is required".into()));
        }
        if breakpoints.len() != values.len() + 1 {
            return Err(Error::InvalidSource(format!(
                "{} breakpoints for {} cells (expected {})",
                breakpoints.len(),
                values.len(),
                values.len() + 1
            )));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidSource(format!("non-finite cell value {v}")));
        }
        if let Some(t) = breakpoints.iter().find(|t| !t.is_finite()) {
            return Err(Error::InvalidSource(format!("non-finite breakpoint {t}")));
        }
        let last = breakpoints.len() - 1;
        if (breakpoints[0] + PI).abs() > DOMAIN_SLACK {
            return Err(Error::InvalidSource(format!(
                "first breakpoint {} must be -pi",
                breakpoints[0]
            )));
        }
        if (breakpoints[last] - PI).abs() > DOMAIN_SLACK {
            return Err(Error::InvalidSource(format!(
                "last breakpoint {} must be pi",
                breakpoints[last]
            )));
        }
        breakpoints[0] = -PI;
        breakpoints[last] = PI;
        for w in breakpoints.windows(2) {
            if w[1] < w[0] {
                return Err(Error::InvalidSource(format!(
                    "breakpoints decrease: {} > {}",
                    w[0], w[1]
                )));
            }
        }
        // interior points are already inside [-pi, pi] once monotone with pinned ends
        Ok(Self {
            breakpoints,
            values,
        })
    }

    /// `f == value` on the whole rod.
    pub fn constant(value: f64) -> Result<Self> {
        Self::new(vec![-PI, PI], vec![value])
    }

    /// Cells of equal width `2 pi / values.len()`.
    pub fn uniform(values: Vec<f64>) -> Result<Self> {
        let n = values.len();
        let breakpoints = uniform_breakpoints(n.max(1));
        Self::new(breakpoints, values)
    }

    /// `base` everywhere except `peak` on `[center - half_length, center + half_length]`.
    ///
    /// Always three cells; the outer ones collapse to zero width when the
    /// interval touches an end of the rod.
    pub fn bang_bang(base: f64, peak: f64, center: f64, half_length: f64) -> Result<Self> {
        let (lo, hi) = interval_bounds(center, half_length)?;
        Self::new(vec![-PI, lo, hi, PI], vec![base, peak, base])
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn n_cells(&self) -> usize {
        self.values.len()
    }

    /// `(lo, hi, value)` for every cell, zero-width ones included.
    pub fn cells(
        &self,
    ) -> impl DoubleEndedIterator<Item = (f64, f64, f64)> + ExactSizeIterator + '_ {
        self.breakpoints
            .windows(2)
            .zip(&self.values)
            .map(|(w, &v)| (w[0], w[1], v))
    }

    pub fn mass(&self) -> f64 {
        self.cells().map(|(lo, hi, v)| v * (hi - lo)).sum()
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_value(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Density at `x`. Right-continuous; `x == pi` belongs to the last
    /// non-degenerate cell.
    pub fn eval(&self, x: f64) -> f64 {
        let n = self.values.len();
        // first breakpoint strictly greater than x, among t_1..t_n
        let idx = self.breakpoints[1..].partition_point(|&t| t <= x);
        if idx >= n {
            // x >= pi: last cell with positive width
            return self
                .cells()
                .rev()
                .find(|(lo, hi, _)| hi > lo)
                .map_or(self.values[n - 1], |(_, _, v)| v);
        }
        self.values[idx]
    }

    /// Checks `m <= f <= M` on every non-degenerate cell and `mass == 2 pi s`.
    pub fn belongs_to(&self, cls: &SourceClass, tol: f64) -> bool {
        let box_ok = self
            .cells()
            .filter(|(lo, hi, _)| hi > lo)
            .all(|(_, _, v)| v >= cls.ground() - tol && v <= cls.top() + tol);
        box_ok && (self.mass() - cls.mass()).abs() <= tol
    }

    /// `x -> f(-x)`.
    pub fn reflect(&self) -> Self {
        Self {
            breakpoints: self.breakpoints.iter().rev().map(|t| -t).collect(),
            values: self.values.iter().rev().copied().collect(),
        }
    }

    /// `x -> M + m - f(x)`; maps `F(m, M, s)` onto `F(m, M, M + m - s)`.
    pub fn dual(&self, cls: &SourceClass) -> Self {
        let total = cls.top() + cls.ground();
        Self {
            breakpoints: self.breakpoints.clone(),
            values: self.values.iter().map(|v| total - v).collect(),
        }
    }

    /// Pointwise `a * f + b * g` on the union of both breakpoint sets.
    pub fn linear_combination(a: f64, f: &StepSource, b: f64, g: &StepSource) -> StepSource {
        let breakpoints = merge_breakpoints(&f.breakpoints, &g.breakpoints);
        let values = breakpoints
            .windows(2)
            .map(|w| {
                let mid = 0.5 * (w[0] + w[1]);
                a * f.eval(mid) + b * g.eval(mid)
            })
            .collect();
        StepSource {
            breakpoints,
            values,
        }
    }

    /// `\int |f - g|` over the rod, exact for step functions.
    pub fn l1_distance(&self, other: &StepSource) -> f64 {
        let breakpoints = merge_breakpoints(&self.breakpoints, &other.breakpoints);
        breakpoints
            .windows(2)
            .map(|w| {
                let mid = 0.5 * (w[0] + w[1]);
                (self.eval(mid) - other.eval(mid)).abs() * (w[1] - w[0])
            })
            .sum()
    }
}

/// Breakpoints `-pi + 2 pi k / n`, `k = 0..=n`, with exact endpoints.
pub fn uniform_breakpoints(n: usize) -> Vec<f64> {
    let mut t: Vec<f64> = (0..=n)
        .map(|k| -PI + 2.0 * PI * k as f64 / n as f64)
        .collect();
    t[0] = -PI;
    t[n] = PI;
    t
}

/// Sorted union, collapsing values closer than rounding noise.
fn merge_breakpoints(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut all: Vec<f64> = a.iter().chain(b).copied().collect();
    all.sort_by(f64::total_cmp);
    all.dedup_by(|x, y| (*x - *y).abs() <= 1e-15);
    if let Some(first) = all.first_mut() {
        *first = -PI;
    }
    if let Some(last) = all.last_mut() {
        *last = PI;
    }
    all
}

/// `[center - half_length, center + half_length]` clamped against rounding,
/// or a domain error when it does not fit in `[-pi, pi]`.
pub(crate) fn interval_bounds(center: f64, half_length: f64) -> Result<(f64, f64)> {
    if !(0.0..=PI + DOMAIN_SLACK).contains(&half_length) {
        return Err(Error::Domain {
            name: "half_length",
            value: half_length,
            range: "[0, pi]",
        });
    }
    let lo = center - half_length;
    let hi = center + half_length;
    if lo < -PI - DOMAIN_SLACK {
        return Err(Error::Domain {
            name: "center - half_length",
            value: lo,
            range: "[-pi, pi]",
        });
    }
    if hi > PI + DOMAIN_SLACK {
        return Err(Error::Domain {
            name: "center + half_length",
            value: hi,
            range: "[-pi, pi]",
        });
    }
    Ok((lo.max(-PI), hi.min(PI)))
}

/// `delta + chi_{I(center, half_length)}`: unit density on the interval over
/// a uniform baseline `delta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntervalSource {
    pub center: f64,
    pub half_length: f64,
    pub delta: f64,
}

impl IntervalSource {
    pub fn new(center: f64, half_length: f64, delta: f64) -> Result<Self> {
        if !(delta >= 0.0 && delta.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "delta",
                value: delta,
                reason: "must be finite and non-negative",
            });
        }
        interval_bounds(center, half_length)?;
        Ok(Self {
            center,
            half_length,
            delta,
        })
    }

    pub fn to_step_source(&self) -> StepSource {
        StepSource::bang_bang(self.delta, self.delta + 1.0, self.center, self.half_length)
            .expect("interval validated on construction")
    }
}

/// Anything that can be evaluated as a density on the rod.
pub trait HeatDensity {
    fn density(&self, x: f64) -> f64;

    /// Minimum over `[lo, hi]`. The default samples 32 equally spaced points,
    /// endpoints included, so it is approximate for densities with an
    /// interior dip inside the cell.
    fn cell_min(&self, lo: f64, hi: f64) -> f64 {
        const SAMPLES: usize = 32;
        (0..SAMPLES)
            .map(|j| self.density(lo + (hi - lo) * j as f64 / (SAMPLES - 1) as f64))
            .fold(f64::INFINITY, f64::min)
    }
}

impl<F: Fn(f64) -> f64> HeatDensity for F {
    fn density(&self, x: f64) -> f64 {
        self(x)
    }
}

impl HeatDensity for StepSource {
    fn density(&self, x: f64) -> f64 {
        self.eval(x)
    }

    /// Exact essential infimum over the open cell.
    fn cell_min(&self, lo: f64, hi: f64) -> f64 {
        self.cells()
            .filter(|&(a, b, _)| b > a && a.max(lo) < b.min(hi))
            .map(|(_, _, v)| v)
            .fold(f64::INFINITY, f64::min)
    }
}
