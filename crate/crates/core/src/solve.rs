//! Solution operator of the Robin problem
//! `-u'' = f` on `(-pi, pi)`, `-u'(-pi) + alpha u(-pi) = u'(pi) + alpha u(pi) = 0`.
//!
//! For step sources the solution is assembled exactly as a piecewise
//! quadratic. [`solve_quadrature`] integrates the Green's function directly
//! and is kept independent of that assembly so the two can check each other.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::params::RobinParams;
use crate::piecewise::{PiecewiseQuadratic, Segment};
use crate::source::{interval_bounds, StepSource};
use crate::DOMAIN_SLACK;

pub(crate) fn check_on_rod(name: &'static str, x: f64) -> Result<f64> {
    if x.is_finite() && x.abs() <= PI + DOMAIN_SLACK {
        Ok(x.clamp(-PI, PI))
    } else {
        Err(Error::Domain {
            name,
            value: x,
            range: "[-pi, pi]",
        })
    }
}

/// Green's function `G(x, y) = -c xy / 2 - |x - y| / 2 + 1 / (2c)`.
pub fn green(params: &RobinParams, x: f64, y: f64) -> Result<f64> {
    let x = check_on_rod("x", x)?;
    let y = check_on_rod("y", y)?;
    Ok(green_unchecked(params.c_alpha(), x, y))
}

#[inline]
pub(crate) fn green_unchecked(c: f64, x: f64, y: f64) -> f64 {
    -0.5 * c * x * y - 0.5 * (x - y).abs() + 0.5 / c
}

/// `max G` over `[-pi, pi]^2`, attained at `x = y = 0`.
pub fn green_max(params: &RobinParams) -> f64 {
    0.5 / params.c_alpha()
}

/// Temperature for the unit source `f = 1`: `-x^2/2 + pi/alpha + pi^2/2`.
pub fn eta(params: &RobinParams, x: f64) -> Result<f64> {
    let x = check_on_rod("x", x)?;
    Ok(eta_unchecked(params, x))
}

#[inline]
pub(crate) fn eta_unchecked(params: &RobinParams, x: f64) -> f64 {
    -0.5 * x * x + PI / params.alpha() + 0.5 * PI * PI
}

/// [`eta`] as a one-segment [`PiecewiseQuadratic`].
pub fn eta_solution(params: &RobinParams) -> PiecewiseQuadratic {
    PiecewiseQuadratic::from_parts([Segment {
        lo: -PI,
        hi: PI,
        q2: -0.5,
        q1: 0.0,
        q0: PI / params.alpha() + 0.5 * PI * PI,
    }])
}

/// Solution for the unit source on `[a - l, a + l]`: linear to the left,
/// a downward parabola over the interval, linear to the right.
pub fn solve_interval(params: &RobinParams, a: f64, l: f64) -> Result<PiecewiseQuadratic> {
    if l.is_nan() || l <= 0.0 {
        return Err(Error::Domain {
            name: "l",
            value: l,
            range: "(0, pi]",
        });
    }
    let (lo, hi) = interval_bounds(a, l)?;
    let c = params.c_alpha();
    let left = Segment {
        lo: -PI,
        hi: lo,
        q2: 0.0,
        q1: l * (1.0 - a * c),
        q0: l * (1.0 / c - a),
    };
    let middle = Segment {
        lo,
        hi,
        q2: -0.5,
        q1: a * (1.0 - l * c),
        q0: l / c - 0.5 * (a * a + l * l),
    };
    let right = Segment {
        lo: hi,
        hi: PI,
        q2: 0.0,
        q1: -l * (1.0 + a * c),
        q0: l * (1.0 / c + a),
    };
    Ok(PiecewiseQuadratic::from_parts([left, middle, right]))
}

/// Exact solution for a step source, one segment per non-empty cell.
///
/// On cell `j`, cells to its left act through the right branch of the
/// single-interval solution, cells to its right through the left branch.
pub fn solve_step(params: &RobinParams, f: &StepSource) -> PiecewiseQuadratic {
    let c = params.c_alpha();
    let cells: Vec<(f64, f64, f64, f64, f64)> = f
        .cells()
        .filter(|(lo, hi, _)| hi > lo)
        .map(|(lo, hi, v)| {
            let a = 0.5 * (lo + hi);
            let l = 0.5 * (hi - lo);
            (lo, hi, v, a, l)
        })
        .collect();

    // suffix sums of v*l and v*l*a over cells strictly to the right
    let mut right_len = 0.0;
    let mut right_moment = 0.0;
    for &(_, _, v, a, l) in &cells {
        right_len += v * l;
        right_moment += v * l * a;
    }
    let mut left_len = 0.0;
    let mut left_moment = 0.0;

    let mut segments = Vec::with_capacity(cells.len());
    for &(lo, hi, v, a, l) in &cells {
        right_len -= v * l;
        right_moment -= v * l * a;
        let q2 = -0.5 * v;
        let q1 =
            v * a * (1.0 - l * c) - (left_len + c * left_moment) + (right_len - c * right_moment);
        let q0 = v * (l / c - 0.5 * (a * a + l * l))
            + (left_len / c + left_moment)
            + (right_len / c - right_moment);
        segments.push(Segment { lo, hi, q2, q1, q0 });
        left_len += v * l;
        left_moment += v * l * a;
    }
    if segments.is_empty() {
        // only reachable through a source made entirely of empty cells
        segments.push(Segment {
            lo: -PI,
            hi: PI,
            q2: 0.0,
            q1: 0.0,
            q0: 0.0,
        });
    }
    PiecewiseQuadratic::from_parts(segments)
}

/// `u_f(x)` by direct integration of `G(x, y) f(y)`.
///
/// Cells are split at `x`, so the integrand is linear on every piece and
/// Simpson's rule is exact up to rounding.
pub fn solve_quadrature(params: &RobinParams, f: &StepSource, x: f64) -> Result<f64> {
    let x = check_on_rod("x", x)?;
    let c = params.c_alpha();
    let simpson = |lo: f64, hi: f64| {
        let mid = 0.5 * (lo + hi);
        (hi - lo) / 6.0
            * (green_unchecked(c, x, lo)
                + 4.0 * green_unchecked(c, x, mid)
                + green_unchecked(c, x, hi))
    };
    let mut total = 0.0;
    for (lo, hi, v) in f.cells() {
        if hi <= lo || v == 0.0 {
            continue;
        }
        let integral = if lo < x && x < hi {
            simpson(lo, x) + simpson(x, hi)
        } else {
            simpson(lo, hi)
        };
        total += v * integral;
    }
    Ok(total)
}
