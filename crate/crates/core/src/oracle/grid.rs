use std::f64::consts::PI;

use super::{ArgmaxDescriptor, BoundSense, OracleConfig, OracleVerdict};
use crate::error::Result;
use crate::extremal::gap_opt;
use crate::params::{RobinParams, SourceClass};
use crate::solve::solve_step;
use crate::source::StepSource;

/// Shortfall tolerated by a grid scan of spacing `(pi - l) / (n_grid - 1)`
/// over a concave objective with curvature at most `M - m`.
pub fn grid_allowance(cls: &SourceClass, n_grid: usize) -> f64 {
    let h = (PI - cls.half_length()) / (n_grid.max(2) - 1) as f64;
    cls.spread() * h * h / 8.0
}

/// Scans single-interval sources `m + (M - m) chi_I(a, l)` over centers in
/// `[0, pi - l]` and their mirror images, measuring the temperature gap with
/// the exact solver. Compared against the closed-form maximal gap.
pub fn grid_search_gap(
    params: &RobinParams,
    cls: &SourceClass,
    cfg: &OracleConfig,
    tol: f64,
) -> Result<OracleVerdict> {
    cfg.validate()?;
    let l = cls.half_length();
    let n = cfg.n_grid;
    let span = PI - l;

    let mut best = (f64::NEG_INFINITY, 0.0);
    for mirrored in [false, true] {
        for i in 0..n {
            let mut a = if i == n - 1 {
                span
            } else {
                span * i as f64 / (n - 1) as f64
            };
            if mirrored {
                a = -a;
            }
            let f = StepSource::bang_bang(cls.ground(), cls.top(), a, l)?;
            let osc = solve_step(params, &f).extrema().osc;
            if osc > best.0 {
                best = (osc, a);
            }
        }
    }

    let closed = cls.spread() * gap_opt(params, l, cls.delta())?.theta;
    Ok(OracleVerdict::judge(
        best.0,
        closed,
        BoundSense::Upper,
        grid_allowance(cls, n),
        tol,
        ArgmaxDescriptor::Center(best.1),
    ))
}
