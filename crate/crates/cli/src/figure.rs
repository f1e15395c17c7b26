//! Figure data: the maximal gap against `alpha`, the extremal temperature
//! profile, and the gap as a function of the interval center.

use std::f64::consts::PI;

use robin_rod::{gap_h, gap_opt, make_params, solve_step, theorem1, SourceClass};

use crate::CliError;

pub const FIG1A_POINTS: usize = 400;
pub const FIG1B_POINTS: usize = 800;
pub const FIG2_POINTS: usize = 401;
pub const FIG1A_ALPHA_MAX: f64 = 2.0;

/// One `(l, delta, alpha)` family of fig2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Curve {
    pub l: f64,
    pub delta: f64,
    pub alpha: f64,
}

impl Curve {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let nums = parts
            .iter()
            .map(|p| p.parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CliError::Usage(format!("--curve {s:?}: expected three numbers")))?;
        match nums[..] {
            [l, delta, alpha] => Ok(Self { l, delta, alpha }),
            _ => Err(CliError::Usage(format!(
                "--curve {s:?}: expected l,delta,alpha"
            ))),
        }
    }

    pub fn defaults() -> Vec<Self> {
        [0.2, 0.4, 1.0]
            .into_iter()
            .map(|alpha| Self {
                l: PI / 2.0,
                delta: 0.0,
                alpha,
            })
            .collect()
    }
}

/// `(alpha, (M - m) Theta)` for `alpha` in `(0, 2]`.
pub fn fig1a(cls: &SourceClass) -> Result<Vec<(f64, f64)>, CliError> {
    (1..=FIG1A_POINTS)
        .map(|i| {
            let alpha = FIG1A_ALPHA_MAX * i as f64 / FIG1A_POINTS as f64;
            let r = theorem1(&make_params(alpha)?, cls)?;
            Ok((alpha, r.bound))
        })
        .collect()
}

/// Temperature profile of the gap-maximizing source.
pub fn fig1b(alpha: f64, cls: &SourceClass) -> Result<Vec<(f64, f64)>, CliError> {
    let params = make_params(alpha)?;
    let u = solve_step(&params, &theorem1(&params, cls)?.source);
    Ok((0..FIG1B_POINTS)
        .map(|i| {
            let x = if i == FIG1B_POINTS - 1 {
                PI
            } else {
                -PI + 2.0 * PI * i as f64 / (FIG1B_POINTS - 1) as f64
            };
            (x, u.eval(x))
        })
        .collect())
}

/// `(a, H(a))` over `a in [0, pi - l]` for one curve.
pub fn fig2(curve: &Curve) -> Result<Vec<(f64, f64)>, CliError> {
    let params = make_params(curve.alpha)?;
    // validates l and delta up front
    gap_opt(&params, curve.l, curve.delta)?;
    let span = PI - curve.l;
    (0..FIG2_POINTS)
        .map(|i| {
            let a = if i == FIG2_POINTS - 1 {
                span
            } else {
                span * i as f64 / (FIG2_POINTS - 1) as f64
            };
            Ok((a, gap_h(&params, a, curve.l, curve.delta)?))
        })
        .collect()
}

pub fn strictly_decreasing(points: &[(f64, f64)]) -> bool {
    points.windows(2).all(|w| w[1].1 < w[0].1)
}

/// Second differences are non-positive up to `tol`.
pub fn concave(points: &[(f64, f64)], tol: f64) -> bool {
    points.windows(3).all(|w| {
        let (h0, h1) = (w[1].0 - w[0].0, w[2].0 - w[1].0);
        let d0 = (w[1].1 - w[0].1) / h0;
        let d1 = (w[2].1 - w[1].1) / h1;
        d1 <= d0 + tol
    })
}

pub fn min_at_an_end(points: &[(f64, f64)], tol: f64) -> bool {
    let (Some(first), Some(last)) = (points.first(), points.last()) else {
        return false;
    };
    let end_min = first.1.min(last.1);
    points.iter().all(|p| p.1 >= end_min - tol)
}

/// Abscissa of the largest value; leftmost on ties.
pub fn peak(points: &[(f64, f64)]) -> f64 {
    points
        .iter()
        .fold((f64::NAN, f64::NEG_INFINITY), |best, &(x, y)| {
            if y > best.1 {
                (x, y)
            } else {
                best
            }
        })
        .0
}

/// Nondecreasing then nonincreasing, up to `tol`.
pub fn unimodal(points: &[(f64, f64)], tol: f64) -> bool {
    let top = peak(points);
    points.windows(2).all(|w| {
        if w[1].0 <= top {
            w[1].1 >= w[0].1 - tol
        } else {
            w[1].1 <= w[0].1 + tol
        }
    })
}
