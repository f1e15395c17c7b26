use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{check_half_length, check_in};
use crate::error::Result;
use crate::params::RobinParams;

/// Interval of half-length `l` that makes the temperature at `x0` largest.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointMaxResult {
    /// Optimal interval center.
    pub a_m: f64,
    /// Largest attainable temperature at `x0` for a unit source of length `2l`.
    pub nu: f64,
    /// Smallest one, attained with the interval against the left end.
    pub mu: f64,
    /// For `alpha <= alpha_m` the optimal interval touches `pi`.
    pub alpha_m: f64,
}

/// Threshold below which the interval maximizing `u(x0)` is pinned to the
/// right end. Zero when `x0 <= pi - l`; `+inf` at `x0 == pi`.
pub fn alpha_m(x0: f64, l: f64) -> f64 {
    let numer = x0 + l - PI;
    if numer <= 0.0 {
        0.0
    } else if x0 >= PI {
        f64::INFINITY
    } else {
        numer / ((PI - l) * (PI - x0))
    }
}

/// Places a unit source of half-length `l` to maximize the temperature at
/// `x0 in [0, pi]`.
pub fn point_max(params: &RobinParams, x0: f64, l: f64) -> Result<PointMaxResult> {
    let x0 = check_in("x0", x0, 0.0, PI, "[0, pi]")?;
    let l = check_half_length(l)?;
    let c = params.c_alpha();
    let alpha = params.alpha();

    let unconstrained = x0 * (1.0 - l * c);
    let (a_m, nu) = if unconstrained < PI - l {
        (
            unconstrained,
            l / c * (1.0 - 0.5 * l * c) * (1.0 - x0 * x0 * c * c),
        )
    } else {
        // pinned against x = pi; the quadratic branch evaluated at a = pi - l
        (
            PI - l,
            -0.5 * (PI - x0).powi(2) + l * (1.0 - c * x0) * (2.0 * PI - l + 1.0 / alpha),
        )
    };

    let mu = if x0 > -PI + 2.0 * l {
        l * (((PI - l) * c - 1.0) * x0 + 1.0 / c + l - PI)
    } else {
        -0.5 * x0 * x0 - (PI - l) * (1.0 - l * c) * x0 - l * l + l * (1.0 / c + PI) - 0.5 * PI * PI
    };

    Ok(PointMaxResult {
        a_m,
        nu,
        mu,
        alpha_m: alpha_m(x0, l),
    })
}
