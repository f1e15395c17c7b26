use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{check_half_length, check_in};
use crate::error::Result;
use crate::params::RobinParams;

/// Interval of half-length `l` maximizing `u(x0) - u(-pi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgeGapResult {
    pub a_e: f64,
    pub tau: f64,
    /// `+inf` when `x0 == pi`, zero when `x0 <= pi - 2l`.
    pub alpha_e: f64,
}

/// Maximizes the gap between the temperature at `x0 in [-pi, pi]` and the
/// temperature at the left end over placements of a unit interval source.
pub fn edge_gap(params: &RobinParams, x0: f64, l: f64) -> Result<EdgeGapResult> {
    let x0 = check_in("x0", x0, -PI, PI, "[-pi, pi]")?;
    let l = check_half_length(l)?;
    let c = params.c_alpha();

    let beyond = x0 > PI - 2.0 * l;
    let alpha_e = if !beyond {
        0.0
    } else if x0 >= PI {
        f64::INFINITY
    } else {
        (-PI + 2.0 * l + x0) / ((PI - l) * (PI - x0))
    };

    // E(a) = -a^2/2 + b a - x0^2/2 + pi l - l^2/2 where x0 is heated
    let b = x0 + l - l * c * (PI + x0);
    let tail = -0.5 * x0 * x0 + PI * l - 0.5 * l * l;
    let (a_e, tau) = if beyond && params.alpha() <= alpha_e {
        let a = PI - l;
        (a, -0.5 * a * a + b * a + tail)
    } else {
        (b, 0.5 * b * b + tail)
    };

    Ok(EdgeGapResult { a_e, tau, alpha_e })
}
