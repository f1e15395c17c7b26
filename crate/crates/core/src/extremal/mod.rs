//! Closed-form extremal quantities for single-interval heating and the sharp
//! bounds they yield over a [`SourceClass`](crate::SourceClass).
//!
//! Every quantity here is a function of the Robin parameter and the interval
//! geometry only. Each has a regime threshold in `alpha` below which the
//! optimal interval is pushed against the right end of the rod.

mod edge;
mod gap;
mod point;
mod theorems;

pub use edge::{edge_gap, EdgeGapResult};
pub use gap::{a_zero, alpha_0, gap_h, gap_opt, GapResult};
pub use point::{alpha_m, point_max, PointMaxResult};
pub use theorems::{theorem1, theorem2, theorem3, ExtremalReport, PointBounds};

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::DOMAIN_SLACK;

pub(crate) fn check_half_length(l: f64) -> Result<f64> {
    if l > 0.0 && l < PI {
        Ok(l)
    } else {
        Err(Error::Domain {
            name: "l",
            value: l,
            range: "(0, pi)",
        })
    }
}

pub(crate) fn check_in(
    name: &'static str,
    x: f64,
    lo: f64,
    hi: f64,
    range: &'static str,
) -> Result<f64> {
    if x.is_finite() && x >= lo - DOMAIN_SLACK && x <= hi + DOMAIN_SLACK {
        Ok(x.clamp(lo, hi))
    } else {
        Err(Error::Domain {
            name,
            value: x,
            range,
        })
    }
}
