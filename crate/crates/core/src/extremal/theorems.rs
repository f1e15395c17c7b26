use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{check_in, edge_gap, gap_opt, point_max};
use crate::error::Result;
use crate::params::{RobinParams, SourceClass};
use crate::solve::eta_unchecked;
use crate::source::StepSource;

/// A sharp bound together with the source that attains it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub bound: f64,
    pub source: StepSource,
    pub oracle_estimate: Option<f64>,
    /// `bound - oracle_estimate`; non-negative up to tolerance.
    pub gap_to_oracle: Option<f64>,
}

impl ExtremalReport {
    fn new(bound: f64, source: StepSource) -> Self {
        Self {
            bound,
            source,
            oracle_estimate: None,
            gap_to_oracle: None,
        }
    }

    pub fn with_oracle(mut self, estimate: f64) -> Self {
        self.oracle_estimate = Some(estimate);
        self.gap_to_oracle = Some(self.bound - estimate);
        self
    }
}

/// Upper and lower bounds on the temperature at a fixed spot.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointBounds {
    pub upper: ExtremalReport,
    pub lower: ExtremalReport,
}

/// Sharp upper bound on `osc(u_f)` over the class.
///
/// The extremal source is unique up to reflection `x -> -x`; the returned
/// one has its interval on the right half.
pub fn theorem1(params: &RobinParams, cls: &SourceClass) -> Result<ExtremalReport> {
    let l = cls.half_length();
    let g = gap_opt(params, l, cls.delta())?;
    let source = StepSource::bang_bang(cls.ground(), cls.top(), g.a_g, l)?;
    Ok(ExtremalReport::new(cls.spread() * g.theta, source))
}

/// Sharp bounds on `u_f(x0)` over the class, `x0 in [-pi, pi]`.
///
/// Spots left of the center are handled by reflecting the problem.
pub fn theorem2(params: &RobinParams, cls: &SourceClass, x0: f64) -> Result<PointBounds> {
    let x0 = check_in("x0", x0, -PI, PI, "[-pi, pi]")?;
    if x0 < 0.0 {
        let mut b = theorem2(params, cls, -x0)?;
        b.upper.source = b.upper.source.reflect();
        b.lower.source = b.lower.source.reflect();
        return Ok(b);
    }
    let (m, top, spread) = (cls.ground(), cls.top(), cls.spread());
    let eta = eta_unchecked(params, x0);

    let l = cls.half_length();
    let hot = point_max(params, x0, l)?;
    let upper = ExtremalReport::new(
        eta * m + spread * hot.nu,
        StepSource::bang_bang(m, top, hot.a_m, l)?,
    );

    // remove heat where it helps x0 most
    let l_minus = cls.complement_half_length();
    let cold = point_max(params, x0, l_minus)?;
    let lower = ExtremalReport::new(
        eta * top - spread * cold.nu,
        StepSource::bang_bang(top, m, cold.a_m, l_minus)?,
    );

    Ok(PointBounds { upper, lower })
}

/// Sharp upper bound on `u_f(x0) - u_f(-pi)` over the class.
pub fn theorem3(params: &RobinParams, cls: &SourceClass, x0: f64) -> Result<ExtremalReport> {
    let x0 = check_in("x0", x0, -PI, PI, "[-pi, pi]")?;
    let l = cls.half_length();
    let e = edge_gap(params, x0, l)?;
    let m = cls.ground();
    let bound = m * (eta_unchecked(params, x0) - eta_unchecked(params, -PI)) + cls.spread() * e.tau;
    Ok(ExtremalReport::new(
        bound,
        StepSource::bang_bang(m, cls.top(), e.a_e, l)?,
    ))
}
