//! The full oracle suite for one `(alpha, class, x0)` configuration.

use serde::{Deserialize, Serialize};

use super::{
    bathtub_allowance, bathtub_max, bathtub_min, grid_search_gap, random_feasible,
    ArgmaxDescriptor, BoundSense, CellKernel, OracleConfig, OracleVerdict,
};
use crate::error::Result;
use crate::extremal::{theorem1, theorem2, theorem3};
use crate::params::{RobinParams, SourceClass};
use crate::solve::solve_step;
use crate::source::StepSource;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    GapGrid,
    GapSamples,
    PointUpperBathtub,
    PointLowerBathtub,
    PointSamples,
    EdgeBathtub,
    EdgeSamples,
}

impl CheckKind {
    pub fn theorem(self) -> u8 {
        match self {
            CheckKind::GapGrid | CheckKind::GapSamples => 1,
            CheckKind::PointUpperBathtub
            | CheckKind::PointLowerBathtub
            | CheckKind::PointSamples => 2,
            CheckKind::EdgeBathtub | CheckKind::EdgeSamples => 3,
        }
    }

    pub fn invariant(self) -> &'static str {
        match self {
            CheckKind::GapGrid => "max over interval placements of osc(u) equals the gap bound",
            CheckKind::GapSamples => "osc(u_f) <= gap bound for random members of the class",
            CheckKind::PointUpperBathtub => {
                "max of u_f(x0) over grid sources equals the upper bound"
            }
            CheckKind::PointLowerBathtub => {
                "min of u_f(x0) over grid sources equals the lower bound"
            }
            CheckKind::PointSamples => "u_f(x0) <= upper bound for random members of the class",
            CheckKind::EdgeBathtub => {
                "max of u_f(x0) - u_f(-pi) over grid sources equals the edge-gap bound"
            }
            CheckKind::EdgeSamples => "u_f(x0) - u_f(-pi) <= edge-gap bound for random members",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedVerdict {
    pub check: CheckKind,
    pub theorem: u8,
    pub invariant: String,
    pub parameters: String,
    #[serde(flatten)]
    pub verdict: OracleVerdict,
}

fn best_sample<'a>(
    params: &RobinParams,
    samples: &'a [StepSource],
    objective: impl Fn(&crate::PiecewiseQuadratic) -> f64,
) -> (f64, Option<&'a StepSource>) {
    samples
        .iter()
        .map(|f| (objective(&solve_step(params, f)), f))
        .fold((f64::NEG_INFINITY, None), |best, (v, f)| {
            if v > best.0 {
                (v, Some(f))
            } else {
                best
            }
        })
}

/// Runs every oracle against the closed-form bounds.
pub fn verify_all(
    params: &RobinParams,
    cls: &SourceClass,
    x0: f64,
    cfg: &OracleConfig,
    tol: f64,
) -> Result<Vec<NamedVerdict>> {
    cfg.validate()?;
    let parameters = format!(
        "alpha={} m={} M={} s={} x0={} n_cells={} n_grid={} n_samples={} seed={}",
        params.alpha(),
        cls.ground(),
        cls.top(),
        cls.average(),
        x0,
        cfg.n_cells,
        cfg.n_grid,
        cfg.n_samples,
        cfg.seed
    );
    let named = |check: CheckKind, verdict: OracleVerdict| NamedVerdict {
        check,
        theorem: check.theorem(),
        invariant: check.invariant().to_string(),
        parameters: parameters.clone(),
        verdict,
    };
    let sample_descriptor = |f: Option<&StepSource>| {
        ArgmaxDescriptor::Source(
            f.cloned()
                .unwrap_or_else(|| StepSource::constant(cls.average()).expect("constant source")),
        )
    };

    let samples = random_feasible(cls, cfg)?;
    let allowance = bathtub_allowance(cfg.n_cells);
    let mut out = Vec::with_capacity(7);

    // temperature gap
    let gap_bound = theorem1(params, cls)?.bound;
    out.push(named(
        CheckKind::GapGrid,
        grid_search_gap(params, cls, cfg, tol)?,
    ));
    let (v, f) = best_sample(params, &samples, |u| u.extrema().osc);
    out.push(named(
        CheckKind::GapSamples,
        OracleVerdict::judge(
            v,
            gap_bound,
            BoundSense::Upper,
            f64::INFINITY,
            tol,
            sample_descriptor(f),
        ),
    ));

    // temperature at x0
    let bounds = theorem2(params, cls, x0)?;
    let kernel = CellKernel::point(params, x0, cfg.n_cells)?;
    let hot = bathtub_max(cls, &kernel)?;
    out.push(named(
        CheckKind::PointUpperBathtub,
        OracleVerdict::judge(
            hot.value,
            bounds.upper.bound,
            BoundSense::Upper,
            allowance,
            tol,
            ArgmaxDescriptor::Source(hot.source),
        ),
    ));
    let cold = bathtub_min(cls, &kernel)?;
    out.push(named(
        CheckKind::PointLowerBathtub,
        OracleVerdict::judge(
            cold.value,
            bounds.lower.bound,
            BoundSense::Lower,
            allowance,
            tol,
            ArgmaxDescriptor::Source(cold.source),
        ),
    ));
    let (v, f) = best_sample(params, &samples, |u| u.eval(x0));
    out.push(named(
        CheckKind::PointSamples,
        OracleVerdict::judge(
            v,
            bounds.upper.bound,
            BoundSense::Upper,
            f64::INFINITY,
            tol,
            sample_descriptor(f),
        ),
    ));

    // gap between x0 and the left end
    let edge_bound = theorem3(params, cls, x0)?.bound;
    let edge = bathtub_max(cls, &CellKernel::edge_gap(params, x0, cfg.n_cells)?)?;
    out.push(named(
        CheckKind::EdgeBathtub,
        OracleVerdict::judge(
            edge.value,
            edge_bound,
            BoundSense::Upper,
            allowance,
            tol,
            ArgmaxDescriptor::Source(edge.source),
        ),
    ));
    let (v, f) = best_sample(params, &samples, |u| {
        u.eval(x0) - u.eval(-std::f64::consts::PI)
    });
    out.push(named(
        CheckKind::EdgeSamples,
        OracleVerdict::judge(
            v,
            edge_bound,
            BoundSense::Upper,
            f64::INFINITY,
            tol,
            sample_descriptor(f),
        ),
    ));

    Ok(out)
}
