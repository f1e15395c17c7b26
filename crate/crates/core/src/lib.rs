//! Exact steady-state temperatures for a rod `[-pi, pi]` heated by a
//! piecewise-constant source and cooled at both ends by a Robin (Newton)
//! condition, together with the sharp bounds on temperature gap and pointwise
//! temperature over sources with prescribed bounds and mass.
//!
//! * [`solve`] builds exact piecewise-quadratic solutions.
//! * [`extremal`] evaluates the closed-form extremal quantities and the
//!   sources that attain them.
//! * [`oracle`] re-derives every bound by brute force.

pub mod error;
pub mod extremal;
pub mod oracle;
pub mod params;
pub mod piecewise;
pub mod solve;
pub mod source;

pub use error::{Error, Result};
pub use extremal::{
    a_zero, alpha_0, alpha_m, edge_gap, gap_h, gap_opt, point_max, theorem1, theorem2, theorem3,
    EdgeGapResult, ExtremalReport, GapResult, PointBounds, PointMaxResult,
};
pub use oracle::{
    approx_step, bathtub_allowance, bathtub_max, bathtub_min, convergence_report, grid_allowance,
    grid_search_gap, random_feasible, verify_all, write_convergence_csv, ArgmaxDescriptor, Bathtub,
    BoundSense, CellKernel, CheckKind, ConvergenceRow, NamedVerdict, OracleConfig, OracleVerdict,
};
pub use params::{make_params, RobinParams, SourceClass};
pub use piecewise::{boundary_residuals, extrema, Extrema, PiecewiseQuadratic, Segment};
pub use solve::{
    eta, eta_solution, green, green_max, solve_interval, solve_quadrature, solve_step,
};
pub use source::{HeatDensity, IntervalSource, StepSource};

/// Default absolute tolerance for numerical comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Rounding slack accepted when a coordinate should lie in `[-pi, pi]`.
pub(crate) const DOMAIN_SLACK: f64 = 1e-12;
