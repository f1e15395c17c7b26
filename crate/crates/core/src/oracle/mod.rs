//! Brute-force re-derivation of every closed-form bound.
//!
//! Nothing in here calls into [`crate::extremal`] to produce an oracle value;
//! the closed forms are only used as the reference a verdict compares against.

mod approx;
mod bathtub;
mod checks;
mod grid;
mod sampling;

pub use approx::{approx_step, convergence_report, write_convergence_csv, ConvergenceRow};
pub use bathtub::{bathtub_allowance, bathtub_max, bathtub_min, Bathtub, CellKernel};
pub use checks::{verify_all, CheckKind, NamedVerdict};
pub use grid::{grid_allowance, grid_search_gap};
pub use sampling::random_feasible;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::source::StepSource;

/// Resolution and randomness knobs shared by the oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub n_cells: usize,
    pub n_grid: usize,
    pub n_samples: usize,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            n_cells: 2000,
            n_grid: 10_000,
            n_samples: 1000,
            seed: 7,
        }
    }
}

impl OracleConfig {
    pub fn new(n_cells: usize, n_grid: usize, n_samples: usize, seed: u64) -> Result<Self> {
        let cfg = Self {
            n_cells,
            n_grid,
            n_samples,
            seed,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let check = |name: &'static str, v: usize, min: usize| {
            if v < min {
                Err(Error::InvalidParameter {
                    name,
                    value: v as f64,
                    reason: if min == 2 {
                        "must be at least 2"
                    } else {
                        "must be positive"
                    },
                })
            } else {
                Ok(())
            }
        };
        check("n_cells", self.n_cells, 2)?;
        check("n_grid", self.n_grid, 2)?;
        check("n_samples", self.n_samples, 1)
    }
}

/// What the oracle found to be optimal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArgmaxDescriptor {
    Source(StepSource),
    Center(f64),
}

/// Whether the closed form is an upper or a lower bound for the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSense {
    Upper,
    Lower,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub oracle_value: f64,
    pub closed_form_value: f64,
    pub abs_gap: f64,
    pub argmax_descriptor: ArgmaxDescriptor,
    pub pass: bool,
}

impl OracleVerdict {
    /// Passes when the oracle does not beat the bound by more than `tol` and
    /// falls short of it by at most `allowance + tol`.
    pub fn judge(
        oracle_value: f64,
        closed_form_value: f64,
        sense: BoundSense,
        allowance: f64,
        tol: f64,
        argmax_descriptor: ArgmaxDescriptor,
    ) -> Self {
        let shortfall = match sense {
            BoundSense::Upper => closed_form_value - oracle_value,
            BoundSense::Lower => oracle_value - closed_form_value,
        };
        let pass = oracle_value.is_finite() && shortfall >= -tol && shortfall <= allowance + tol;
        Self {
            oracle_value,
            closed_form_value,
            abs_gap: (oracle_value - closed_form_value).abs(),
            argmax_descriptor,
            pass,
        }
    }
}
