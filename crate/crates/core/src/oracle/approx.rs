use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::RobinParams;
use crate::solve::{green_max, solve_step};
use crate::source::{uniform_breakpoints, HeatDensity, StepSource};

/// Lower step approximation: `n` equal cells, each carrying the minimum of
/// `f` over the cell.
pub fn approx_step<F: HeatDensity + ?Sized>(f: &F, n: usize) -> StepSource {
    let n = n.max(1);
    let t = uniform_breakpoints(n);
    let values = t.windows(2).map(|w| f.cell_min(w[0], w[1])).collect();
    StepSource::new(t, values).expect("uniform partition is valid")
}

/// One row of [`convergence_report`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub n: usize,
    /// `max |u_n - u_ref|` sampled at 1001 points.
    pub sup_norm: f64,
    pub osc_diff: f64,
    /// `|| f_n - f_ref ||_1`.
    pub l1_dist: f64,
    /// `max G * l1_dist`, an upper bound for `sup_norm`.
    pub envelope: f64,
}

const SUP_SAMPLES: usize = 1001;

/// Distance between the solutions for step approximations of `f` on each
/// `n` in `n_list` and a reference solution on twice the finest grid.
pub fn convergence_report<F: HeatDensity + ?Sized>(
    params: &RobinParams,
    f: &F,
    n_list: &[usize],
) -> Result<Vec<ConvergenceRow>> {
    if n_list.is_empty() || n_list[0] == 0 || n_list.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParameter {
            name: "n_list",
            value: n_list.first().copied().unwrap_or(0) as f64,
            reason: "must be a non-empty strictly increasing list of positive sizes",
        });
    }
    let finest = *n_list.last().unwrap();
    let f_ref = approx_step(f, 2 * finest);
    let u_ref = solve_step(params, &f_ref);
    let osc_ref = u_ref.extrema().osc;
    let reference = u_ref.sample(SUP_SAMPLES);
    let g_max = green_max(params);

    Ok(n_list
        .iter()
        .map(|&n| {
            let f_n = approx_step(f, n);
            let u_n = solve_step(params, &f_n);
            let sup_norm = reference
                .iter()
                .map(|&(x, v)| (u_n.eval(x) - v).abs())
                .fold(0.0, f64::max);
            let l1_dist = f_n.l1_distance(&f_ref);
            ConvergenceRow {
                n,
                sup_norm,
                osc_diff: (u_n.extrema().osc - osc_ref).abs(),
                l1_dist,
                envelope: g_max * l1_dist,
            }
        })
        .collect())
}

/// CSV with header `n,sup_norm,osc_diff,l1_dist,envelope`.
pub fn write_convergence_csv<W: Write>(rows: &[ConvergenceRow], out: W) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::make_params;

    fn wave(x: f64) -> f64 {
        1.0 + 0.5 * x.sin()
    }

    /// `\int |f - g|` with `g` a step source, by composite Simpson per cell.
    fn l1_to_fn(g: &StepSource, f: impl Fn(f64) -> f64) -> f64 {
        g.cells()
            .map(|(lo, hi, v)| {
                let k = 64;
                let h = (hi - lo) / k as f64;
                (0..k)
                    .map(|j| {
                        let a = lo + j as f64 * h;
                        let d = |x: f64| (f(x) - v).abs();
                        h / 6.0 * (d(a) + 4.0 * d(a + 0.5 * h) + d(a + h))
                    })
                    .sum::<f64>()
            })
            .sum()
    }

    #[test]
    fn constant_density() {
        for n in [1, 3, 8] {
            let s = approx_step(&|_x: f64| 2.5, n);
            assert!(s.values().iter().all(|&v| v == 2.5));
        }
    }

    #[test]
    fn wave_refinement_is_monotone() {
        let mut prev = approx_step(&wave, 4);
        let mut prev_l1 = l1_to_fn(&prev, wave);
        for n in [8, 16] {
            let next = approx_step(&wave, n);
            for (lo, hi, v) in next.cells() {
                let mid = 0.5 * (lo + hi);
                assert!(v >= prev.eval(mid) - 1e-15);
                assert!(v <= wave(mid));
            }
            let l1 = l1_to_fn(&next, wave);
            assert!(l1 < prev_l1);
            prev = next;
            prev_l1 = l1;
        }
    }

    #[test]
    fn aligned_step_source_is_reproduced() {
        let f = StepSource::new(vec![-PI, -PI / 2.0, 0.0, PI], vec![2.0, 1.0, 3.0]).unwrap();
        let g = approx_step(&f, 4);
        assert_eq!(g.values(), &[2.0, 1.0, 3.0, 3.0]);
        assert!(g.l1_distance(&f) < 1e-15);
    }

    #[test]
    fn coarse_step_source_converges_immediately() {
        let params = make_params(1.0).unwrap();
        let f = StepSource::new(vec![-PI, 0.0, PI], vec![0.5, 1.5]).unwrap();
        let rows = convergence_report(&params, &f, &[2, 4, 8]).unwrap();
        for r in rows {
            assert!(r.sup_norm < 1e-12 && r.l1_dist < 1e-15, "{r:?}");
        }
    }

    #[test]
    fn wave_report() {
        let params = make_params(1.0).unwrap();
        let rows = convergence_report(&params, &wave, &[8, 16, 32, 64]).unwrap();
        for w in rows.windows(2) {
            assert!(w[1].sup_norm < w[0].sup_norm);
        }
        for r in &rows {
            assert!(r.sup_norm <= r.envelope + 1e-12);
        }
        let mut buf = Vec::new();
        write_convergence_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("n,sup_norm,osc_diff,l1_dist,envelope\n8,"));
        assert_eq!(text.lines().count(), 5);
    }

    #[test]
    fn rejects_unsorted_sizes() {
        let params = make_params(1.0).unwrap();
        assert!(convergence_report(&params, &wave, &[16, 8]).is_err());
        assert!(convergence_report(&params, &wave, &[]).is_err());
    }
}
