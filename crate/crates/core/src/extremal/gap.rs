use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{check_half_length, check_in};
use crate::error::{Error, Result};
use crate::params::RobinParams;

/// Optimal placement of `J = delta + chi_I(a, l)` for the temperature gap.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GapResult {
    /// Unconstrained maximizer of the gap over the center `a`.
    pub a_0: f64,
    /// Transitional `alpha`; `None` when `a_0` stays inside `[0, pi - l]`
    /// for every `alpha`.
    pub alpha_0: Option<f64>,
    /// `alpha_0` or zero.
    pub alpha_g: f64,
    /// Optimal center, `min(a_0, pi - l)`.
    pub a_g: f64,
    /// Maximal gap.
    pub theta: f64,
}

fn check_delta(delta: f64) -> Result<f64> {
    if delta.is_finite() && delta >= 0.0 {
        Ok(delta)
    } else {
        Err(Error::InvalidParameter {
            name: "delta",
            value: delta,
            reason: "must be finite and non-negative",
        })
    }
}

fn has_transition(l: f64, delta: f64) -> bool {
    (1.0 + delta) * l > delta * (PI - l)
}

/// `osc(u_J)` for `J = delta + chi_I(a, l)` with `a in [0, pi - l]`.
///
/// The minimum is always at `-pi`. The maximum is normally inside the heated
/// interval; for a large baseline and a far-right interval it moves into the
/// unheated stretch on the left, where the second expression applies.
pub fn gap_h(params: &RobinParams, a: f64, l: f64, delta: f64) -> Result<f64> {
    let l = check_half_length(l)?;
    let a = check_in("a", a, 0.0, PI - l, "[0, pi - l]")?;
    let delta = check_delta(delta)?;
    let c = params.c_alpha();
    let shrink = 1.0 - l * c;
    let peak = a * shrink / (1.0 + delta);
    if peak >= a - l {
        Ok(0.5 * (shrink * shrink / (1.0 + delta) - 1.0) * a * a
            + l / (1.0 + params.alpha() * PI) * a
            + PI * l
            + 0.5 * PI * PI * delta
            - 0.5 * l * l)
    } else {
        // delta > 0 here; peak of delta*eta + the left linear branch
        let slope = l * (1.0 - a * c);
        Ok(slope * slope / (2.0 * delta) + 0.5 * PI * PI * delta + PI * slope)
    }
}

/// Center maximizing the gap over all real `a`.
pub fn a_zero(params: &RobinParams, l: f64, delta: f64) -> f64 {
    let c = params.c_alpha();
    (1.0 + delta) * l / ((1.0 + params.alpha() * PI) * (delta + 2.0 * l * c - l * l * c * c))
}

/// The `alpha` at which `a_zero` reaches `pi - l`.
pub fn alpha_0(l: f64, delta: f64) -> Result<f64> {
    let l = check_half_length(l)?;
    let d = check_delta(delta)?;
    if !has_transition(l, d) {
        return Err(Error::Regime(format!(
            "(1 + delta) l <= delta (pi - l) for l = {l}, delta = {d}"
        )));
    }
    let pi2 = PI * PI;
    let disc = (1.0 + d) * (pi2 * d + 9.0 * pi2 - 16.0 * PI * l + 8.0 * l * l);
    let numer = -2.0 * pi2 * d + 3.0 * PI * d * l - PI * l + 2.0 * l * l + l * disc.sqrt();
    let denom = 2.0 * (PI * pi2 * d - pi2 * d * l + 2.0 * pi2 * l - 3.0 * PI * l * l + l * l * l);
    Ok(numer / denom)
}

/// Largest temperature gap over placements of `J = delta + chi_I(a, l)`.
pub fn gap_opt(params: &RobinParams, l: f64, delta: f64) -> Result<GapResult> {
    let l = check_half_length(l)?;
    let delta = check_delta(delta)?;
    let alpha = params.alpha();
    let c = params.c_alpha();

    let alpha_0 = if has_transition(l, delta) {
        Some(alpha_0(l, delta)?)
    } else {
        None
    };
    let alpha_g = alpha_0.unwrap_or(0.0);
    let a_0 = a_zero(params, l, delta);
    let tail = PI * l + 0.5 * PI * PI * delta - 0.5 * l * l;

    let (a_g, theta) = if alpha > alpha_g {
        let denom = (PI * PI * delta + 2.0 * PI * l - l * l) * alpha * alpha
            + 2.0 * (PI * delta + l) * alpha
            + delta;
        (a_0.min(PI - l), 0.5 * (1.0 + delta) * l * l / denom + tail)
    } else {
        let rest = PI - l;
        let theta = 0.5 * (l * l * c * c - 2.0 * l * c - delta) * rest * rest / (1.0 + delta)
            + l * rest / (1.0 + alpha * PI)
            + tail;
        (rest, theta)
    };

    Ok(GapResult {
        a_0,
        alpha_0,
        alpha_g,
        a_g,
        theta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{extrema, make_params, solve_step, IntervalSource};

    fn osc_of(params: &RobinParams, a: f64, l: f64, delta: f64) -> f64 {
        let f = IntervalSource::new(a, l, delta).unwrap().to_step_source();
        extrema(&solve_step(params, &f)).osc
    }

    /// Quadratic whose positive root is the transitional alpha.
    fn transition_quadratic(l: f64, d: f64, alpha: f64) -> f64 {
        (PI * PI * d + 2.0 * PI * l - l * l) * alpha * alpha
            + (2.0 * (PI * d + l) * (PI - l) - PI * l * (1.0 + d)) / (PI - l) * alpha
            + d
            - (1.0 + d) * l / (PI - l)
    }

    #[test]
    fn centered_interval() {
        for alpha in [0.2, 1.0, 5.0] {
            let params = make_params(alpha).unwrap();
            for (l, d) in [(0.5, 0.0), (1.5, 0.7), (2.9, 3.0)] {
                let h = gap_h(&params, 0.0, l, d).unwrap();
                assert!((h - (PI * l + PI * PI * d / 2.0 - l * l / 2.0)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn matches_solver() {
        let params = make_params(1.0).unwrap();
        for d in [0.0, 0.5] {
            let h = gap_h(&params, 1.0, PI / 2.0, d).unwrap();
            assert!((h - osc_of(&params, 1.0, PI / 2.0, d)).abs() < 1e-10);
        }
    }

    #[test]
    fn large_baseline_far_right() {
        // peak sits left of the heated interval
        let params = make_params(0.5).unwrap();
        let (a, l, d) = (2.5, 0.3, 2.0);
        let h = gap_h(&params, a, l, d).unwrap();
        assert!((h - osc_of(&params, a, l, d)).abs() < 1e-10);
    }

    #[test]
    fn transitional_value_for_half_rod() {
        let a0 = alpha_0(PI / 2.0, 0.0).unwrap();
        assert!((a0 - 2.0 / (3f64.sqrt() * PI)).abs() < 1e-12);
        assert!((a0 - 0.367_552_6).abs() < 1e-7);
        assert!(transition_quadratic(PI / 2.0, 0.0, a0).abs() < 1e-12);
    }

    #[test]
    fn transitional_value_by_bisection() {
        let (l, d) = (1.0, 0.2);
        let a0 = alpha_0(l, d).unwrap();
        assert!(a0 > 0.0);
        assert!(transition_quadratic(l, d, a0).abs() < 1e-10);
        // a_zero decreases in alpha; bisect a_zero(alpha) = pi - l
        let excess = |alpha: f64| a_zero(&make_params(alpha).unwrap(), l, d) - (PI - l);
        let (mut lo, mut hi) = (1e-6, 100.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if excess(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!((0.5 * (lo + hi) - a0).abs() < 1e-9);
        let at = a_zero(&make_params(a0).unwrap(), l, d);
        assert!((at - (PI - l)).abs() < 1e-9);
    }

    #[test]
    fn no_transition_is_a_regime_error() {
        assert!(matches!(alpha_0(0.3, 2.0), Err(Error::Regime(_))));
    }

    #[test]
    fn interior_regime_value() {
        let params = make_params(1.0).unwrap();
        let l = PI / 2.0;
        let g = gap_opt(&params, l, 0.0).unwrap();
        let expected =
            0.5 * (PI * PI / 4.0) / (3.0 * PI * PI / 4.0 + PI) + PI * PI / 2.0 - PI * PI / 8.0;
        assert!((g.theta - expected).abs() < 1e-12);
        assert!((g.theta - 3.8181).abs() < 1e-4);
        assert!(params.alpha() > g.alpha_g);
        assert_eq!(g.a_g, g.a_0);
        // grid search over a
        let n = 100_000;
        let best = (0..=n)
            .map(|i| gap_h(&params, (PI - l) * i as f64 / n as f64, l, 0.0).unwrap())
            .fold(f64::NEG_INFINITY, f64::max);
        assert!((best - g.theta).abs() < 1e-9);
    }

    #[test]
    fn pinned_regime_for_small_alpha() {
        let params = make_params(0.2).unwrap();
        let g = gap_opt(&params, PI / 2.0, 0.0).unwrap();
        assert_eq!(g.a_g, PI / 2.0);
        assert!((g.theta - gap_h(&params, g.a_g, PI / 2.0, 0.0).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn no_transition_keeps_interior() {
        let (l, d) = (0.3, 2.0);
        for alpha in [0.01, 0.5, 50.0] {
            let params = make_params(alpha).unwrap();
            let g = gap_opt(&params, l, d).unwrap();
            assert_eq!(g.alpha_g, 0.0);
            assert!(g.alpha_0.is_none());
            assert!(g.a_g >= 0.0 && g.a_g <= PI - l);
            assert_eq!(g.a_g, g.a_0);
            assert!((g.theta - gap_h(&params, g.a_g, l, d).unwrap()).abs() < 1e-10);
        }
    }

    #[test]
    fn domain_errors() {
        let params = make_params(1.0).unwrap();
        assert!(gap_h(&params, -0.1, 1.0, 0.0).is_err());
        assert!(gap_h(&params, 2.5, 1.0, 0.0).is_err());
        assert!(gap_h(&params, 0.5, 1.0, -1.0).is_err());
    }
}
