//! Continuous piecewise-quadratic functions on `[-pi, pi]`.
//!
//! Solutions for step sources are stored this way: one segment per source
//! cell, each carrying `q2 x^2 + q1 x + q0` in the global coordinate `x`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::RobinParams;
use crate::DOMAIN_SLACK;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub lo: f64,
    pub hi: f64,
    pub q2: f64,
    pub q1: f64,
    pub q0: f64,
}

impl Segment {
    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        (self.q2 * x + self.q1) * x + self.q0
    }

    #[inline]
    pub fn slope(&self, x: f64) -> f64 {
        2.0 * self.q2 * x + self.q1
    }

    /// Interior critical point, if the segment has one.
    fn vertex(&self) -> Option<f64> {
        if self.q2 == 0.0 {
            return None;
        }
        let v = -self.q1 / (2.0 * self.q2);
        (v > self.lo && v < self.hi).then_some(v)
    }

    fn range(&self) -> (f64, f64) {
        let mut lo = self.eval(self.lo).min(self.eval(self.hi));
        let mut hi = self.eval(self.lo).max(self.eval(self.hi));
        if let Some(v) = self.vertex() {
            lo = lo.min(self.eval(v));
            hi = hi.max(self.eval(v));
        }
        (lo, hi)
    }
}

/// Exact extrema of a [`PiecewiseQuadratic`] over the rod.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Extrema {
    pub min_value: f64,
    pub argmin: f64,
    pub max_value: f64,
    pub argmax: f64,
    pub osc: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPiecewise")]
pub struct PiecewiseQuadratic {
    segments: Vec<Segment>,
}

#[derive(Deserialize)]
struct RawPiecewise {
    segments: Vec<Segment>,
}

impl TryFrom<RawPiecewise> for PiecewiseQuadratic {
    type Error = Error;

    fn try_from(raw: RawPiecewise) -> Result<Self> {
        PiecewiseQuadratic::new(raw.segments)
    }
}

impl PiecewiseQuadratic {
    /// Checks that the segments tile `[-pi, pi]` and snaps shared endpoints.
    pub fn new(mut segments: Vec<Segment>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidSource(msg));
        if segments.is_empty() {
            return bad("a piecewise quadratic needs at least one segment".into());
        }
        for s in &segments {
            if ![s.lo, s.hi, s.q2, s.q1, s.q0].iter().all(|v| v.is_finite()) {
                return bad(format!("non-finite segment {s:?}"));
            }
            if s.hi <= s.lo {
                return bad(format!("empty or reversed segment [{}, {}]", s.lo, s.hi));
            }
        }
        if (segments[0].lo + PI).abs() > DOMAIN_SLACK {
            return bad(format!(
                "domain starts at {} instead of -pi",
                segments[0].lo
            ));
        }
        let n = segments.len();
        if (segments[n - 1].hi - PI).abs() > DOMAIN_SLACK {
            return bad(format!(
                "domain ends at {} instead of pi",
                segments[n - 1].hi
            ));
        }
        for i in 1..n {
            let gap = segments[i].lo - segments[i - 1].hi;
            if gap.abs() > DOMAIN_SLACK {
                return bad(format!(
                    "segments {} and {} leave a gap or overlap of {gap}",
                    i - 1,
                    i
                ));
            }
            segments[i].lo = segments[i - 1].hi;
        }
        segments[0].lo = -PI;
        segments[n - 1].hi = PI;
        Ok(Self { segments })
    }

    /// Assembles from trusted parts: drops zero-width segments, pins the ends.
    pub(crate) fn from_parts(parts: impl IntoIterator<Item = Segment>) -> Self {
        let mut segments: Vec<Segment> = parts.into_iter().filter(|s| s.hi > s.lo).collect();
        debug_assert!(!segments.is_empty());
        let n = segments.len();
        segments[0].lo = -PI;
        segments[n - 1].hi = PI;
        Self { segments }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Interior breakpoints between consecutive segments.
    pub fn breakpoints(&self) -> impl Iterator<Item = f64> + '_ {
        self.segments.iter().skip(1).map(|s| s.lo)
    }

    fn segment_at(&self, x: f64) -> &Segment {
        let idx = self.segments.partition_point(|s| s.hi < x);
        &self.segments[idx.min(self.segments.len() - 1)]
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.segment_at(x).eval(x)
    }

    pub fn derivative(&self, x: f64) -> f64 {
        self.segment_at(x).slope(x)
    }

    /// `(x, u(x))` at `n` equally spaced points including both ends.
    pub fn sample(&self, n: usize) -> Vec<(f64, f64)> {
        let n = n.max(2);
        (0..n)
            .map(|i| {
                let x = if i == n - 1 {
                    PI
                } else {
                    -PI + 2.0 * PI * i as f64 / (n - 1) as f64
                };
                (x, self.eval(x))
            })
            .collect()
    }

    /// `a * u + b * v` on the union of both segmentations.
    pub fn linear_combination(a: f64, u: &Self, b: f64, v: &Self) -> Self {
        let mut cuts: Vec<f64> = u.segments.iter().chain(&v.segments).map(|s| s.hi).collect();
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        let mut lo = -PI;
        let parts = cuts.into_iter().map(|hi| {
            let mid = 0.5 * (lo + hi);
            let (su, sv) = (u.segment_at(mid), v.segment_at(mid));
            let seg = Segment {
                lo,
                hi,
                q2: a * su.q2 + b * sv.q2,
                q1: a * su.q1 + b * sv.q1,
                q0: a * su.q0 + b * sv.q0,
            };
            lo = hi;
            seg
        });
        Self::from_parts(parts.collect::<Vec<_>>())
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self {
            segments: self
                .segments
                .iter()
                .map(|s| Segment {
                    q2: k * s.q2,
                    q1: k * s.q1,
                    q0: k * s.q0,
                    ..*s
                })
                .collect(),
        }
    }

    /// `(x, |value jump|, |slope jump|)` at every interior breakpoint.
    pub fn continuity_defects(&self) -> Vec<(f64, f64, f64)> {
        self.segments
            .windows(2)
            .map(|w| {
                let x = w[1].lo;
                (
                    x,
                    (w[0].eval(x) - w[1].eval(x)).abs(),
                    (w[0].slope(x) - w[1].slope(x)).abs(),
                )
            })
            .collect()
    }

    pub fn is_concave(&self, tol: f64) -> bool {
        self.segments.iter().all(|s| s.q2 <= tol)
    }

    /// Exact minimum and maximum from segment endpoints and vertices.
    ///
    /// Ties resolve to the leftmost point, except that a maximum attained on
    /// a flat stretch reports the midpoint of that stretch.
    pub fn extrema(&self) -> Extrema {
        let mut candidates = Vec::with_capacity(3 * self.segments.len());
        for s in &self.segments {
            candidates.push((s.lo, s.eval(s.lo)));
            if let Some(v) = s.vertex() {
                candidates.push((v, s.eval(v)));
            }
            candidates.push((s.hi, s.eval(s.hi)));
        }
        let max_value = candidates
            .iter()
            .map(|c| c.1)
            .fold(f64::NEG_INFINITY, f64::max);
        let min_value = candidates.iter().map(|c| c.1).fold(f64::INFINITY, f64::min);
        let eps = 1e-12 * max_value.abs().max(min_value.abs()).max(1.0);

        let argmin = candidates
            .iter()
            .find(|c| c.1 <= min_value + eps)
            .map(|c| c.0)
            .unwrap_or(-PI);
        let first_max = candidates
            .iter()
            .find(|c| c.1 >= max_value - eps)
            .map(|c| c.0)
            .unwrap_or(-PI);

        // extend over adjacent segments that stay at the maximum
        let flat = |s: &Segment| {
            let (lo, hi) = s.range();
            hi >= max_value - eps && lo >= max_value - eps
        };
        let mut runs: Vec<(f64, f64)> = Vec::new();
        let mut prev_flat = false;
        for s in &self.segments {
            let is_flat = flat(s);
            match runs.last_mut() {
                Some(run) if is_flat && prev_flat => run.1 = s.hi,
                _ if is_flat => runs.push((s.lo, s.hi)),
                _ => {}
            }
            prev_flat = is_flat;
        }
        let argmax = runs
            .iter()
            .find(|(l, r)| *l <= first_max && first_max <= *r)
            .map_or(first_max, |(l, r)| 0.5 * (l + r));

        Extrema {
            min_value,
            argmin,
            max_value,
            argmax,
            osc: max_value - min_value,
        }
    }

    /// `(-u'(-pi) + alpha u(-pi), u'(pi) + alpha u(pi))`.
    pub fn boundary_residuals(&self, params: &RobinParams) -> (f64, f64) {
        let first = &self.segments[0];
        let last = &self.segments[self.segments.len() - 1];
        let alpha = params.alpha();
        (
            -first.slope(-PI) + alpha * first.eval(-PI),
            last.slope(PI) + alpha * last.eval(PI),
        )
    }
}

/// Free-function form of [`PiecewiseQuadratic::extrema`].
pub fn extrema(u: &PiecewiseQuadratic) -> Extrema {
    u.extrema()
}

/// Free-function form of [`PiecewiseQuadratic::boundary_residuals`].
pub fn boundary_residuals(u: &PiecewiseQuadratic, params: &RobinParams) -> (f64, f64) {
    u.boundary_residuals(params)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(lo: f64, hi: f64, q2: f64, q1: f64, q0: f64) -> Segment {
        Segment { lo, hi, q2, q1, q0 }
    }

    #[test]
    fn single_linear_segment_extrema_at_ends() {
        let u = PiecewiseQuadratic::new(vec![seg(-PI, PI, 0.0, 2.0, 1.0)]).unwrap();
        let e = u.extrema();
        assert_eq!(e.argmin, -PI);
        assert_eq!(e.argmax, PI);
        assert!((e.osc - 4.0 * PI).abs() < 1e-14);
    }

    #[test]
    fn symmetric_min_reports_left_end() {
        let u = PiecewiseQuadratic::new(vec![seg(-PI, PI, -0.5, 0.0, 10.0)]).unwrap();
        let e = u.extrema();
        assert_eq!(e.argmin, -PI);
        assert_eq!(e.argmax, 0.0);
    }

    #[test]
    fn plateau_reports_midpoint() {
        // rises to 1 on [-pi, -1], flat on [-1, 2], falls after
        let u = PiecewiseQuadratic::new(vec![
            seg(-PI, -1.0, 0.0, 1.0, 2.0),
            seg(-1.0, 0.5, 0.0, 0.0, 1.0),
            seg(0.5, 2.0, 0.0, 0.0, 1.0),
            seg(2.0, PI, 0.0, -1.0, 3.0),
        ])
        .unwrap();
        let e = u.extrema();
        assert!((e.max_value - 1.0).abs() < 1e-15);
        assert!((e.argmax - 0.5).abs() < 1e-15);
    }

    #[test]
    fn rejects_gaps() {
        assert!(PiecewiseQuadratic::new(vec![
            seg(-PI, 0.0, 0.0, 0.0, 1.0),
            seg(0.1, PI, 0.0, 0.0, 1.0)
        ])
        .is_err());
        assert!(PiecewiseQuadratic::new(vec![seg(-PI, 3.0, 0.0, 0.0, 1.0)]).is_err());
        assert!(PiecewiseQuadratic::new(vec![]).is_err());
    }

    #[test]
    fn json_field_names() {
        let u = PiecewiseQuadratic::new(vec![seg(-PI, PI, -0.5, 0.0, 1.0)]).unwrap();
        let v: serde_json::Value = serde_json::to_value(&u).unwrap();
        let s = &v["segments"][0];
        for key in ["lo", "hi", "q2", "q1", "q0"] {
            assert!(s.get(key).is_some(), "missing {key}");
        }
        let back: PiecewiseQuadratic = serde_json::from_value(v).unwrap();
        assert_eq!(back, u);
    }

    #[test]
    fn linear_combination_merges_cuts() {
        let u = PiecewiseQuadratic::new(vec![
            seg(-PI, 0.0, 0.0, 1.0, 0.0),
            seg(0.0, PI, 0.0, -1.0, 0.0),
        ])
        .unwrap();
        let v = PiecewiseQuadratic::new(vec![
            seg(-PI, 1.0, -0.5, 0.0, 0.0),
            seg(1.0, PI, -0.5, 0.0, 0.0),
        ])
        .unwrap();
        let w = PiecewiseQuadratic::linear_combination(2.0, &u, 3.0, &v);
        assert_eq!(w.segments().len(), 3);
        for x in [-2.0, 0.5, 2.5] {
            assert!((w.eval(x) - (2.0 * u.eval(x) + 3.0 * v.eval(x))).abs() < 1e-14);
        }
    }
}
