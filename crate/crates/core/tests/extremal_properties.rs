use std::f64::consts::PI;

use proptest::prelude::*;
use robin_rod::{
    alpha_m, bathtub_max, edge_gap, extrema, gap_h, gap_opt, make_params, point_max,
    solve_interval, solve_step, theorem1, theorem2, theorem3, CellKernel, IntervalSource,
    PiecewiseQuadratic, RobinParams, SourceClass, StepSource,
};

fn alpha() -> impl Strategy<Value = f64> {
    (-4.6f64..4.6).prop_map(f64::exp)
}

fn class() -> impl Strategy<Value = SourceClass> {
    (0.0f64..3.0, 0.1f64..5.0, 0.05f64..0.95)
        .prop_map(|(m, w, t)| SourceClass::new(m, m + w, m + t * w).unwrap())
}

fn with_transition() -> impl Strategy<Value = (f64, f64)> {
    (0.05f64..3.0, 0.0f64..2.0).prop_filter("needs a transition", |&(l, d)| {
        (1.0 + d) * l > d * (PI - l) + 1e-3
    })
}

fn heat_at(p: &RobinParams, x0: f64, a: f64, l: f64) -> f64 {
    solve_interval(p, a, l).unwrap().eval(x0)
}

fn edge_at(p: &RobinParams, x0: f64, a: f64, l: f64) -> f64 {
    let u = solve_interval(p, a, l).unwrap();
    u.eval(x0) - u.eval(-PI)
}

fn osc_at(p: &RobinParams, a: f64, l: f64, delta: f64) -> f64 {
    let f = IntervalSource::new(a, l, delta).unwrap().to_step_source();
    extrema(&solve_step(p, &f)).osc
}

fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..=n)
        .map(|i| lo + (hi - lo) * i as f64 / n as f64)
        .collect()
}

/// Nondecreasing up to `peak`, nonincreasing after.
fn unimodal(xs: &[f64], ys: &[f64], peak: f64, slack: f64) -> bool {
    xs.windows(2).zip(ys.windows(2)).all(|(x, y)| {
        if x[1] <= peak {
            y[1] >= y[0] - slack
        } else if x[0] >= peak {
            y[1] <= y[0] + slack
        } else {
            true
        }
    })
}

/// Moves `eps` mass out of a short stretch inside the heated interval and
/// into one outside it.
fn perturbed(f: &StepSource, cls: &SourceClass, a: f64, l: f64) -> StepSource {
    let (lo, hi) = ((a - l).max(-PI), (a + l).min(PI));
    let w = 0.1 * (hi - lo).min(2.0 * PI - (hi - lo));
    let away = if lo + PI >= PI - hi {
        0.5 * (-PI + lo)
    } else {
        0.5 * (hi + PI)
    };
    let bump = 0.1 * cls.spread();
    let cut = StepSource::new(
        vec![-PI, a - 0.5 * w, a + 0.5 * w, PI],
        vec![0.0, -bump, 0.0],
    )
    .unwrap();
    let fill = StepSource::new(
        vec![-PI, away - 0.5 * w, away + 0.5 * w, PI],
        vec![0.0, bump, 0.0],
    )
    .unwrap();
    let g = StepSource::linear_combination(1.0, f, 1.0, &cut);
    StepSource::linear_combination(1.0, &g, 1.0, &fill)
}

fn solve(p: &RobinParams, f: &StepSource) -> PiecewiseQuadratic {
    solve_step(p, f)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn closed_forms_match_solutions(
        al in alpha(),
        x0 in 0.0f64..=PI,
        l in 0.01f64..3.13,
        xe in -PI..=PI,
        delta in 0.0f64..3.0,
    ) {
        let p = make_params(al).unwrap();
        let pm = point_max(&p, x0, l).unwrap();
        prop_assert!((pm.nu - heat_at(&p, x0, pm.a_m, l)).abs() <= 1e-10);
        prop_assert!((pm.mu - heat_at(&p, x0, -PI + l, l)).abs() <= 1e-10);
        let e = edge_gap(&p, xe, l).unwrap();
        prop_assert!((e.tau - edge_at(&p, xe, e.a_e, l)).abs() <= 1e-10);
        let g = gap_opt(&p, l, delta).unwrap();
        prop_assert!((g.theta - gap_h(&p, g.a_g, l, delta).unwrap()).abs() <= 1e-10);
        prop_assert!((g.theta - osc_at(&p, g.a_g, l, delta)).abs() <= 1e-10);
        for a in grid(0.0, PI - l, 7) {
            prop_assert!((gap_h(&p, a, l, delta).unwrap() - osc_at(&p, a, l, delta)).abs() <= 1e-10);
        }
    }

    #[test]
    fn point_heat_is_unimodal(al in alpha(), x0 in 0.0f64..=PI, l in 0.01f64..3.13) {
        let p = make_params(al).unwrap();
        let r = point_max(&p, x0, l).unwrap();
        let xs = grid(-PI + l, PI - l, 1000);
        let ys: Vec<f64> = xs.iter().map(|&a| heat_at(&p, x0, a, l)).collect();
        prop_assert!(unimodal(&xs, &ys, r.a_m, 1e-12));
        if al <= r.alpha_m {
            prop_assert_eq!(r.a_m, PI - l);
        }
        prop_assert!(ys.iter().all(|&y| y <= r.nu + 1e-12 && y >= r.mu - 1e-12));
    }

    #[test]
    fn edge_gap_is_unimodal(al in alpha(), x0 in -PI..=PI, l in 0.01f64..3.13) {
        let p = make_params(al).unwrap();
        let r = edge_gap(&p, x0, l).unwrap();
        let xs = grid(-PI + l, PI - l, 1000);
        let ys: Vec<f64> = xs.iter().map(|&a| edge_at(&p, x0, a, l)).collect();
        prop_assert!(unimodal(&xs, &ys, r.a_e, 1e-12));
    }

    #[test]
    fn gap_is_unimodal(al in alpha(), l in 0.01f64..3.13, delta in 0.0f64..3.0) {
        let p = make_params(al).unwrap();
        let r = gap_opt(&p, l, delta).unwrap();
        let xs = grid(0.0, PI - l, 1000);
        let ys: Vec<f64> = xs.iter().map(|&a| gap_h(&p, a, l, delta).unwrap()).collect();
        prop_assert!(unimodal(&xs, &ys, r.a_g, 1e-12));
    }

    #[test]
    fn gap_continuous_at_threshold((l, delta) in with_transition()) {
        let at = gap_opt(&make_params(1.0).unwrap(), l, delta).unwrap().alpha_g;
        let below = gap_opt(&make_params(at * (1.0 - 1e-11)).unwrap(), l, delta).unwrap();
        let above = gap_opt(&make_params(at * (1.0 + 1e-11)).unwrap(), l, delta).unwrap();
        prop_assert!((below.theta - above.theta).abs() <= 1e-8);
    }

    #[test]
    fn point_heat_continuous_at_threshold(l in 0.05f64..3.0, t in 0.01f64..0.99) {
        // x0 strictly between pi - l and pi so the threshold is finite and positive
        let x0 = PI - l + t * l;
        let at = alpha_m(x0, l);
        prop_assume!(at > 0.0 && at.is_finite());
        let below = point_max(&make_params(at * (1.0 - 1e-11)).unwrap(), x0, l).unwrap();
        let above = point_max(&make_params(at * (1.0 + 1e-11)).unwrap(), x0, l).unwrap();
        prop_assert!((below.nu - above.nu).abs() <= 1e-8);
    }

    #[test]
    fn edge_gap_continuous_at_threshold(l in 0.05f64..3.0, t in 0.01f64..0.99) {
        let x0 = (PI - 2.0 * l).max(-PI) + t * (PI - (PI - 2.0 * l).max(-PI));
        let at = edge_gap(&make_params(1.0).unwrap(), x0, l).unwrap().alpha_e;
        prop_assume!(at > 0.0 && at.is_finite());
        let below = edge_gap(&make_params(at * (1.0 - 1e-11)).unwrap(), x0, l).unwrap();
        let above = edge_gap(&make_params(at * (1.0 + 1e-11)).unwrap(), x0, l).unwrap();
        prop_assert!((below.tau - above.tau).abs() <= 1e-8);
    }

    #[test]
    fn gap_center_drifts_left((l, delta) in with_transition()) {
        let at = gap_opt(&make_params(1.0).unwrap(), l, delta).unwrap().alpha_g;
        for k in [0.1, 0.5, 0.99] {
            let r = gap_opt(&make_params(at * k).unwrap(), l, delta).unwrap();
            prop_assert_eq!(r.a_g, PI - l);
        }
        let centers: Vec<f64> = [1.01, 1.5, 3.0, 10.0, 100.0]
            .iter()
            .map(|k| gap_opt(&make_params(at * k).unwrap(), l, delta).unwrap().a_g)
            .collect();
        prop_assert!(centers[0] < PI - l);
        prop_assert!(centers.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn point_center_drifts_left(x0 in 0.01f64..3.1, l in 0.05f64..3.0) {
        let at = alpha_m(x0, l);
        if at > 0.0 {
            for k in [0.1, 0.5, 0.999] {
                let r = point_max(&make_params(at * k).unwrap(), x0, l).unwrap();
                prop_assert_eq!(r.a_m, PI - l);
            }
        }
        let start = if at > 0.0 { at * 1.01 } else { 0.01 };
        let centers: Vec<f64> = [1.0, 2.0, 10.0, 100.0, 1e3]
            .iter()
            .map(|k| point_max(&make_params(start * k).unwrap(), x0, l).unwrap().a_m)
            .collect();
        prop_assert!(centers.windows(2).all(|w| w[1] < w[0]));
        let limit = x0 * (PI - l) / PI;
        let far = point_max(&make_params(1e9).unwrap(), x0, l).unwrap().a_m;
        prop_assert!((far - limit).abs() <= 1e-6);
        prop_assert!(centers.iter().all(|&a| a > limit));
    }

    #[test]
    fn optimal_intervals_nest(al in alpha(), x0 in 0.0f64..=PI, l1 in 0.01f64..3.1, t in 0.0f64..1.0) {
        let l2 = l1 + t * (3.13 - l1);
        prop_assume!(l2 > l1);
        let p = make_params(al).unwrap();
        let a1 = point_max(&p, x0, l1).unwrap().a_m;
        let a2 = point_max(&p, x0, l2).unwrap().a_m;
        prop_assert!(a2 - l2 <= a1 - l1 + 1e-12);
        prop_assert!(a1 + l1 <= a2 + l2 + 1e-12);
        if a1 < PI - l1 {
            prop_assert!(a1 - l1 < x0 && x0 < a1 + l1);
        }
    }

    #[test]
    fn extremal_sources_attain_bounds(al in alpha(), cls in class(), x0 in -PI..=PI) {
        let p = make_params(al).unwrap();
        let t1 = theorem1(&p, &cls).unwrap();
        prop_assert!((extrema(&solve(&p, &t1.source)).osc - t1.bound).abs() <= 1e-10);
        let t2 = theorem2(&p, &cls, x0).unwrap();
        prop_assert!((solve(&p, &t2.upper.source).eval(x0) - t2.upper.bound).abs() <= 1e-10);
        prop_assert!((solve(&p, &t2.lower.source).eval(x0) - t2.lower.bound).abs() <= 1e-10);
        let t3 = theorem3(&p, &cls, x0).unwrap();
        let u = solve(&p, &t3.source);
        prop_assert!((u.eval(x0) - u.eval(-PI) - t3.bound).abs() <= 1e-10);
        for f in [&t1.source, &t2.upper.source, &t2.lower.source, &t3.source] {
            prop_assert!(f.belongs_to(&cls, 1e-9));
        }
    }

    #[test]
    fn moving_mass_off_the_extremal_source_loses(al in alpha(), cls in class(), x0 in -PI..=PI) {
        let p = make_params(al).unwrap();
        let l = cls.half_length();

        let t1 = theorem1(&p, &cls).unwrap();
        let a = gap_opt(&p, l, cls.delta()).unwrap().a_g;
        let f = perturbed(&t1.source, &cls, a, l);
        prop_assert!(f.belongs_to(&cls, 1e-9));
        prop_assert!(extrema(&solve(&p, &f)).osc < t1.bound);

        let t2 = theorem2(&p, &cls, x0).unwrap();
        let b = t2.upper.source.breakpoints();
        let f = perturbed(&t2.upper.source, &cls, 0.5 * (b[1] + b[2]), 0.5 * (b[2] - b[1]));
        prop_assert!(solve(&p, &f).eval(x0) < t2.upper.bound);

        let t3 = theorem3(&p, &cls, x0).unwrap();
        let b = t3.source.breakpoints();
        let f = perturbed(&t3.source, &cls, 0.5 * (b[1] + b[2]), 0.5 * (b[2] - b[1]));
        let u = solve(&p, &f);
        prop_assert!(u.eval(x0) - u.eval(-PI) < t3.bound);
    }

    #[test]
    fn bathtub_has_one_fractional_cell(al in alpha(), cls in class(), x0 in -PI..=PI, n in 2usize..300) {
        let p = make_params(al).unwrap();
        let b = bathtub_max(&cls, &CellKernel::point(&p, x0, n).unwrap()).unwrap();
        prop_assert!(b.fractional_cells <= 1);
        prop_assert!(b.source.belongs_to(&cls, 1e-9));
        let bound = theorem2(&p, &cls, x0).unwrap().upper.bound;
        prop_assert!(b.value <= bound + 1e-9);
    }
}
