//! Randomized invariants for the geometric and analytic primitives.

use curvesym::curve::{circle, Axis, PlanarCurve};
use curvesym::function::SampledFunction;
use curvesym::gallery::Quintic;
use curvesym::integral::{build_first_integral, Convention};
use curvesym::lemmas::assert_reflection;
use curvesym::sweep::{reflect_upper, region_contains, sweep};
use proptest::prelude::*;

fn small(x: f64) -> bool {
    x.is_finite()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// A circle's sweep finds its horizontal diameter regardless of
    /// position and scale.
    #[test]
    fn sweep_finds_circle_center(
        cx in -5.0f64..5.0,
        cy in -5.0f64..5.0,
        r in 0.2f64..3.0,
    ) {
        let c = circle([cx, cy], r, 1024);
        let result = sweep(&c, Axis::X2).unwrap();
        prop_assert!((result.lambda0 - cy).abs() <= 2.0 * c.max_segment_length());
    }

    /// Reflecting the arc above the centerline of a circle lands inside
    /// (up to tolerance) and reflecting twice restores the heights.
    #[test]
    fn reflect_upper_involution(
        cy in -3.0f64..3.0,
        r in 0.5f64..2.0,
        offset in -0.3f64..0.3,
    ) {
        let c = circle([0.0, cy], r, 1024);
        let lambda = cy + offset * r;
        let arc = reflect_upper(&c, lambda);
        prop_assert!(!arc.is_empty());
        let twice = arc.reflected(lambda);
        for (a, b) in arc.vertices().zip(twice.reflected(lambda).vertices()) {
            prop_assert!((a[1] - b[1]).abs() < 1e-12);
        }
        let tolerance = 2.0 * c.max_segment_length();
        let (inside, margin) = region_contains(&c, &arc.reflected(lambda), tolerance);
        prop_assert!(inside, "margin {margin}");
    }

    /// Translation equivariance of the signed area and the curvature
    /// profile.
    #[test]
    fn translation_invariants(
        dx in -10.0f64..10.0,
        dy in -10.0f64..10.0,
        r in 0.3f64..2.0,
    ) {
        let c = circle([0.0, 0.0], r, 512);
        let t = c.translated(dx, dy);
        prop_assert!((c.signed_area() - t.signed_area()).abs() < 1e-9 * r * r);
        let (ka, kb) = (c.curvature_profile().unwrap(), t.curvature_profile().unwrap());
        for (a, b) in ka.iter().zip(kb.iter()) {
            prop_assert!((a - b).abs() < 1e-9);
        }
    }

    /// The quintic bridge interpolates random endpoint data exactly.
    #[test]
    fn quintic_interpolates(
        t0 in -2.0f64..2.0,
        w in 0.1f64..3.0,
        y0 in -5.0f64..5.0,
        d0 in -5.0f64..5.0,
        s0 in -5.0f64..5.0,
        y1 in -5.0f64..5.0,
        d1 in -5.0f64..5.0,
        s1 in -5.0f64..5.0,
    ) {
        let q = Quintic::fit(t0, t0 + w, [y0, d0, s0], [y1, d1, s1]);
        let scale = 1.0f64.max(y0.abs()).max(y1.abs()).max(d0.abs()).max(d1.abs())
            .max(s0.abs()).max(s1.abs());
        prop_assert!((q.value(t0) - y0).abs() < 1e-9 * scale);
        prop_assert!((q.d1(t0) - d0).abs() < 1e-8 * scale);
        prop_assert!((q.d2(t0) - s0).abs() < 1e-8 * scale);
        prop_assert!((q.value(t0 + w) - y1).abs() < 1e-9 * scale);
        prop_assert!((q.d1(t0 + w) - d1).abs() < 1e-8 * scale);
        prop_assert!((q.d2(t0 + w) - s1).abs() < 1e-8 * scale);
    }

    /// F is nondecreasing from 0 for nonnegative source terms.
    #[test]
    fn first_integral_monotone(
        a in 0.0f64..3.0,
        b in 0.0f64..3.0,
        rho_max in 0.5f64..4.0,
    ) {
        let fi = build_first_integral(
            move |rho| a + b * rho * rho,
            rho_max,
            Convention::Double,
        )
        .unwrap();
        prop_assert!(small(fi.big_f(rho_max)));
        let samples = fi.f_samples();
        prop_assert!(samples[0].1.abs() < 1e-15);
        for w in samples.windows(2) {
            prop_assert!(w[1].1 >= w[0].1 - 1e-12);
        }
    }

    /// Reflection recognition on randomly placed smooth shapes.
    #[test]
    fn reflection_pairs_recognized(
        alpha in 0.0f64..1.0,
        b in 0.5f64..2.0,
        amp in -0.3f64..0.3,
    ) {
        let shape = move |x: f64| x + amp * (2.0 * x).sin();
        let n = 1025;
        let u = SampledFunction::from_fn(0.0, b, n, shape).unwrap();
        let c = b + alpha;
        let v = SampledFunction::from_fn(alpha, c, n, move |t| shape(c - t)).unwrap();
        let verdict = assert_reflection(&u, &v, 1e-8).unwrap();
        prop_assert!(verdict.pass, "deviation {}", verdict.max_deviation);
    }

    /// Curve CSV round-trip preserves every coordinate bit-exactly.
    #[test]
    fn curve_csv_round_trip(
        cx in -3.0f64..3.0,
        cy in -3.0f64..3.0,
        r in 0.2f64..2.0,
    ) {
        let c = circle([cx, cy], r, 128);
        let back = PlanarCurve::from_csv(&c.to_csv()).unwrap();
        prop_assert_eq!(c.points(), back.points());
    }
}
