//! Moving-plane sweep for closed embedded curves: reflect the part of
//! the curve above a level across that level, lower the level until the
//! reflection first fails to fit inside the region, classify how the
//! first touch happens, and test the resulting symmetry claim directly.

use serde::{Deserialize, Serialize};

use crate::curve::{Axis, PlanarCurve};
use crate::error::SweepError;
use crate::function::SampledFunction;

/// Relative width (in units of curve height) of the level bisection.
pub const LAMBDA_BISECTION_REL: f64 = 1e-9;
/// |f - level| at or below this counts as flat.
pub const FLATNESS_TOLERANCE: f64 = 1e-8;
/// Mirror-tangent mismatch allowed at a tangential touch.
pub const TANGENT_ANGLE_TOLERANCE: f64 = 1e-3;
/// Touch points within this many grid cells of the sweep line are
/// candidates for the tangential case.
pub const TOUCH_LINE_CELLS: f64 = 3.0;
/// Symmetry-verdict tolerance as a fraction of the bounding-box
/// diagonal.
pub const SYMMETRY_TOLERANCE_REL: f64 = 1e-6;

/// An open polyline fragment of a curve; possibly several disconnected
/// components, possibly empty.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Fragment {
    pub components: Vec<Vec<[f64; 2]>>,
}

impl Fragment {
    pub fn is_empty(&self) -> bool {
        self.components.iter().all(|c| c.is_empty())
    }

    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(|c| c.len()).sum()
    }

    pub fn vertices(&self) -> impl Iterator<Item = [f64; 2]> + '_ {
        self.components.iter().flatten().copied()
    }

    /// The fragment with every vertex reflected across x2 = lambda.
    pub fn reflected(&self, lambda: f64) -> Fragment {
        Fragment {
            components: self
                .components
                .iter()
                .map(|c| c.iter().map(|p| [p[0], 2.0 * lambda - p[1]]).collect())
                .collect(),
        }
    }

    pub fn transposed(&self) -> Fragment {
        Fragment {
            components: self
                .components
                .iter()
                .map(|c| c.iter().map(|p| [p[1], p[0]]).collect())
                .collect(),
        }
    }
}

/// How the reflected arc meets the curve at the critical level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TouchCase {
    /// A touch point strictly below the sweep line.
    InteriorTouch,
    /// Touching on the sweep line with matching tangents.
    TangentialTouch,
    Both,
}

/// Outcome of a completed sweep.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepResult {
    pub lambda0: f64,
    pub case: TouchCase,
    pub touch_points: Vec<[f64; 2]>,
    pub reflected_arc: Fragment,
    /// Minimum signed boundary distance of the reflected arc at
    /// lambda0 (positive inside).
    pub containment_margin: f64,
    pub axis: Axis,
    /// Whether the one-sided tangent condition held for this axis;
    /// informational — the sweep runs either way.
    pub condition_s_holds: bool,
}

/// Maximal flat intervals of a function at a level.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlateauRecord {
    pub intervals: Vec<(f64, f64)>,
    pub side: String,
}

/// Symmetry test outcome with the estimated reflection axis.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymmetryVerdict {
    pub pass: bool,
    /// Level of the best horizontal reflection axis (in the swept
    /// coordinate).
    pub axis_level: f64,
    /// Hausdorff-type deviation between the curve and its reflection.
    pub deviation: f64,
    pub tolerance: f64,
    pub axis: Axis,
}

/// The part of the curve with x2 >= lambda, reflected across the line
/// x2 = lambda. Endpoints are clipped exactly onto the line. An empty
/// fragment (lambda above the curve) is not an error.
pub fn reflect_upper(curve: &PlanarCurve, lambda: f64) -> Fragment {
    let pts = curve.points();
    let n = pts.len();
    let refl = |p: [f64; 2]| [p[0], 2.0 * lambda - p[1]];
    let clip = |a: [f64; 2], b: [f64; 2]| -> [f64; 2] {
        // intersection of segment ab with x2 = lambda
        let s = (lambda - a[1]) / (b[1] - a[1]);
        [a[0] + s * (b[0] - a[0]), lambda]
    };
    // start at a vertex below the line so components are not split
    // across the index wrap; if none exists the whole curve is above
    let start = pts.iter().position(|p| p[1] < lambda);
    let Some(start) = start else {
        return Fragment {
            components: vec![pts.iter().map(|&p| refl(p)).collect()],
        };
    };
    let mut components = Vec::new();
    let mut current: Vec<[f64; 2]> = Vec::new();
    for k in 0..n {
        let i = (start + k) % n;
        let j = (start + k + 1) % n;
        let (a, b) = (pts[i], pts[j]);
        let (ua, ub) = (a[1] >= lambda, b[1] >= lambda);
        if ua {
            if current.is_empty() {
                current.push(refl(a));
            }
            if ub {
                current.push(refl(b));
            } else {
                current.push(clip(a, b));
                components.push(std::mem::take(&mut current));
            }
        } else if ub {
            current.push(clip(a, b));
            current.push(refl(b));
        }
    }
    if !current.is_empty() {
        components.push(current);
    }
    Fragment { components }
}

/// True iff every fragment vertex lies inside the closed region or
/// within `tolerance` of its boundary; the margin is the minimum signed
/// distance (positive inside).
pub fn region_contains(curve: &PlanarCurve, fragment: &Fragment, tolerance: f64) -> (bool, f64) {
    let mut margin = f64::INFINITY;
    for p in fragment.vertices() {
        margin = margin.min(curve.signed_distance(p));
    }
    if margin == f64::INFINITY {
        margin = 0.0;
    }
    (margin >= -tolerance, margin)
}

/// Runs the moving-plane sweep along the given axis: bisection for the
/// first level whose reflected arc no longer fits inside the region,
/// then touch-point extraction and case classification.
pub fn sweep(curve: &PlanarCurve, axis: Axis) -> Result<SweepResult, SweepError> {
    if axis == Axis::X1 {
        let mut r = sweep(&curve.transposed(), Axis::X2)?;
        r.axis = Axis::X1;
        r.touch_points = r.touch_points.iter().map(|p| [p[1], p[0]]).collect();
        r.reflected_arc = r.reflected_arc.transposed();
        r.condition_s_holds = curve
            .check_condition_s(Axis::X1)
            .map(|rep| rep.holds)
            .unwrap_or(false);
        return Ok(r);
    }
    let (lo_b, hi_b) = curve.bounds();
    let height = hi_b[1] - lo_b[1];
    if !(height > 0.0) || curve.signed_area().abs() == 0.0 {
        return Err(SweepError::DegenerateCurve);
    }
    let tolerance = 2.0 * curve.max_segment_length();
    let fits = |lambda: f64| -> bool {
        let frag = reflect_upper(curve, lambda);
        region_contains(curve, &frag, tolerance).0
    };
    // the reflected arc is empty or a sliver near the top (fits) and
    // overshoots the top near the bottom (does not fit)
    let mut hi = hi_b[1];
    let mut lo = lo_b[1];
    if !fits(hi) {
        // top tangency sliver already fails: critical level is the top
        lo = hi;
    }
    while hi - lo > LAMBDA_BISECTION_REL * height {
        let mid = 0.5 * (hi + lo);
        if fits(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let lambda0 = hi;
    let reflected_arc = reflect_upper(curve, lambda0);
    let (_, containment_margin) = region_contains(curve, &reflected_arc, tolerance);
    // touch points: reflected-arc vertices at (near-)minimal boundary
    // distance, capped at the containment tolerance
    let cell = curve.max_segment_length();
    let dists: Vec<(usize, [f64; 2], f64)> = reflected_arc
        .vertices()
        .enumerate()
        .map(|(i, p)| (i, p, curve.distance_to_boundary(p)))
        .collect();
    let min_d = dists
        .iter()
        .map(|d| d.2)
        .fold(f64::INFINITY, f64::min);
    let window = (min_d + 0.5 * cell).max(cell);
    let mut touch_points: Vec<[f64; 2]> = Vec::new();
    for &(_, p, d) in &dists {
        if d <= window {
            // dedupe clusters closer than one cell
            if touch_points
                .iter()
                .all(|q| (q[0] - p[0]).hypot(q[1] - p[1]) > cell)
            {
                touch_points.push(p);
            }
        }
    }
    let mut has_interior = false;
    let mut has_tangential = false;
    for p in &touch_points {
        if (p[1] - lambda0).abs() <= TOUCH_LINE_CELLS * cell {
            if tangents_match(curve, &reflected_arc, *p, cell) {
                has_tangential = true;
            } else {
                has_interior = true;
            }
        } else if p[1] < lambda0 {
            has_interior = true;
        }
    }
    let case = match (has_interior, has_tangential) {
        (true, true) => TouchCase::Both,
        (false, true) => TouchCase::TangentialTouch,
        _ => TouchCase::InteriorTouch,
    };
    let condition_s_holds = curve
        .check_condition_s(Axis::X2)
        .map(|r| r.holds)
        .unwrap_or(false);
    Ok(SweepResult {
        lambda0,
        case,
        touch_points,
        reflected_arc,
        containment_margin,
        axis: Axis::X2,
        condition_s_holds,
    })
}

/// Compares the reflected-arc tangent direction with the curve tangent
/// nearest to `p`, modulo orientation.
fn tangents_match(curve: &PlanarCurve, arc: &Fragment, p: [f64; 2], cell: f64) -> bool {
    let arc_dir = nearest_direction(
        arc.components.iter().map(|c| c.as_slice()),
        p,
    );
    let pts = curve.points();
    let mut closed: Vec<[f64; 2]> = pts.to_vec();
    closed.push(pts[0]);
    let curve_dir = nearest_direction(std::iter::once(closed.as_slice()), p);
    match (arc_dir, curve_dir) {
        (Some(a), Some(b)) => {
            let angle = angle_between_mod_pi(a, b);
            angle <= TANGENT_ANGLE_TOLERANCE.max(2.0 * cell)
        }
        _ => false,
    }
}

/// Direction of the polyline segment nearest to `p`.
fn nearest_direction<'a>(
    polylines: impl Iterator<Item = &'a [[f64; 2]]>,
    p: [f64; 2],
) -> Option<[f64; 2]> {
    let mut best = f64::INFINITY;
    let mut dir = None;
    for poly in polylines {
        for w in poly.windows(2) {
            let d = crate::curve::point_segment_distance(p, w[0], w[1]);
            if d < best {
                best = d;
                dir = Some([w[1][0] - w[0][0], w[1][1] - w[0][1]]);
            }
        }
    }
    dir
}

fn angle_between_mod_pi(a: [f64; 2], b: [f64; 2]) -> f64 {
    let na = (a[0] * a[0] + a[1] * a[1]).sqrt();
    let nb = (b[0] * b[0] + b[1] * b[1]).sqrt();
    if na == 0.0 || nb == 0.0 {
        return std::f64::consts::FRAC_PI_2;
    }
    let cosv = ((a[0] * b[0] + a[1] * b[1]) / (na * nb)).abs().min(1.0);
    cosv.acos()
}

/// Estimates the best horizontal reflection axis (in the coordinate
/// swept by `axis`) and tests the curve against its own reflection.
pub fn symmetry_verdict(
    curve: &PlanarCurve,
    axis: Axis,
    axis_level_hint: Option<f64>,
) -> SymmetryVerdict {
    if axis == Axis::X1 {
        let mut v = symmetry_verdict(&curve.transposed(), Axis::X2, axis_level_hint);
        v.axis = Axis::X1;
        return v;
    }
    let (lo_b, hi_b) = curve.bounds();
    // relative tolerance: discretization deviation of a genuinely
    // symmetric polygon is O(curvature * cell^2), far below this, while
    // geometric asymmetries (even ones much smaller than a cell) exceed it
    let diag = (hi_b[0] - lo_b[0]).hypot(hi_b[1] - lo_b[1]);
    let tolerance = SYMMETRY_TOLERANCE_REL * diag;
    let seed = axis_level_hint.unwrap_or(0.5 * (lo_b[1] + hi_b[1]));
    let height = hi_b[1] - lo_b[1];
    let stride = (curve.len() / 256).max(1);
    let dev_sub = |c: f64| reflection_deviation(curve, c, stride);
    // coarse scan around the seed, then golden-section refinement
    let mut best_c = seed;
    let mut best_d = dev_sub(seed);
    let half = 0.25 * height;
    for k in -20..=20 {
        let c = seed + half * k as f64 / 20.0;
        let d = dev_sub(c);
        if d < best_d {
            best_d = d;
            best_c = c;
        }
    }
    let (mut a, mut b) = (best_c - half / 20.0, best_c + half / 20.0);
    for _ in 0..60 {
        let m1 = a + (b - a) / 3.0;
        let m2 = b - (b - a) / 3.0;
        if dev_sub(m1) <= dev_sub(m2) {
            b = m2;
        } else {
            a = m1;
        }
    }
    let axis_level = 0.5 * (a + b);
    let deviation = reflection_deviation(curve, axis_level, 1);
    SymmetryVerdict {
        pass: deviation <= tolerance,
        axis_level,
        deviation,
        tolerance,
        axis: Axis::X2,
    }
}

/// Sup over vertices of the distance from the reflected vertex to the
/// curve (one-sided Hausdorff; the two sides agree for a reflection of
/// the same curve). `stride` subsamples vertices for speed.
fn reflection_deviation(curve: &PlanarCurve, c: f64, stride: usize) -> f64 {
    let mut worst = 0.0f64;
    for p in curve.points().iter().step_by(stride) {
        let q = [p[0], 2.0 * c - p[1]];
        worst = worst.max(curve.distance_to_boundary(q));
    }
    worst
}

/// Maximal parameter intervals where `|f - level|` stays within the
/// flatness tolerance.
pub fn plateau_intervals(f: &SampledFunction, level: f64) -> PlateauRecord {
    let mut intervals = Vec::new();
    let mut open: Option<f64> = None;
    for i in 0..f.len() {
        let flat = (f.values()[i] - level).abs() <= FLATNESS_TOLERANCE;
        match (flat, open) {
            (true, None) => open = Some(f.node(i)),
            (false, Some(s)) => {
                intervals.push((s, f.node(i - 1)));
                open = None;
            }
            _ => {}
        }
    }
    if let Some(s) = open {
        intervals.push((s, f.domain_end()));
    }
    // drop single-node touches: a plateau needs positive length
    intervals.retain(|(s, e)| e > s);
    PlateauRecord {
        intervals,
        side: "original".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{circle, ellipse};

    #[test]
    fn reflect_circle_at_equator() {
        let c = circle([0.0, 0.0], 1.0, 2048);
        let frag = reflect_upper(&c, 0.0);
        assert_eq!(frag.components.len(), 1);
        // reflected upper semicircle lies on the lower semicircle
        for p in frag.vertices() {
            assert!(p[1] <= 1e-12);
            assert!(((p[0] * p[0] + p[1] * p[1]).sqrt() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn reflect_above_top_is_empty() {
        let c = circle([0.0, 0.0], 1.0, 512);
        assert!(reflect_upper(&c, 1.5).is_empty());
    }

    #[test]
    fn reflect_idempotent_on_upper_arc() {
        let c = ellipse([0.3, -0.2], 1.0, 2.0, 1024);
        let lambda = 0.4;
        let once = reflect_upper(&c, lambda);
        let twice = once.reflected(lambda).reflected(lambda);
        for (a, b) in once.vertices().zip(twice.vertices()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn containment_margins() {
        let c = circle([0.0, 0.0], 1.0, 1024);
        let inside = Fragment {
            components: vec![vec![[0.0, 0.0]]],
        };
        let outside = Fragment {
            components: vec![vec![[2.0, 0.0]]],
        };
        let (ok, m) = region_contains(&c, &inside, 1e-9);
        assert!(ok && (m - 1.0).abs() < 1e-4);
        let (ok, m) = region_contains(&c, &outside, 1e-9);
        assert!(!ok && (m + 1.0).abs() < 1e-4);
    }

    #[test]
    fn sweep_circle_finds_center() {
        let c = circle([0.0, 0.5], 1.0, 2048);
        let r = sweep(&c, Axis::X2).unwrap();
        let cell = c.max_segment_length();
        assert!((r.lambda0 - 0.5).abs() <= 2.0 * cell, "lambda0 {}", r.lambda0);
        assert!(r.condition_s_holds);
    }

    #[test]
    fn sweep_vertical_ellipse() {
        let c = ellipse([0.0, 0.0], 1.0, 2.0, 2048);
        let r = sweep(&c, Axis::X2).unwrap();
        assert!((r.lambda0 - 0.0).abs() <= 2.0 * c.max_segment_length());
    }

    #[test]
    fn sweep_translation_equivariance() {
        let c = ellipse([0.0, 0.0], 1.5, 1.0, 1024);
        let r0 = sweep(&c, Axis::X2).unwrap();
        let r1 = sweep(&c.translated(0.0, 2.5), Axis::X2).unwrap();
        assert!((r1.lambda0 - r0.lambda0 - 2.5).abs() < 1e-7);
    }

    #[test]
    fn sweep_axis_transposition() {
        let c = ellipse([0.7, 0.0], 2.0, 1.0, 1024);
        let r = sweep(&c, Axis::X1).unwrap();
        assert!((r.lambda0 - 0.7).abs() <= 2.0 * c.max_segment_length());
        assert_eq!(r.axis, Axis::X1);
    }

    #[test]
    fn symmetry_verdict_circle() {
        let c = circle([0.0, -0.7], 1.0, 2048);
        let v = symmetry_verdict(&c, Axis::X2, None);
        assert!(v.pass, "deviation {}", v.deviation);
        assert!((v.axis_level + 0.7).abs() <= c.max_segment_length());
    }

    #[test]
    fn symmetry_verdict_asymmetric_blob_fails() {
        // an egg-like closed curve, asymmetric in x2
        let n = 2048;
        let pts: Vec<[f64; 2]> = (0..n)
            .map(|i| {
                let th = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
                let r = 1.0 + 0.35 * th.sin().powi(3);
                [r * th.cos(), r * th.sin()]
            })
            .collect();
        let c = PlanarCurve::new(pts).unwrap();
        let v = symmetry_verdict(&c, Axis::X2, None);
        assert!(!v.pass, "deviation {}", v.deviation);
    }

    #[test]
    fn plateau_detection() {
        let f = SampledFunction::from_fn(0.0, 3.0, 3001, |t| {
            if t <= 1.0 {
                t
            } else if t <= 2.0 {
                1.0
            } else {
                t - 1.0
            }
        })
        .unwrap();
        let rec = plateau_intervals(&f, 1.0);
        assert_eq!(rec.intervals.len(), 1);
        let (s, e) = rec.intervals[0];
        assert!((s - 1.0).abs() < 1e-3 && (e - 2.0).abs() < 1e-3);
        let strict = SampledFunction::from_fn(0.0, 1.0, 101, |t| t).unwrap();
        assert!(plateau_intervals(&strict, 0.5).intervals.is_empty());
    }

    #[test]
    fn sweep_result_serializes() {
        let c = circle([0.0, 0.0], 1.0, 512);
        let r = sweep(&c, Axis::X2).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("lambda0"));
        let back: SweepResult = serde_json::from_str(&s).unwrap();
        assert_eq!(back.case, r.case);
    }
}
