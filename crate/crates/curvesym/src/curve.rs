//! Discretized closed planar curves: curvature, vertical fibers,
//! embeddedness, the one-sided tangent-line condition, and the
//! monotone-curvature comparison across fiber pairs.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::CurveError;

/// Absolute curvature slack below which a fiber pair still passes.
pub const CONDITION_TOLERANCE: f64 = 1e-6;
/// Curvature gap above which a pair counts as a strict witness.
pub const STRICT_THRESHOLD: f64 = 1e-4;
/// Number of fiber lines sampled between the coordinate extremes.
pub const FIBER_LINES: usize = 512;
/// Tangency window: coordinate derivative below this over a vertex
/// marks a tangent parallel to the sweep axis.
pub const TANGENCY_WINDOW: f64 = 1e-7;

/// Which coordinate orders the compared pair (equivalently, which
/// family of fiber lines is scanned).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axis {
    /// Pairs share x2 and are ordered by x1 (horizontal fibers).
    X1,
    /// Pairs share x1 and are ordered by x2 (vertical fibers).
    X2,
}

/// A closed, oriented, discretized planar curve. The last point
/// connects implicitly to the first.
#[derive(Clone)]
pub struct PlanarCurve {
    points: Vec<[f64; 2]>,
    counterclockwise: bool,
    /// Exact per-vertex curvature supplied by an analytic construction;
    /// overrides the circumcircle estimate when present.
    analytic_curvature: Option<Vec<f64>>,
}

impl std::fmt::Debug for PlanarCurve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PlanarCurve")
            .field("n", &self.points.len())
            .field("ccw", &self.counterclockwise)
            .field("analytic", &self.analytic_curvature.is_some())
            .finish()
    }
}

/// Verdict container for curve-wide pair conditions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConditionReport {
    pub holds: bool,
    /// Minimum slack over all tested pairs (positive means strict room).
    pub margin: f64,
    pub violations: Vec<PairWitness>,
    /// Pairs whose gap exceeds the strict threshold (condition still
    /// holds; these witness strict inequality).
    pub strict_pairs: Vec<PairWitness>,
    pub pairs_tested: usize,
}

/// One compared pair of points with the measured values.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairWitness {
    pub lower: [f64; 2],
    pub upper: [f64; 2],
    pub value_lower: f64,
    pub value_upper: f64,
}

/// One intersection of a fiber line with the curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiberPoint {
    pub height: f64,
    pub tangential: bool,
}

impl PlanarCurve {
    pub fn new(points: Vec<[f64; 2]>) -> Result<Self, CurveError> {
        if points.len() < 3 {
            return Err(CurveError::TooFewPoints {
                got: points.len(),
                need: 3,
            });
        }
        for (i, p) in points.iter().enumerate() {
            if !p[0].is_finite() || !p[1].is_finite() {
                return Err(CurveError::NonFiniteCoordinate(i));
            }
        }
        let n = points.len();
        for i in 0..n {
            let j = (i + 1) % n;
            if points[i] == points[j] {
                return Err(CurveError::DuplicatePoint(i, j));
            }
        }
        let counterclockwise = signed_area(&points) > 0.0;
        Ok(Self {
            points,
            counterclockwise,
            analytic_curvature: None,
        })
    }

    /// Attaches exact per-vertex curvature from a closed-form construction.
    pub fn with_analytic_curvature(
        points: Vec<[f64; 2]>,
        curvature: Vec<f64>,
    ) -> Result<Self, CurveError> {
        assert_eq!(points.len(), curvature.len());
        let mut c = Self::new(points)?;
        c.analytic_curvature = Some(curvature);
        Ok(c)
    }

    pub fn points(&self) -> &[[f64; 2]] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_counterclockwise(&self) -> bool {
        self.counterclockwise
    }

    pub fn signed_area(&self) -> f64 {
        signed_area(&self.points)
    }

    pub fn bounds(&self) -> ([f64; 2], [f64; 2]) {
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for p in &self.points {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        (lo, hi)
    }

    /// Longest polygon edge, the geometric resolution of the curve.
    pub fn max_segment_length(&self) -> f64 {
        let n = self.points.len();
        (0..n)
            .map(|i| dist(self.points[i], self.points[(i + 1) % n]))
            .fold(0.0, f64::max)
    }

    /// Curve translated by `(dx, dy)`; analytic curvature carries over.
    pub fn translated(&self, dx: f64, dy: f64) -> PlanarCurve {
        let points = self.points.iter().map(|p| [p[0] + dx, p[1] + dy]).collect();
        PlanarCurve {
            points,
            counterclockwise: self.counterclockwise,
            analytic_curvature: self.analytic_curvature.clone(),
        }
    }

    /// Curve with the two coordinates swapped (used to run vertical-fiber
    /// machinery along the other axis). Curvature magnitudes are
    /// preserved; the swap reverses orientation so signs stay consistent.
    pub fn transposed(&self) -> PlanarCurve {
        let points: Vec<[f64; 2]> = self.points.iter().map(|p| [p[1], p[0]]).collect();
        let counterclockwise = signed_area(&points) > 0.0;
        PlanarCurve {
            points,
            counterclockwise,
            analytic_curvature: self.analytic_curvature.clone(),
        }
    }

    /// Per-vertex signed curvature with respect to the interior normal:
    /// a counterclockwise circle has positive curvature. Circumcircle of
    /// each vertex and its two neighbors, unless exact values are attached.
    pub fn curvature_profile(&self) -> Result<Vec<f64>, CurveError> {
        if let Some(k) = &self.analytic_curvature {
            return Ok(k.clone());
        }
        let n = self.points.len();
        let orient = if self.counterclockwise { 1.0 } else { -1.0 };
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.points[(i + n - 1) % n];
            let b = self.points[i];
            let c = self.points[(i + 1) % n];
            let ab = dist(a, b);
            let bc = dist(b, c);
            let ca = dist(c, a);
            let cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
            let denom = ab * bc * ca;
            if denom == 0.0 {
                return Err(CurveError::DegenerateTriple(i));
            }
            out.push(orient * 2.0 * cross / denom);
        }
        Ok(out)
    }

    /// All heights where the vertical line `x1 = const` meets the curve,
    /// ascending. Tangential touches are reported once and flagged.
    pub fn vertical_fiber(&self, x1: f64) -> Vec<FiberPoint> {
        let n = self.points.len();
        let (lo, hi) = self.bounds();
        let scale = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1.0);
        let eps = 1e-12 * scale;
        // classify each vertex relative to the line
        let side = |p: [f64; 2]| -> i8 {
            if (p[0] - x1).abs() <= eps {
                0
            } else if p[0] > x1 {
                1
            } else {
                -1
            }
        };
        let mut hits: Vec<FiberPoint> = Vec::new();
        let mut i = 0;
        while i < n {
            let p = self.points[i];
            let q = self.points[(i + 1) % n];
            let (sp, sq) = (side(p), side(q));
            if sp != 0 && sq != 0 && sp != sq {
                // transversal edge crossing
                let t = (x1 - p[0]) / (q[0] - p[0]);
                hits.push(FiberPoint {
                    height: p[1] + t * (q[1] - p[1]),
                    tangential: false,
                });
                i += 1;
            } else if sq == 0 {
                // walk the run of on-line vertices starting at i+1
                let run_start = (i + 1) % n;
                let mut j = run_start;
                let mut run_len = 1;
                while side(self.points[(j + 1) % n]) == 0 && run_len < n {
                    j = (j + 1) % n;
                    run_len += 1;
                }
                let after = side(self.points[(j + 1) % n]);
                let before = sp;
                let heights: Vec<f64> = (0..run_len)
                    .map(|k| self.points[(run_start + k) % n][1])
                    .collect();
                let h = heights.iter().sum::<f64>() / run_len as f64;
                if before != 0 && after != 0 {
                    hits.push(FiberPoint {
                        height: h,
                        tangential: before == after,
                    });
                }
                i += run_len + 1;
            } else {
                i += 1;
            }
        }
        hits.sort_by(|a, b| a.height.total_cmp(&b.height));
        hits.dedup_by(|a, b| {
            if (a.height - b.height).abs() <= eps {
                b.tangential |= a.tangential;
                true
            } else {
                false
            }
        });
        hits
    }

    /// Curvature at an arbitrary boundary point, taken from the nearest
    /// vertex of the profile.
    fn curvature_near(&self, p: [f64; 2], profile: &[f64]) -> f64 {
        let mut best = 0;
        let mut best_d = f64::INFINITY;
        for (i, q) in self.points.iter().enumerate() {
            let d = dist(p, *q);
            if d < best_d {
                best_d = d;
                best = i;
            }
        }
        profile[best]
    }

    /// Checks the fiber-pair curvature ordering: for points A, B on a
    /// common fiber with A below B along the chosen axis, curvature at B
    /// must not exceed curvature at A (within tolerance). Strict pairs
    /// beyond the strict threshold are recorded as witnesses.
    pub fn check_monotone_curvature_condition(
        &self,
        axis: Axis,
    ) -> Result<ConditionReport, CurveError> {
        // vertical fibers order by x2; for ordering by x1 transpose first
        let work = match axis {
            Axis::X2 => self.clone(),
            Axis::X1 => self.transposed(),
        };
        let profile = work.curvature_profile()?;
        // fiber abscissas follow the quantiles of the vertex abscissas,
        // so features much narrower than the bounding box (e.g. a
        // shallow bump band) still receive fibers; midpoints between
        // distinct consecutive values keep fibers off the vertices
        let mut xs: Vec<f64> = work.points.iter().map(|p| p[0]).collect();
        xs.sort_by(f64::total_cmp);
        let mut report = ConditionReport {
            holds: true,
            margin: f64::INFINITY,
            violations: Vec::new(),
            strict_pairs: Vec::new(),
            pairs_tested: 0,
        };
        for k in 1..FIBER_LINES {
            let pos = k * (xs.len() - 1) / FIBER_LINES;
            if xs[pos + 1] <= xs[pos] {
                continue;
            }
            let x = 0.5 * (xs[pos] + xs[pos + 1]);
            let fiber = work.vertical_fiber(x);
            if fiber.iter().any(|f| f.tangential) {
                continue; // skip lines at/near a vertical tangency
            }
            for i in 0..fiber.len() {
                for j in i + 1..fiber.len() {
                    let (a, b) = (fiber[i], fiber[j]); // a below b
                    let ka = work.curvature_near([x, a.height], &profile);
                    let kb = work.curvature_near([x, b.height], &profile);
                    let slack = ka - kb; // condition: kb <= ka
                    report.pairs_tested += 1;
                    report.margin = report.margin.min(slack);
                    let witness = PairWitness {
                        lower: [x, a.height],
                        upper: [x, b.height],
                        value_lower: ka,
                        value_upper: kb,
                    };
                    if slack < -CONDITION_TOLERANCE {
                        report.holds = false;
                        report.violations.push(witness);
                    } else if slack >= STRICT_THRESHOLD {
                        report.strict_pairs.push(witness);
                    }
                }
            }
        }
        if report.pairs_tested == 0 {
            report.margin = 0.0;
        }
        Ok(report)
    }

    /// One-sided tangent-line check: every tangent line parallel to the
    /// chosen axis must leave the whole curve weakly on one side.
    pub fn check_condition_s(&self, axis: Axis) -> Result<ConditionReport, CurveError> {
        // tangent parallel to x2-axis <=> extremum of x1 along the curve
        let work = match axis {
            Axis::X2 => self.clone(),
            Axis::X1 => self.transposed(),
        };
        let n = work.points.len();
        let xs: Vec<f64> = work.points.iter().map(|p| p[0]).collect();
        let (lo, hi) = work.bounds();
        let scale = (hi[0] - lo[0]).max(1e-30);
        let mut report = ConditionReport {
            holds: true,
            margin: f64::INFINITY,
            violations: Vec::new(),
            strict_pairs: Vec::new(),
            pairs_tested: 0,
        };
        // a tangency is a sign change of the forward difference of x1,
        // or a plateau where the difference stays inside the window
        for i in 0..n {
            let prev = xs[(i + n - 1) % n];
            let here = xs[i];
            let next = xs[(i + 1) % n];
            let d_in = here - prev;
            let d_out = next - here;
            let flat = d_in.abs() <= TANGENCY_WINDOW * scale || d_out.abs() <= TANGENCY_WINDOW * scale;
            let reversal = d_in * d_out < 0.0;
            if !(reversal || flat) {
                continue;
            }
            // candidate tangent line x1 = here; require local extremum
            let is_max = prev <= here + TANGENCY_WINDOW * scale && next <= here + TANGENCY_WINDOW * scale;
            let is_min = prev >= here - TANGENCY_WINDOW * scale && next >= here - TANGENCY_WINDOW * scale;
            if !is_max && !is_min {
                continue;
            }
            report.pairs_tested += 1;
            let tol = TANGENCY_WINDOW * scale;
            for (j, p) in work.points.iter().enumerate() {
                let excess = if is_max { p[0] - here } else { here - p[0] };
                report.margin = report.margin.min(-excess);
                if excess > tol.max(1e-9 * scale) {
                    report.holds = false;
                    report.violations.push(PairWitness {
                        lower: work.points[i],
                        upper: *p,
                        value_lower: here,
                        value_upper: p[0],
                    });
                    // one witness per tangency suffices
                    let _ = j;
                    break;
                }
            }
        }
        if report.pairs_tested == 0 {
            report.margin = 0.0;
        }
        Ok(report)
    }

    /// True iff no two non-adjacent edges intersect.
    pub fn check_embedded(&self) -> (bool, Option<(usize, usize)>) {
        let n = self.points.len();
        for i in 0..n {
            let a = self.points[i];
            let b = self.points[(i + 1) % n];
            for j in i + 1..n {
                // skip adjacent segments (shared vertex)
                if j == i || (j + 1) % n == i || (i + 1) % n == j {
                    continue;
                }
                let c = self.points[j];
                let d = self.points[(j + 1) % n];
                if segments_intersect(a, b, c, d) {
                    return (false, Some((i, j)));
                }
            }
        }
        (true, None)
    }

    /// Even-odd point-in-polygon test (boundary counts as inside).
    pub fn contains_point(&self, p: [f64; 2]) -> bool {
        if self.distance_to_boundary(p) <= 1e-12 {
            return true;
        }
        let n = self.points.len();
        let mut inside = false;
        for i in 0..n {
            let a = self.points[i];
            let b = self.points[(i + 1) % n];
            if (a[1] > p[1]) != (b[1] > p[1]) {
                let x = a[0] + (p[1] - a[1]) / (b[1] - a[1]) * (b[0] - a[0]);
                if p[0] < x {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Minimum distance from `p` to the polygon boundary.
    pub fn distance_to_boundary(&self, p: [f64; 2]) -> f64 {
        let n = self.points.len();
        (0..n)
            .map(|i| point_segment_distance(p, self.points[i], self.points[(i + 1) % n]))
            .fold(f64::INFINITY, f64::min)
    }

    /// Signed distance: positive inside, negative outside.
    pub fn signed_distance(&self, p: [f64; 2]) -> f64 {
        let d = self.distance_to_boundary(p);
        if self.contains_point(p) {
            d
        } else {
            -d
        }
    }

    /// CSV with columns `x1,x2`; closure is implicit.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x1,x2\n");
        for p in &self.points {
            let _ = writeln!(out, "{},{}", crate::function::fmt_full(p[0]), crate::function::fmt_full(p[1]));
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self, CurveError> {
        let mut points = Vec::new();
        for line in text.lines().skip(1) {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split(',');
            let x: f64 = it.next().and_then(|s| s.trim().parse().ok()).unwrap_or(f64::NAN);
            let y: f64 = it.next().and_then(|s| s.trim().parse().ok()).unwrap_or(f64::NAN);
            points.push([x, y]);
        }
        Self::new(points)
    }

    pub fn to_json_record(&self) -> CurveRecord {
        CurveRecord {
            points: self.points.clone(),
            orientation: if self.counterclockwise { "ccw" } else { "cw" }.to_string(),
        }
    }

    pub fn from_json_record(rec: CurveRecord) -> Result<Self, CurveError> {
        Self::new(rec.points)
    }
}

/// JSON shape of a curve file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveRecord {
    pub points: Vec<[f64; 2]>,
    pub orientation: String,
}

pub fn signed_area(points: &[[f64; 2]]) -> f64 {
    let n = points.len();
    let mut a = 0.0;
    for i in 0..n {
        let p = points[i];
        let q = points[(i + 1) % n];
        a += p[0] * q[1] - q[0] * p[1];
    }
    0.5 * a
}

fn dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

fn orient(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

/// Proper or improper intersection of closed segments ab and cd.
pub fn segments_intersect(a: [f64; 2], b: [f64; 2], c: [f64; 2], d: [f64; 2]) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    let on = |p: [f64; 2], q: [f64; 2], r: [f64; 2], o: f64| {
        o == 0.0
            && r[0] >= p[0].min(q[0])
            && r[0] <= p[0].max(q[0])
            && r[1] >= p[1].min(q[1])
            && r[1] <= p[1].max(q[1])
    };
    on(c, d, a, d1) || on(c, d, b, d2) || on(a, b, c, d3) || on(a, b, d, d4)
}

pub fn point_segment_distance(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    let ab = [b[0] - a[0], b[1] - a[1]];
    let ap = [p[0] - a[0], p[1] - a[1]];
    let len2 = ab[0] * ab[0] + ab[1] * ab[1];
    let t = if len2 == 0.0 {
        0.0
    } else {
        ((ap[0] * ab[0] + ap[1] * ab[1]) / len2).clamp(0.0, 1.0)
    };
    let proj = [a[0] + t * ab[0], a[1] + t * ab[1]];
    dist(p, proj)
}

/// Regular n-gon approximation of a circle, counterclockwise.
pub fn circle(center: [f64; 2], radius: f64, n: usize) -> PlanarCurve {
    let points = (0..n)
        .map(|i| {
            let th = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
            [center[0] + radius * th.cos(), center[1] + radius * th.sin()]
        })
        .collect();
    PlanarCurve::new(points).expect("circle is a valid curve")
}

/// Axis-aligned ellipse, counterclockwise.
pub fn ellipse(center: [f64; 2], rx: f64, ry: f64, n: usize) -> PlanarCurve {
    let points = (0..n)
        .map(|i| {
            let th = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
            [center[0] + rx * th.cos(), center[1] + ry * th.sin()]
        })
        .collect();
    PlanarCurve::new(points).expect("ellipse is a valid curve")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_curvature_is_inverse_radius() {
        let c = circle([0.0, 0.0], 2.0, 2048);
        let k = c.curvature_profile().unwrap();
        for v in k {
            assert!((v - 0.5).abs() < 1e-5, "kappa {v}");
        }
    }

    #[test]
    fn ellipse_curvature_second_order_convergence() {
        // the circumcircle estimate is exact on circles, so convergence
        // is measured on an ellipse against the closed form
        let (rx, ry) = (1.0, 0.5);
        let err = |n: usize| {
            let c = ellipse([0.0, 0.0], rx, ry, n);
            let k = c.curvature_profile().unwrap();
            (0..n)
                .map(|i| {
                    let th = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
                    let exact = rx * ry
                        / ((rx * th.sin()).powi(2) + (ry * th.cos()).powi(2)).powf(1.5);
                    (k[i] - exact).abs()
                })
                .fold(0.0f64, f64::max)
        };
        let ratio = err(512) / err(1024);
        assert!((3.0..=5.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn parabola_vertex_curvature() {
        // graph y = x^2 near x = 0, closed off far away
        let mut pts: Vec<[f64; 2]> = Vec::new();
        let n = 4001;
        for i in 0..n {
            let x = -1.0 + 2.0 * i as f64 / (n - 1) as f64;
            pts.push([x, x * x]);
        }
        pts.push([1.0, 10.0]);
        pts.push([-1.0, 10.0]);
        let c = PlanarCurve::new(pts).unwrap();
        let k = c.curvature_profile().unwrap();
        // vertex nearest x = 0 is index (n-1)/2; convexity flips the sign
        // relative to the interior (region above the parabola), so |k| = 2
        let kv = k[(n - 1) / 2].abs();
        assert!((kv - 2.0).abs() < 1e-4, "kappa {kv}");
    }

    #[test]
    fn clockwise_circle_still_positive_curvature() {
        let mut c = circle([0.0, 0.0], 1.0, 512);
        let mut pts = c.points().to_vec();
        pts.reverse();
        c = PlanarCurve::new(pts).unwrap();
        assert!(!c.is_counterclockwise());
        let k = c.curvature_profile().unwrap();
        assert!(k.iter().all(|&v| v > 0.0));
    }

    #[test]
    fn unit_circle_fibers() {
        let c = circle([0.0, 0.0], 1.0, 8192);
        let f = c.vertical_fiber(0.0);
        assert_eq!(f.len(), 2);
        assert!((f[0].height + 1.0).abs() < 1e-6);
        assert!((f[1].height - 1.0).abs() < 1e-6);
        assert!(!f[0].tangential && !f[1].tangential);

        let f = c.vertical_fiber(2.0);
        assert!(f.is_empty());
    }

    #[test]
    fn tangential_fiber_on_polygon() {
        // diamond with a right-most vertex exactly on the line
        let c = PlanarCurve::new(vec![[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]]).unwrap();
        let f = c.vertical_fiber(1.0);
        assert_eq!(f.len(), 1);
        assert!(f[0].tangential);
        assert!((f[0].height).abs() < 1e-12);
    }

    #[test]
    fn fiber_parity_even_for_transversal_lines() {
        let c = ellipse([0.3, -0.2], 1.0, 0.6, 4096);
        for k in 1..40 {
            let x = -0.69 + 1.98 * k as f64 / 40.0;
            let f = c.vertical_fiber(x);
            if f.iter().any(|p| p.tangential) {
                continue;
            }
            assert_eq!(f.len() % 2, 0, "x = {x}: {} hits", f.len());
        }
    }

    #[test]
    fn circle_satisfies_monotone_curvature() {
        let c = circle([0.0, 0.0], 1.0, 2048);
        let r = c.check_monotone_curvature_condition(Axis::X2).unwrap();
        assert!(r.holds);
        assert!(r.margin.abs() < 1e-5, "margin {}", r.margin);
        assert!(r.strict_pairs.is_empty());
    }

    #[test]
    fn ellipse_satisfies_monotone_curvature() {
        let c = ellipse([0.0, 0.0], 2.0, 1.0, 4096);
        let r = c.check_monotone_curvature_condition(Axis::X2).unwrap();
        assert!(r.holds, "margin {}", r.margin);
        // mirror-symmetric fibers: gaps vanish up to discretization
        assert!(r.margin.abs() < 1e-4);
    }

    #[test]
    fn condition_s_holds_for_circle_and_ellipse() {
        let c = circle([0.0, 0.0], 1.0, 1024);
        let r = c.check_condition_s(Axis::X2).unwrap();
        assert!(r.holds);
        let e = ellipse([1.0, 2.0], 0.5, 1.5, 1024);
        let r = e.check_condition_s(Axis::X2).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn condition_s_fails_for_crescent() {
        // outer arc of a big circle plus inner arc of a smaller circle
        // whose vertical tangent line crosses the far lobe
        let mut pts: Vec<[f64; 2]> = Vec::new();
        let n = 600;
        for i in 0..=n {
            let th = -1.2 + 2.4 * i as f64 / n as f64;
            pts.push([th.cos(), th.sin()]);
        }
        for i in (1..n).rev() {
            let th = -1.2 + 2.4 * i as f64 / n as f64;
            // inner boundary bulging left, leaving a crescent
            pts.push([0.55 + 0.38 * th.cos(), 0.42 * th.sin()]);
        }
        let c = PlanarCurve::new(pts).unwrap();
        assert!(c.check_embedded().0);
        let r = c.check_condition_s(Axis::X2).unwrap();
        assert!(!r.holds, "margin {}", r.margin);
        assert!(!r.violations.is_empty());
    }

    #[test]
    fn embedded_check_flags_figure_eight() {
        let c = circle([0.0, 0.0], 1.0, 256);
        assert!(c.check_embedded().0);

        let eight =
            PlanarCurve::new(vec![[0.0, 0.0], [1.0, 1.0], [1.0, 0.0], [0.0, 1.0]]).unwrap();
        let (ok, witness) = eight.check_embedded();
        assert!(!ok);
        assert!(witness.is_some());
    }

    #[test]
    fn noisy_circle_still_embedded() {
        // deterministic 1% radial perturbation
        let n = 1024;
        let pts = (0..n)
            .map(|i| {
                let th = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
                let r = 1.0 + 0.01 * (7.0 * th).sin();
                [r * th.cos(), r * th.sin()]
            })
            .collect();
        let c = PlanarCurve::new(pts).unwrap();
        assert!(c.check_embedded().0);
    }

    #[test]
    fn translation_invariance_of_checks() {
        let c = ellipse([0.0, 0.0], 1.5, 0.8, 1024);
        let t = c.translated(3.2, -1.7);
        let r0 = c.check_monotone_curvature_condition(Axis::X2).unwrap();
        let r1 = t.check_monotone_curvature_condition(Axis::X2).unwrap();
        assert_eq!(r0.holds, r1.holds);
        assert!((r0.margin - r1.margin).abs() < 1e-9);
        let s0 = c.check_condition_s(Axis::X2).unwrap();
        let s1 = t.check_condition_s(Axis::X2).unwrap();
        assert_eq!(s0.holds, s1.holds);
    }

    #[test]
    fn reflection_preserves_curvature_profile_and_margin() {
        let c = ellipse([0.0, 0.5], 1.5, 0.8, 1024);
        let reflected: Vec<[f64; 2]> =
            c.points().iter().rev().map(|p| [p[0], 1.0 - p[1]]).collect();
        let rc = PlanarCurve::new(reflected).unwrap();
        let k0 = c.curvature_profile().unwrap();
        let mut k1 = rc.curvature_profile().unwrap();
        k1.reverse();
        for (a, b) in k0.iter().zip(&k1) {
            assert!((a - b).abs() < 1e-9);
        }
        let r0 = c.check_monotone_curvature_condition(Axis::X2).unwrap();
        let r1 = rc.check_monotone_curvature_condition(Axis::X2).unwrap();
        assert!((r0.margin - r1.margin).abs() < 1e-6);
    }

    #[test]
    fn csv_and_json_round_trip() {
        let c = circle([0.2, -0.4], 1.0, 64);
        let back = PlanarCurve::from_csv(&c.to_csv()).unwrap();
        assert_eq!(c.points(), back.points());
        let rec = c.to_json_record();
        let s = serde_json::to_string(&rec).unwrap();
        let rec2: CurveRecord = serde_json::from_str(&s).unwrap();
        let back2 = PlanarCurve::from_json_record(rec2).unwrap();
        assert_eq!(c.points(), back2.points());
    }
}
