//! Minimal static SVG emission for curves, sampled functions, and
//! sweep overlays. Output is deterministic: fixed canvas, fixed
//! formatting, no timestamps.

use crate::curve::PlanarCurve;
use crate::function::SampledFunction;
use crate::sweep::SweepResult;

const CANVAS: f64 = 640.0;
const MARGIN: f64 = 40.0;

/// Affine map from data bounds to the fixed canvas (y flipped so that
/// larger data values render higher).
struct Frame {
    lo: [f64; 2],
    scale: f64,
    span_y: f64,
}

impl Frame {
    fn fit(lo: [f64; 2], hi: [f64; 2]) -> Frame {
        let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-300);
        Frame {
            lo,
            scale: (CANVAS - 2.0 * MARGIN) / span,
            span_y: hi[1] - lo[1],
        }
    }

    fn map(&self, p: [f64; 2]) -> (f64, f64) {
        (
            MARGIN + (p[0] - self.lo[0]) * self.scale,
            MARGIN + (self.span_y - (p[1] - self.lo[1])) * self.scale,
        )
    }
}

fn path_data(frame: &Frame, points: &[[f64; 2]], close: bool) -> String {
    let mut d = String::new();
    for (i, p) in points.iter().enumerate() {
        let (x, y) = frame.map(*p);
        let cmd = if i == 0 { 'M' } else { 'L' };
        d.push_str(&format!("{cmd}{x:.3} {y:.3} "));
    }
    if close {
        d.push('Z');
    }
    d
}

fn document(body: &str) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{c}\" height=\"{c}\" \
         viewBox=\"0 0 {c} {c}\">\n{body}</svg>\n",
        c = CANVAS
    )
}

/// Closed-curve outline.
pub fn curve_svg(curve: &PlanarCurve) -> String {
    let (lo, hi) = curve.bounds();
    let frame = Frame::fit(lo, hi);
    let d = path_data(&frame, curve.points(), true);
    document(&format!(
        "<path d=\"{d}\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n"
    ))
}

/// Graph of a sampled function as a polyline.
pub fn function_svg(f: &SampledFunction) -> String {
    let points: Vec<[f64; 2]> = (0..f.len()).map(|i| [f.node(i), f.values()[i]]).collect();
    let mut lo = [f.domain_start(), f64::INFINITY];
    let mut hi = [f.domain_end(), f64::NEG_INFINITY];
    for p in &points {
        lo[1] = lo[1].min(p[1]);
        hi[1] = hi[1].max(p[1]);
    }
    if hi[1] - lo[1] < 1e-12 {
        hi[1] = lo[1] + 1.0;
    }
    let frame = Frame::fit(lo, hi);
    let d = path_data(&frame, &points, false);
    document(&format!(
        "<path d=\"{d}\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n"
    ))
}

/// Sweep overlay: the curve, the critical line, the reflected arc, and
/// the touch points.
pub fn sweep_svg(curve: &PlanarCurve, result: &SweepResult) -> String {
    let (mut lo, mut hi) = curve.bounds();
    for component in &result.reflected_arc.components {
        for p in component {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
    }
    let frame = Frame::fit(lo, hi);
    let mut body = format!(
        "<path d=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n",
        path_data(&frame, curve.points(), true)
    );
    // critical line across the canvas in the swept coordinate
    let line = match result.axis {
        crate::curve::Axis::X2 => [
            [lo[0], result.lambda0],
            [hi[0], result.lambda0],
        ],
        crate::curve::Axis::X1 => [
            [result.lambda0, lo[1]],
            [result.lambda0, hi[1]],
        ],
    };
    body.push_str(&format!(
        "<path d=\"{}\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\" \
         stroke-dasharray=\"6 4\"/>\n",
        path_data(&frame, &line, false)
    ));
    for component in &result.reflected_arc.components {
        body.push_str(&format!(
            "<path d=\"{}\" fill=\"none\" stroke=\"red\" stroke-width=\"1\"/>\n",
            path_data(&frame, component, false)
        ));
    }
    for p in &result.touch_points {
        let (x, y) = frame.map(*p);
        body.push_str(&format!(
            "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"4\" fill=\"blue\"/>\n"
        ));
    }
    document(&body)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{circle, Axis};
    use crate::sweep::sweep;

    #[test]
    fn curve_svg_is_well_formed_and_deterministic() {
        let c = circle([0.0, 0.0], 1.0, 256);
        let s1 = curve_svg(&c);
        let s2 = curve_svg(&c);
        assert_eq!(s1, s2);
        assert!(s1.starts_with("<svg "));
        assert!(s1.trim_end().ends_with("</svg>"));
        assert!(s1.contains("Z\""));
    }

    #[test]
    fn function_svg_handles_constants() {
        let f = SampledFunction::from_fn(0.0, 1.0, 64, |_| 2.0).unwrap();
        let s = function_svg(&f);
        assert!(s.contains("<path"));
    }

    #[test]
    fn sweep_svg_contains_overlay_elements() {
        let c = circle([0.0, 0.0], 1.0, 1024);
        let r = sweep(&c, Axis::X2).unwrap();
        let s = sweep_svg(&c, &r);
        assert!(s.contains("stroke=\"red\""));
        assert!(s.contains("stroke-dasharray"));
        assert!(s.contains("<circle"));
    }
}
