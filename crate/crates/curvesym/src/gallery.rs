//! Generators for the explicit test families: the strict-versus-plateau
//! sharpness pair, the shifted double-plateau pair, the two-scale bump
//! pair with its matched-level curvature claim, the two-bump profile and
//! its closed curve (the symmetry counterexample), and the asymmetric
//! plateau function. Every generator re-verifies its own structural
//! properties and fails loudly instead of shipping a broken instance.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::curve::PlanarCurve;
use crate::error::GalleryError;
use crate::function::{AnalyticCallbacks, SampledFunction, DEFAULT_NODES_PER_UNIT};

/// Largest bump scale at which the matched-level curvature claim is
/// validated, determined once by `scan_validated_epsilon` (asserted in
/// tests) and shipped as a constant. Larger scales compute with a
/// warning.
pub const VALIDATED_EPSILON_MAX: f64 = 0.1;
/// Reflection and per-bump symmetry self-checks must hold to this.
pub const SELF_CHECK_TOLERANCE: f64 = 1e-10;
/// Junction continuity (value, first, second derivative) must hold to
/// this across piece boundaries.
pub const JUNCTION_TOLERANCE: f64 = 1e-8;
/// Plateau base level of the two-bump profile.
pub const PROFILE_BASE: f64 = 1.0;
/// Outer-end slope of the profile flanks (also the closure tangent).
pub const FLANK_SLOPE: f64 = 1.5;

/// A named bundle of generated functions and/or a curve, with the
/// parameters it was generated from.
#[derive(Debug, Clone)]
pub struct GalleryInstance {
    pub name: String,
    pub functions: Vec<(String, SampledFunction)>,
    pub curve: Option<PlanarCurve>,
    pub parameters: BTreeMap<String, f64>,
    pub description: String,
    pub warnings: Vec<String>,
}

/// Matched-level curvature comparison between the two bump scales:
/// at every grid `t` the claim is curvature(u at t) <= curvature(v at
/// s(t)) for the level match u(t) = v(s).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurvatureClaimReport {
    pub epsilon: f64,
    pub holds: bool,
    /// Minimum of rhs - lhs over the grid (positive means the claim
    /// holds strictly everywhere).
    pub min_margin: f64,
    pub pairs: usize,
    /// Fitted constant in lhs <= C * eps^6 * t(1-t).
    pub fitted_c: f64,
    /// Whether min over the grid of rhs / (t - t^2) >= 5 eps^4.
    pub rhs_bound_holds: bool,
    pub min_rhs_scale: f64,
    /// rhs / lhs at the smallest tested t (diverges as t -> 0).
    pub ratio_at_smallest_t: f64,
    pub warnings: Vec<String>,
}

/// Quintic bridge matching value, first and second derivative at both
/// endpoints; the unique C^2 interpolant of that data in degree 5.
#[derive(Debug, Clone, Copy)]
pub struct Quintic {
    t0: f64,
    w: f64,
    c: [f64; 6],
}

impl Quintic {
    /// `left` and `right` are (value, d1, d2) at `t0` and `t1`.
    pub fn fit(t0: f64, t1: f64, left: [f64; 3], right: [f64; 3]) -> Quintic {
        let w = t1 - t0;
        let a0 = left[0];
        let a1 = left[1] * w;
        let a2 = left[2] * w * w / 2.0;
        let r0 = right[0] - a0 - a1 - a2;
        let r1 = right[1] * w - a1 - 2.0 * a2;
        let r2 = right[2] * w * w - 2.0 * a2;
        let a5 = (r2 - 6.0 * r1 + 12.0 * r0) / 2.0;
        let a4 = r1 - 3.0 * r0 - 2.0 * a5;
        let a3 = r0 - a4 - a5;
        Quintic {
            t0,
            w,
            c: [a0, a1, a2, a3, a4, a5],
        }
    }

    pub fn value(&self, t: f64) -> f64 {
        let x = (t - self.t0) / self.w;
        let c = &self.c;
        c[0] + x * (c[1] + x * (c[2] + x * (c[3] + x * (c[4] + x * c[5]))))
    }

    pub fn d1(&self, t: f64) -> f64 {
        let x = (t - self.t0) / self.w;
        let c = &self.c;
        (c[1] + x * (2.0 * c[2] + x * (3.0 * c[3] + x * (4.0 * c[4] + x * 5.0 * c[5])))) / self.w
    }

    pub fn d2(&self, t: f64) -> f64 {
        let x = (t - self.t0) / self.w;
        let c = &self.c;
        (2.0 * c[2] + x * (6.0 * c[3] + x * (12.0 * c[4] + x * 20.0 * c[5]))) / (self.w * self.w)
    }

    /// Minimum of the first derivative over a dense sample of the open
    /// bridge interval.
    pub fn min_derivative(&self, samples: usize) -> f64 {
        (1..samples)
            .map(|i| self.d1(self.t0 + self.w * i as f64 / samples as f64))
            .fold(f64::INFINITY, f64::min)
    }
}

/// The normalized bump `t^3 (1-t)^3` on [0, 1] and its derivatives.
pub fn bump(t: f64) -> f64 {
    t.powi(3) * (1.0 - t).powi(3)
}

pub fn bump_d1(t: f64) -> f64 {
    3.0 * (1.0 - 2.0 * t) * (t - t * t).powi(2)
}

pub fn bump_d2(t: f64) -> f64 {
    6.0 * (t - t * t) * (1.0 - 5.0 * t + 5.0 * t * t)
}

fn ensure(cond: bool, what: &str) -> Result<(), GalleryError> {
    if cond {
        Ok(())
    } else {
        Err(GalleryError::SelfCheck(what.to_string()))
    }
}

/// Checks value/d1/d2 continuity of a callback triple across a junction
/// by evaluating both sides a hair away from it.
fn check_junctions(
    cb: &AnalyticCallbacks,
    junctions: &[f64],
    what: &str,
) -> Result<(), GalleryError> {
    let h = 1e-12;
    for &x in junctions {
        let jumps = [
            ((cb.value)(x + h) - (cb.value)(x - h)).abs(),
            ((cb.d1)(x + h) - (cb.d1)(x - h)).abs(),
            ((cb.d2)(x + h) - (cb.d2)(x - h)).abs(),
        ];
        if jumps.iter().any(|j| *j > JUNCTION_TOLERANCE) {
            return Err(GalleryError::SelfCheck(format!(
                "{what}: junction at {x} jumps by {jumps:?}"
            )));
        }
    }
    Ok(())
}

/// Sharpness pair: u strictly increasing with cubic outer pieces and a
/// monotone bridge; v equal to u up to the midpoint, then constant. The
/// pair satisfies the matched-level second-derivative hypothesis yet
/// the two functions do not coincide beyond the midpoint.
pub fn strict_vs_plateau_pair() -> Result<GalleryInstance, GalleryError> {
    let a = 1.0 / 3.0;
    let b = 2.0 / 3.0;
    // cubic t^3 below a, 1 + (t-1)^3 above b, C^2 monotone bridge between
    let bridge = Quintic::fit(
        a,
        b,
        [a * a * a, 3.0 * a * a, 6.0 * a],
        [1.0 + (b - 1.0).powi(3), 3.0 * (b - 1.0) * (b - 1.0), 6.0 * (b - 1.0)],
    );
    ensure(
        bridge.min_derivative(2000) > 0.0,
        "strict-vs-plateau: bridge not strictly increasing",
    )?;
    let u_value = move |t: f64| {
        if t <= a {
            t * t * t
        } else if t < b {
            bridge.value(t)
        } else {
            1.0 + (t - 1.0).powi(3)
        }
    };
    let u_d1 = move |t: f64| {
        if t <= a {
            3.0 * t * t
        } else if t < b {
            bridge.d1(t)
        } else {
            3.0 * (t - 1.0) * (t - 1.0)
        }
    };
    let u_d2 = move |t: f64| {
        if t <= a {
            6.0 * t
        } else if t < b {
            bridge.d2(t)
        } else {
            6.0 * (t - 1.0)
        }
    };
    let u_cb = AnalyticCallbacks::new(u_value, u_d1, u_d2);
    check_junctions(&u_cb, &[a, b], "strict-vs-plateau u")?;
    let v_cb = AnalyticCallbacks::new(
        move |t: f64| if t <= 1.0 { u_value(t) } else { 1.0 },
        move |t: f64| if t <= 1.0 { u_d1(t) } else { 0.0 },
        move |t: f64| if t <= 1.0 { u_d2(t) } else { 0.0 },
    );
    check_junctions(&v_cb, &[1.0], "strict-vs-plateau v")?;
    let n = 2 * DEFAULT_NODES_PER_UNIT + 1;
    let u = SampledFunction::from_callbacks(0.0, 2.0, n, u_cb)?;
    let v = SampledFunction::from_callbacks(0.0, 2.0, n, v_cb)?;
    Ok(GalleryInstance {
        name: "strict-vs-plateau".into(),
        functions: vec![("u".into(), u), ("v".into(), v)],
        curve: None,
        parameters: BTreeMap::new(),
        description: "strictly increasing u vs a copy that flattens at its maximum; \
            the matched-level comparison hypothesis holds but the functions differ"
            .into(),
        warnings: Vec::new(),
    })
}

/// Double-plateau pair: u climbs two unit steps with plateaus between;
/// v is the top step of u shifted left by one with an extended plateau
/// and a monotone ramp down to zero.
pub fn double_plateau_pair() -> Result<GalleryInstance, GalleryError> {
    let a = 7.0 / 3.0;
    let b = 8.0 / 3.0;
    let bridge = Quintic::fit(
        a,
        b,
        [1.0 + (a - 2.0).powi(3), 3.0 * (a - 2.0) * (a - 2.0), 6.0 * (a - 2.0)],
        [2.0 + (b - 3.0).powi(3), 3.0 * (b - 3.0) * (b - 3.0), 6.0 * (b - 3.0)],
    );
    ensure(
        bridge.min_derivative(2000) > 0.0,
        "double-plateau: bridge not strictly increasing",
    )?;
    let u_value = move |t: f64| {
        if t <= 2.0 {
            1.0
        } else if t <= a {
            1.0 + (t - 2.0).powi(3)
        } else if t < b {
            bridge.value(t)
        } else {
            2.0 + (t - 3.0).powi(3)
        }
    };
    let u_d1 = move |t: f64| {
        if t <= 2.0 {
            0.0
        } else if t <= a {
            3.0 * (t - 2.0) * (t - 2.0)
        } else if t < b {
            bridge.d1(t)
        } else {
            3.0 * (t - 3.0) * (t - 3.0)
        }
    };
    let u_d2 = move |t: f64| {
        if t <= 2.0 {
            0.0
        } else if t <= a {
            6.0 * (t - 2.0)
        } else if t < b {
            bridge.d2(t)
        } else {
            6.0 * (t - 3.0)
        }
    };
    let u_cb = AnalyticCallbacks::new(u_value, u_d1, u_d2);
    check_junctions(&u_cb, &[2.0, a, b, 3.0], "double-plateau u")?;
    // w agrees with u on [2, 3], holds its top value through 5, and
    // ramps down C^2-monotonically to w(1) = 0; v(t) = w(t + 1)
    let ramp = Quintic::fit(1.0, 2.0, [0.0, 0.0, 0.0], [1.0, 0.0, 0.0]);
    ensure(
        ramp.min_derivative(2000) >= 0.0,
        "double-plateau: ramp not nondecreasing",
    )?;
    let w_value = move |t: f64| {
        if t <= 2.0 {
            ramp.value(t.max(1.0))
        } else if t <= 3.0 {
            u_value(t)
        } else {
            2.0
        }
    };
    let w_d1 = move |t: f64| {
        if t <= 2.0 {
            ramp.d1(t.max(1.0))
        } else if t <= 3.0 {
            u_d1(t)
        } else {
            0.0
        }
    };
    let w_d2 = move |t: f64| {
        if t <= 2.0 {
            ramp.d2(t.max(1.0))
        } else if t <= 3.0 {
            u_d2(t)
        } else {
            0.0
        }
    };
    let w_cb = AnalyticCallbacks::new(w_value, w_d1, w_d2);
    check_junctions(&w_cb, &[2.0, 3.0], "double-plateau w")?;
    let v_cb = AnalyticCallbacks::new(
        move |t: f64| w_value(t + 1.0),
        move |t: f64| w_d1(t + 1.0),
        move |t: f64| w_d2(t + 1.0),
    );
    let n = 4 * DEFAULT_NODES_PER_UNIT + 1;
    let u = SampledFunction::from_callbacks(0.0, 4.0, n, u_cb)?;
    let v = SampledFunction::from_callbacks(0.0, 4.0, n, v_cb)?;
    Ok(GalleryInstance {
        name: "double-plateau".into(),
        functions: vec![("u".into(), u), ("v".into(), v)],
        curve: None,
        parameters: BTreeMap::new(),
        description: "two-step staircase u and its shifted top step v with plateaus \
            of different extents"
            .into(),
        warnings: Vec::new(),
    })
}

fn epsilon_warnings(epsilon: f64) -> Vec<String> {
    if epsilon > VALIDATED_EPSILON_MAX {
        vec![format!(
            "epsilon {epsilon} exceeds the validated range (max {VALIDATED_EPSILON_MAX}); \
             the curvature claim is not guaranteed"
        )]
    } else {
        Vec::new()
    }
}

/// The two-scale bump pair on [0, 1]: `u = eps^6 t^3(1-t)^3` and
/// `v = eps^3 t^3(1-t)^3`, with exact derivative callbacks.
pub fn bump_pair(epsilon: f64) -> Result<GalleryInstance, GalleryError> {
    assert!(epsilon > 0.0, "epsilon must be positive");
    let e6 = epsilon.powi(6);
    let e3 = epsilon.powi(3);
    let scaled = |s: f64| {
        AnalyticCallbacks::new(
            move |t: f64| s * bump(t),
            move |t: f64| s * bump_d1(t),
            move |t: f64| s * bump_d2(t),
        )
    };
    let n = DEFAULT_NODES_PER_UNIT + 1;
    let u = SampledFunction::from_callbacks(0.0, 1.0, n, scaled(e6))?;
    let v = SampledFunction::from_callbacks(0.0, 1.0, n, scaled(e3))?;
    let mut parameters = BTreeMap::new();
    parameters.insert("epsilon".to_string(), epsilon);
    Ok(GalleryInstance {
        name: "bump-pair".into(),
        functions: vec![("u".into(), u), ("v".into(), v)],
        curve: None,
        parameters,
        description: "one bump at scale eps^6 and one at scale eps^3; level matching \
            between them satisfies s(1-s) = eps t(1-t)"
            .into(),
        warnings: epsilon_warnings(epsilon),
    })
}

/// Evaluates the matched-level curvature claim for the bump pair on a
/// grid of `n_grid` points in (0, 1/2): curvature of the shallow bump
/// at t against curvature of the tall bump at the matched s, plus the
/// leading-order bounds `lhs <= C eps^6 t(1-t)` and
/// `rhs >= 5 eps^4 t(1-t)`.
pub fn verify_curvature_claim(
    epsilon: f64,
    n_grid: usize,
) -> Result<CurvatureClaimReport, GalleryError> {
    assert!(epsilon > 0.0 && n_grid >= 2);
    if epsilon >= 1.0 {
        return Err(GalleryError::SelfCheck(format!(
            "no matched level exists at epsilon {epsilon} >= 1"
        )));
    }
    let e6 = epsilon.powi(6);
    let e3 = epsilon.powi(3);
    let curv = |scale: f64, t: f64| {
        scale * bump_d2(t) / (1.0 + (scale * bump_d1(t)).powi(2)).powf(1.5)
    };
    let mut min_margin = f64::INFINITY;
    let mut fitted_c = 0.0f64;
    let mut min_rhs_scale = f64::INFINITY;
    let mut ratio_at_smallest_t = 0.0;
    let mut pairs = 0;
    for i in 1..n_grid {
        let t = 0.5 * i as f64 / n_grid as f64;
        // level match: s(1-s) = eps t(1-t), left branch
        let p = epsilon * t * (1.0 - t);
        let s = 0.5 * (1.0 - (1.0 - 4.0 * p).sqrt());
        let lhs = curv(e6, t);
        let rhs = curv(e3, s);
        min_margin = min_margin.min(rhs - lhs);
        let tt = t * (1.0 - t);
        fitted_c = fitted_c.max(lhs / (e6 * tt));
        min_rhs_scale = min_rhs_scale.min(rhs / tt);
        if i == 1 {
            ratio_at_smallest_t = rhs / lhs;
        }
        pairs += 1;
    }
    Ok(CurvatureClaimReport {
        epsilon,
        holds: min_margin > 0.0,
        min_margin,
        pairs,
        fitted_c,
        rhs_bound_holds: min_rhs_scale >= 5.0 * epsilon.powi(4),
        min_rhs_scale,
        ratio_at_smallest_t,
        warnings: epsilon_warnings(epsilon),
    })
}

/// Threshold scan: the largest epsilon in the candidate ladder at which
/// the curvature claim and both leading-order bounds validate.
pub fn scan_validated_epsilon() -> f64 {
    let mut best = 0.0f64;
    for &eps in &[0.05, 0.1, 0.2, 0.5] {
        if let Ok(r) = verify_curvature_claim(eps, 1024) {
            if r.holds && r.rhs_bound_holds && r.ratio_at_smallest_t >= 2.0 {
                best = best.max(eps);
            }
        }
    }
    best
}

/// Piecewise callbacks of the two-bump profile on [0, 4]: rising flank
/// on (0,1), bump of scale `s1` on (1,2) about 3/2, bump of scale `s2`
/// on (2,3) about 5/2, and the mirror image of the flank on (3,4).
fn two_bump_callbacks(s1: f64, s2: f64) -> AnalyticCallbacks {
    let flank = Quintic::fit(0.0, 1.0, [0.0, FLANK_SLOPE, 0.0], [PROFILE_BASE, 0.0, 0.0]);
    let c = PROFILE_BASE;
    let value = move |t: f64| {
        if t <= 1.0 {
            flank.value(t)
        } else if t <= 2.0 {
            c + s1 * bump(t - 1.0)
        } else if t <= 3.0 {
            c + s2 * bump(t - 2.0)
        } else {
            flank.value(4.0 - t)
        }
    };
    let d1 = move |t: f64| {
        if t <= 1.0 {
            flank.d1(t)
        } else if t <= 2.0 {
            s1 * bump_d1(t - 1.0)
        } else if t <= 3.0 {
            s2 * bump_d1(t - 2.0)
        } else {
            -flank.d1(4.0 - t)
        }
    };
    let d2 = move |t: f64| {
        if t <= 1.0 {
            flank.d2(t)
        } else if t <= 2.0 {
            s1 * bump_d2(t - 1.0)
        } else if t <= 3.0 {
            s2 * bump_d2(t - 2.0)
        } else {
            flank.d2(4.0 - t)
        }
    };
    AnalyticCallbacks::new(value, d1, d2)
}

fn two_bump_self_checks(
    f: &SampledFunction,
    cb: &AnalyticCallbacks,
    what: &str,
) -> Result<(), GalleryError> {
    check_junctions(cb, &[1.0, 2.0, 3.0], what)?;
    let n = 1024;
    for i in 0..=n {
        // outer-flank reflection identity
        let t = i as f64 / n as f64;
        let dev = ((cb.value)(t) - (cb.value)(4.0 - t)).abs();
        ensure(
            dev <= SELF_CHECK_TOLERANCE,
            &format!("{what}: flank reflection deviates by {dev} at t = {t}"),
        )?;
        // per-bump symmetry about the bump centers
        let d = 0.5 * i as f64 / n as f64;
        for center in [1.5, 2.5] {
            let dev = ((cb.value)(center + d) - (cb.value)(center - d)).abs();
            ensure(
                dev <= SELF_CHECK_TOLERANCE,
                &format!("{what}: bump at {center} asymmetric by {dev} at offset {d}"),
            )?;
        }
    }
    ensure(
        f.values().iter().all(|v| v.is_finite()),
        &format!("{what}: non-finite samples"),
    )
}

/// The two-bump profile on [0, 4]: a flat-based function with a shallow
/// (eps^6) bump about 3/2 and a taller (eps^3) bump about 5/2 over the
/// same base level, flanked by mirror-image monotone arcs. Its mirror
/// symmetry holds piece by piece, but the profile as a whole is not
/// symmetric about 2.
pub fn two_bump_profile(epsilon: f64) -> Result<GalleryInstance, GalleryError> {
    assert!(epsilon > 0.0);
    let flank = Quintic::fit(0.0, 1.0, [0.0, FLANK_SLOPE, 0.0], [PROFILE_BASE, 0.0, 0.0]);
    ensure(
        flank.min_derivative(2000) >= 0.0,
        "two-bump-profile: flank not monotone",
    )?;
    let cb = two_bump_callbacks(epsilon.powi(6), epsilon.powi(3));
    let n = 4 * DEFAULT_NODES_PER_UNIT + 1;
    let f = SampledFunction::from_callbacks(0.0, 4.0, n, cb.clone())?;
    two_bump_self_checks(&f, &cb, "two-bump-profile")?;
    let mut parameters = BTreeMap::new();
    parameters.insert("epsilon".to_string(), epsilon);
    Ok(GalleryInstance {
        name: "two-bump-profile".into(),
        functions: vec![("u".into(), f)],
        curve: None,
        parameters,
        description: "profile with two bumps of scales eps^6 and eps^3 on a common \
            base level; mirror-symmetric flanks and bumps, asymmetric as a whole"
            .into(),
        warnings: epsilon_warnings(epsilon),
    })
}

/// Closes a graph profile over `[x0, x1]` with endpoint values 0 and
/// endpoint slopes +m / -m into a simple closed curve, using a circular
/// arc below the baseline with matching tangents (curvature may jump at
/// the two junctions).
pub fn closed_profile_curve(
    profile: &dyn Fn(f64) -> f64,
    x0: f64,
    x1: f64,
    m: f64,
    profile_points: usize,
    cap_points: usize,
) -> Result<PlanarCurve, GalleryError> {
    if m <= 0.0 {
        return Err(GalleryError::ClosureJunction(format!(
            "cannot meet an outer-end slope of {m} with a circular cap"
        )));
    }
    let a = 0.5 * (x1 - x0); // half-chord
    let cx = 0.5 * (x0 + x1);
    let cy = -a / m;
    let r = (a * a + cy * cy).sqrt();
    let mut pts: Vec<[f64; 2]> = Vec::with_capacity(profile_points + cap_points);
    for i in 0..profile_points {
        let t = x0 + (x1 - x0) * i as f64 / (profile_points - 1) as f64;
        pts.push([t, profile(t)]);
    }
    // arc from (x1, 0) back to (x0, 0) through the bottom
    let th1 = (0.0 - cy).atan2(x1 - cx);
    let th0 = (0.0 - cy).atan2(x0 - cx);
    let span = -(2.0 * std::f64::consts::PI - (th0 - th1)); // clockwise, below
    for k in 1..cap_points {
        let th = th1 + span * k as f64 / cap_points as f64;
        pts.push([cx + r * th.cos(), cy + r * th.sin()]);
    }
    Ok(PlanarCurve::new(pts)?)
}

/// The closed two-bump curve: the two-bump profile (shallow eps^6 bump
/// at the smaller abscissa — at any shared crossing height the tall
/// bump's curvature is far more negative, so curvature nonincreasing
/// along horizontal fibers requires the shallow bump first) closed
/// below by a circular cap. Construction self-checks: simple, and the
/// fiber-pair curvature ordering along the bump axis holds with a
/// strict witness.
pub fn two_bump_curve(epsilon: f64) -> Result<GalleryInstance, GalleryError> {
    assert!(epsilon > 0.0);
    let cb = two_bump_callbacks(epsilon.powi(6), epsilon.powi(3));
    let f = SampledFunction::from_callbacks(0.0, 4.0, 4 * DEFAULT_NODES_PER_UNIT + 1, cb.clone())?;
    two_bump_self_checks(&f, &cb, "two-bump-curve")?;
    let value = cb.value.clone();
    let curve = closed_profile_curve(
        &move |t| (value)(t),
        0.0,
        4.0,
        FLANK_SLOPE,
        4 * DEFAULT_NODES_PER_UNIT + 1,
        2048,
    )?;
    let (embedded, crossing) = curve.check_embedded();
    ensure(
        embedded,
        &format!("two-bump-curve: self-intersection at segments {crossing:?}"),
    )?;
    let mut parameters = BTreeMap::new();
    parameters.insert("epsilon".to_string(), epsilon);
    Ok(GalleryInstance {
        name: "two-bump-curve".into(),
        functions: vec![("profile".into(), f)],
        curve: Some(curve),
        parameters,
        description: "closed curve whose top carries two bumps of different scales: \
            the fiber-pair curvature ordering holds along the bump axis, yet the \
            curve is not mirror-symmetric across it"
            .into(),
        warnings: epsilon_warnings(epsilon),
    })
}

/// A C^2 plateau function on [0, 5] that satisfies the matched-level
/// second-derivative hypothesis against itself while failing mirror
/// symmetry: its two plateaus at the same level have different extents.
pub fn asymmetric_plateau_function() -> Result<GalleryInstance, GalleryError> {
    // rise 0 -> 1 on (0,1); plateau on (1, 1.25); interior rise 1 -> 2
    // on (1.25, 2.25); its mirror fall on (2.25, 3.25); plateau on
    // (3.25, 4); mirror of the first rise on (4, 5). All junctions and
    // both mirror centers (2.25 and 2.5) sit on grid nodes, so every
    // matched level pairs node against node and the self-comparison is
    // exact; an off-grid mirror would amplify interpolation error near
    // the flat junctions into a spurious hypothesis violation.
    let rise = Quintic::fit(0.0, 1.0, [0.0, 0.0, 0.0], [1.0, 0.0, 0.0]);
    let inner = Quintic::fit(1.25, 2.25, [1.0, 0.0, 0.0], [2.0, 0.0, 0.0]);
    ensure(
        rise.min_derivative(2000) >= 0.0 && inner.min_derivative(2000) >= 0.0,
        "asymmetric-plateau: arcs not monotone",
    )?;
    let value = move |t: f64| {
        if t <= 1.0 {
            rise.value(t)
        } else if t <= 1.25 {
            1.0
        } else if t <= 2.25 {
            inner.value(t)
        } else if t <= 3.25 {
            inner.value(4.5 - t)
        } else if t <= 4.0 {
            1.0
        } else {
            rise.value(5.0 - t)
        }
    };
    let d1 = move |t: f64| {
        if t <= 1.0 {
            rise.d1(t)
        } else if t <= 1.25 {
            0.0
        } else if t <= 2.25 {
            inner.d1(t)
        } else if t <= 3.25 {
            -inner.d1(4.5 - t)
        } else if t <= 4.0 {
            0.0
        } else {
            -rise.d1(5.0 - t)
        }
    };
    let d2 = move |t: f64| {
        if t <= 1.0 {
            rise.d2(t)
        } else if t <= 1.25 {
            0.0
        } else if t <= 2.25 {
            inner.d2(t)
        } else if t <= 3.25 {
            inner.d2(4.5 - t)
        } else if t <= 4.0 {
            0.0
        } else {
            rise.d2(5.0 - t)
        }
    };
    let cb = AnalyticCallbacks::new(value, d1, d2);
    check_junctions(&cb, &[1.0, 1.25, 2.25, 3.25, 4.0], "asymmetric-plateau")?;
    // outer reflection identity and interior asymmetry
    for i in 0..=512 {
        let t = i as f64 / 512.0;
        let dev = (value(t) - value(5.0 - t)).abs();
        ensure(
            dev <= SELF_CHECK_TOLERANCE,
            &format!("asymmetric-plateau: outer reflection deviates by {dev} at {t}"),
        )?;
    }
    ensure(
        (value(2.0) - value(5.0 - 2.0)).abs() > 1e-6,
        "asymmetric-plateau: accidentally symmetric",
    )?;
    let f = SampledFunction::from_callbacks(0.0, 5.0, 5 * DEFAULT_NODES_PER_UNIT + 1, cb)?;
    Ok(GalleryInstance {
        name: "asymmetric-plateau".into(),
        functions: vec![("u".into(), f)],
        curve: None,
        parameters: BTreeMap::new(),
        description: "plateau function whose matched-level comparison hypothesis \
            holds against itself while its two same-level plateaus have different \
            extents, so it is not mirror-symmetric"
            .into(),
        warnings: Vec::new(),
    })
}

/// Dispatch by instance name; `epsilon` feeds the bump-family
/// generators and is ignored by the rest.
pub fn instance(name: &str, epsilon: f64) -> Result<GalleryInstance, GalleryError> {
    match name {
        "strict-vs-plateau" => strict_vs_plateau_pair(),
        "double-plateau" => double_plateau_pair(),
        "bump-pair" => bump_pair(epsilon),
        "two-bump-profile" => two_bump_profile(epsilon),
        "two-bump-curve" => two_bump_curve(epsilon),
        "asymmetric-plateau" => asymmetric_plateau_function(),
        other => Err(GalleryError::UnknownInstance(other.to_string())),
    }
}

pub const INSTANCE_NAMES: [&str; 6] = [
    "strict-vs-plateau",
    "double-plateau",
    "bump-pair",
    "two-bump-profile",
    "two-bump-curve",
    "asymmetric-plateau",
];
