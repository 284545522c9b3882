//! Sampled-function calculus on uniform grids.
//!
//! Holds the scalar profiles `u`, `v`, `w` that every comparison lemma
//! operates on, finite-difference derivative estimation, and the
//! level-matching machinery that pairs `u(t)` with `v(s)` on monotone
//! branches. The gap function `g = s - t` lives here too.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::FunctionError;

/// Value-space tolerance for a successful level match.
pub const MATCH_TOLERANCE: f64 = 1e-10;
/// Bisection stops when the bracketing interval is this narrow.
pub const BISECTION_WIDTH: f64 = 1e-12;
/// Hard cap on bisection iterations.
pub const BISECTION_MAX_ITER: usize = 200;
/// A branch counts as strictly monotone when its derivative keeps one
/// sign with at least this magnitude away from the endpoint buffer.
pub const MONOTONE_MARGIN: f64 = 1e-9;
/// Grid cells at each end of a branch exempt from the margin check
/// (profiles like `t^3` have vanishing derivative at the endpoint).
pub const ENDPOINT_BUFFER: usize = 2;
/// Default sample density per unit of domain length.
pub const DEFAULT_NODES_PER_UNIT: usize = 4096;

type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Closed-form evaluators attached to a function generated analytically.
#[derive(Clone)]
pub struct AnalyticCallbacks {
    pub value: ScalarFn,
    pub d1: ScalarFn,
    pub d2: ScalarFn,
}

impl AnalyticCallbacks {
    pub fn new(
        value: impl Fn(f64) -> f64 + Send + Sync + 'static,
        d1: impl Fn(f64) -> f64 + Send + Sync + 'static,
        d2: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            value: Arc::new(value),
            d1: Arc::new(d1),
            d2: Arc::new(d2),
        }
    }
}

/// A scalar function of one variable sampled on a uniform grid.
///
/// Immutable after construction; all analyses are pure reads.
#[derive(Clone)]
pub struct SampledFunction {
    domain_start: f64,
    domain_end: f64,
    values: Vec<f64>,
    callbacks: Option<AnalyticCallbacks>,
}

impl std::fmt::Debug for SampledFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SampledFunction")
            .field("domain", &(self.domain_start, self.domain_end))
            .field("n", &self.values.len())
            .field("analytic", &self.callbacks.is_some())
            .finish()
    }
}

impl SampledFunction {
    /// Builds from explicit samples.
    pub fn from_values(
        domain_start: f64,
        domain_end: f64,
        values: Vec<f64>,
    ) -> Result<Self, FunctionError> {
        if !(domain_start < domain_end) || !domain_start.is_finite() || !domain_end.is_finite() {
            return Err(FunctionError::InvalidDomain {
                start: domain_start,
                end: domain_end,
            });
        }
        if values.len() < 2 {
            return Err(FunctionError::TooFewSamples {
                got: values.len(),
                need: 2,
            });
        }
        if let Some(&bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(FunctionError::NonFiniteValue(bad));
        }
        Ok(Self {
            domain_start,
            domain_end,
            values,
            callbacks: None,
        })
    }

    /// Samples a plain closure on `n` uniform nodes.
    pub fn from_fn(
        domain_start: f64,
        domain_end: f64,
        n: usize,
        f: impl Fn(f64) -> f64,
    ) -> Result<Self, FunctionError> {
        let values = uniform_nodes(domain_start, domain_end, n)
            .map(f)
            .collect::<Vec<_>>();
        Self::from_values(domain_start, domain_end, values)
    }

    /// Samples analytic callbacks; the closed forms stay attached for
    /// exact derivative profiles and off-grid evaluation.
    pub fn from_callbacks(
        domain_start: f64,
        domain_end: f64,
        n: usize,
        callbacks: AnalyticCallbacks,
    ) -> Result<Self, FunctionError> {
        let values = uniform_nodes(domain_start, domain_end, n)
            .map(|t| (callbacks.value)(t))
            .collect::<Vec<_>>();
        let mut out = Self::from_values(domain_start, domain_end, values)?;
        out.callbacks = Some(callbacks);
        Ok(out)
    }

    pub fn domain_start(&self) -> f64 {
        self.domain_start
    }

    pub fn domain_end(&self) -> f64 {
        self.domain_end
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires >= 2 samples
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn has_callbacks(&self) -> bool {
        self.callbacks.is_some()
    }

    pub fn callbacks(&self) -> Option<&AnalyticCallbacks> {
        self.callbacks.as_ref()
    }

    /// Uniform grid step.
    pub fn step(&self) -> f64 {
        (self.domain_end - self.domain_start) / (self.values.len() - 1) as f64
    }

    /// Abscissa of node `i`.
    pub fn node(&self, i: usize) -> f64 {
        if i + 1 == self.values.len() {
            self.domain_end
        } else {
            self.domain_start + i as f64 * self.step()
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.values.len()).map(move |i| self.node(i))
    }

    /// Evaluates at an arbitrary abscissa: callback value when present,
    /// otherwise linear interpolation between grid nodes. Clamps to the
    /// domain endpoints.
    pub fn eval(&self, t: f64) -> f64 {
        if let Some(cb) = &self.callbacks {
            let t = t.clamp(self.domain_start, self.domain_end);
            return (cb.value)(t);
        }
        self.eval_interpolated(t)
    }

    /// Linear interpolation on the stored samples regardless of callbacks.
    pub fn eval_interpolated(&self, t: f64) -> f64 {
        let t = t.clamp(self.domain_start, self.domain_end);
        let h = self.step();
        let x = (t - self.domain_start) / h;
        let i = (x.floor() as usize).min(self.values.len() - 2);
        let frac = x - i as f64;
        self.values[i] * (1.0 - frac) + self.values[i + 1] * frac
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_value(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Index of the first node attaining the maximum within `tol`.
    pub fn first_argmax(&self, tol: f64) -> usize {
        let max = self.max_value();
        self.values
            .iter()
            .position(|&v| v >= max - tol)
            .expect("non-empty values")
    }

    /// Finite-difference (or callback) derivative of order 1 or 2,
    /// sharing this function's grid.
    pub fn derivative_profile(&self, order: DerivativeOrder) -> Result<SampledFunction, FunctionError> {
        let need = match order {
            DerivativeOrder::First => 3,
            DerivativeOrder::Second => 5,
        };
        let n = self.values.len();
        if n < need {
            return Err(FunctionError::TooFewSamples { got: n, need });
        }
        if let Some(cb) = &self.callbacks {
            let f = match order {
                DerivativeOrder::First => cb.d1.clone(),
                DerivativeOrder::Second => cb.d2.clone(),
            };
            let values = self.nodes().map(|t| f(t)).collect::<Vec<_>>();
            return SampledFunction::from_values(self.domain_start, self.domain_end, values);
        }
        let h = self.step();
        let v = &self.values;
        let mut out = vec![0.0; n];
        match order {
            DerivativeOrder::First => {
                for i in 1..n - 1 {
                    out[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
                }
                out[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
                out[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h);
            }
            DerivativeOrder::Second => {
                for i in 1..n - 1 {
                    out[i] = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / (h * h);
                }
                // one-sided 4-point stencils at the endpoints
                out[0] = (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) / (h * h);
                out[n - 1] =
                    (2.0 * v[n - 1] - 5.0 * v[n - 2] + 4.0 * v[n - 3] - v[n - 4]) / (h * h);
            }
        }
        if let Some(&bad) = out.iter().find(|x| !x.is_finite()) {
            return Err(FunctionError::NonFiniteValue(bad));
        }
        SampledFunction::from_values(self.domain_start, self.domain_end, out)
    }

    /// Maximal index ranges on which the derivative keeps one sign with
    /// magnitude >= `MONOTONE_MARGIN`, grown by the endpoint buffer.
    pub fn monotone_branches(&self) -> Result<Vec<MonotoneBranch>, FunctionError> {
        let d1 = self.derivative_profile(DerivativeOrder::First)?;
        let dv = d1.values();
        let n = dv.len();
        let mut branches = Vec::new();
        let mut i = 0;
        while i < n {
            let sign = if dv[i] >= MONOTONE_MARGIN {
                1
            } else if dv[i] <= -MONOTONE_MARGIN {
                -1
            } else {
                i += 1;
                continue;
            };
            let start = i;
            while i < n
                && ((sign > 0 && dv[i] >= MONOTONE_MARGIN)
                    || (sign < 0 && dv[i] <= -MONOTONE_MARGIN))
            {
                i += 1;
            }
            // grow into the buffer where the derivative merely keeps sign
            let mut lo = start;
            let mut extended = 0;
            while lo > 0 && extended < ENDPOINT_BUFFER && dv[lo - 1] * sign as f64 >= 0.0 {
                lo -= 1;
                extended += 1;
            }
            let mut hi = i;
            extended = 0;
            while hi < n && extended < ENDPOINT_BUFFER && dv[hi] * sign as f64 >= 0.0 {
                hi += 1;
                extended += 1;
            }
            branches.push(MonotoneBranch {
                start: lo,
                end: hi - 1,
                increasing: sign > 0,
            });
        }
        // merge overlapping same-sign branches produced by buffer growth
        branches.dedup_by(|b, a| {
            if a.increasing == b.increasing && b.start <= a.end + 1 {
                a.end = b.end;
                true
            } else {
                false
            }
        });
        Ok(branches)
    }

    /// Checks strict monotonicity on `[lo, hi]` (abscissae) with the
    /// endpoint-buffer rule; returns the sign (+1 increasing).
    pub fn monotone_sign_on(&self, lo: f64, hi: f64) -> Result<i8, FunctionError> {
        let d1 = self.derivative_profile(DerivativeOrder::First)?;
        let h = self.step();
        let i0 = ((lo - self.domain_start) / h).ceil().max(0.0) as usize;
        let i1 = (((hi - self.domain_start) / h).floor() as usize).min(self.len() - 1);
        if i1 <= i0 {
            return Err(FunctionError::NonMonotoneBranch { lo, hi });
        }
        // direction from the net change; the derivative may flatten to
        // high order (e.g. at a bump foot) but must never reverse
        let change = self.values[i1] - self.values[i0];
        if change.abs() < MONOTONE_MARGIN * (i1 - i0) as f64 * h {
            return Err(FunctionError::NonMonotoneBranch { lo, hi });
        }
        let sign = change.signum();
        let no_reversal = d1.values()[i0..=i1]
            .iter()
            .all(|&d| d * sign >= -MONOTONE_MARGIN);
        if no_reversal {
            Ok(if sign > 0.0 { 1 } else { -1 })
        } else {
            Err(FunctionError::NonMonotoneBranch { lo, hi })
        }
    }

    /// CSV with columns `t,value,d1,d2`, full round-trip precision.
    pub fn to_csv(&self) -> Result<String, FunctionError> {
        let d1 = self.derivative_profile(DerivativeOrder::First)?;
        let d2 = self.derivative_profile(DerivativeOrder::Second)?;
        let mut out = String::from("t,value,d1,d2\n");
        for i in 0..self.len() {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                fmt_full(self.node(i)),
                fmt_full(self.values[i]),
                fmt_full(d1.values()[i]),
                fmt_full(d2.values()[i])
            );
        }
        Ok(out)
    }

    pub fn to_json_record(&self) -> FunctionRecord {
        FunctionRecord {
            domain: [self.domain_start, self.domain_end],
            n: self.len(),
            values: self.values.clone(),
        }
    }

    pub fn from_json_record(rec: FunctionRecord) -> Result<Self, FunctionError> {
        Self::from_values(rec.domain[0], rec.domain[1], rec.values)
    }
}

/// Renders with 17 significant digits so the decimal form round-trips.
pub fn fmt_full(x: f64) -> String {
    format!("{x:.16e}")
}

/// JSON shape of a sampled function.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctionRecord {
    pub domain: [f64; 2],
    pub n: usize,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivativeOrder {
    First,
    Second,
}

/// A maximal strictly-monotone index range of a sampled function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonotoneBranch {
    pub start: usize,
    pub end: usize,
    pub increasing: bool,
}

/// The level pairing `u(t) = v(s)` with its gap `g = s - t`.
#[derive(Debug, Clone)]
pub struct MatchingMap {
    pub samples: Vec<(f64, f64)>,
    pub gap: Vec<f64>,
}

/// Solves `v(s) = u(t)` for `s` by bisection on a strictly monotone
/// branch of `v` inside `search_interval`.
pub fn match_level(
    u: &SampledFunction,
    v: &SampledFunction,
    t: f64,
    search_interval: (f64, f64),
) -> Result<f64, FunctionError> {
    let level = u.eval(t);
    match_level_value(v, level, search_interval)
}

/// Same as [`match_level`] but with the level given directly.
pub fn match_level_value(
    v: &SampledFunction,
    level: f64,
    search_interval: (f64, f64),
) -> Result<f64, FunctionError> {
    let (lo, hi) = search_interval;
    let lo = lo.max(v.domain_start());
    let hi = hi.min(v.domain_end());
    let sign = v.monotone_sign_on(lo, hi)?;
    let (va, vb) = (v.eval(lo), v.eval(hi));
    let (vmin, vmax) = if va <= vb { (va, vb) } else { (vb, va) };
    if level < vmin - MATCH_TOLERANCE || level > vmax + MATCH_TOLERANCE {
        return Err(FunctionError::LevelOutOfRange {
            level,
            min: vmin,
            max: vmax,
        });
    }
    let mut a = lo;
    let mut b = hi;
    // orient so that the residual v - level goes from <=0 at a to >=0 at b
    let increasing = sign > 0;
    for _ in 0..BISECTION_MAX_ITER {
        if b - a <= BISECTION_WIDTH {
            break;
        }
        let mid = 0.5 * (a + b);
        let fm = v.eval(mid) - level;
        let go_right = if increasing { fm < 0.0 } else { fm > 0.0 };
        if go_right {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}

/// Builds the matching map of `u` against a monotone branch of `v`
/// covering `u`'s attainable values; samples every grid node of `u`
/// inside `t_range`.
pub fn build_matching_map(
    u: &SampledFunction,
    v: &SampledFunction,
    t_range: Option<(f64, f64)>,
    search_interval: Option<(f64, f64)>,
) -> Result<MatchingMap, FunctionError> {
    let (t_lo, t_hi) = t_range.unwrap_or((u.domain_start(), u.domain_end()));
    let interval = search_interval.unwrap_or((v.domain_start(), v.domain_end()));
    let mut samples = Vec::new();
    let mut gap = Vec::new();
    for i in 0..u.len() {
        let t = u.node(i);
        if t < t_lo || t > t_hi {
            continue;
        }
        let level = u.values()[i];
        match match_level_value(v, level, interval) {
            Ok(s) => {
                samples.push((t, s));
                gap.push(s - t);
            }
            Err(FunctionError::LevelOutOfRange { .. }) => continue,
            Err(e) => return Err(FunctionError::MatchAt { t, source: Box::new(e) }),
        }
    }
    Ok(MatchingMap { samples, gap })
}

fn uniform_nodes(start: f64, end: f64, n: usize) -> impl Iterator<Item = f64> {
    let h = (end - start) / (n.max(2) - 1) as f64;
    (0..n.max(2)).map(move |i| if i + 1 == n { end } else { start + i as f64 * h })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid_fn(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> SampledFunction {
        SampledFunction::from_fn(a, b, n, f).unwrap()
    }

    #[test]
    fn derivative_of_square_is_linear() {
        let f = grid_fn(|t| t * t, 0.0, 1.0, 1025);
        let d1 = f.derivative_profile(DerivativeOrder::First).unwrap();
        let h = f.step();
        for i in 0..f.len() {
            let t = f.node(i);
            assert!(
                (d1.values()[i] - 2.0 * t).abs() <= 10.0 * h * h,
                "at t={t}: {} vs {}",
                d1.values()[i],
                2.0 * t
            );
        }
    }

    #[test]
    fn derivative_of_bump_matches_closed_form() {
        // eps^6 t^3 (1-t)^3 with eps = 0.1
        let eps6 = 0.1f64.powi(6);
        let f = grid_fn(|t| eps6 * t.powi(3) * (1.0 - t).powi(3), 0.0, 1.0, 4097);
        let d1 = f.derivative_profile(DerivativeOrder::First).unwrap();
        for i in 1..f.len() - 1 {
            let t = f.node(i);
            let exact = 3.0 * eps6 * (1.0 - 2.0 * t) * (t - t * t) * (t - t * t);
            assert!(
                (d1.values()[i] - exact).abs() < 1e-10,
                "t={t}: {} vs {exact}",
                d1.values()[i]
            );
        }
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        let f = grid_fn(|_| 3.5, 0.0, 2.0, 101);
        let d1 = f.derivative_profile(DerivativeOrder::First).unwrap();
        let d2 = f.derivative_profile(DerivativeOrder::Second).unwrap();
        assert!(d1.values().iter().all(|&v| v.abs() < 1e-11));
        assert!(d2.values().iter().all(|&v| v.abs() < 1e-8));
    }

    #[test]
    fn second_order_convergence_on_smooth_function() {
        let err = |n: usize| {
            let f = grid_fn(|t| (2.0 * t).sin(), 0.0, 1.0, n);
            let d1 = f.derivative_profile(DerivativeOrder::First).unwrap();
            (0..n)
                .map(|i| (d1.values()[i] - 2.0 * (2.0 * f.node(i)).cos()).abs())
                .fold(0.0f64, f64::max)
        };
        let ratio = err(513) / err(1025);
        assert!((3.5..=4.5).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn too_few_samples_rejected() {
        let f = grid_fn(|t| t, 0.0, 1.0, 4);
        assert!(matches!(
            f.derivative_profile(DerivativeOrder::Second),
            Err(FunctionError::TooFewSamples { .. })
        ));
    }

    #[test]
    fn non_finite_values_rejected() {
        assert!(matches!(
            SampledFunction::from_values(0.0, 1.0, vec![0.0, f64::NAN, 1.0]),
            Err(FunctionError::NonFiniteValue(_))
        ));
    }

    #[test]
    fn match_level_identity() {
        let u = grid_fn(|t| t * t + 0.5 * t, 0.0, 1.0, 4097);
        let s = match_level(&u, &u, 0.37, (0.0, 1.0)).unwrap();
        assert!((s - 0.37).abs() < 1e-9);
    }

    #[test]
    fn match_level_square_against_identity() {
        let v = grid_fn(|s| s, 0.0, 1.0, 4097);
        let u = grid_fn(|t| t * t, 0.0, 1.0, 4097);
        let s = match_level(&u, &v, 0.5, (0.0, 1.0)).unwrap();
        assert!((s - 0.25).abs() < 1e-8, "s = {s}");
    }

    #[test]
    fn match_level_bump_pair_left_branch() {
        // u = eps^6 t^3(1-t)^3, v = eps^3 t^3(1-t)^3; matching means
        // eps t(1-t) = s(1-s). Closed-form root at t = 1/2, eps = 0.1:
        let eps = 0.1f64;
        let u = SampledFunction::from_callbacks(
            0.0,
            1.0,
            4097,
            AnalyticCallbacks::new(
                move |t: f64| eps.powi(6) * t.powi(3) * (1.0 - t).powi(3),
                move |t: f64| 3.0 * eps.powi(6) * (1.0 - 2.0 * t) * (t - t * t).powi(2),
                move |t: f64| 6.0 * eps.powi(6) * (t - t * t) * (1.0 - 5.0 * t + 5.0 * t * t),
            ),
        )
        .unwrap();
        let v = SampledFunction::from_callbacks(
            0.0,
            1.0,
            4097,
            AnalyticCallbacks::new(
                move |t: f64| eps.powi(3) * t.powi(3) * (1.0 - t).powi(3),
                move |t: f64| 3.0 * eps.powi(3) * (1.0 - 2.0 * t) * (t - t * t).powi(2),
                move |t: f64| 6.0 * eps.powi(3) * (t - t * t) * (1.0 - 5.0 * t + 5.0 * t * t),
            ),
        )
        .unwrap();
        let s = match_level(&u, &v, 0.5, (0.0, 0.5)).unwrap();
        let expected = (1.0 - 0.9f64.sqrt()) / 2.0; // quadratic-root oracle
        assert!((s - expected).abs() < 1e-9, "s = {s}, expected {expected}");
    }

    #[test]
    fn match_level_out_of_range() {
        let v = grid_fn(|s| s, 0.0, 1.0, 257);
        let u = grid_fn(|t| t + 5.0, 0.0, 1.0, 257);
        assert!(matches!(
            match_level(&u, &v, 0.5, (0.0, 1.0)),
            Err(FunctionError::LevelOutOfRange { .. })
        ));
    }

    #[test]
    fn match_level_rejects_non_monotone_branch() {
        let v = grid_fn(|s| (3.0 * s).sin(), 0.0, 2.0, 2049);
        let u = grid_fn(|t| t, 0.0, 1.0, 257);
        assert!(matches!(
            match_level(&u, &v, 0.5, (0.0, 2.0)),
            Err(FunctionError::NonMonotoneBranch { .. })
        ));
    }

    #[test]
    fn matching_map_identity_has_zero_gap() {
        let u = grid_fn(|t| t * t + t, 0.0, 1.0, 2049);
        let m = build_matching_map(&u, &u, None, None).unwrap();
        assert!(!m.samples.is_empty());
        for &g in &m.gap {
            assert!(g.abs() < 1e-8, "gap {g}");
        }
    }

    #[test]
    fn matching_map_translation_gap() {
        // v(s) = u(s - 0.3) for monotone u extended over [0, 1.3]
        let u = grid_fn(|t| t, 0.0, 1.0, 2049);
        let v = grid_fn(|s| s - 0.3, 0.0, 1.3, 2049);
        let m = build_matching_map(&u, &v, None, None).unwrap();
        for &g in &m.gap {
            assert!((g - 0.3).abs() < 1e-8, "gap {g}");
        }
    }

    #[test]
    fn matching_map_bump_pair_gap_positive() {
        let eps = 0.1f64;
        let u = grid_fn(
            |t| eps.powi(6) * t.powi(3) * (1.0 - t).powi(3),
            0.0,
            0.5,
            2049,
        );
        let v = grid_fn(
            |s| eps.powi(3) * s.powi(3) * (1.0 - s).powi(3),
            0.0,
            0.5,
            2049,
        );
        // Matching the shallow bump against the tall one: the oracle
        // relation s(1-s) = eps*t(1-t) puts s left of t, so g < 0.
        let m = build_matching_map(&u, &v, Some((1e-3, 0.499)), Some((0.0, 0.5))).unwrap();
        assert!(m.samples.len() > 100);
        for (&(t, _), &g) in m.samples.iter().zip(&m.gap) {
            assert!(g < 0.0, "t={t} g={g}");
        }
        // Reversed direction (tall bump as source): s(1-s) = t(1-t)/eps,
        // so the match sits right of t and g > 0 on the left branch.
        let m = build_matching_map(&v, &u, Some((1e-4, 0.02)), Some((0.0, 0.5))).unwrap();
        assert!(m.samples.len() > 10);
        for (&(t, _), &g) in m.samples.iter().zip(&m.gap) {
            assert!(g > 0.0, "t={t} g={g}");
        }
    }

    #[test]
    fn csv_round_trip_values() {
        let f = grid_fn(|t| t.sin(), 0.0, 1.0, 33);
        let csv = f.to_csv().unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "t,value,d1,d2");
        for (i, line) in lines.enumerate() {
            let cols: Vec<&str> = line.split(',').collect();
            let val: f64 = cols[1].parse().unwrap();
            assert_eq!(val, f.values()[i]);
        }
    }

    #[test]
    fn json_round_trip_bit_exact() {
        let f = grid_fn(|t| t.exp(), 0.0, 1.0, 65);
        let json = serde_json::to_string(&f.to_json_record()).unwrap();
        let back: FunctionRecord = serde_json::from_str(&json).unwrap();
        let g = SampledFunction::from_json_record(back).unwrap();
        assert_eq!(f.values(), g.values());
    }
}
