//! Constructive uniqueness pipeline for `u'' = f(u)` and its flux form
//! `d/dt K(u') = f(u)`: antiderivative `F` from `f`, the singular time
//! map `G` (or `H` through the flux map `G_K`), monotone inversion back
//! to the solution, and an independent fourth-order ODE oracle to
//! cross-check everything.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::IntegralError;
use crate::function::{DerivativeOrder, SampledFunction};

/// Default node count on both the rho and t grids.
pub const DEFAULT_NODES: usize = 8192;
/// Trajectory magnitudes past this abort the oracle.
pub const BLOWUP_GUARD: f64 = 1e12;
/// Inputs whose equation or first-integral residual exceeds this are
/// rejected as non-solutions.
pub const RESIDUAL_TOLERANCE: f64 = 1e-4;

type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Normalization of the antiderivative: `F' = 2f` in the bare
/// second-derivative setting, `F' = f` when the flux map carries the
/// factor instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Convention {
    Double,
    Single,
}

/// Strictly increasing flux `K` with its derivative; the flux
/// antiderivative `G_K(p) = \int_0^p rho K'(rho) drho` is tabulated on
/// demand.
#[derive(Clone)]
pub struct FluxMap {
    pub k: ScalarFn,
    pub k_prime: ScalarFn,
}

impl FluxMap {
    pub fn new(
        k: impl Fn(f64) -> f64 + Send + Sync + 'static,
        k_prime: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            k: Arc::new(k),
            k_prime: Arc::new(k_prime),
        }
    }
}

/// Monotone table with per-cell power-law interpolation, suited to maps
/// that vanish like a power at the origin.
#[derive(Debug, Clone)]
struct PowerTable {
    x: Vec<f64>,
    y: Vec<f64>, // strictly increasing, y[0] = 0 at x[0] = 0
}

impl PowerTable {
    /// y at x by local power-law model between nodes.
    fn eval(&self, x: f64) -> f64 {
        interp_power(&self.x, &self.y, x)
    }

    /// x at y (inverse map).
    fn eval_inverse(&self, y: f64) -> f64 {
        interp_power(&self.y, &self.x, y)
    }

    fn max_y(&self) -> f64 {
        *self.y.last().unwrap()
    }
}

/// Interpolates through `(xs, ys)` with a per-cell power law
/// `y = c x^m`, exact whenever the table is a pure power. Both arrays
/// strictly increase and start at 0.
fn interp_power(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    let n = xs.len();
    if x <= xs[0] {
        return ys[0];
    }
    if x >= xs[n - 1] {
        return ys[n - 1];
    }
    let j = match xs.binary_search_by(|v| v.total_cmp(&x)) {
        Ok(j) => return ys[j],
        Err(j) => j - 1,
    };
    let (x0, x1, y0, y1) = (xs[j], xs[j + 1], ys[j], ys[j + 1]);
    if x0 > 0.0 && y0 > 0.0 && y1 > 0.0 {
        let m = (y1 / y0).ln() / (x1 / x0).ln();
        if m.is_finite() && m.abs() < 1e6 {
            return y0 * (x / x0).powf(m);
        }
    }
    // first cell (or degenerate ratio): model y = c x^m through the
    // next two nodes
    if j + 2 < n && ys[j + 1] > 0.0 && ys[j + 2] > 0.0 && xs[j + 1] > 0.0 {
        let m = (ys[j + 2] / ys[j + 1]).ln() / (xs[j + 2] / xs[j + 1]).ln();
        if m.is_finite() && m > 0.0 {
            return ys[j + 1] * (x / xs[j + 1]).powf(m);
        }
    }
    y0 + (y1 - y0) * (x - x0) / (x1 - x0)
}

/// The pair (F, time map) for one source term `f`.
#[derive(Clone)]
pub struct FirstIntegral {
    f: ScalarFn,
    convention: Convention,
    rho_max: f64,
    n: usize,
    /// F on the fine grid (2(n-1)+1 nodes), Simpson-accumulated.
    f_fine: Vec<f64>,
    time_map: Option<PowerTable>,
    flux: Option<FluxMap>,
    flux_table: Option<PowerTable>,
}

impl std::fmt::Debug for FirstIntegral {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FirstIntegral")
            .field("convention", &self.convention)
            .field("rho_max", &self.rho_max)
            .field("n", &self.n)
            .field("time_map", &self.time_map.is_some())
            .field("flux", &self.flux.is_some())
            .finish()
    }
}

/// Builds F by composite Simpson quadrature of `2f` (DOUBLE) or `f`
/// (SINGLE) from 0, normalized to `F(0) = 0`.
pub fn build_first_integral(
    f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    rho_max: f64,
    convention: Convention,
) -> Result<FirstIntegral, IntegralError> {
    build_first_integral_with_nodes(f, rho_max, convention, DEFAULT_NODES)
}

pub fn build_first_integral_with_nodes(
    f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    rho_max: f64,
    convention: Convention,
    n: usize,
) -> Result<FirstIntegral, IntegralError> {
    let f: ScalarFn = Arc::new(f);
    let factor = match convention {
        Convention::Double => 2.0,
        Convention::Single => 1.0,
    };
    let m = 2 * (n - 1); // fine cells
    let hf = rho_max / m as f64;
    let mut f_fine = Vec::with_capacity(m + 1);
    f_fine.push(0.0);
    let mut acc = 0.0;
    for j in 0..m {
        let a = j as f64 * hf;
        let b = a + hf;
        if !f(a).is_finite() || !f(0.5 * (a + b)).is_finite() || !f(b).is_finite() {
            return Err(IntegralError::NonFiniteSource(0.5 * (a + b)));
        }
        // f may behave like a fractional power at 0 (e.g. rho^{1/3}),
        // where plain Simpson loses ~5 digits: the origin cell gets
        // dyadic refinement and its neighbors extra subcells
        acc += factor
            * if j == 0 {
                integrate_from_origin(&*f, b)
            } else if j <= 64 {
                simpson(&*f, a, b, 8)
            } else {
                simpson(&*f, a, b, 1)
            };
        f_fine.push(acc);
    }
    Ok(FirstIntegral {
        f,
        convention,
        rho_max,
        n,
        f_fine,
        time_map: None,
        flux: None,
        flux_table: None,
    })
}

/// Composite Simpson rule with `sub` subcells.
fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, sub: usize) -> f64 {
    let h = (b - a) / sub as f64;
    let mut acc = 0.0;
    for k in 0..sub {
        let x0 = a + k as f64 * h;
        let x1 = x0 + h;
        acc += h / 6.0 * (f(x0) + 4.0 * f(0.5 * (x0 + x1)) + f(x1));
    }
    acc
}

/// Integral of `f` over `[0, b]` by dyadic bisection toward the origin,
/// accurate for integrable power behavior `f ~ rho^alpha`, `alpha > -1`.
fn integrate_from_origin(f: impl Fn(f64) -> f64, b: f64) -> f64 {
    let mut acc = 0.0;
    let mut hi = b;
    for _ in 0..60 {
        let lo = 0.5 * hi;
        acc += simpson(&f, lo, hi, 4);
        hi = lo;
    }
    acc
}

impl FirstIntegral {
    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn rho_max(&self) -> f64 {
        self.rho_max
    }

    /// Attaches the flux map for the `d/dt K(u')` pipeline.
    pub fn with_flux(mut self, flux: FluxMap) -> Self {
        self.flux = Some(flux);
        self
    }

    pub fn has_flux(&self) -> bool {
        self.flux.is_some()
    }

    fn fine_step(&self) -> f64 {
        self.rho_max / (self.f_fine.len() - 1) as f64
    }

    /// F at an arbitrary rho: nearest fine node plus a Simpson tail.
    pub fn big_f(&self, rho: f64) -> f64 {
        let rho = rho.clamp(0.0, self.rho_max);
        let hf = self.fine_step();
        let j = ((rho / hf).floor() as usize).min(self.f_fine.len() - 2);
        let a = j as f64 * hf;
        let w = rho - a;
        if w <= 0.0 {
            return self.f_fine[j];
        }
        let factor = match self.convention {
            Convention::Double => 2.0,
            Convention::Single => 1.0,
        };
        self.f_fine[j] + factor * simpson(&*self.f, a, rho, 4)
    }

    /// Coarse-grid samples of F (n nodes on [0, rho_max]).
    pub fn f_samples(&self) -> Vec<(f64, f64)> {
        (0..self.n)
            .map(|i| {
                let rho = self.rho_max * i as f64 / (self.n - 1) as f64;
                (rho, self.f_fine[2 * i])
            })
            .collect()
    }

    /// Populates the time map `G` (or `H` in the flux form): the
    /// cumulative integral of `1/sqrt(F)` (resp. `1/G_K^{-1}(F)`).
    /// The singular cell at 0 is integrated by the closed form of a
    /// power-law fit to the leading nodes; later cells use a per-cell
    /// power-law model of the integrand, exact on pure powers.
    pub fn build_time_map(&mut self) -> Result<(), IntegralError> {
        match (self.convention, self.flux.is_some()) {
            (Convention::Double, true) => {
                return Err(IntegralError::ConventionMismatch(
                    "DOUBLE normalization carries the factor 2 itself; the flux map requires SINGLE".into(),
                ))
            }
            (Convention::Single, false) => {
                return Err(IntegralError::ConventionMismatch(
                    "SINGLE normalization is only used with a flux map; use DOUBLE for the bare second-derivative form".into(),
                ))
            }
            _ => {}
        }
        let samples = self.f_samples();
        for &(rho, f_val) in samples.iter().skip(1) {
            if f_val <= 0.0 {
                return Err(IntegralError::NonpositiveF { rho, value: f_val });
            }
        }
        if self.flux.is_some() {
            let max_f = samples.last().unwrap().1.max(
                samples.iter().map(|s| s.1).fold(0.0, f64::max),
            );
            let table = build_flux_table(self.flux.as_ref().unwrap(), max_f)?;
            self.flux_table = Some(table);
        }
        let q = |f_val: f64| -> f64 {
            match &self.flux_table {
                None => 1.0 / f_val.sqrt(),
                Some(table) => 1.0 / table.eval_inverse(f_val),
            }
        };
        let rho: Vec<f64> = samples.iter().map(|s| s.0).collect();
        let qs: Vec<f64> = samples.iter().map(|s| q(s.1)).collect();
        // log-log fit of the integrand on the first 8 interior nodes:
        // q ~ c rho^{-gamma}, convergent iff gamma < 1
        let fit_n = 8.min(self.n - 1);
        let (c, gamma) = {
            let mut sx = 0.0;
            let mut sy = 0.0;
            let mut sxx = 0.0;
            let mut sxy = 0.0;
            for i in 1..=fit_n {
                let lx = rho[i].ln();
                let ly = qs[i].ln();
                sx += lx;
                sy += ly;
                sxx += lx * lx;
                sxy += lx * ly;
            }
            let k = fit_n as f64;
            let slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
            let intercept = (sy - slope * sx) / k;
            (intercept.exp(), -slope)
        };
        if !(gamma < 0.999) {
            return Err(IntegralError::DivergentTimeMap { gamma });
        }
        let mut t = vec![0.0; self.n];
        t[1] = c * rho[1].powf(1.0 - gamma) / (1.0 - gamma);
        for i in 1..self.n - 1 {
            t[i + 1] = t[i] + integrate_power_cell(rho[i], rho[i + 1], qs[i], qs[i + 1]);
        }
        self.time_map = Some(PowerTable { x: rho, y: t });
        Ok(())
    }

    pub fn has_time_map(&self) -> bool {
        self.time_map.is_some()
    }

    /// Time-map value at rho (0 when the map is unbuilt).
    pub fn time_map_at(&self, rho: f64) -> Option<f64> {
        self.time_map.as_ref().map(|t| t.eval(rho))
    }

    pub fn time_map_range(&self) -> Option<f64> {
        self.time_map.as_ref().map(|t| t.max_y())
    }

    /// Flux antiderivative `G_K(p)`; requires the flux path.
    pub fn flux_g(&self, p: f64) -> Option<f64> {
        self.flux_table.as_ref().map(|t| t.eval(p))
    }

    /// Inverts the time map: `u(t)` with `u(0) = 0`, sampled on `n`
    /// uniform nodes over `[0, t_max]`.
    pub fn reconstruct_solution(&self, t_max: f64) -> Result<SampledFunction, IntegralError> {
        let table = self
            .time_map
            .as_ref()
            .expect("build_time_map before reconstruct_solution");
        let range = table.max_y();
        if t_max > range {
            return Err(IntegralError::BeyondTimeMapRange { t_max, range });
        }
        let n = self.n;
        let mut values = Vec::with_capacity(n);
        for i in 0..n {
            let t = t_max * i as f64 / (n - 1) as f64;
            values.push(table.eval_inverse(t));
        }
        values[0] = 0.0;
        Ok(SampledFunction::from_values(0.0, t_max, values)?)
    }

    /// CSV of (rho, F, time_map) triples on the coarse grid.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("rho,F,time_map\n");
        let samples = self.f_samples();
        for (i, (rho, f_val)) in samples.iter().enumerate() {
            let g = self
                .time_map
                .as_ref()
                .map(|t| t.y[i])
                .unwrap_or(f64::NAN);
            let _ = writeln!(
                out,
                "{},{},{}",
                crate::function::fmt_full(*rho),
                crate::function::fmt_full(*f_val),
                crate::function::fmt_full(g)
            );
        }
        out
    }

    pub fn to_json_record(&self) -> FirstIntegralRecord {
        let samples = self.f_samples();
        FirstIntegralRecord {
            convention: self.convention,
            rho_max: self.rho_max,
            n: self.n,
            f: samples.iter().map(|&(rho, _)| (self.f)(rho)).collect(),
            big_f: samples.iter().map(|s| s.1).collect(),
            time_map: self.time_map.as_ref().map(|t| t.y.clone()),
            has_flux: self.flux.is_some(),
        }
    }
}

/// JSON shape of a first-integral pipeline.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FirstIntegralRecord {
    pub convention: Convention,
    pub rho_max: f64,
    pub n: usize,
    pub f: Vec<f64>,
    pub big_f: Vec<f64>,
    pub time_map: Option<Vec<f64>>,
    pub has_flux: bool,
}

/// Integral of the power-law model through `(x0, q0)`, `(x1, q1)` over
/// `[x0, x1]`; exact when the integrand is a pure power of rho.
fn integrate_power_cell(x0: f64, x1: f64, q0: f64, q1: f64) -> f64 {
    if q0 <= 0.0 || q1 <= 0.0 || x0 <= 0.0 {
        return 0.5 * (q0 + q1) * (x1 - x0);
    }
    let beta = (q1 / q0).ln() / (x1 / x0).ln();
    if !beta.is_finite() {
        return 0.5 * (q0 + q1) * (x1 - x0);
    }
    if (beta + 1.0).abs() < 1e-9 {
        return q0 * x0 * (x1 / x0).ln();
    }
    let c = q0 / x0.powf(beta);
    c * (x1.powf(beta + 1.0) - x0.powf(beta + 1.0)) / (beta + 1.0)
}

/// Tabulates `G_K(p) = \int_0^p rho K'(rho) drho` on `[0, p_max]` with
/// `p_max` doubled until the table covers `needed`.
fn build_flux_table(flux: &FluxMap, needed: f64) -> Result<PowerTable, IntegralError> {
    const TABLE_NODES: usize = 4097;
    let mut p_max = 1.0;
    loop {
        let h = p_max / (TABLE_NODES - 1) as f64;
        let mut p = Vec::with_capacity(TABLE_NODES);
        let mut g = Vec::with_capacity(TABLE_NODES);
        p.push(0.0);
        g.push(0.0);
        let mut acc = 0.0;
        let integrand = |x: f64| x * (flux.k_prime)(x);
        let mut ok = true;
        for j in 0..TABLE_NODES - 1 {
            let a = j as f64 * h;
            let b = a + h;
            if (flux.k_prime)(b) <= 0.0 {
                ok = false;
                break;
            }
            acc += h / 6.0 * (integrand(a) + 4.0 * integrand(0.5 * (a + b)) + integrand(b));
            p.push(b);
            g.push(acc);
        }
        if !ok {
            return Err(IntegralError::NonInvertibleFlux);
        }
        if acc >= needed {
            return Ok(PowerTable { x: p, y: g });
        }
        p_max *= 2.0;
        if p_max > 1e9 {
            return Err(IntegralError::NonInvertibleFlux);
        }
    }
}

/// A trajectory of the oracle integrator: the solution and its
/// derivative on the step grid.
#[derive(Debug, Clone)]
pub struct OracleTrajectory {
    pub u: SampledFunction,
    pub du: SampledFunction,
}

/// Classic fourth-order one-step integration of `u'' = f(u)` (or of
/// `d/dt K(u') = f(u)` with state `(u, m = K(u'))` and `u' = K^{-1}(m)`).
pub fn integrate_ode_oracle(
    f: impl Fn(f64) -> f64,
    u0: f64,
    du0: f64,
    t_span: (f64, f64),
    step: f64,
    flux: Option<&FluxMap>,
) -> Result<OracleTrajectory, IntegralError> {
    assert!(step > 0.0, "step must be positive");
    let (t0, t1) = t_span;
    let n_steps = ((t1 - t0) / step).ceil().max(1.0) as usize;
    let h = (t1 - t0) / n_steps as f64;
    // state: (u, y) where y = u' in the bare form, y = K(u') in the flux form
    let deriv = |state: [f64; 2], p_guess: f64| -> Result<([f64; 2], f64), IntegralError> {
        let p = match flux {
            None => state[1],
            Some(fl) => invert_monotone(&fl.k, &fl.k_prime, state[1], p_guess)?,
        };
        Ok(([p, f(state[0])], p))
    };
    let mut state = [
        u0,
        match flux {
            None => du0,
            Some(fl) => (fl.k)(du0) - (fl.k)(0.0),
        },
    ];
    let mut p_guess = du0;
    let mut us = Vec::with_capacity(n_steps + 1);
    let mut dus = Vec::with_capacity(n_steps + 1);
    us.push(u0);
    dus.push(du0);
    for _ in 0..n_steps {
        let (k1, p1) = deriv(state, p_guess)?;
        let (k2, p2) = deriv(
            [state[0] + 0.5 * h * k1[0], state[1] + 0.5 * h * k1[1]],
            p1,
        )?;
        let (k3, p3) = deriv(
            [state[0] + 0.5 * h * k2[0], state[1] + 0.5 * h * k2[1]],
            p2,
        )?;
        let (k4, _) = deriv([state[0] + h * k3[0], state[1] + h * k3[1]], p3)?;
        state[0] += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
        state[1] += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
        if state[0].abs() > BLOWUP_GUARD || state[1].abs() > BLOWUP_GUARD {
            return Err(IntegralError::BlowUp(BLOWUP_GUARD));
        }
        let (_, p_now) = deriv(state, p_guess)?;
        p_guess = p_now;
        us.push(state[0]);
        dus.push(p_now);
    }
    Ok(OracleTrajectory {
        u: SampledFunction::from_values(t0, t1, us)?,
        du: SampledFunction::from_values(t0, t1, dus)?,
    })
}

/// Solves `k(p) - k(0) = m` for `p` by safeguarded Newton iteration;
/// `k` is strictly increasing.
fn invert_monotone(
    k: &ScalarFn,
    k_prime: &ScalarFn,
    m: f64,
    guess: f64,
) -> Result<f64, IntegralError> {
    let base = k(0.0);
    let g = |p: f64| k(p) - base - m;
    let mut p = guess;
    for _ in 0..100 {
        let gp = g(p);
        if gp.abs() < 1e-14 * (1.0 + m.abs()) {
            return Ok(p);
        }
        let d = k_prime(p);
        if d <= 0.0 {
            return Err(IntegralError::NonInvertibleFlux);
        }
        let next = p - gp / d;
        if !next.is_finite() {
            return Err(IntegralError::NonInvertibleFlux);
        }
        if (next - p).abs() < 1e-15 * (1.0 + p.abs()) {
            return Ok(next);
        }
        p = next;
    }
    // Newton failed to settle; fall back to expanding-bracket bisection
    let mut lo = -1.0;
    let mut hi = 1.0;
    for _ in 0..200 {
        if g(lo) <= 0.0 && g(hi) >= 0.0 {
            break;
        }
        lo *= 2.0;
        hi *= 2.0;
        if hi > BLOWUP_GUARD {
            return Err(IntegralError::NonInvertibleFlux);
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Outcome of the uniqueness cross-check between two claimed solutions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UniquenessReport {
    pub pass: bool,
    pub max_deviation: f64,
    pub witness: f64,
    pub tolerance: f64,
    /// sup of the first-integral residual for each input: `u'^2 - F(u)`
    /// (DOUBLE) or `G_K(u') - F(u)` (SINGLE).
    pub first_integral_residual_u: f64,
    pub first_integral_residual_w: f64,
    /// True when the sampled derivative of `u` stays positive on the
    /// first half of the domain (beyond the first two cells).
    pub derivative_positive: bool,
}

/// Checks that `u` and `w` solve the same pipeline equation (by residual)
/// and coincide within `tolerance`.
pub fn verify_uniqueness_pair(
    u: &SampledFunction,
    w: &SampledFunction,
    fi: &FirstIntegral,
    tolerance: f64,
) -> Result<UniquenessReport, IntegralError> {
    let fi_res = |f: &SampledFunction| -> Result<f64, IntegralError> {
        let d1 = f.derivative_profile(DerivativeOrder::First)?;
        let mut sup = 0.0f64;
        // skip two boundary cells at each end where one-sided stencils
        // and the singular origin inflate the estimate
        for i in 2..f.len() - 2 {
            let val = f.values()[i];
            if val > fi.rho_max() {
                continue;
            }
            let res = match fi.convention() {
                Convention::Double => d1.values()[i] * d1.values()[i] - fi.big_f(val),
                Convention::Single => {
                    let g = fi
                        .flux_g(d1.values()[i].abs())
                        .ok_or(IntegralError::NonInvertibleFlux)?;
                    g - fi.big_f(val)
                }
            };
            sup = sup.max(res.abs());
        }
        Ok(sup)
    };
    // boundary data: both vanish at 0 with matching initial slope
    let b_tol = RESIDUAL_TOLERANCE;
    if u.values()[0].abs() > b_tol || w.values()[0].abs() > b_tol {
        return Err(IntegralError::ResidualTooLarge {
            residual: u.values()[0].abs().max(w.values()[0].abs()),
            tolerance: b_tol,
        });
    }
    let res_u = fi_res(u)?;
    let res_w = fi_res(w)?;
    let worst = res_u.max(res_w);
    if worst > RESIDUAL_TOLERANCE {
        return Err(IntegralError::ResidualTooLarge {
            residual: worst,
            tolerance: RESIDUAL_TOLERANCE,
        });
    }
    let mut max_dev = 0.0f64;
    let mut witness = u.domain_start();
    let t_hi = u.domain_end().min(w.domain_end());
    for i in 0..u.len() {
        let t = u.node(i);
        if t > t_hi {
            break;
        }
        let dev = (u.values()[i] - w.eval(t)).abs();
        if dev > max_dev {
            max_dev = dev;
            witness = t;
        }
    }
    let d1 = u.derivative_profile(DerivativeOrder::First)?;
    let half = u.domain_start() + 0.5 * (u.domain_end() - u.domain_start());
    let derivative_positive = (2..u.len())
        .filter(|&i| u.node(i) < half)
        .all(|i| d1.values()[i] > 0.0);
    Ok(UniquenessReport {
        pass: max_dev <= tolerance,
        max_deviation: max_dev,
        witness,
        tolerance,
        first_integral_residual_u: res_u,
        first_integral_residual_w: res_w,
        derivative_positive,
    })
}
