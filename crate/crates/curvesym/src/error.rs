//! Error types shared across the toolkit.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FunctionError {
    #[error("invalid domain [{start}, {end}]")]
    InvalidDomain { start: f64, end: f64 },
    #[error("too few samples: got {got}, need at least {need}")]
    TooFewSamples { got: usize, need: usize },
    #[error("non-finite sample value {0}")]
    NonFiniteValue(f64),
    #[error("level {level} outside branch range [{min}, {max}]")]
    LevelOutOfRange { level: f64, min: f64, max: f64 },
    #[error("derivative changes sign beyond margin on [{lo}, {hi}]")]
    NonMonotoneBranch { lo: f64, hi: f64 },
    #[error("level matching failed at t = {t}: {source}")]
    MatchAt {
        t: f64,
        #[source]
        source: Box<FunctionError>,
    },
}

#[derive(Debug, Error)]
pub enum CurveError {
    #[error("curve needs at least {need} points, got {got}")]
    TooFewPoints { got: usize, need: usize },
    #[error("consecutive points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("non-finite coordinate at vertex {0}")]
    NonFiniteCoordinate(usize),
    #[error("curve is self-intersecting: segments {0} and {1} cross")]
    SelfIntersection(usize, usize),
    #[error("degenerate vertex triple at index {0}")]
    DegenerateTriple(usize),
    #[error("curve has no interior")]
    DegenerateCurve,
}

#[derive(Debug, Error)]
pub enum LemmaError {
    #[error(transparent)]
    Function(#[from] FunctionError),
    #[error("domains differ: [{0}, {1}] vs [{2}, {3}]")]
    DomainMismatch(f64, f64, f64, f64),
    #[error("domain lengths differ beyond one grid cell: {0} vs {1}")]
    DomainLengthMismatch(f64, f64),
    #[error("positivity contract violated: {name} = {value} at derivative value {at}")]
    PositivityContract { name: &'static str, value: f64, at: f64 },
    #[error("graphs never touch within max shift {0}")]
    NoTouch(f64),
    #[error("boundary data violated: {0}")]
    BoundaryData(String),
}

#[derive(Debug, Error)]
pub enum IntegralError {
    #[error(transparent)]
    Function(#[from] FunctionError),
    #[error("non-finite f sample at rho = {0}")]
    NonFiniteSource(f64),
    #[error("F is nonpositive ({value}) at rho = {rho}; reconstruction impossible")]
    NonpositiveF { rho: f64, value: f64 },
    #[error("flux map G_K is not invertible on the needed range")]
    NonInvertibleFlux,
    #[error("t_max {t_max} exceeds time-map range {range}")]
    BeyondTimeMapRange { t_max: f64, range: f64 },
    #[error("trajectory blow-up: |state| exceeded {0:e}")]
    BlowUp(f64),
    #[error("equation residual {residual} exceeds tolerance {tolerance}; input does not solve the claimed equation")]
    ResidualTooLarge { residual: f64, tolerance: f64 },
    #[error("convention mismatch: {0}")]
    ConventionMismatch(String),
    #[error("time-map integrand diverges like rho^-{gamma}; map does not converge")]
    DivergentTimeMap { gamma: f64 },
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("curve has no interior to sweep")]
    DegenerateCurve,
}

#[derive(Debug, Error)]
pub enum GalleryError {
    #[error(transparent)]
    Function(#[from] FunctionError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Lemma(#[from] LemmaError),
    #[error("construction self-check failed: {0}")]
    SelfCheck(String),
    #[error("closure junction failure: {0}")]
    ClosureJunction(String),
    #[error("unknown gallery instance `{0}`")]
    UnknownInstance(String),
}
