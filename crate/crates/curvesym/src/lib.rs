//! Numerical verification toolkit for level-matched curvature
//! comparisons on sampled functions and discretized planar curves:
//! comparison-hypothesis checkers, first-integral reconstruction with an
//! independent ODE oracle, a moving-plane symmetry sweep, and generators
//! for the explicit example families the checks exercise.

pub mod curve;
pub mod error;
pub mod function;
pub mod gallery;
pub mod integral;
pub mod lemmas;
pub mod report;
pub mod svg;
pub mod sweep;

pub use curve::{Axis, ConditionReport, PlanarCurve};
pub use gallery::{instance, verify_curvature_claim, CurvatureClaimReport, GalleryInstance};
pub use function::{
    build_matching_map, match_level, AnalyticCallbacks, DerivativeOrder, MatchingMap,
    SampledFunction,
};
pub use integral::{
    build_first_integral, integrate_ode_oracle, verify_uniqueness_pair, Convention,
    FirstIntegral, FluxMap, OracleTrajectory, UniquenessReport,
};
pub use lemmas::{ComparisonForm, HypothesisReport, Verdict};
pub use report::{write_atomic, CheckLine, Metadata, Report, SuiteSummary};
pub use sweep::{
    plateau_intervals, reflect_upper, region_contains, sweep, symmetry_verdict, Fragment,
    PlateauRecord, SweepResult, SymmetryVerdict, TouchCase,
};
