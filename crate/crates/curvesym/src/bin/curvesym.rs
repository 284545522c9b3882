//! Command-line front end: lemma checks, first-integral reconstruction,
//! moving-plane sweeps, gallery generation, the curvature-claim
//! counterexample, and the full suite. JSON reports are the canonical
//! output; CSV and SVG are derived views. Exit status: 0 when every
//! verdict matches expectation, 1 on a failed verdict, 2 on usage or
//! input errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use curvesym::curve::{circle, Axis, PlanarCurve};
use curvesym::function::SampledFunction;
use curvesym::gallery;
use curvesym::integral::{build_first_integral, Convention, FluxMap};
use curvesym::lemmas::{
    assert_coincidence, assert_plateau_symmetry, assert_reflection,
    check_comparison_hypothesis, slide_until_touch, ComparisonForm,
};
use curvesym::report::{write_atomic, CheckLine, Report, SuiteSummary};
use curvesym::sweep::{sweep, symmetry_verdict};
use curvesym::svg;

/// Environment variable overriding the output directory.
const OUTPUT_DIR_ENV: &str = "CURVESYM_OUTPUT_DIR";

#[derive(Parser)]
#[command(name = "curvesym", version, about = "Curvature-comparison verification toolkit")]
struct Cli {
    /// Run from a JSON config file instead of subcommand flags.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Directory for reports (flag beats CURVESYM_OUTPUT_DIR beats ./reports).
    #[arg(long, global = true)]
    output_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Check a comparison lemma on two function files.
    VerifyLemma(VerifyLemmaArgs),
    /// Build a first integral and reconstruct the solution.
    Reconstruct(ReconstructArgs),
    /// Run the moving-plane sweep on a curve file.
    Sweep(SweepArgs),
    /// Generate a named gallery instance and export it.
    Gallery(GalleryArgs),
    /// Verify the matched-level curvature claim for the bump pair.
    Counterexample(CounterexampleArgs),
    /// Run the whole verification battery.
    Suite(SuiteArgs),
}

#[derive(Args)]
struct VerifyLemmaArgs {
    /// One of: hypothesis, coincidence, reflection, slide, plateau-symmetry.
    #[arg(long)]
    lemma: String,
    /// Function file (JSON record) for u.
    #[arg(long)]
    u: PathBuf,
    /// Function file (JSON record) for v; defaults to u.
    #[arg(long)]
    v: Option<PathBuf>,
    /// Comparison form: second-deriv, curvature, or k-flux:<spec>.
    #[arg(long, default_value = "second-deriv")]
    form: String,
    /// Pass/fail tolerance for the coincidence-style lemmas.
    #[arg(long, default_value_t = 1e-8)]
    tolerance: f64,
}

#[derive(Args)]
struct ReconstructArgs {
    /// Source term spec: const:<c>, power:<c>:<k>, or linear:<a>:<b>.
    #[arg(long)]
    f: String,
    /// double (u'' = f, F' = 2f) or single (flux form, F' = f).
    #[arg(long)]
    convention: String,
    /// Flux spec for the single convention: identity or power:<c>:<k>.
    #[arg(long = "K")]
    k: Option<String>,
    #[arg(long, default_value_t = 1.0)]
    rho_max: f64,
}

#[derive(Args)]
struct SweepArgs {
    /// Curve file, .csv (x1,x2 header) or .json ({points, orientation}).
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value = "x2")]
    axis: String,
}

#[derive(Args)]
struct GalleryArgs {
    #[arg(long)]
    name: String,
    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,
}

#[derive(Args)]
struct CounterexampleArgs {
    #[arg(long)]
    epsilon: f64,
    #[arg(long, default_value_t = 4096)]
    grid: usize,
}

#[derive(Args)]
struct SuiteArgs {
    /// Run every check (the only supported mode).
    #[arg(long)]
    all: bool,
}

/// JSON mirror of a run; unknown keys are rejected.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct RunConfig {
    command: String,
    #[serde(default)]
    lemma: Option<String>,
    #[serde(default)]
    u: Option<PathBuf>,
    #[serde(default)]
    v: Option<PathBuf>,
    #[serde(default)]
    form: Option<String>,
    #[serde(default)]
    tolerance: Option<f64>,
    #[serde(default)]
    f: Option<String>,
    #[serde(default)]
    convention: Option<String>,
    #[serde(default, rename = "K")]
    k: Option<String>,
    #[serde(default)]
    rho_max: Option<f64>,
    #[serde(default)]
    input: Option<PathBuf>,
    #[serde(default)]
    axis: Option<String>,
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    epsilon: Option<f64>,
    #[serde(default)]
    grid: Option<usize>,
    #[serde(default)]
    output_dir: Option<PathBuf>,
    #[serde(default)]
    all: Option<bool>,
}

/// Failure that maps to exit status 2.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, UsageError> {
    Err(UsageError(msg.into()))
}

fn with_context<T, E: std::fmt::Display>(
    r: Result<T, E>,
    what: &str,
) -> Result<T, UsageError> {
    r.map_err(|e| UsageError(format!("{what}: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_dir = cli
        .output_dir
        .clone()
        .or_else(|| std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("reports"));
    let run = if let Some(cfg_path) = &cli.config {
        match load_config(cfg_path) {
            Ok(cfg) => {
                let dir = cli
                    .output_dir
                    .clone()
                    .or_else(|| std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from))
                    .or_else(|| cfg.output_dir.clone())
                    .unwrap_or_else(|| PathBuf::from("reports"));
                dispatch_config(&cfg, &dir)
            }
            Err(e) => Err(e),
        }
    } else {
        match &cli.command {
            Some(cmd) => dispatch(cmd, &out_dir),
            None => usage("expected a subcommand or --config <file>; see --help"),
        }
    };
    match run {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load_config(path: &Path) -> Result<RunConfig, UsageError> {
    let text = with_context(
        std::fs::read_to_string(path),
        &format!("reading config {}", path.display()),
    )?;
    with_context(
        serde_json::from_str::<RunConfig>(&text),
        &format!("parsing config {}", path.display()),
    )
}

fn dispatch_config(cfg: &RunConfig, out_dir: &Path) -> Result<bool, UsageError> {
    if let Some(t) = cfg.tolerance {
        if !(t > 0.0) {
            return usage(format!("tolerance must be positive, got {t}"));
        }
    }
    let need = |v: &Option<String>, key: &str| -> Result<String, UsageError> {
        v.clone()
            .ok_or_else(|| UsageError(format!("config key '{key}' required for '{}'", cfg.command)))
    };
    let need_path = |v: &Option<PathBuf>, key: &str| -> Result<PathBuf, UsageError> {
        v.clone()
            .ok_or_else(|| UsageError(format!("config key '{key}' required for '{}'", cfg.command)))
    };
    let cmd = match cfg.command.as_str() {
        "verify-lemma" => Command::VerifyLemma(VerifyLemmaArgs {
            lemma: need(&cfg.lemma, "lemma")?,
            u: need_path(&cfg.u, "u")?,
            v: cfg.v.clone(),
            form: cfg.form.clone().unwrap_or_else(|| "second-deriv".into()),
            tolerance: cfg.tolerance.unwrap_or(1e-8),
        }),
        "reconstruct" => Command::Reconstruct(ReconstructArgs {
            f: need(&cfg.f, "f")?,
            convention: need(&cfg.convention, "convention")?,
            k: cfg.k.clone(),
            rho_max: cfg.rho_max.unwrap_or(1.0),
        }),
        "sweep" => Command::Sweep(SweepArgs {
            input: need_path(&cfg.input, "input")?,
            axis: cfg.axis.clone().unwrap_or_else(|| "x2".into()),
        }),
        "gallery" => Command::Gallery(GalleryArgs {
            name: need(&cfg.name, "name")?,
            epsilon: cfg.epsilon.unwrap_or(0.1),
        }),
        "counterexample" => Command::Counterexample(CounterexampleArgs {
            epsilon: cfg
                .epsilon
                .ok_or_else(|| UsageError("config key 'epsilon' required".into()))?,
            grid: cfg.grid.unwrap_or(4096),
        }),
        "suite" => Command::Suite(SuiteArgs {
            all: cfg.all.unwrap_or(true),
        }),
        other => return usage(format!("unknown command '{other}'")),
    };
    dispatch(&cmd, out_dir)
}

fn dispatch(cmd: &Command, out_dir: &Path) -> Result<bool, UsageError> {
    match cmd {
        Command::VerifyLemma(a) => run_verify_lemma(a, out_dir),
        Command::Reconstruct(a) => run_reconstruct(a, out_dir),
        Command::Sweep(a) => run_sweep(a, out_dir),
        Command::Gallery(a) => run_gallery(a, out_dir),
        Command::Counterexample(a) => run_counterexample(a, out_dir),
        Command::Suite(a) => run_suite(a, out_dir),
    }
}

fn write_report(out_dir: &Path, stem: &str, report: &Report) -> Result<(), UsageError> {
    let path = out_dir.join(format!("{stem}.json"));
    with_context(
        write_atomic(&path, &report.to_json()),
        &format!("writing {}", path.display()),
    )
}

fn load_function(path: &Path) -> Result<SampledFunction, UsageError> {
    let text = with_context(
        std::fs::read_to_string(path),
        &format!("reading {}", path.display()),
    )?;
    let rec = with_context(
        serde_json::from_str(&text),
        &format!("parsing function record {}", path.display()),
    )?;
    with_context(
        SampledFunction::from_json_record(rec),
        &format!("validating function {}", path.display()),
    )
}

fn parse_form(spec: &str) -> Result<ComparisonForm, UsageError> {
    match spec {
        "second-deriv" => Ok(ComparisonForm::SecondDeriv),
        "curvature" => Ok(ComparisonForm::Curvature),
        _ => {
            if let Some(rest) = spec.strip_prefix("k-flux:") {
                let k = parse_flux(rest)?;
                let kp = k.k_prime;
                Ok(ComparisonForm::k_flux(move |p| kp(p)))
            } else {
                usage(format!(
                    "unknown form '{spec}' (expected second-deriv, curvature, or k-flux:<spec>)"
                ))
            }
        }
    }
}

/// `const:<c>`, `power:<c>:<k>` (c rho^k), or `linear:<a>:<b>` (a + b rho).
fn parse_source(spec: &str) -> Result<Box<dyn Fn(f64) -> f64 + Send + Sync>, UsageError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |s: &str| -> Result<f64, UsageError> {
        with_context(s.parse::<f64>(), &format!("number '{s}' in spec '{spec}'"))
    };
    match parts.as_slice() {
        ["const", c] => {
            let c = num(c)?;
            Ok(Box::new(move |_| c))
        }
        ["power", c, k] => {
            let (c, k) = (num(c)?, num(k)?);
            Ok(Box::new(move |rho: f64| c * rho.powf(k)))
        }
        ["linear", a, b] => {
            let (a, b) = (num(a)?, num(b)?);
            Ok(Box::new(move |rho: f64| a + b * rho))
        }
        _ => usage(format!(
            "unknown source spec '{spec}' (expected const:<c>, power:<c>:<k>, or linear:<a>:<b>)"
        )),
    }
}

/// `identity` (K(p) = p) or `power:<c>:<k>` (K(p) = c p^k).
fn parse_flux(spec: &str) -> Result<FluxMap, UsageError> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["identity"] => Ok(FluxMap::new(|p| p, |_| 1.0)),
        ["power", c, k] => {
            let c: f64 = with_context(c.parse(), &format!("number '{c}' in flux '{spec}'"))?;
            let k: f64 = with_context(k.parse(), &format!("number '{k}' in flux '{spec}'"))?;
            if !(c > 0.0 && k > 0.0) {
                return usage(format!("flux '{spec}' must have positive scale and exponent"));
            }
            Ok(FluxMap::new(
                move |p: f64| c * p.powf(k),
                move |p: f64| c * k * p.powf(k - 1.0),
            ))
        }
        _ => usage(format!(
            "unknown flux spec '{spec}' (expected identity or power:<c>:<k>)"
        )),
    }
}

fn parse_axis(spec: &str) -> Result<Axis, UsageError> {
    match spec {
        "x1" => Ok(Axis::X1),
        "x2" => Ok(Axis::X2),
        _ => usage(format!("unknown axis '{spec}' (expected x1 or x2)")),
    }
}

fn run_verify_lemma(a: &VerifyLemmaArgs, out_dir: &Path) -> Result<bool, UsageError> {
    if !(a.tolerance > 0.0) {
        return usage(format!("tolerance must be positive, got {}", a.tolerance));
    }
    let u = load_function(&a.u)?;
    let v = match &a.v {
        Some(p) => load_function(p)?,
        None => u.clone(),
    };
    let (pass, body) = match a.lemma.as_str() {
        "hypothesis" => {
            let form = parse_form(&a.form)?;
            let rep = with_context(
                check_comparison_hypothesis(&u, &v, &form),
                "hypothesis check",
            )?;
            (rep.holds, serde_json::to_value(&rep).unwrap())
        }
        "coincidence" => {
            let verdict = with_context(assert_coincidence(&u, &v, a.tolerance), "coincidence")?;
            (verdict.pass, serde_json::to_value(&verdict).unwrap())
        }
        "reflection" => {
            let verdict = with_context(assert_reflection(&u, &v, a.tolerance), "reflection")?;
            (verdict.pass, serde_json::to_value(&verdict).unwrap())
        }
        "slide" => {
            let span = u.domain_end() - u.domain_start() + v.domain_end() - v.domain_start();
            let (tau, touch) = with_context(slide_until_touch(&u, &v, span), "slide")?;
            (true, json!({ "tau": tau, "first_touch": touch }))
        }
        "plateau-symmetry" => {
            let verdict =
                with_context(assert_plateau_symmetry(&u, a.tolerance), "plateau symmetry")?;
            (verdict.pass, serde_json::to_value(&verdict).unwrap())
        }
        other => {
            return usage(format!(
                "unknown lemma '{other}' (expected hypothesis, coincidence, reflection, \
                 slide, or plateau-symmetry)"
            ))
        }
    };
    let report = Report::new(&format!("verify-lemma-{}", a.lemma), pass, body);
    write_report(out_dir, &format!("verify-lemma-{}", a.lemma), &report)?;
    Ok(pass)
}

fn run_reconstruct(a: &ReconstructArgs, out_dir: &Path) -> Result<bool, UsageError> {
    if !(a.rho_max > 0.0) {
        return usage(format!("rho-max must be positive, got {}", a.rho_max));
    }
    let convention = match a.convention.as_str() {
        "double" => Convention::Double,
        "single" => Convention::Single,
        other => return usage(format!("unknown convention '{other}' (double or single)")),
    };
    let f = parse_source(&a.f)?;
    let mut fi = with_context(
        build_first_integral(move |rho| f(rho), a.rho_max, convention),
        "building first integral",
    )?;
    if let Some(kspec) = &a.k {
        fi = fi.with_flux(parse_flux(kspec)?);
    }
    with_context(fi.build_time_map(), "building time map")?;
    let t_max = fi
        .time_map_range()
        .ok_or_else(|| UsageError("time map was not built".into()))?;
    let u = with_context(fi.reconstruct_solution(t_max), "reconstructing")?;
    let body = json!({
        "first_integral": fi.to_json_record(),
        "solution": u.to_json_record(),
        "t_max": t_max,
    });
    let report = Report::new("reconstruct", true, body);
    write_report(out_dir, "reconstruct", &report)?;
    let csv_path = out_dir.join("reconstruct.csv");
    with_context(
        write_atomic(&csv_path, &fi.to_csv()),
        &format!("writing {}", csv_path.display()),
    )?;
    Ok(true)
}

fn load_curve(path: &Path) -> Result<PlanarCurve, UsageError> {
    let text = with_context(
        std::fs::read_to_string(path),
        &format!("reading {}", path.display()),
    )?;
    if path.extension().and_then(|e| e.to_str()) == Some("json") {
        let rec = with_context(
            serde_json::from_str(&text),
            &format!("parsing curve record {}", path.display()),
        )?;
        with_context(
            PlanarCurve::from_json_record(rec),
            &format!("validating curve {}", path.display()),
        )
    } else {
        with_context(
            PlanarCurve::from_csv(&text),
            &format!("parsing curve csv {}", path.display()),
        )
    }
}

fn run_sweep(a: &SweepArgs, out_dir: &Path) -> Result<bool, UsageError> {
    let curve = load_curve(&a.input)?;
    let axis = parse_axis(&a.axis)?;
    let result = with_context(sweep(&curve, axis), "sweep")?;
    let verdict = symmetry_verdict(&curve, axis, Some(result.lambda0));
    let pass = verdict.pass;
    let body = json!({
        "sweep": result,
        "symmetry": verdict,
    });
    let report = Report::new("sweep", pass, body);
    write_report(out_dir, "sweep", &report)?;
    let svg_path = out_dir.join("sweep.svg");
    with_context(
        write_atomic(&svg_path, &svg::sweep_svg(&curve, &result)),
        &format!("writing {}", svg_path.display()),
    )?;
    Ok(pass)
}

fn run_gallery(a: &GalleryArgs, out_dir: &Path) -> Result<bool, UsageError> {
    let inst = with_context(
        gallery::instance(&a.name, a.epsilon),
        &format!("generating '{}'", a.name),
    )?;
    let mut functions = serde_json::Map::new();
    for (label, f) in &inst.functions {
        functions.insert(
            label.clone(),
            serde_json::to_value(f.to_json_record()).unwrap(),
        );
        let csv = with_context(f.to_csv(), &format!("csv for {label}"))?;
        let path = out_dir.join(format!("{}-{label}.csv", inst.name));
        with_context(write_atomic(&path, &csv), &format!("writing {}", path.display()))?;
        // standalone record, consumable by `verify-lemma --u/--v`
        let record = serde_json::to_string_pretty(&f.to_json_record()).unwrap() + "\n";
        let path = out_dir.join(format!("{}-{label}.json", inst.name));
        with_context(
            write_atomic(&path, &record),
            &format!("writing {}", path.display()),
        )?;
        let path = out_dir.join(format!("{}-{label}.svg", inst.name));
        with_context(
            write_atomic(&path, &svg::function_svg(f)),
            &format!("writing {}", path.display()),
        )?;
    }
    let mut body = json!({
        "name": inst.name,
        "description": inst.description,
        "parameters": inst.parameters,
        "warnings": inst.warnings,
        "functions": functions,
    });
    if let Some(curve) = &inst.curve {
        body["curve"] = serde_json::to_value(curve.to_json_record()).unwrap();
        let path = out_dir.join(format!("{}-curve.csv", inst.name));
        with_context(
            write_atomic(&path, &curve.to_csv()),
            &format!("writing {}", path.display()),
        )?;
        let record = serde_json::to_string_pretty(&curve.to_json_record()).unwrap() + "\n";
        let path = out_dir.join(format!("{}-curve.json", inst.name));
        with_context(
            write_atomic(&path, &record),
            &format!("writing {}", path.display()),
        )?;
        let path = out_dir.join(format!("{}-curve.svg", inst.name));
        with_context(
            write_atomic(&path, &svg::curve_svg(curve)),
            &format!("writing {}", path.display()),
        )?;
    }
    let report = Report::new(&format!("gallery-{}", inst.name), true, body);
    write_report(out_dir, &format!("gallery-{}", inst.name), &report)?;
    Ok(true)
}

fn run_counterexample(a: &CounterexampleArgs, out_dir: &Path) -> Result<bool, UsageError> {
    if !(a.epsilon > 0.0) {
        return usage(format!("epsilon must be positive, got {}", a.epsilon));
    }
    if a.grid < 2 {
        return usage(format!("grid must be at least 2, got {}", a.grid));
    }
    let rep = with_context(
        gallery::verify_curvature_claim(a.epsilon, a.grid),
        "curvature claim",
    )?;
    let pass = rep.holds && rep.rhs_bound_holds;
    let report = Report::new("counterexample", pass, serde_json::to_value(&rep).unwrap());
    write_report(out_dir, "counterexample", &report)?;
    Ok(pass)
}

fn run_suite(a: &SuiteArgs, out_dir: &Path) -> Result<bool, UsageError> {
    if !a.all {
        return usage("suite requires --all");
    }
    let mut checks = Vec::new();
    let mut push = |name: &str, pass: bool, detail: String| {
        println!("{}: {name} — {detail}", if pass { "PASS" } else { "FAIL" });
        checks.push(CheckLine {
            name: name.into(),
            pass,
            detail,
        });
    };

    // curvature claim at the validated scale
    match gallery::verify_curvature_claim(0.1, 1024) {
        Ok(r) => push(
            "curvature-claim",
            r.holds && r.rhs_bound_holds && r.ratio_at_smallest_t >= 2.0,
            format!("min margin {:.3e}", r.min_margin),
        ),
        Err(e) => push("curvature-claim", false, e.to_string()),
    }

    // two-bump curve: condition holds with strict witness, symmetry fails
    match gallery::two_bump_curve(0.1) {
        Ok(g) => {
            let c = g.curve.as_ref().unwrap();
            let cond = c.check_monotone_curvature_condition(Axis::X1);
            let (cond_ok, strict, margin) = match &cond {
                Ok(r) => (r.holds, !r.strict_pairs.is_empty(), r.margin),
                Err(_) => (false, false, f64::NAN),
            };
            let sym = symmetry_verdict(c, Axis::X1, Some(2.0));
            push(
                "two-bump-curve",
                cond_ok && strict && !sym.pass,
                format!(
                    "condition margin {margin:.3e}, asymmetry {:.3e}",
                    sym.deviation
                ),
            );
        }
        Err(e) => push("two-bump-curve", false, e.to_string()),
    }

    // reconstruction against the parabola
    let recon = (|| -> Result<f64, String> {
        let mut fi = build_first_integral(|_| 1.0, 1.0, Convention::Double)
            .map_err(|e| e.to_string())?;
        fi.build_time_map().map_err(|e| e.to_string())?;
        let u = fi
            .reconstruct_solution(1.0)
            .map_err(|e| e.to_string())?;
        let dev = (0..=100)
            .map(|i| {
                let t = i as f64 / 100.0;
                (u.eval(t) - 0.5 * t * t).abs()
            })
            .fold(0.0f64, f64::max);
        Ok(dev)
    })();
    match recon {
        Ok(dev) => push("reconstruction", dev <= 1e-6, format!("sup dev {dev:.3e}")),
        Err(e) => push("reconstruction", false, e),
    }

    // sweep fixed point on the circle
    let c = circle([0.3, -0.2], 1.0, 2048);
    match sweep(&c, Axis::X2) {
        Ok(r) => {
            let sym = symmetry_verdict(&c, Axis::X2, Some(r.lambda0));
            push(
                "sweep-circle",
                (r.lambda0 + 0.2).abs() <= 2.0 * c.max_segment_length() && sym.pass,
                format!("lambda0 {:.6}", r.lambda0),
            );
        }
        Err(e) => push("sweep-circle", false, e.to_string()),
    }

    // sharpness pair: hypothesis holds, coincidence fails beyond the plateau
    match gallery::strict_vs_plateau_pair() {
        Ok(g) => {
            let u = &g.functions[0].1;
            let v = &g.functions[1].1;
            let hyp = check_comparison_hypothesis(u, v, &ComparisonForm::SecondDeriv);
            let coin = assert_coincidence(u, v, 1e-8);
            let ok = matches!(&hyp, Ok(r) if r.holds)
                && matches!(&coin, Ok(w) if !w.pass && w.witness > 1.0);
            push(
                "sharpness-pair",
                ok,
                format!(
                    "hypothesis {:?}, coincidence witness {:?}",
                    hyp.map(|r| r.holds),
                    coin.map(|w| w.witness)
                ),
            );
        }
        Err(e) => push("sharpness-pair", false, e.to_string()),
    }

    // plateau symmetry: the asymmetric instance must fail the conclusion
    match gallery::asymmetric_plateau_function() {
        Ok(g) => {
            let u = &g.functions[0].1;
            let hyp = check_comparison_hypothesis(u, u, &ComparisonForm::SecondDeriv);
            let sym = assert_plateau_symmetry(u, 1e-8);
            let ok = matches!(&hyp, Ok(r) if r.holds) && matches!(&sym, Ok(v) if !v.pass);
            push("asymmetric-plateau", ok, "hypothesis holds, symmetry fails".into());
        }
        Err(e) => push("asymmetric-plateau", false, e.to_string()),
    }

    let summary = SuiteSummary::new(checks);
    let path = out_dir.join("suite.json");
    with_context(
        write_atomic(&path, &summary.to_json()),
        &format!("writing {}", path.display()),
    )?;
    Ok(summary.pass)
}
