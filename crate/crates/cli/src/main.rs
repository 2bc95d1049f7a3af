mod report;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use robust_breakdown::breakdown::{
    default_gamma_grid, default_radius_grid, empirical_fsbv, pm_counterexample, shear_attack,
    theoretical_bounds, translation_attack, AttackSuite, AttackTrace, FsbvResult, PartitionRule,
    ShearAttackConfig, TranslationAttackConfig, DEFAULT_NOISE_SCALE,
};
use robust_breakdown::conditions::{condition_margin, depth_condition};
use robust_breakdown::depth::{tukey_depth, DepthMode, DirectionBudget, ProjectionProfile};
use robust_breakdown::estimators::{
    estimator_by_name, EstimatorParams, ProjectionMedian, ScaleShift,
};
use robust_breakdown::geometry::read_csv;
use robust_breakdown::metric::{lipschitz_probe, median_estimator, sample_distance};
use robust_breakdown::{DataSet, LocationEstimator, Scalar, UnitDirection};
use serde_json::{json, Map, Value};

const EXIT_INPUT: u8 = 2;
const EXIT_ESTIMATOR: u8 = 3;
const EXIT_PARAMETER: u8 = 4;

/// An error tagged with the process exit code it maps to.
#[derive(Debug)]
struct Coded {
    code: u8,
    source: anyhow::Error,
}

impl fmt::Display for Coded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#}", self.source)
    }
}

impl std::error::Error for Coded {}

fn coded(code: u8, source: impl Into<anyhow::Error>) -> anyhow::Error {
    anyhow::Error::new(Coded {
        code,
        source: source.into(),
    })
}

fn param(msg: impl Into<String>) -> anyhow::Error {
    coded(EXIT_PARAMETER, anyhow::anyhow!(msg.into()))
}

/// Exit code for a library error raised after the input parsed.
fn lib(e: robust_breakdown::Error) -> anyhow::Error {
    use robust_breakdown::Error as E;
    let code = match e {
        E::InvalidParameter(_) | E::SampleSize { .. } => EXIT_PARAMETER,
        E::Csv(_)
        | E::Parse { .. }
        | E::Io(_)
        | E::EmptyInput
        | E::NonFinite(_)
        | E::DimensionMismatch { .. }
        | E::NotGeneralPosition { .. } => EXIT_INPUT,
        _ => EXIT_ESTIMATOR,
    };
    coded(code, e)
}

#[derive(Parser)]
#[command(
    name = "rbreak",
    version,
    about = "Robust location estimators, depth, and breakdown attacks"
)]
struct Cli {
    /// Floating-point type used for every computation.
    #[arg(long, value_enum, default_value_t = Precision::F64, global = true)]
    precision: Precision,
    /// Add wall-clock runtime to the report (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Precision {
    F64,
    F32,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Shear,
    Translation,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Partition {
    Largest,
    Smallest,
}

#[derive(Args, Clone, Debug)]
struct EstimatorArgs {
    /// One of cmedian, mcd, tmean, pm, wmean.
    #[arg(long)]
    estimator: String,
    /// Seed for direction sampling; required by pm and tmean.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = DirectionBudget::DEFAULT_RANDOM_COUNT)]
    random_directions: usize,
    /// MCD coverage; defaults to floor((n + k + 1) / 2).
    #[arg(long)]
    coverage: Option<usize>,
    #[arg(long, default_value_t = 1)]
    trim_count: usize,
    /// Fixed MAD order shift for pm; defaults to k - 1.
    #[arg(long)]
    scale_shift: Option<usize>,
    #[arg(long, default_value_t = ProjectionMedian::DEFAULT_GRID_REFINEMENTS)]
    grid_refinements: usize,
    /// Comma-separated weights in [0, 1] for wmean.
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<f64>>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an estimator on a data set.
    Estimate {
        data: PathBuf,
        #[command(flatten)]
        est: EstimatorArgs,
    },
    /// Run one contamination family over a parameter grid.
    Attack {
        data: PathBuf,
        #[command(flatten)]
        est: EstimatorArgs,
        #[arg(long, value_enum, default_value_t = Family::Shear)]
        family: Family,
        /// Size of the fixed subset for the shear family.
        #[arg(long)]
        h: Option<usize>,
        /// Number of replaced points.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        grid: Option<Vec<f64>>,
        /// Comma-separated direction for the translation family (default e_1).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        direction: Option<Vec<f64>>,
        #[arg(long, value_enum, default_value_t = Partition::Largest)]
        partition: Partition,
        #[arg(long, default_value_t = 0)]
        facet_rank: usize,
        #[arg(long, default_value_t = 0)]
        subset: usize,
        #[arg(long, default_value_t = 1e6)]
        threshold_factor: f64,
        /// Write (grid value, distance) rows to this CSV file.
        #[arg(long)]
        emit_curve: Option<PathBuf>,
    },
    /// Certify the smallest breaking contamination count.
    Fsbv {
        data: PathBuf,
        #[command(flatten)]
        est: EstimatorArgs,
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long, default_value_t = 64)]
        shear_budget: usize,
        #[arg(long, default_value_t = 4)]
        translation_directions: usize,
        #[arg(long, default_value_t = 1e6)]
        threshold_factor: f64,
        /// Keep testing larger m after the first break.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Theoretical breakdown bounds as exact fractions.
    Bounds { n: usize, k: usize, h: usize },
    /// Tukey depth and outlyingness of a point.
    Depth {
        data: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        point: Vec<f64>,
        /// Adds seeded random directions; required when k != 2.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DirectionBudget::DEFAULT_RANDOM_COUNT)]
        random_directions: usize,
        #[arg(long, default_value_t = 1)]
        scale_shift: usize,
    },
    /// Facet margins of an estimator and the depth sufficient condition.
    Condition {
        data: PathBuf,
        #[command(flatten)]
        est: EstimatorArgs,
        /// Defaults to k.
        #[arg(long)]
        h: Option<usize>,
    },
    /// Distance between two samples, with an optional median Lipschitz probe.
    Metric {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        y: Vec<f64>,
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Projection median on the shrinking planar counterexample.
    ScenarioPm {
        #[arg(long, default_value_t = 10)]
        m: usize,
        #[arg(long, value_delimiter = ',', default_value = "0.1,0.01,0.001")]
        deltas: Vec<f64>,
        #[arg(long, default_value_t = DEFAULT_NOISE_SCALE)]
        noise_scale: f64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DirectionBudget::DEFAULT_RANDOM_COUNT)]
        random_directions: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let out = match cli.precision {
        Precision::F64 => run::<f64>(&cli, start),
        Precision::F32 => run::<f32>(&cli, start),
    };
    match out {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = e.downcast_ref::<Coded>().map_or(1, |c| c.code);
            ExitCode::from(code)
        }
    }
}

fn require_seed(seed: Option<u64>, why: &str) -> Result<u64> {
    seed.ok_or_else(|| param(format!("--seed is required {why}")))
}

fn load<S: Scalar>(path: &Path) -> Result<(DataSet<S>, String)> {
    let data = read_csv(path).map_err(|e| coded(EXIT_INPUT, e))?;
    let digest = report::file_digest(path).map_err(|e| coded(EXIT_INPUT, e))?;
    Ok((data, digest))
}

fn to_f64<S: Scalar>(v: &[S]) -> Vec<f64> {
    v.iter().map(|s| s.to_f64().unwrap_or(f64::NAN)).collect()
}

fn from_f64<S: Scalar>(v: &[f64]) -> Vec<S> {
    v.iter().map(|&s| S::lit(s)).collect()
}

/// Builds the estimator; `pm` and `tmean` sample directions and need a seed.
fn estimator<S: Scalar>(a: &EstimatorArgs) -> Result<(Box<dyn LocationEstimator<S>>, Value)> {
    let seeded = matches!(a.estimator.as_str(), "pm" | "tmean");
    let seed = if seeded {
        require_seed(a.seed, &format!("for estimator {}", a.estimator))?
    } else {
        a.seed.unwrap_or(0)
    };
    let params = EstimatorParams {
        seed,
        random_directions: a.random_directions,
        coverage: a.coverage,
        trim_count: a.trim_count,
        scale_shift: a.scale_shift,
        grid_refinements: a.grid_refinements,
        weights: a.weights.clone(),
    };
    let t = estimator_by_name::<S>(&a.estimator, &params).map_err(|e| coded(EXIT_ESTIMATOR, e))?;
    let config = json!({
        "name": a.estimator,
        "seed": a.seed,
        "random_directions": a.random_directions,
        "coverage": a.coverage,
        "trim_count": a.trim_count,
        "scale_shift": a.scale_shift,
        "grid_refinements": a.grid_refinements,
        "weights": a.weights,
    });
    Ok((t, config))
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => Map::new(),
    }
}

fn run<S: Scalar>(cli: &Cli, start: Instant) -> Result<()> {
    let precision = format!("{:?}", cli.precision).to_lowercase();
    let (body, mut config) = match &cli.command {
        Command::Estimate { data, est } => cmd_estimate::<S>(data, est)?,
        Command::Attack {
            data,
            est,
            family,
            h,
            m,
            grid,
            direction,
            partition,
            facet_rank,
            subset,
            threshold_factor,
            emit_curve,
        } => {
            let opts = AttackOptions {
                family: *family,
                h: *h,
                m: *m,
                grid: grid.clone(),
                direction: direction.clone(),
                partition: *partition,
                facet_rank: *facet_rank,
                subset: *subset,
                threshold_factor: *threshold_factor,
            };
            cmd_attack::<S>(data, est, &opts, emit_curve.as_deref())?
        }
        Command::Fsbv {
            data,
            est,
            max_m,
            shear_budget,
            translation_directions,
            threshold_factor,
            exhaustive,
        } => cmd_fsbv::<S>(
            data,
            est,
            *max_m,
            *shear_budget,
            *translation_directions,
            *threshold_factor,
            *exhaustive,
        )?,
        Command::Bounds { n, k, h } => cmd_bounds(*n, *k, *h)?,
        Command::Depth {
            data,
            point,
            seed,
            random_directions,
            scale_shift,
        } => cmd_depth::<S>(data, point, *seed, *random_directions, *scale_shift)?,
        Command::Condition { data, est, h } => cmd_condition::<S>(data, est, *h)?,
        Command::Metric {
            x,
            y,
            delta,
            trials,
            seed,
        } => cmd_metric::<S>(x, y, *delta, *trials, *seed)?,
        Command::ScenarioPm {
            m,
            deltas,
            noise_scale,
            seed,
            random_directions,
        } => cmd_scenario_pm::<S>(*m, deltas, *noise_scale, *seed, *random_directions)?,
    };
    if let Value::Object(c) = &mut config {
        c.insert("precision".into(), precision.into());
    }
    let runtime = cli.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    report::emit(body, config, runtime)
}

type Report = (Map<String, Value>, Value);

fn cmd_estimate<S: Scalar>(path: &Path, a: &EstimatorArgs) -> Result<Report> {
    let (x, digest) = load::<S>(path)?;
    let (t, est_config) = estimator::<S>(a)?;
    let e = t.evaluate(&x).map_err(lib)?;
    let body = object(json!({
        "command": "estimate",
        "estimator": t.name(),
        "equivariance_class": t.equivariance_class(),
        "n": x.n(),
        "k": x.k(),
        "members": e.members(),
        "canonical": e.canonical(),
        "seed": a.seed,
    }));
    let config = json!({
        "command": "estimate",
        "data_sha256": digest,
        "estimator": est_config,
    });
    Ok((body, config))
}

struct AttackOptions {
    family: Family,
    h: Option<usize>,
    m: Option<usize>,
    grid: Option<Vec<f64>>,
    direction: Option<Vec<f64>>,
    partition: Partition,
    facet_rank: usize,
    subset: usize,
    threshold_factor: f64,
}

fn cmd_attack<S: Scalar>(
    path: &Path,
    a: &EstimatorArgs,
    o: &AttackOptions,
    curve: Option<&Path>,
) -> Result<Report> {
    let (x, digest) = load::<S>(path)?;
    let (t, est_config) = estimator::<S>(a)?;
    if let Some(m) = o.m {
        if m > x.n() {
            return Err(param(format!("m = {m} exceeds n = {}", x.n())));
        }
    }
    let trace: AttackTrace<S> = match o.family {
        Family::Shear => {
            let h = o.h.unwrap_or(x.k());
            let cfg = ShearAttackConfig {
                h,
                gamma_grid: o.grid.as_deref().map_or_else(default_gamma_grid, from_f64),
                partition: match o.partition {
                    Partition::Largest => PartitionRule::LargestProjections,
                    Partition::Smallest => PartitionRule::SmallestProjections,
                },
                facet_rank: o.facet_rank,
                fixed_choice: o.subset,
                moved_count: o.m,
                threshold_factor: S::lit(o.threshold_factor),
            };
            shear_attack(t.as_ref(), &x, &cfg).map_err(lib)?
        }
        Family::Translation => {
            let m = o.m.ok_or_else(|| param("--m is required for the translation family"))?;
            let raw = o.direction.clone().unwrap_or_else(|| {
                let mut e = vec![0.0; x.k()];
                e[0] = 1.0;
                e
            });
            if raw.len() != x.k() {
                return Err(param(format!("direction needs {} coordinates", x.k())));
            }
            let direction = UnitDirection::normalize(from_f64::<S>(&raw)).map_err(lib)?;
            let cfg = TranslationAttackConfig {
                direction,
                m,
                radius_grid: o.grid.as_deref().map_or_else(default_radius_grid, from_f64),
                threshold_factor: S::lit(o.threshold_factor),
            };
            translation_attack(t.as_ref(), &x, &cfg).map_err(lib)?
        }
    };
    if let Some(p) = curve {
        let column = match o.family {
            Family::Shear => "gamma",
            Family::Translation => "radius",
        };
        report::write_curve(p, column, &to_f64(&trace.grid), &to_f64(&trace.distances))
            .map_err(|e| coded(EXIT_PARAMETER, e))?;
    }
    let body = object(json!({
        "command": "attack",
        "estimator": trace.estimator,
        "n": trace.n,
        "k": trace.k,
        "h": trace.h,
        "m": trace.m,
        "family": trace.family,
        "grid": trace.grid,
        "distances": trace.distances,
        "diverged": trace.diverged,
        "divergence_threshold": trace.divergence_threshold,
        "witness_gamma": trace.witness.as_ref().map(|w| w.parameter),
        "seed": a.seed,
        "trace": trace,
    }));
    let config = json!({
        "command": "attack",
        "data_sha256": digest,
        "estimator": est_config,
        "family": format!("{:?}", o.family).to_lowercase(),
        "h": o.h,
        "m": o.m,
        "grid": o.grid,
        "direction": o.direction,
        "partition": format!("{:?}", o.partition).to_lowercase(),
        "facet_rank": o.facet_rank,
        "subset": o.subset,
        "threshold_factor": o.threshold_factor,
    });
    Ok((body, config))
}

fn cmd_fsbv<S: Scalar>(
    path: &Path,
    a: &EstimatorArgs,
    max_m: Option<usize>,
    shear_budget: usize,
    translation_directions: usize,
    threshold_factor: f64,
    exhaustive: bool,
) -> Result<Report> {
    let (x, digest) = load::<S>(path)?;
    let (t, est_config) = estimator::<S>(a)?;
    let seed = if x.k() > 1 && translation_directions > 0 {
        require_seed(a.seed, "for random translation directions when k > 1")?
    } else {
        a.seed.unwrap_or(0)
    };
    let mut suite = AttackSuite::new(seed);
    suite.max_m = max_m;
    suite.shear_budget = shear_budget;
    suite.random_directions = translation_directions;
    suite.threshold_factor = S::lit(threshold_factor);
    suite.stop_at_first_break = !exhaustive;
    let r = empirical_fsbv(t.as_ref(), &x, &suite).map_err(lib)?;
    let summary = match &r.result {
        FsbvResult::Fraction(f) => f.to_string(),
        FsbvResult::NotBroken { note, .. } => note.clone(),
    };
    let body = object(json!({
        "command": "fsbv",
        "estimator": r.estimator,
        "n": r.n,
        "k": r.k,
        "fsbv": summary,
        "result": r.result,
        "divergence_threshold": r.divergence_threshold,
        "certificates": r.certificates,
        "seed": a.seed,
    }));
    let config = json!({
        "command": "fsbv",
        "data_sha256": digest,
        "estimator": est_config,
        "max_m": max_m,
        "shear_budget": shear_budget,
        "translation_directions": translation_directions,
        "threshold_factor": threshold_factor,
        "exhaustive": exhaustive,
        "gamma_grid": to_f64(&suite.gamma_grid),
        "radius_grid": to_f64(&suite.radius_grid),
    });
    Ok((body, config))
}

fn cmd_bounds(n: usize, k: usize, h: usize) -> Result<Report> {
    let t = theoretical_bounds(n, k, h).map_err(lib)?;
    let row = |f: robust_breakdown::breakdown::Fraction| {
        json!({
            "fraction": f.to_string(),
            "numerator": f.numerator,
            "denominator": f.denominator,
            "value": f.value(),
        })
    };
    let body = object(json!({
        "command": "bounds",
        "n": n,
        "k": k,
        "h": h,
        "translation": row(t.translation),
        "affine_condition_h": row(t.affine_condition_h),
        "scatter": row(t.scatter),
        "zuo_pm": row(t.zuo_pm),
    }));
    Ok((body, json!({"command": "bounds", "n": n, "k": k, "h": h})))
}

fn cmd_depth<S: Scalar>(
    path: &Path,
    point: &[f64],
    seed: Option<u64>,
    random_directions: usize,
    scale_shift: usize,
) -> Result<Report> {
    let (x, digest) = load::<S>(path)?;
    if point.len() != x.k() {
        return Err(param(format!("--point needs {} coordinates", x.k())));
    }
    let p = from_f64::<S>(point);
    let budget = DirectionBudget {
        random_count: if seed.is_some() { random_directions } else { 0 },
        include_data_directions: true,
        seed: seed.unwrap_or(0),
    };
    let (mode, exact) = if x.k() == 2 {
        (DepthMode::Exact2d, true)
    } else {
        let s = require_seed(seed, "for sampled depth when k != 2")?;
        (DepthMode::Sampled(DirectionBudget::with_seed(s)), false)
    };
    let depth = tukey_depth(&p, &x, &mode).map_err(lib)?;
    let profile = ProjectionProfile::from_budget(&x, scale_shift, &budget).map_err(lib)?;
    let out = profile.evaluate(&p).map_err(lib)?;
    let body = object(json!({
        "command": "depth",
        "point": point,
        "tukey_depth": depth,
        "depth_exact": exact,
        "outlyingness": out.to_f64(),
        "projection_depth": (S::one() / (S::one() + out)).to_f64(),
        "directions": profile.len(),
        "seed": seed,
    }));
    let config = json!({
        "command": "depth",
        "data_sha256": digest,
        "point": point,
        "seed": seed,
        "random_directions": budget.random_count,
        "scale_shift": scale_shift,
    });
    Ok((body, config))
}

fn cmd_condition<S: Scalar>(path: &Path, a: &EstimatorArgs, h: Option<usize>) -> Result<Report> {
    let (x, digest) = load::<S>(path)?;
    let (t, est_config) = estimator::<S>(a)?;
    let h = h.unwrap_or(x.k());
    let seed = if h < x.k() || x.k() != 2 {
        require_seed(a.seed, "for sampled condition directions")?
    } else {
        a.seed.unwrap_or(0)
    };
    let rep = condition_margin(t.as_ref(), &x, h, seed).map_err(lib)?;
    let depth = depth_condition(t.as_ref(), &x, seed).map_err(lib)?;
    let body = object(json!({
        "command": "condition",
        "estimator": t.name(),
        "h": h,
        "report": rep,
        "depth_condition": depth,
        "seed": a.seed,
    }));
    let config = json!({
        "command": "condition",
        "data_sha256": digest,
        "estimator": est_config,
        "h": h,
    });
    Ok((body, config))
}

fn cmd_metric<S: Scalar>(
    x: &[f64],
    y: &[f64],
    delta: Option<f64>,
    trials: usize,
    seed: Option<u64>,
) -> Result<Report> {
    let (xs, ys) = (from_f64::<S>(x), from_f64::<S>(y));
    let d = sample_distance(&xs, &ys).map_err(lib)?;
    let mut body = object(json!({
        "command": "metric",
        "distance": d.to_f64(),
    }));
    if let Some(delta) = delta {
        let seed = require_seed(seed, "for the Lipschitz probe")?;
        let shift = lipschitz_probe(median_estimator, &xs, S::lit(delta), trials, seed).map_err(lib)?;
        body.insert(
            "lipschitz_probe".into(),
            json!({
                "delta": delta,
                "trials": trials,
                "max_shift": shift.to_f64(),
                "within_bound": shift <= S::lit(delta) + S::unit_tolerance(),
            }),
        );
    }
    let config = json!({
        "command": "metric",
        "x": x,
        "y": y,
        "delta": delta,
        "trials": trials,
        "seed": seed,
    });
    Ok((body, config))
}

fn cmd_scenario_pm<S: Scalar>(
    m: usize,
    deltas: &[f64],
    noise_scale: f64,
    seed: Option<u64>,
    random_directions: usize,
) -> Result<Report> {
    let seed = require_seed(seed, "for the counterexample noise")?;
    let budget = DirectionBudget {
        random_count: random_directions,
        include_data_directions: true,
        seed,
    };
    let pm = ProjectionMedian {
        scale_shift: ScaleShift::DimensionAdjusted,
        budget: budget.clone(),
        grid_refinements: ProjectionMedian::DEFAULT_GRID_REFINEMENTS,
    };
    let mut rows = Vec::new();
    for &delta in deltas {
        let z = pm_counterexample::<S>(m, S::lit(delta), S::lit(noise_scale), seed).map_err(lib)?;
        let est = pm.evaluate(&z).map_err(lib)?;
        let norm = est
            .members()
            .iter()
            .map(|p| p.iter().map(|&v| v * v).sum::<S>().sqrt())
            .fold(S::zero(), S::max);
        let profile = ProjectionProfile::from_budget(&z, pm.scale_shift.resolve(2), &budget).map_err(lib)?;
        let origin = profile.evaluate(&[S::zero(), S::zero()]).map_err(lib)?;
        let margin = condition_margin(&pm, &z, 2, seed).map_err(lib)?;
        rows.push(json!({
            "delta": delta,
            "pm": est.members(),
            "pm_norm": norm.to_f64(),
            "origin_outlyingness": origin.to_f64(),
            "condition_margin": margin.min_margin.to_f64(),
        }));
    }
    let body = object(json!({
        "command": "scenario-pm",
        "m": m,
        "n": 2 * m + 2,
        "rows": rows,
        "seed": seed,
    }));
    let config = json!({
        "command": "scenario-pm",
        "m": m,
        "deltas": deltas,
        "noise_scale": noise_scale,
        "seed": seed,
        "random_directions": random_directions,
    });
    Ok((body, config))
}
