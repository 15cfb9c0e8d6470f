//! `extremal-sites` command-line driver.
//!
//! Exit codes: 0 success, 1 a verification check failed (witness printed),
//! 2 usage or input error.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::{
    apex_distance, extremal_quadrilateral, facet_circumradius, pairs, regular_simplex,
    simplex_height, sup_omega_2_4, thm33_bound, thm33_configuration,
};
use crate::error::{Error, Result};
use crate::geom::{congruence_error, distance, functionals, PointSet};
use crate::landscape::{
    boundary_maximize, curvature_positive_on_grid, derivative_check,
    f_value, random_arc_sweep, random_bow_point, stationary_scan, write_scan_csv,
};
use crate::parallel::{substream, with_threads};
use crate::search::{
    conjecture_41_report, conjecture_42_report, grid_oracle_2_4, optimize_omega, SearchConfig,
    Verdict,
};
use crate::simplex::sample_lemma;

/// Overrides `--threads` when set.
pub const THREADS_ENV: &str = "EXTREMAL_SITES_THREADS";

#[derive(Debug, Parser)]
#[command(name = "extremal-sites", version, about = "Distance-sum extremal point configurations")]
pub struct Cli {
    /// Worker threads for parallel scans (default: all cores). Results do not
    /// depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Where to write the run record (default: <output>.run.json when an
    /// output file is given).
    #[arg(long, global = true)]
    pub record: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
pub enum Command {
    /// Evaluate σ, D, d, ω, μ for a point-set JSON file.
    Eval(EvalArgs),
    /// Emit a known configuration as point-set JSON.
    Construct(ConstructArgs),
    /// Run a numerical verification suite.
    Verify(VerifyArgs),
    /// Multi-start search for large ω.
    Optimize(OptimizeArgs),
    /// Brute-force grid maximum of ω(2,4).
    Oracle(OracleArgs),
    /// Compare numeric optima with conjectured closed forms.
    Conjecture(ConjectureArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Eval(_) => "eval",
            Command::Construct(_) => "construct",
            Command::Verify(_) => "verify",
            Command::Optimize(_) => "optimize",
            Command::Oracle(_) => "oracle",
            Command::Conjecture(_) => "conjecture",
        }
    }

    fn output(&self) -> Option<&Path> {
        match self {
            Command::Eval(a) => a.output.as_deref(),
            Command::Construct(a) => a.output.as_deref(),
            Command::Verify(a) => a.output.as_deref(),
            Command::Optimize(a) => a.output.as_deref(),
            Command::Oracle(a) => a.output.as_deref(),
            Command::Conjecture(a) => a.output.as_deref(),
        }
    }
}

#[derive(Debug, Args, Serialize)]
pub struct EvalArgs {
    /// Point-set JSON: {"dim": m, "points": [[...], ...]}
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructKind {
    RegularSimplex,
    Thm33,
    ExtremalQuad,
}

#[derive(Debug, Args, Serialize)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub kind: ConstructKind,
    /// Dimension for regular-simplex and thm33.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyTarget {
    Lemma,
    Landscape,
    Thm33,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub target: VerifyTarget,
    /// lemma: simplex dimension.
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    /// lemma: number of random simplices.
    #[arg(long, default_value_t = 1000)]
    pub simplices: usize,
    /// lemma: points per simplex.
    #[arg(long, default_value_t = 100)]
    pub points: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// landscape: grid spacing.
    #[arg(long, default_value_t = 1e-3)]
    pub resolution: f64,
    /// landscape: grid nodes this close to the chord are skipped.
    #[arg(long, default_value_t = 1e-3)]
    pub band: f64,
    /// landscape: random points for the finite-difference check.
    #[arg(long, default_value_t = 1000)]
    pub fd_points: usize,
    /// landscape: random arcs for the midnormal check.
    #[arg(long, default_value_t = 100)]
    pub arcs: usize,
    /// landscape: random interior points compared with the boundary maximum.
    #[arg(long, default_value_t = 1_000_000)]
    pub interior_samples: usize,
    /// landscape: optional CSV dump of the grid scan.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// thm33: largest dimension checked.
    #[arg(long, default_value_t = 12)]
    pub nmax: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 50)]
    pub starts: usize,
    /// Sweep budget per start.
    #[arg(long, default_value_t = 100_000)]
    pub iters: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.1)]
    pub step_init: f64,
    #[arg(long, default_value_t = 1e-10)]
    pub step_min: f64,
}

impl SearchArgs {
    fn config(&self, m: usize, n: usize) -> SearchConfig {
        SearchConfig {
            m,
            n,
            starts: self.starts,
            max_iters: self.iters,
            seed: self.seed,
            step_init: self.step_init,
            step_min: self.step_min,
            warm_start: None,
        }
    }
}

#[derive(Debug, Args, Serialize)]
pub struct OptimizeArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub search: SearchArgs,
    /// Point-set JSON used as the first start.
    #[arg(long)]
    pub warm_start: Option<PathBuf>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 0.02)]
    pub resolution: f64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    /// inf μ(m,n) > sup ω(m,n) for n > m+1, m ≥ 2.
    G41,
    /// sup ω(n,n+2) equals the simplex-plus-cap value.
    G42,
}

#[derive(Debug, Args, Serialize)]
pub struct ConjectureArgs {
    #[arg(value_enum)]
    pub claim: Claim,
    /// g41 only.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub search: SearchArgs,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

/// Bookkeeping for one invocation. Timestamps live only here so that the
/// scientific outputs stay byte-reproducible.
#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub command: String,
    pub args: BTreeMap<String, String>,
    /// Milliseconds since the Unix epoch.
    pub started_at: u128,
    pub finished_at: u128,
    pub outputs: Vec<PathBuf>,
    pub summary: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn now_ms() -> u128 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis())
        .unwrap_or(0)
}

fn flatten_args(cmd: &Command) -> BTreeMap<String, String> {
    let mut out = BTreeMap::new();
    if let Ok(Value::Object(outer)) = serde_json::to_value(cmd) {
        for (_, inner) in outer {
            if let Value::Object(fields) = inner {
                for (k, v) in fields {
                    let s = match v {
                        Value::String(s) => s,
                        Value::Null => continue,
                        other => other.to_string(),
                    };
                    out.insert(k, s);
                }
            }
        }
    }
    out
}

/// What a command produced, before exit-code mapping.
struct Outcome {
    passed: bool,
    outputs: Vec<PathBuf>,
    summary: Value,
}

impl Outcome {
    fn ok(outputs: Vec<PathBuf>, summary: Value) -> Self {
        Outcome {
            passed: true,
            outputs,
            summary,
        }
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Writes `doc` to `path`, or to stdout when no path is given.
fn emit(path: Option<&Path>, doc: &str) -> Result<Vec<PathBuf>> {
    match path {
        Some(p) => {
            fs::write(p, doc).map_err(|e| Error::invalid("output", format!("{}: {e}", p.display())))?;
            Ok(vec![p.to_path_buf()])
        }
        None => {
            print!("{doc}");
            Ok(Vec::new())
        }
    }
}

fn read_point_set(path: &Path) -> Result<PointSet> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::invalid("input", format!("{}: {e}", path.display())))?;
    PointSet::from_json(&text)
}

fn cmd_eval(a: &EvalArgs) -> Result<Outcome> {
    let ps = read_point_set(&a.input)?;
    let summary = functionals(&ps)?;
    let outputs = emit(a.output.as_deref(), &pretty(&summary))?;
    if a.output.is_some() {
        println!("omega {}", summary.omega);
    }
    Ok(Outcome::ok(outputs, serde_json::to_value(summary)?))
}

fn cmd_construct(a: &ConstructArgs) -> Result<Outcome> {
    let need_n = || a.n.ok_or_else(|| Error::invalid("n", "--n is required for this kind"));
    let (ps, omega) = match a.kind {
        ConstructKind::RegularSimplex => {
            let n = need_n()?;
            (regular_simplex(n)?, pairs(n + 1))
        }
        ConstructKind::Thm33 => {
            let n = need_n()?;
            (thm33_configuration(n)?, thm33_bound(n)?)
        }
        ConstructKind::ExtremalQuad => (extremal_quadrilateral(), sup_omega_2_4()),
    };
    println!("closed-form omega {omega:.8}");
    let outputs = emit(a.output.as_deref(), &pretty(&ps))?;
    Ok(Outcome::ok(outputs, json!({ "omega": omega, "points": ps.len() })))
}

#[derive(Debug, Serialize)]
struct Check {
    name: &'static str,
    value: f64,
    threshold: f64,
    pass: bool,
}

impl Check {
    fn at_most(name: &'static str, value: f64, threshold: f64) -> Self {
        Check {
            name,
            value,
            threshold,
            pass: value <= threshold,
        }
    }

    fn above(name: &'static str, value: f64, threshold: f64) -> Self {
        Check {
            name,
            value,
            threshold,
            pass: value > threshold,
        }
    }
}

fn finish_verify(
    a: &VerifyArgs,
    mut report: Value,
    checks: Vec<Check>,
    mut outputs: Vec<PathBuf>,
) -> Result<Outcome> {
    let passed = checks.iter().all(|c| c.pass);
    for c in checks.iter().filter(|c| !c.pass) {
        eprintln!(
            "check failed: {} = {:e} (threshold {:e})",
            c.name, c.value, c.threshold
        );
    }
    report["checks"] = serde_json::to_value(&checks)?;
    report["pass"] = Value::Bool(passed);
    outputs.extend(emit(a.output.as_deref(), &pretty(&report))?);
    println!("{}", if passed { "PASS" } else { "FAIL" });
    Ok(Outcome {
        passed,
        outputs,
        summary: json!({ "pass": passed, "checks": checks }),
    })
}

fn verify_lemma(a: &VerifyArgs) -> Result<Outcome> {
    let r = sample_lemma(a.dim, a.simplices, a.points, a.seed)?;
    let checks = vec![
        Check::above("min_slack", r.min_slack, -crate::simplex::LEMMA_TOL),
        Check::at_most("max_vertex_equality_error", r.max_vertex_equality_error, 1e-12),
    ];
    println!("min_slack {:e}", r.min_slack);
    if !checks[0].pass {
        eprintln!("witness: {}", serde_json::to_string(&r.witness)?);
    }
    finish_verify(a, serde_json::to_value(&r)?, checks, Vec::new())
}

fn verify_landscape(a: &VerifyArgs) -> Result<Outcome> {
    let curvature = curvature_positive_on_grid(a.resolution, a.band)?;
    let stationary = stationary_scan(a.resolution, a.band)?;
    let boundary = boundary_maximize();
    let derivatives = derivative_check(a.fd_points, a.seed, 1e-5, 1e-6)?;
    let arcs = random_arc_sweep(a.arcs, a.seed)?;

    let mut rng = substream(a.seed, 2);
    let interior_max = (0..a.interior_samples)
        .map(|_| {
            let (x, y) = random_bow_point(&mut rng);
            f_value(x, y)
        })
        .fold(f64::NEG_INFINITY, f64::max);

    let expected = 2.0 * (2.0 - 3f64.sqrt()).sqrt();
    let bisect = 0.5 * std::f64::consts::FRAC_PI_3;
    let argmax_err = distance(&boundary.argmax, &[bisect.cos(), bisect.sin()]);
    let checks = vec![
        Check::at_most("gradient_fd_error", derivatives.max_gradient_error, 1e-5),
        Check::at_most("hessian_fd_error", derivatives.max_hessian_error, 1e-5),
        Check::above("min_rt_minus_s2", curvature.min_curvature_indicator, 0.0),
        Check::above("min_gradient_norm", stationary.min_gradient_norm, 1e-3),
        Check::at_most("mirror_factor_sign_violations", stationary.mirror_factor_sign_violations as f64, 0.0),
        Check::at_most("boundary_max_error", (boundary.value - expected).abs(), 1e-9),
        Check::at_most("boundary_argmax_error", argmax_err, 1e-6),
        Check::at_most("interior_excess_over_boundary", interior_max - boundary.value, 0.0),
        Check::at_most(
            "arc_max_midnormal_offset",
            arcs.max_midnormal_offset,
            1e-8,
        ),
    ];
    if checks.iter().any(|c| !c.pass) {
        eprintln!(
            "witness: min rt-s^2 at {:?}, min |grad f| at {:?}, worst finite difference at {:?}",
            curvature.argmin, stationary.argmin, derivatives.worst_point
        );
    }
    println!("boundary max {:.8}", boundary.value);
    println!("min rt-s^2 {:e}", curvature.min_curvature_indicator);

    let mut outputs = Vec::new();
    if let Some(p) = &a.csv {
        write_scan_csv(a.resolution, a.band, std::io::BufWriter::new(fs::File::create(p)?))?;
        outputs.push(p.clone());
    }
    let report = json!({
        "curvature": curvature,
        "stationary": stationary,
        "boundary": boundary,
        "derivatives": derivatives,
        "arcs": arcs,
        "interior_samples": a.interior_samples,
        "interior_max": interior_max,
    });
    finish_verify(a, report, checks, outputs)
}

fn verify_thm33(a: &VerifyArgs) -> Result<Outcome> {
    if a.nmax < 2 {
        return Err(Error::invalid("nmax", "must be at least 2"));
    }
    let mut rows = Vec::new();
    let mut worst = 0.0f64;
    for n in 2..=a.nmax {
        let c = thm33_configuration(n)?;
        let apex = c.point(n + 1);
        let formula = apex_distance(n);
        let dists: Vec<f64> = (1..=n).map(|i| distance(c.point(i), apex)).collect();
        let apex_err = dists.iter().map(|d| (d - formula).abs()).fold(0.0, f64::max);
        let spread = dists.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
            - dists.iter().cloned().fold(f64::INFINITY, f64::min);
        let unit_err = (distance(c.point(0), apex) - 1.0).abs();
        let s = functionals(&c)?;
        let omega_err = (s.omega - thm33_bound(n)?).abs();
        let h = simplex_height(n);
        let rf = facet_circumradius(n);
        let identity = ((1.0 - h).powi(2) + rf * rf - 2.0 * (1.0 - h)).abs();
        let diameter_err = (s.dmax - 1.0).abs();
        let row_worst = [apex_err, spread, unit_err, omega_err, identity, diameter_err]
            .into_iter()
            .fold(0.0, f64::max);
        worst = worst.max(row_worst);
        rows.push(json!({
            "n": n,
            "apex_distance": formula,
            "apex_distance_error": apex_err,
            "apex_equidistance_spread": spread,
            "unit_apex_error": unit_err,
            "omega": s.omega,
            "omega_error": omega_err,
            "identity_residual": identity,
            "diameter_error": diameter_err,
            "apex_distance_below_one": formula < 1.0,
        }));
    }
    let all_below_one = (2..=a.nmax).all(|n| apex_distance(n) < 1.0);
    let congruence = congruence_error(&thm33_configuration(2)?, &extremal_quadrilateral())?;
    let checks = vec![
        Check::at_most("max_residual", worst, 1e-10),
        Check::at_most("n2_congruence_error", congruence, 1e-9),
        Check::at_most("apex_distance_not_below_one", (!all_below_one) as u8 as f64, 0.0),
    ];
    println!("max residual {worst:e}");
    let report = json!({ "nmax": a.nmax, "rows": rows, "n2_congruence_error": congruence });
    finish_verify(a, report, checks, Vec::new())
}

fn cmd_optimize(a: &OptimizeArgs) -> Result<Outcome> {
    let mut cfg = a.search.config(a.m, a.n);
    if let Some(p) = &a.warm_start {
        cfg.warm_start = Some(read_point_set(p)?);
    }
    let r = optimize_omega(&cfg)?;
    println!("best_omega {:.12}", r.best_omega);
    let outputs = if a.output.is_some() {
        emit(a.output.as_deref(), &pretty(&r))?
    } else {
        Vec::new()
    };
    Ok(Outcome::ok(
        outputs,
        json!({ "best_omega": r.best_omega, "starts": cfg.starts }),
    ))
}

fn cmd_oracle(a: &OracleArgs) -> Result<Outcome> {
    let r = grid_oracle_2_4(a.resolution)?;
    println!("best_omega {:.12}", r.best_omega);
    let outputs = if a.output.is_some() {
        emit(a.output.as_deref(), &pretty(&r))?
    } else {
        Vec::new()
    };
    Ok(Outcome::ok(
        outputs,
        json!({ "best_omega": r.best_omega, "grid_points": r.grid_points }),
    ))
}

fn cmd_conjecture(a: &ConjectureArgs) -> Result<Outcome> {
    let run = match a.claim {
        Claim::G41 => {
            let m = a.m.ok_or_else(|| Error::invalid("m", "--m is required for g41"))?;
            conjecture_41_report(m, a.n, &a.search.config(m, a.n))?
        }
        Claim::G42 => conjecture_42_report(a.n, &a.search.config(a.n, a.n + 2))?,
    };
    let r = &run.report;
    println!(
        "{}: verdict {}, gap {}",
        r.claim,
        r.verdict,
        r.gap.map_or("n/a".to_string(), |g| format!("{g:.8}"))
    );
    if r.verdict == Verdict::Violated {
        eprintln!("WARNING: numeric search contradicts the claim: {}", r.claim);
        eprintln!("witness: {}", serde_json::to_string(&run.search.best)?);
    }
    let outputs = emit(a.output.as_deref(), &pretty(r))?;
    Ok(Outcome::ok(outputs, serde_json::to_value(r)?))
}

fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Eval(a) => cmd_eval(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Verify(a) => match a.target {
            VerifyTarget::Lemma => verify_lemma(a),
            VerifyTarget::Landscape => verify_landscape(a),
            VerifyTarget::Thm33 => verify_thm33(a),
        },
        Command::Optimize(a) => cmd_optimize(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Conjecture(a) => cmd_conjecture(a),
    }
}

fn thread_count(flag: Option<usize>) -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .or(flag)
}

/// Runs one parsed invocation and returns its exit code.
pub fn execute(cli: Cli) -> i32 {
    let started_at = now_ms();
    let result = with_threads(thread_count(cli.threads), || dispatch(&cli.command));
    let (code, outputs, summary, error) = match result {
        Ok(o) => ((!o.passed) as i32, o.outputs, o.summary, None),
        Err(e) => {
            eprintln!("error: {e}");
            (2, Vec::new(), Value::Null, Some(e.to_string()))
        }
    };
    let record_path = cli.record.clone().or_else(|| {
        cli.command.output().map(|p| {
            let mut s = p.as_os_str().to_owned();
            s.push(".run.json");
            PathBuf::from(s)
        })
    });
    if let Some(path) = record_path {
        let record = RunRecord {
            command: cli.command.name().to_string(),
            args: flatten_args(&cli.command),
            started_at,
            finished_at: now_ms(),
            outputs,
            summary,
            error,
        };
        if let Err(e) = fs::write(&path, pretty(&record)) {
            eprintln!("error: cannot write run record {}: {e}", path.display());
            return 2;
        }
    }
    code
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            code
        }
    }
}

pub fn main() -> i32 {
    run(std::env::args_os())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn args_flatten_to_strings() {
        let cli = Cli::try_parse_from([
            "extremal-sites", "optimize", "--m", "2", "--n", "4", "--seed", "42",
        ])
        .unwrap();
        let args = flatten_args(&cli.command);
        assert_eq!(args["m"], "2");
        assert_eq!(args["seed"], "42");
        assert_eq!(args["starts"], "50");
        assert!(!args.contains_key("output"));
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        assert_eq!(run(["extremal-sites", "frobnicate"]), 2);
        assert_eq!(run(["extremal-sites", "--help"]), 0);
    }
}
