// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Runtime budgets are part of each criterion.

use std::process::Command;
use std::time::{Duration, Instant};

use extremal_sites::constructions::{
    apex_distance, extremal_quadrilateral, known_inf_mu, sup_omega_2_4, thm33_bound,
    thm33_configuration,
};
use extremal_sites::geom::{congruence_error, distance};
use extremal_sites::landscape::{
    boundary_maximize, curvature_positive_on_grid, derivative_check, random_arc_sweep,
    stationary_scan,
};
use extremal_sites::search::{
    conjecture_41_report, conjecture_42_report, grid_oracle_2_4, optimize_omega, SearchConfig,
    Verdict,
};
use extremal_sites::simplex::sample_lemma;
use extremal_sites::{functionals, PointSet};

const BIN: &str = env!("CARGO_BIN_EXE_extremal-sites");

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn all(parts: Vec<Outcome>) -> Outcome {
    Outcome {
        pass: parts.iter().all(|p| p.pass),
        detail: parts
            .iter()
            .map(|p| format!("{}{}", if p.pass { "" } else { "!! " }, p.detail))
            .collect::<Vec<_>>()
            .join("; "),
    }
}

type Criterion = fn() -> Result<Outcome, Box<dyn std::error::Error>>;

fn cli(args: &[&str]) -> Result<std::process::Output, Box<dyn std::error::Error>> {
    Ok(Command::new(BIN).args(args).env_remove("EXTREMAL_SITES_THREADS").output()?)
}

fn extremal_value() -> Result<Outcome, Box<dyn std::error::Error>> {
    let dir = tempfile::tempdir()?;
    let quad = dir.path().join("quad.json");
    let summary = dir.path().join("summary.json");
    let q = quad.to_str().unwrap();
    let s = summary.to_str().unwrap();
    let c1 = cli(&["construct", "extremal-quad", "-o", q])?.status.code();
    let c2 = cli(&["eval", q, "-o", s])?.status.code();
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&summary)?)?;
    let omega = v["omega"].as_f64().unwrap_or(f64::NAN);
    let exact = 4.0 + 2.0 * (2.0 - 3f64.sqrt()).sqrt();
    Ok(all(vec![
        check(c1 == Some(0) && c2 == Some(0), "exit codes 0"),
        check((omega - exact).abs() <= 1e-9, format!("omega {omega:.12}, error {:.1e}", (omega - exact).abs())),
    ]))
}

fn simplex_suprema() -> Result<Outcome, Box<dyn std::error::Error>> {
    let mut parts = Vec::new();
    for (m, n, target) in [(2, 3, 3.0), (3, 4, 6.0)] {
        let r = optimize_omega(&SearchConfig::new(m, n).with_starts(50).with_seed(42))?;
        parts.push(check(
            (r.best_omega - target).abs() <= 1e-6,
            format!("({m},{n}) best {:.10}", r.best_omega),
        ));
    }
    Ok(all(parts))
}

fn planar_quadrilateral() -> Result<Outcome, Box<dyn std::error::Error>> {
    let sup = sup_omega_2_4();
    let r = optimize_omega(&SearchConfig::new(2, 4).with_starts(200).with_seed(42))?;
    let over = r.per_start_bests.iter().cloned().fold(f64::NEG_INFINITY, f64::max) - sup;
    let o = grid_oracle_2_4(0.01)?;
    Ok(all(vec![
        check(
            (r.best_omega - sup).abs() <= 1e-6,
            format!("optimizer {:.10} (sup - best {:.1e})", r.best_omega, sup - r.best_omega),
        ),
        check(over <= 1e-7, format!("max excess over sup {over:.1e}")),
        check(
            (5.01..=sup + 1e-9).contains(&o.best_omega),
            format!("oracle(0.01) {:.8}", o.best_omega),
        ),
    ]))
}

fn lemma_suite() -> Result<Outcome, Box<dyn std::error::Error>> {
    let mut parts = Vec::new();
    for dim in 2..=6 {
        let r = sample_lemma(dim, 1000, 100, 42)?;
        parts.push(check(
            r.min_slack >= -1e-9 && r.max_vertex_equality_error <= 1e-12,
            format!(
                "dim {dim} min slack {:.2e} vertex err {:.0e}",
                r.min_slack, r.max_vertex_equality_error
            ),
        ));
    }
    Ok(all(parts))
}

fn cap_construction() -> Result<Outcome, Box<dyn std::error::Error>> {
    let (mut apex_err, mut omega_err) = (0.0f64, 0.0f64);
    for n in 2..=12 {
        let c = thm33_configuration(n)?;
        let formula = (2.0 * (1.0 - ((n + 1) as f64 / (2.0 * n as f64)).sqrt())).sqrt();
        assert_eq!(formula, apex_distance(n));
        for i in 1..=n {
            apex_err = apex_err.max((distance(c.point(i), c.point(n + 1)) - formula).abs());
        }
        omega_err = omega_err.max((functionals(&c)?.omega - thm33_bound(n)?).abs());
    }
    let cong = congruence_error(&thm33_configuration(2)?, &extremal_quadrilateral())?;
    Ok(all(vec![
        check(apex_err <= 1e-10, format!("apex residual {apex_err:.1e}")),
        check(omega_err <= 1e-10, format!("omega residual {omega_err:.1e}")),
        check(cong <= 1e-9, format!("n=2 congruence {cong:.1e}")),
    ]))
}

fn landscape_suite() -> Result<Outcome, Box<dyn std::error::Error>> {
    let d = derivative_check(1000, 42, 1e-5, 1e-6)?;
    let c = curvature_positive_on_grid(1e-3, 1e-3)?;
    let s = stationary_scan(1e-3, 1e-3)?;
    let b = boundary_maximize();
    let half = std::f64::consts::FRAC_PI_6;
    let argmax_err = distance(&b.argmax, &[half.cos(), half.sin()]);
    let value_err = (b.value - 2.0 * (2.0 - 3f64.sqrt()).sqrt()).abs();
    let arcs = random_arc_sweep(100, 42)?;
    Ok(all(vec![
        check(
            d.max_gradient_error <= 1e-5 && d.max_hessian_error <= 1e-5,
            format!(
                "(a) fd gradient {:.1e} hessian {:.1e}",
                d.max_gradient_error, d.max_hessian_error
            ),
        ),
        check(
            c.min_curvature_indicator > 0.0,
            format!("(b) min rt-s^2 {:.3e} over {} nodes", c.min_curvature_indicator, c.points),
        ),
        check(s.min_gradient_norm > 1e-3, format!("(c) min |grad| {:.3e}", s.min_gradient_norm)),
        check(
            value_err <= 1e-9 && argmax_err <= 1e-6,
            format!("(d) boundary error {value_err:.1e}, argmax error {argmax_err:.1e}"),
        ),
        check(
            arcs.max_midnormal_offset <= 1e-8,
            format!("(e) {} arcs, max |x-1/2| {:.1e}", arcs.count, arcs.max_midnormal_offset),
        ),
    ]))
}

fn conjecture_reports() -> Result<Outcome, Box<dyn std::error::Error>> {
    let exact_gap = known_inf_mu(2, 4).unwrap() - sup_omega_2_4();
    let g41 = conjecture_41_report(2, 4, &SearchConfig::new(2, 4).with_starts(200).with_seed(42))?;
    let gap = g41.report.gap.unwrap_or(f64::NAN);
    let g42_2 = conjecture_42_report(2, &SearchConfig::new(2, 4).with_seed(42))?;
    let g42_3 = conjecture_42_report(3, &SearchConfig::new(3, 5).with_seed(42))?;
    let ex2 = g42_2.report.gap.unwrap_or(f64::NAN);
    let ex3 = g42_3.report.gap.unwrap_or(f64::NAN);
    Ok(all(vec![
        check(
            g41.report.verdict == Verdict::Consistent && (gap - exact_gap).abs() <= 1e-5,
            format!("g41(2,4) gap {gap:.8} vs {exact_gap:.8}, {}", g41.report.verdict),
        ),
        check(ex2 <= 1e-6, format!("g42 n=2 excess {ex2:.1e}")),
        check(ex3.is_finite(), format!("g42 n=3 excess {ex3:+.6} ({})", g42_3.report.verdict)),
    ]))
}

fn determinism() -> Result<Outcome, Box<dyn std::error::Error>> {
    let dir = tempfile::tempdir()?;
    let mut runs: Vec<(String, Vec<&str>)> = vec![
        (
            "optimize".into(),
            vec!["optimize", "--m", "2", "--n", "4", "--starts", "200", "--seed", "42"],
        ),
        ("oracle".into(), vec!["oracle", "--resolution", "0.01"]),
    ];
    let dims = ["2", "3", "4", "5", "6"];
    for d in &dims {
        runs.push((
            format!("lemma-{d}"),
            vec!["verify", "lemma", "--dim", d, "--simplices", "1000", "--points", "100", "--seed", "42"],
        ));
    }
    let mut parts = Vec::new();
    for (name, args) in &runs {
        let mut docs = Vec::new();
        for threads in ["1", "8", "8"] {
            let path = dir.path().join(format!("{name}-{threads}-{}.json", docs.len()));
            let mut full = vec!["--threads", threads];
            full.extend(args.iter().copied());
            full.extend(["-o", path.to_str().unwrap()]);
            let out = cli(&full)?;
            if out.status.code() != Some(0) {
                return Ok(check(false, format!("{name} exited {:?}", out.status.code())));
            }
            docs.push(std::fs::read(&path)?);
        }
        parts.push(check(
            docs.windows(2).all(|w| w[0] == w[1]),
            format!("{name} {}", if docs[0] == docs[1] { "identical" } else { "differs" }),
        ));
    }
    // in-process sanity: the JSON parses back to the same configuration
    let doc = std::fs::read_to_string(dir.path().join("optimize-1-0.json"))?;
    let v: serde_json::Value = serde_json::from_str(&doc)?;
    let best = PointSet::from_json(&v["best"].to_string())?;
    parts.push(check(
        functionals(&best)?.omega == v["best_omega"].as_f64().unwrap_or(f64::NAN),
        "reported best re-evaluates exactly",
    ));
    Ok(all(parts))
}

fn main() {
    let criteria: [(&str, Duration, Criterion); 8] = [
        ("extremal value reproduction", Duration::from_secs(1), extremal_value),
        ("simplex suprema (2,3) and (3,4)", Duration::from_secs(30), simplex_suprema),
        ("planar quadrilateral supremum", Duration::from_secs(300), planar_quadrilateral),
        ("vertex edge-sum bound suite", Duration::from_secs(120), lemma_suite),
        ("simplex-plus-cap construction", Duration::from_secs(10), cap_construction),
        ("landscape suite", Duration::from_secs(120), landscape_suite),
        ("conjecture reports", Duration::from_secs(300), conjecture_reports),
        ("determinism across thread counts", Duration::from_secs(600), determinism),
    ];
    let mut failed = 0;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let outcome = run().unwrap_or_else(|e| check(false, format!("error: {e}")));
        let elapsed = t0.elapsed();
        let in_time = elapsed <= *budget;
        let pass = outcome.pass && in_time;
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {}: {} {name} [{}] ({:.2}s of {}s)",
            k + 1,
            if pass { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
