//! Numeric probes of two open claims:
//!
//! * `g41`: inf μ(m,n) > sup ω(m,n) whenever n > m + 1 and m ≥ 2;
//! * `g42`: sup ω(n, n+2) equals the simplex-plus-cap construction value.
//!
//! The optimizer only produces achieved values, i.e. lower estimates of the
//! supremum. A report can therefore exhibit a counterexample but never
//! confirm a claim.

use serde::{Deserialize, Serialize};

use crate::constructions::{known_inf_mu, thm33_bound, thm33_configuration};
use crate::error::{Error, Result};

use super::optimize::{optimize_omega, SearchConfig, SearchResult};

/// Margin separating a verdict from "inconclusive".
pub const VERDICT_TOL: f64 = 1e-6;

pub const CAVEAT: &str = "numeric evidence only";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Consistent,
    Violated,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "consistent",
            Verdict::Violated => "violated",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub claim: String,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub gap: Option<f64>,
    pub verdict: Verdict,
    pub caveat: String,
}

/// A report together with the search run behind it.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjectureRun {
    pub report: ConjectureReport,
    pub search: SearchResult,
}

/// Compares the closed-form inf μ(m,n) (lhs) with the best ω found (rhs).
/// `gap` = lhs − rhs. A negative gap beyond tolerance is a genuine
/// counterexample since the rhs is attained by an explicit configuration.
pub fn conjecture_41_report(m: usize, n: usize, cfg: &SearchConfig) -> Result<ConjectureRun> {
    if m < 2 || n <= m + 1 {
        return Err(Error::invalid(
            "n",
            format!("claim needs m >= 2 and n > m + 1, got m={m}, n={n}"),
        ));
    }
    let cfg = SearchConfig {
        m,
        n,
        ..cfg.clone()
    };
    let search = optimize_omega(&cfg)?;
    let lhs = known_inf_mu(m, n);
    let rhs = search.best_omega;
    let gap = lhs.map(|l| l - rhs);
    let verdict = match gap {
        Some(g) if g > VERDICT_TOL => Verdict::Consistent,
        Some(g) if g < -VERDICT_TOL => Verdict::Violated,
        _ => Verdict::Inconclusive,
    };
    Ok(ConjectureRun {
        report: ConjectureReport {
            claim: format!("inf mu({m},{n}) > sup omega({m},{n})"),
            lhs,
            rhs: Some(rhs),
            gap,
            verdict,
            caveat: CAVEAT.into(),
        },
        search,
    })
}

/// Searches (n, n+2) with the construction as warm start for start 0 and
/// reports `gap` = best ω found − construction value. A gap above
/// `VERDICT_TOL` contradicts the claim.
pub fn conjecture_42_report(n: usize, cfg: &SearchConfig) -> Result<ConjectureRun> {
    if n < 2 {
        return Err(Error::invalid("n", format!("need n >= 2, got {n}")));
    }
    if cfg.m != n || cfg.n != n + 2 {
        return Err(Error::InvalidConfig(format!(
            "search must run {} points in E^{n}, got {} in E^{}",
            n + 2,
            cfg.n,
            cfg.m
        )));
    }
    let bound = thm33_bound(n)?;
    let cfg = cfg.clone().with_warm_start(thm33_configuration(n)?);
    let search = optimize_omega(&cfg)?;
    let excess = search.best_omega - bound;
    let verdict = if excess > VERDICT_TOL {
        Verdict::Violated
    } else {
        Verdict::Consistent
    };
    Ok(ConjectureRun {
        report: ConjectureReport {
            claim: format!("sup omega({n},{}) = C({},2) + 1 + {n}*sqrt(2*(1 - sqrt(({})/({}))))", n + 2, n + 1, n + 1, 2 * n),
            lhs: Some(search.best_omega),
            rhs: Some(bound),
            gap: Some(excess),
            verdict,
            caveat: CAVEAT.into(),
        },
        search,
    })
}
