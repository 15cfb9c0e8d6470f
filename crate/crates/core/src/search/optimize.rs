//! Multi-start coordinate pattern search for large ω.
//!
//! Each start keeps its configuration at diameter 1 and maximizes σ by
//! trying ±step moves of every coordinate of every point; an improving move
//! is accepted and the set re-normalized, and a sweep without improvement
//! halves the step.

use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{functionals, normalize_diameter, omega, PointSet};
use crate::parallel::substream;

/// Draws with diameter below this are rejected and redrawn.
pub const DEGENERATE_DIAMETER: f64 = 1e-9;

const MAX_REDRAWS: usize = 1000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Ambient dimension.
    pub m: usize,
    /// Number of points.
    pub n: usize,
    pub starts: usize,
    /// Sweep budget per start.
    pub max_iters: usize,
    pub seed: u64,
    pub step_init: f64,
    pub step_min: f64,
    /// Replaces the random draw of start 0.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub warm_start: Option<PointSet>,
}

impl SearchConfig {
    pub fn new(m: usize, n: usize) -> Self {
        SearchConfig {
            m,
            n,
            starts: 50,
            max_iters: 100_000,
            seed: 0,
            step_init: 0.1,
            step_min: 1e-10,
            warm_start: None,
        }
    }

    pub fn with_starts(mut self, starts: usize) -> Self {
        self.starts = starts;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_warm_start(mut self, ps: PointSet) -> Self {
        self.warm_start = Some(ps);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::InvalidConfig("m must be at least 1".into()));
        }
        if self.n < 3 {
            return Err(Error::InvalidConfig(format!("n must be at least 3, got {}", self.n)));
        }
        if self.starts == 0 {
            return Err(Error::InvalidConfig("starts must be at least 1".into()));
        }
        if !(self.step_min > 0.0 && self.step_min < self.step_init && self.step_init.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "need 0 < step_min < step_init, got {} and {}",
                self.step_min, self.step_init
            )));
        }
        if let Some(w) = &self.warm_start {
            if w.dim() != self.m || w.len() != self.n {
                return Err(Error::InvalidConfig(format!(
                    "warm start has {} points in E^{}, expected {} in E^{}",
                    w.len(),
                    w.dim(),
                    self.n,
                    self.m
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    /// Best configuration, normalized to diameter 1.
    pub best: PointSet,
    pub best_omega: f64,
    pub per_start_bests: Vec<f64>,
    pub degenerate_redraws: usize,
    pub config: SearchConfig,
}

/// One local search run.
#[derive(Debug, Clone)]
pub struct StartOutcome {
    pub best: PointSet,
    pub omega: f64,
    /// Incumbent ω after every sweep.
    pub history: Vec<f64>,
    pub sweeps: usize,
    pub redraws: usize,
}

fn draw_start<R: Rng>(rng: &mut R, m: usize, n: usize) -> Result<(PointSet, usize)> {
    for redraws in 0..MAX_REDRAWS {
        let pts: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..m).map(|_| rng.random::<f64>()).collect())
            .collect();
        let ps = PointSet::new(m, pts)?;
        let dmax = functionals(&ps).map(|s| s.dmax).unwrap_or(0.0);
        if dmax >= DEGENERATE_DIAMETER {
            return Ok((normalize_diameter(&ps)?, redraws));
        }
    }
    Err(Error::Degenerate(format!(
        "{MAX_REDRAWS} consecutive collapsed draws"
    )))
}

/// Runs start `index` of `cfg`. Start 0 uses the warm start when present.
pub fn run_start(cfg: &SearchConfig, index: usize) -> Result<StartOutcome> {
    let mut rng = substream(cfg.seed, index as u64);
    let (start, redraws) = match (&cfg.warm_start, index) {
        (Some(w), 0) => (normalize_diameter(w)?, 0),
        _ => draw_start(&mut rng, cfg.m, cfg.n)?,
    };
    let mut pts = start.into_points();
    let mut cur = omega(&pts).ok_or_else(|| Error::Degenerate("zero diameter".into()))?;
    let mut step = cfg.step_init;
    let mut history = Vec::new();
    let mut sweeps = 0;

    let dof = cfg.n * cfg.m;
    let try_move = |pts: &Vec<Vec<f64>>, cur: f64, apply: &dyn Fn(&mut Vec<Vec<f64>>)| -> Result<Option<(Vec<Vec<f64>>, f64)>> {
        let mut trial = pts.clone();
        apply(&mut trial);
        match omega(&trial) {
            Some(w) if w > cur => {}
            _ => return Ok(None),
        }
        let trial = normalize_diameter(&PointSet::new(cfg.m, trial)?)?.into_points();
        // re-check after rescaling so the incumbent never drops
        Ok(omega(&trial).filter(|&w| w > cur).map(|w| (trial, w)))
    };

    while step >= cfg.step_min && sweeps < cfg.max_iters {
        let mut improved = false;
        for i in 0..cfg.n {
            for k in 0..cfg.m {
                for dir in [1.0, -1.0] {
                    if let Some((p, w)) = try_move(&pts, cur, &|t| t[i][k] += dir * step)? {
                        pts = p;
                        cur = w;
                        improved = true;
                        break;
                    }
                }
            }
        }
        // Coordinate moves alone stall where several distances tie for the
        // diameter; random joint directions reach into the ascent cone.
        for _ in 0..2 * dof {
            let d: Vec<f64> = (0..dof).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
            let norm = d.iter().map(|x| x * x).sum::<f64>().sqrt();
            for dir in [1.0, -1.0] {
                let scale = dir * step / norm;
                let apply = |t: &mut Vec<Vec<f64>>| {
                    for (c, dc) in t.iter_mut().flatten().zip(&d) {
                        *c += scale * dc;
                    }
                };
                if let Some((p, w)) = try_move(&pts, cur, &apply)? {
                    pts = p;
                    cur = w;
                    improved = true;
                    break;
                }
            }
        }
        sweeps += 1;
        history.push(cur);
        if !improved {
            step *= 0.5;
        }
    }
    let best = PointSet::new(cfg.m, pts)?;
    Ok(StartOutcome {
        omega: functionals(&best)?.omega,
        best,
        history,
        sweeps,
        redraws,
    })
}

/// Best configuration over all starts. Starts run in parallel on the ambient
/// rayon pool; each has its own seeded substream and the merge keeps the
/// lowest start index on ties, so the result is schedule-independent.
pub fn optimize_omega(cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    let outcomes = (0..cfg.starts)
        .into_par_iter()
        .map(|k| run_start(cfg, k))
        .collect::<Result<Vec<_>>>()?;
    let per_start_bests: Vec<f64> = outcomes.iter().map(|o| o.omega).collect();
    let degenerate_redraws = outcomes.iter().map(|o| o.redraws).sum();
    let best = outcomes
        .into_iter()
        .reduce(|a, b| if b.omega > a.omega { b } else { a })
        .expect("starts >= 1");
    Ok(SearchResult {
        best_omega: best.omega,
        best: best.best,
        per_start_bests,
        degenerate_redraws,
        config: cfg.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{pairs, thm33_bound, thm33_configuration};

    #[test]
    fn config_validation() {
        assert!(SearchConfig::new(2, 4).validate().is_ok());
        assert!(SearchConfig::new(2, 2).validate().is_err());
        assert!(SearchConfig::new(0, 4).validate().is_err());
        assert!(SearchConfig::new(2, 4).with_starts(0).validate().is_err());
        let mut c = SearchConfig::new(2, 4);
        c.step_min = c.step_init;
        assert!(c.validate().is_err());
        let c = SearchConfig::new(3, 5).with_warm_start(thm33_configuration(2).unwrap());
        assert!(c.validate().is_err());
    }

    #[test]
    fn incumbent_is_monotone() {
        let cfg = SearchConfig::new(2, 5).with_seed(9);
        for k in 0..5 {
            let o = run_start(&cfg, k).unwrap();
            assert!(o.history.windows(2).all(|w| w[1] >= w[0]));
            assert!(o.omega <= pairs(5));
            assert!((functionals(&o.best).unwrap().dmax - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn warm_start_dominates() {
        let warm = thm33_configuration(3).unwrap();
        let cfg = SearchConfig::new(3, 5).with_starts(2).with_warm_start(warm);
        let o = run_start(&cfg, 0).unwrap();
        assert!(o.omega >= thm33_bound(3).unwrap() - 1e-9);
    }

    #[test]
    fn json_echoes_config() {
        let cfg = SearchConfig::new(2, 3).with_starts(2).with_seed(1);
        let r = optimize_omega(&cfg).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        for key in ["best", "best_omega", "per_start_bests", "config"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["config"]["seed"], 1);
        let back: SearchResult = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
