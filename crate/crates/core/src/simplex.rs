//! Distance sums from a point inside a simplex to its vertices.
//!
//! For every point P of an n-simplex with vertices A_1..A_{n+1},
//!
//! ```text
//! Σ_i ‖P A_i‖  ≤  max_v Σ_{u≠v} ‖A_v A_u‖
//! ```
//!
//! i.e. the vertex distance sum never exceeds the largest edge sum incident
//! to a single vertex. Equality holds at the maximizing vertex. This module
//! evaluates both sides and checks the inequality on random simplices.

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::Exp1;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::distance;
use crate::parallel::substream;

/// Volume must exceed this fraction of (longest edge)^dim.
pub const DEGENERACY_RTOL: f64 = 1e-10;

/// Tolerance on the sum of barycentric weights.
pub const WEIGHT_SUM_TOL: f64 = 1e-12;

/// Slack tolerance used by [`sample_lemma`].
pub const LEMMA_TOL: f64 = 1e-9;

const MAX_CONSECUTIVE_REJECTIONS: usize = 1000;

/// A non-degenerate n-simplex in E^n.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Simplex {
    dim: usize,
    vertices: Vec<Vec<f64>>,
}

impl Simplex {
    /// Builds a simplex from `dim + 1` vertices in E^dim, rejecting sets whose
    /// Gram volume is below `DEGENERACY_RTOL * max_edge^dim`.
    pub fn new(vertices: Vec<Vec<f64>>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::invalid("vertices", "need at least 2 vertices"));
        }
        let dim = vertices.len() - 1;
        for (i, v) in vertices.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::invalid(
                    format!("vertices[{i}]"),
                    format!("expected {dim} coordinates, got {}", v.len()),
                ));
            }
            if v.iter().any(|c| !c.is_finite()) {
                return Err(Error::invalid(format!("vertices[{i}]"), "non-finite coordinate"));
            }
        }
        let s = Simplex { dim, vertices };
        let max_edge = s.max_edge();
        let vol = s.volume();
        if !(max_edge > 0.0 && vol >= DEGENERACY_RTOL * max_edge.powi(dim as i32)) {
            return Err(Error::Degenerate(format!(
                "simplex volume {vol:.3e} below {DEGENERACY_RTOL:e} x max_edge^{dim}"
            )));
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &[f64] {
        &self.vertices[i]
    }

    fn max_edge(&self) -> f64 {
        let v = &self.vertices;
        (0..v.len())
            .flat_map(|i| (i + 1..v.len()).map(move |j| (i, j)))
            .map(|(i, j)| distance(&v[i], &v[j]))
            .fold(0.0, f64::max)
    }

    /// n-volume via the Gram determinant of the edge vectors from vertex 0.
    pub fn volume(&self) -> f64 {
        let n = self.dim;
        let v0 = &self.vertices[0];
        let edges = DMatrix::from_fn(n, n, |r, c| self.vertices[r + 1][c] - v0[c]);
        let gram = &edges * edges.transpose();
        let factorial: f64 = (1..=n).map(|k| k as f64).product();
        gram.determinant().max(0.0).sqrt() / factorial
    }

    /// Sum of edge lengths incident to vertex `v`.
    pub fn incident_edge_sum(&self, v: usize) -> f64 {
        let a = &self.vertices[v];
        self.vertices
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, b)| distance(a, b))
            .sum()
    }

    /// Vertex with the largest incident edge sum (first one on ties).
    pub fn bound_vertex(&self) -> usize {
        (0..self.vertices.len())
            .map(|v| (v, self.incident_edge_sum(v)))
            .fold((0, f64::NEG_INFINITY), |best, cur| if cur.1 > best.1 { cur } else { best })
            .0
    }
}

/// max over vertices v of Σ_{u≠v} ‖A_v A_u‖.
pub fn vertex_edge_sum_bound(s: &Simplex) -> f64 {
    s.incident_edge_sum(s.bound_vertex())
}

/// Σ_i ‖p A_i‖. Membership of `p` in the simplex is not checked.
pub fn point_vertex_distance_sum(s: &Simplex, p: &[f64]) -> f64 {
    s.vertices.iter().map(|a| distance(a, p)).sum()
}

pub fn barycentric_point(s: &Simplex, weights: &[f64]) -> Result<Vec<f64>> {
    if weights.len() != s.dim + 1 {
        return Err(Error::invalid(
            "weights",
            format!("expected {} weights, got {}", s.dim + 1, weights.len()),
        ));
    }
    if let Some(i) = weights.iter().position(|w| w.is_nan() || *w < 0.0) {
        return Err(Error::invalid(format!("weights[{i}]"), "weight must be nonnegative"));
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > WEIGHT_SUM_TOL {
        return Err(Error::invalid("weights", format!("weights sum to {total}, not 1")));
    }
    let mut p = vec![0.0; s.dim];
    for (w, v) in weights.iter().zip(&s.vertices) {
        for (pk, vk) in p.iter_mut().zip(v) {
            *pk += w * vk;
        }
    }
    Ok(p)
}

/// Both sides of the vertex-sum inequality at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
}

pub fn check_lemma(s: &Simplex, p: &[f64], tol: f64) -> LemmaCheck {
    let lhs = point_vertex_distance_sum(s, p);
    let rhs = vertex_edge_sum_bound(s);
    let slack = rhs - lhs;
    LemmaCheck {
        lhs,
        rhs,
        slack,
        holds: slack >= -tol,
    }
}

/// Uniform weights on the standard simplex (symmetric Dirichlet(1,…,1)) via
/// normalized exponential spacings.
pub fn uniform_weights<R: Rng + ?Sized>(rng: &mut R, k: usize) -> Vec<f64> {
    let mut w: Vec<f64> = (0..k).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let total: f64 = w.iter().sum();
    w.iter_mut().for_each(|x| *x /= total);
    w
}

/// Draws a simplex with vertices uniform in the unit cube, rejecting
/// degenerate draws.
pub fn random_simplex<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Result<Simplex> {
    for _ in 0..MAX_CONSECUTIVE_REJECTIONS {
        let vertices = (0..=dim)
            .map(|_| (0..dim).map(|_| rng.random::<f64>()).collect())
            .collect();
        match Simplex::new(vertices) {
            Ok(s) => return Ok(s),
            Err(Error::Degenerate(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Degenerate(format!(
        "{MAX_CONSECUTIVE_REJECTIONS} consecutive degenerate simplices in dim {dim}"
    )))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub simplex: Vec<Vec<f64>>,
    pub point: Vec<f64>,
}

/// Outcome of a randomized check of the vertex-sum inequality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub dim: usize,
    pub count: usize,
    pub points_per_simplex: usize,
    pub seed: u64,
    pub min_slack: f64,
    /// Largest |slack| observed at the bound-attaining vertex of each simplex.
    pub max_vertex_equality_error: f64,
    pub witness: Witness,
}

impl LemmaReport {
    pub fn passes(&self) -> bool {
        self.min_slack >= -LEMMA_TOL && self.max_vertex_equality_error <= 1e-12
    }
}

struct SimplexOutcome {
    min_slack: f64,
    argmin: Vec<f64>,
    vertex_error: f64,
    simplex: Simplex,
}

fn probe_simplex(s: Simplex, points: impl Iterator<Item = Vec<f64>>) -> SimplexOutcome {
    let rhs = vertex_edge_sum_bound(&s);
    let mut min_slack = f64::INFINITY;
    let mut argmin = Vec::new();
    for p in points {
        let slack = rhs - point_vertex_distance_sum(&s, &p);
        if slack < min_slack {
            min_slack = slack;
            argmin = p;
        }
    }
    let v = s.bound_vertex();
    let vertex_error = (rhs - point_vertex_distance_sum(&s, s.vertex(v))).abs();
    SimplexOutcome {
        min_slack,
        argmin,
        vertex_error,
        simplex: s,
    }
}

/// Minimum slack of the inequality over the given points of one simplex,
/// with the point attaining it.
pub fn min_slack_over(s: &Simplex, points: &[Vec<f64>]) -> (f64, Vec<f64>) {
    let o = probe_simplex(s.clone(), points.iter().cloned());
    (o.min_slack, o.argmin)
}

/// Checks the inequality on `simplex_count` random simplices with
/// `points_per_simplex` uniform interior points each. Simplex `k` draws from
/// substream `k` of `seed`, so the report is independent of thread count.
pub fn sample_lemma(
    dim: usize,
    simplex_count: usize,
    points_per_simplex: usize,
    seed: u64,
) -> Result<LemmaReport> {
    if dim == 0 {
        return Err(Error::invalid("dim", "must be at least 1"));
    }
    if simplex_count == 0 || points_per_simplex == 0 {
        return Err(Error::invalid("count", "simplex and point counts must be at least 1"));
    }
    let outcomes = (0..simplex_count)
        .into_par_iter()
        .map(|k| {
            let mut rng = substream(seed, k as u64);
            let s = random_simplex(&mut rng, dim)?;
            let pts: Vec<Vec<f64>> = (0..points_per_simplex)
                .map(|_| {
                    let w = uniform_weights(&mut rng, dim + 1);
                    barycentric_point(&s, &w)
                })
                .collect::<Result<_>>()?;
            Ok(probe_simplex(s, pts.into_iter()))
        })
        .collect::<Result<Vec<_>>>()?;

    let max_vertex_equality_error = outcomes.iter().map(|o| o.vertex_error).fold(0.0, f64::max);
    // strict `<` keeps the lowest index on ties
    let best = outcomes
        .into_iter()
        .reduce(|a, b| if b.min_slack < a.min_slack { b } else { a })
        .expect("simplex_count >= 1");
    Ok(LemmaReport {
        dim,
        count: simplex_count,
        points_per_simplex,
        seed,
        min_slack: best.min_slack,
        max_vertex_equality_error,
        witness: Witness {
            simplex: best.simplex.vertices,
            point: best.argmin,
        },
    })
}
