//! Point sets in E^m and the distance functionals defined on them.
//!
//! For a finite set S the functionals are the pairwise-distance sum σ(S),
//! the diameter D(S), the minimum separation d(S), and the two ratios
//! ω = σ/D and μ = σ/d. Both ratios are invariant under similarity
//! transforms, which is what makes the normalization D(S) = 1 free.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Euclidean distance between two coordinate slices of equal length.
#[inline]
pub fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// An ordered finite point set in E^dim.
///
/// Construction validates that every point has `dim` finite coordinates and
/// that there are at least two points; a `PointSet` is immutable afterwards.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPointSet")]
pub struct PointSet {
    dim: usize,
    points: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPointSet {
    dim: usize,
    points: Vec<Vec<f64>>,
}

impl TryFrom<RawPointSet> for PointSet {
    type Error = Error;

    fn try_from(raw: RawPointSet) -> Result<Self> {
        PointSet::new(raw.dim, raw.points)
    }
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Vec<f64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("dim", "must be a positive integer"));
        }
        if points.len() < 2 {
            return Err(Error::invalid(
                "points",
                format!("need at least 2 points, got {}", points.len()),
            ));
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::invalid(
                    format!("points[{i}]"),
                    format!("expected {dim} coordinates, got {}", p.len()),
                ));
            }
            if let Some(k) = p.iter().position(|c| !c.is_finite()) {
                return Err(Error::invalid(
                    format!("points[{i}][{k}]"),
                    "coordinate is not finite",
                ));
            }
        }
        Ok(PointSet { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false for a valid set; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i]
    }

    pub fn into_points(self) -> Vec<Vec<f64>> {
        self.points
    }

    pub fn centroid(&self) -> Vec<f64> {
        let n = self.points.len() as f64;
        let mut c = vec![0.0; self.dim];
        for p in &self.points {
            for (ck, pk) in c.iter_mut().zip(p) {
                *ck += pk;
            }
        }
        c.iter_mut().for_each(|ck| *ck /= n);
        c
    }

    /// Applies `f` to every point, keeping the dimension.
    pub fn map_points(&self, mut f: impl FnMut(&[f64]) -> Vec<f64>) -> Result<Self> {
        let points = self.points.iter().map(|p| f(p)).collect();
        PointSet::new(self.dim, points)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("point sets always serialize")
    }

    /// Parses point-set JSON. Type errors name the JSON path of the
    /// offending value, e.g. `points[1][0]`.
    pub fn from_json(s: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(s);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            let inner = e.into_inner();
            if path == "." || inner.is_syntax() || inner.is_eof() {
                Error::from(inner)
            } else {
                Error::invalid(path, inner.to_string())
            }
        })
    }
}

/// Symmetric matrix of pairwise distances, stored densely.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Iterator over the strict upper triangle, `(i, j, dist)` with `i < j`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |i| (i + 1..self.n).map(move |j| (i, j, self.get(i, j))))
    }
}

pub fn distance_matrix(ps: &PointSet) -> DistanceMatrix {
    let n = ps.len();
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let d = distance(ps.point(i), ps.point(j));
            data[i * n + j] = d;
            data[j * n + i] = d;
        }
    }
    DistanceMatrix { n, data }
}

/// σ, D, d and the two ratios for one point set.
///
/// `mu` is `None` when two points coincide (d = 0); it serializes as `null`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistanceSummary {
    pub sigma: f64,
    pub dmax: f64,
    pub dmin: f64,
    pub omega: f64,
    pub mu: Option<f64>,
}

pub fn functionals(ps: &PointSet) -> Result<DistanceSummary> {
    let dm = distance_matrix(ps);
    let mut sigma = 0.0;
    let mut dmax = 0.0f64;
    let mut dmin = f64::INFINITY;
    for (_, _, d) in dm.pairs() {
        sigma += d;
        dmax = dmax.max(d);
        dmin = dmin.min(d);
    }
    if dmax == 0.0 {
        return Err(Error::Degenerate("all points coincide (diameter 0)".into()));
    }
    Ok(DistanceSummary {
        sigma,
        dmax,
        dmin,
        omega: sigma / dmax,
        mu: (dmin > 0.0).then(|| sigma / dmin),
    })
}

/// ω = σ/D without building the full summary. Returns `None` at zero diameter.
pub fn omega(points: &[Vec<f64>]) -> Option<f64> {
    let mut sigma = 0.0;
    let mut dmax = 0.0f64;
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            let d = distance(a, b);
            sigma += d;
            dmax = dmax.max(d);
        }
    }
    (dmax > 0.0).then(|| sigma / dmax)
}

/// Scales the set about its centroid so that its diameter becomes 1.
pub fn normalize_diameter(ps: &PointSet) -> Result<PointSet> {
    let dmax = distance_matrix(ps)
        .pairs()
        .map(|(_, _, d)| d)
        .fold(0.0f64, f64::max);
    if dmax == 0.0 {
        return Err(Error::Degenerate("cannot normalize: all points coincide".into()));
    }
    let c = ps.centroid();
    ps.map_points(|p| p.iter().zip(&c).map(|(x, ck)| ck + (x - ck) / dmax).collect())
}

fn require_planar(ps: &PointSet) -> Result<()> {
    if ps.dim() != 2 {
        return Err(Error::invalid(
            "dim",
            format!("planar predicate needs dim 2, got {}", ps.dim()),
        ));
    }
    Ok(())
}

#[inline]
fn orient(a: &[f64], b: &[f64], c: &[f64]) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

/// True iff some triple has area ≤ `tol` × (product of its two longest sides).
pub fn collinear_triple_exists(ps: &PointSet, tol: f64) -> Result<bool> {
    require_planar(ps)?;
    let pts = ps.points();
    Ok(pts.iter().tuple_combinations().any(|(a, b, c)| {
        let area = 0.5 * orient(a, b, c).abs();
        let mut sides = [distance(a, b), distance(b, c), distance(a, c)];
        sides.sort_by(f64::total_cmp);
        area <= tol * sides[1] * sides[2]
    }))
}

/// Relative tolerance used to reject collinear triples before the
/// convex-position test.
pub const CONVEX_COLLINEAR_TOL: f64 = 1e-12;

/// True iff no point of the 4-point planar set lies strictly inside the
/// triangle of the other three.
pub fn is_convex_position_4(ps: &PointSet) -> Result<bool> {
    require_planar(ps)?;
    if ps.len() != 4 {
        return Err(Error::invalid(
            "points",
            format!("convex-position test needs exactly 4 points, got {}", ps.len()),
        ));
    }
    if collinear_triple_exists(ps, CONVEX_COLLINEAR_TOL)? {
        return Err(Error::Degenerate(
            "collinear triple present; convex position is undefined".into(),
        ));
    }
    let p = ps.points();
    let inside = |q: &[f64], a: &[f64], b: &[f64], c: &[f64]| {
        let s1 = orient(a, b, q).signum();
        let s2 = orient(b, c, q).signum();
        let s3 = orient(c, a, q).signum();
        s1 == s2 && s2 == s3
    };
    Ok(!(0..4).any(|i| {
        let others: Vec<&[f64]> = (0..4).filter(|&j| j != i).map(|j| p[j].as_slice()).collect();
        inside(&p[i], others[0], others[1], others[2])
    }))
}

/// Smallest achievable max-abs difference between the two distance matrices
/// over all relabelings of `b`. Zero (up to round-off) iff the sets are
/// congruent. Cost is n!, so keep n small.
pub fn congruence_error(a: &PointSet, b: &PointSet) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::invalid(
            "points",
            format!("point counts differ: {} vs {}", a.len(), b.len()),
        ));
    }
    let n = a.len();
    let da = distance_matrix(a);
    let db = distance_matrix(b);
    Ok((0..n)
        .permutations(n)
        .map(|perm| {
            da.pairs()
                .map(|(i, j, d)| (d - db.get(perm[i], perm[j])).abs())
                .fold(0.0f64, f64::max)
        })
        .fold(f64::INFINITY, f64::min))
}
