//! The planar (2,4) landscape.
//!
//! With the unit triangle A_1 = (0,0), A_2 = (1,0), A_3 = (1/2, √3/2) fixed,
//! a fourth point A_4 = (x, y) in the bow region Ω (between the chord A_2A_3
//! and the unit arc about A_1) contributes
//!
//! ```text
//! f(x, y) = ‖A_3A_4‖ + ‖A_2A_4‖
//! ```
//!
//! to σ. This module evaluates f with its closed-form gradient and Hessian
//! (r = f_xx, s = f_xy, t = f_yy), scans Ω for the sign of rt − s² and for
//! interior stationary points, maximizes f over ∂Ω, and handles the lens Ω₁
//! used when the diameter pair A_1A_2 is fixed instead.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};
use std::io::Write;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{functionals, PointSet};
use crate::parallel::substream;

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Slack applied to the closed constraints of Ω and Ω₁.
pub const REGION_EPS: f64 = 1e-12;

pub const A1: [f64; 2] = [0.0, 0.0];
pub const A2: [f64; 2] = [1.0, 0.0];
pub const A3: [f64; 2] = [0.5, SQRT3 / 2.0];

/// Distances below this to A_2 or A_3 are treated as singular.
const SINGULAR_EPS: f64 = 1e-14;

#[inline]
fn hypot2(x: f64, y: f64) -> f64 {
    x.hypot(y)
}

/// f(x, y) without derivatives. Defined everywhere.
pub fn f_value(x: f64, y: f64) -> f64 {
    hypot2(x - A3[0], y - A3[1]) + hypot2(x - A2[0], y - A2[1])
}

/// y + √3·x − √3; zero on the line through A_2 and A_3, positive on the
/// side away from A_1.
pub fn chord_residual(x: f64, y: f64) -> f64 {
    y + SQRT3 * x - SQRT3
}

/// Euclidean distance from (x, y) to the line A_2A_3.
pub fn chord_distance(x: f64, y: f64) -> f64 {
    chord_residual(x, y).abs() / 2.0
}

/// Membership in Ω: 1/2 < x < 1, 0 < y < √3/2, on or beyond the chord, and
/// inside the closed unit disk about A_1.
pub fn in_bow_region(x: f64, y: f64) -> bool {
    x > 0.5
        && x < 1.0
        && y > 0.0
        && y < A3[1]
        && chord_residual(x, y) >= -REGION_EPS
        && x * x + y * y <= 1.0 + REGION_EPS
}

/// Interior of Ω: strictly beyond the chord and strictly inside the disk.
pub fn in_bow_interior(x: f64, y: f64) -> bool {
    in_bow_region(x, y) && chord_residual(x, y) > 0.0 && x * x + y * y < 1.0
}

/// Membership in the lens Ω₁ = unit disk about A_1 ∩ unit disk about A_2.
pub fn in_lens(x: f64, y: f64) -> bool {
    x * x + y * y <= 1.0 + REGION_EPS && (x - 1.0) * (x - 1.0) + y * y <= 1.0 + REGION_EPS
}

/// One evaluation of f with its first and second partials.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LandscapeProbe {
    pub x: f64,
    pub y: f64,
    pub f: f64,
    pub fx: f64,
    pub fy: f64,
    /// ∂²f/∂x²
    pub r: f64,
    /// ∂²f/∂x∂y
    pub s: f64,
    /// ∂²f/∂y²
    pub t: f64,
    pub curvature_indicator: f64,
}

impl LandscapeProbe {
    pub fn gradient_norm(&self) -> f64 {
        hypot2(self.fx, self.fy)
    }
}

pub fn probe(x: f64, y: f64) -> Result<LandscapeProbe> {
    let (u3, v3) = (x - A3[0], y - A3[1]);
    let (u2, v2) = (x - A2[0], y - A2[1]);
    let d3 = hypot2(u3, v3);
    let d2 = hypot2(u2, v2);
    if d3 < SINGULAR_EPS || d2 < SINGULAR_EPS {
        return Err(Error::Singular { x, y });
    }
    let c3 = d3 * d3 * d3;
    let c2 = d2 * d2 * d2;
    let r = v3 * v3 / c3 + v2 * v2 / c2;
    let t = u3 * u3 / c3 + u2 * u2 / c2;
    let s = -(u3 * v3 / c3 + u2 * v2 / c2);
    Ok(LandscapeProbe {
        x,
        y,
        f: d3 + d2,
        fx: u3 / d3 + u2 / d2,
        fy: v3 / d3 + v2 / d2,
        r,
        s,
        t,
        curvature_indicator: r * t - s * s,
    })
}

/// Residual of (1−x)(y−√3/2) = (1/2−x)·y, the factor whose zero set is the
/// line A_2A_3.
pub fn chord_factor_residual(x: f64, y: f64) -> f64 {
    (1.0 - x) * (y - A3[1]) - (0.5 - x) * y
}

/// Both sides of (1−x)(y−√3/2) = (x−1/2)·y. Inside Ω the left side is
/// negative and the right side positive, so this factor has no root there.
pub fn mirror_factor_sides(x: f64, y: f64) -> (f64, f64) {
    ((1.0 - x) * (y - A3[1]), (x - 0.5) * y)
}

/// Grid nodes of Ω's interior at the given spacing, farther than `band`
/// from the chord, grouped by row (fixed x).
fn interior_rows(resolution: f64, band: f64) -> Vec<Vec<(f64, f64)>> {
    let nx = ((0.5 / resolution).ceil() as usize).max(1);
    let ny = ((A3[1] / resolution).ceil() as usize).max(1);
    (1..nx)
        .map(|i| {
            let x = 0.5 + i as f64 * resolution;
            (1..ny)
                .map(|j| (x, j as f64 * resolution))
                .filter(|&(x, y)| in_bow_interior(x, y) && chord_distance(x, y) > band)
                .collect()
        })
        .collect()
}

fn require_resolution(resolution: f64) -> Result<()> {
    if !(resolution > 0.0 && resolution < 0.5) {
        return Err(Error::invalid("resolution", format!("must lie in (0, 0.5), got {resolution}")));
    }
    Ok(())
}

/// Min-reduction over grid rows. Rows are reduced in order and ties keep the
/// earlier node, so the result does not depend on the worker count.
fn min_over_grid(
    rows: &[Vec<(f64, f64)>],
    value: impl Fn(&LandscapeProbe) -> f64 + Sync,
) -> Result<(usize, f64, [f64; 2])> {
    let per_row = rows
        .par_iter()
        .map(|row| {
            let mut best: Option<(f64, [f64; 2])> = None;
            for &(x, y) in row {
                let v = value(&probe(x, y)?);
                if best.is_none_or(|(b, _)| v < b) {
                    best = Some((v, [x, y]));
                }
            }
            Ok(best)
        })
        .collect::<Result<Vec<_>>>()?;
    let points = rows.iter().map(Vec::len).sum();
    let best = per_row
        .into_iter()
        .flatten()
        .reduce(|a, b| if b.0 < a.0 { b } else { a });
    match best {
        Some((v, p)) => Ok((points, v, p)),
        None => Err(Error::invalid("resolution", "grid has no interior nodes")),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvatureReport {
    pub resolution: f64,
    pub exclusion_band: f64,
    pub points: usize,
    pub min_curvature_indicator: f64,
    pub argmin: [f64; 2],
}

/// Minimum of rt − s² over interior grid nodes of Ω farther than
/// `exclusion_band` from the chord.
pub fn curvature_positive_on_grid(resolution: f64, exclusion_band: f64) -> Result<CurvatureReport> {
    require_resolution(resolution)?;
    let rows = interior_rows(resolution, exclusion_band);
    let (points, min, argmin) = min_over_grid(&rows, |p| p.curvature_indicator)?;
    Ok(CurvatureReport {
        resolution,
        exclusion_band,
        points,
        min_curvature_indicator: min,
        argmin,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StationaryReport {
    pub resolution: f64,
    pub exclusion_band: f64,
    pub points: usize,
    pub min_gradient_norm: f64,
    pub argmin: [f64; 2],
    /// Nodes where |(2) residual| < |(3) residual|.
    pub chord_factor_closer: usize,
    /// Nodes where (3)'s sides fail to have opposite strict signs.
    pub mirror_factor_sign_violations: usize,
}

/// Smallest gradient norm over the interior grid. The gradient vanishes on
/// the chord itself, so nodes within `exclusion_band` of it are skipped.
pub fn stationary_scan(resolution: f64, exclusion_band: f64) -> Result<StationaryReport> {
    require_resolution(resolution)?;
    let rows = interior_rows(resolution, exclusion_band);
    let (points, min, argmin) = min_over_grid(&rows, LandscapeProbe::gradient_norm)?;
    let (chord_factor_closer, mirror_factor_sign_violations) = rows
        .iter()
        .flatten()
        .map(|&(x, y)| {
            let (lhs, rhs) = mirror_factor_sides(x, y);
            let closer = chord_factor_residual(x, y).abs() < (lhs - rhs).abs();
            (closer as usize, !(lhs < 0.0 && rhs > 0.0) as usize)
        })
        .fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(StationaryReport {
        resolution,
        exclusion_band,
        points,
        min_gradient_norm: min,
        argmin,
        chord_factor_closer,
        mirror_factor_sign_violations,
    })
}

/// Writes every interior grid node as CSV:
/// `x,y,f,fx,fy,r,s,t,rt_minus_s2`.
pub fn write_scan_csv<W: Write>(resolution: f64, exclusion_band: f64, mut out: W) -> Result<usize> {
    require_resolution(resolution)?;
    writeln!(out, "x,y,f,fx,fy,r,s,t,rt_minus_s2")?;
    let mut n = 0;
    for &(x, y) in interior_rows(resolution, exclusion_band).iter().flatten() {
        let p = probe(x, y)?;
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            p.x, p.y, p.f, p.fx, p.fy, p.r, p.s, p.t, p.curvature_indicator
        )?;
        n += 1;
    }
    Ok(n)
}

const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Maximizes `g` on [lo, hi]: dense sampling to bracket the best sample,
/// golden-section down to width 1e-12, then bisection on the sign of `dg`
/// when the bracket shows a + to − sign change. Returns (argmax, value).
fn maximize_1d(
    g: impl Fn(f64) -> f64,
    dg: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    samples: usize,
) -> (f64, f64) {
    if hi <= lo {
        return (lo, g(lo));
    }
    let step = (hi - lo) / samples as f64;
    let at = |k: usize| if k == samples { hi } else { lo + k as f64 * step };
    let mut best_k = 0;
    let mut best_v = g(lo);
    for k in 1..=samples {
        let v = g(at(k));
        if v > best_v {
            best_k = k;
            best_v = v;
        }
    }
    let (mut a, mut b) = (at(best_k.saturating_sub(1)), at((best_k + 1).min(samples)));
    let (ba, bb) = (a, b);

    let mut c = b - GOLDEN * (b - a);
    let mut d = a + GOLDEN * (b - a);
    let (mut gc, mut gd) = (g(c), g(d));
    while b - a > 1e-12 {
        if gc >= gd {
            b = d;
            d = c;
            gd = gc;
            c = b - GOLDEN * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + GOLDEN * (b - a);
            gd = g(d);
        }
    }
    let mut best = (0.5 * (a + b), g(0.5 * (a + b)));
    for t in [at(best_k), lo, hi] {
        let v = g(t);
        if v > best.1 {
            best = (t, v);
        }
    }

    // Value comparisons cannot resolve a flat maximum below ~1e-8, the
    // derivative sign can.
    if best.0 > ba && best.0 < bb && dg(ba) > 0.0 && dg(bb) < 0.0 {
        let (mut a, mut b) = (ba, bb);
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if dg(mid) > 0.0 {
                a = mid;
            } else {
                b = mid;
            }
        }
        let t = 0.5 * (a + b);
        let v = g(t);
        if v >= best.1 - 1e-14 {
            best = (t, v);
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryMax {
    pub argmax: [f64; 2],
    pub value: f64,
    /// f on the chord piece of ∂Ω (constant, |A_2A_3| = 1).
    pub chord_value: f64,
    /// f at the arc endpoints A_2 and A_3.
    pub arc_endpoint_values: [f64; 2],
}

/// Samples on the arc piece of ∂Ω before refinement.
pub const BOUNDARY_SAMPLES: usize = 10_000;

/// Maximum of f over ∂Ω = chord segment ∪ arc {x² + y² = 1, 0 ≤ θ ≤ 60°}.
pub fn boundary_maximize() -> BoundaryMax {
    let g = |th: f64| f_value(th.cos(), th.sin());
    let dg = |th: f64| {
        let (x, y) = (th.cos(), th.sin());
        let d3 = hypot2(x - A3[0], y - A3[1]);
        let d2 = hypot2(x - A2[0], y - A2[1]);
        let fx = (x - A3[0]) / d3 + (x - A2[0]) / d2;
        let fy = (y - A3[1]) / d3 + (y - A2[1]) / d2;
        -y * fx + x * fy
    };
    let (th, arc_max) = maximize_1d(g, dg, 0.0, FRAC_PI_3, BOUNDARY_SAMPLES);

    // The chord piece: f is |A_2A_3| everywhere on the closed segment.
    let chord_value = (0..=100)
        .map(|k| {
            let t = k as f64 / 100.0;
            f_value(A2[0] + t * (A3[0] - A2[0]), A2[1] + t * (A3[1] - A2[1]))
        })
        .fold(f64::NEG_INFINITY, f64::max);

    let (argmax, value) = if arc_max >= chord_value {
        ([th.cos(), th.sin()], arc_max)
    } else {
        ([A2[0], A2[1]], chord_value)
    };
    BoundaryMax {
        argmax,
        value,
        chord_value,
        arc_endpoint_values: [g(0.0), g(FRAC_PI_3)],
    }
}

/// The circle (x − 1/2)² + (y − b)² = radius², centered on the midnormal of
/// A_1A_2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Arc {
    pub b: f64,
    pub radius: f64,
}

impl Arc {
    pub fn new(b: f64, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite() && b.is_finite()) {
            return Err(Error::invalid("radius", format!("need a positive radius, got {radius}")));
        }
        Ok(Arc { b, radius })
    }

    /// The circle through A_1 and A_2 with center (1/2, b).
    pub fn through_diameter_endpoints(b: f64) -> Self {
        Arc {
            b,
            radius: (0.25 + b * b).sqrt(),
        }
    }

    fn point(&self, phi: f64) -> [f64; 2] {
        [0.5 + self.radius * phi.cos(), self.b + self.radius * phi.sin()]
    }
}

/// Which half-plane of the line A_1A_2 the sub-arc lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Upper,
    Lower,
}

impl Side {
    fn sign(self) -> f64 {
        match self {
            Side::Upper => 1.0,
            Side::Lower => -1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArcMax {
    pub argmax: [f64; 2],
    /// ‖A_1P‖ + ‖A_2P‖ at the argmax.
    pub value: f64,
    /// L = 2(‖A_1P‖² + ‖A_2P‖²) at the argmax.
    pub l_value: f64,
    /// Sub-arc endpoints as points on the circle.
    pub sub_arc: [[f64; 2]; 2],
}

/// Samples used to locate the admissible sub-arc.
const ARC_SAMPLES: usize = 20_000;

/// Maximizes ‖A_1P‖ + ‖A_2P‖ over the part of `arc` inside the lens on the
/// given side of A_1A_2. That part must be a single connected sub-arc.
pub fn arc_chord_sum_max(arc: &Arc, side: Side) -> Result<ArcMax> {
    // ψ measures angle from the side's pole (1/2, b ± r); φ = pole + ψ.
    let pole = side.sign() * FRAC_PI_2;
    let feasible = |psi: f64| {
        let [x, y] = arc.point(pole + psi);
        in_lens(x, y) && side.sign() * y > 0.0
    };
    let n = ARC_SAMPLES;
    let psi_at = |k: usize| -PI + 2.0 * PI * k as f64 / n as f64;
    let mask: Vec<bool> = (0..n).map(|k| feasible(psi_at(k))).collect();

    let starts: Vec<usize> = (0..n).filter(|&k| mask[k] && !mask[(k + n - 1) % n]).collect();
    let (lo, hi) = match starts.len() {
        0 if mask[0] => (-PI, PI),
        0 => return Err(Error::EmptySubArc),
        1 => {
            let s = starts[0];
            let len = (0..n).take_while(|&i| mask[(s + i) % n]).count();
            let first = psi_at(s);
            let last = first + 2.0 * PI * (len - 1) as f64 / n as f64;
            let gap = 2.0 * PI / n as f64;
            (
                refine_edge(feasible, first - gap, first),
                refine_edge(feasible, last + gap, last),
            )
        }
        pieces => return Err(Error::DisconnectedSubArc { pieces }),
    };

    let chord_sum = |p: [f64; 2]| hypot2(p[0], p[1]) + hypot2(p[0] - 1.0, p[1]);
    let g = |psi: f64| chord_sum(arc.point(pole + psi));
    let dg = |psi: f64| {
        let phi = pole + psi;
        let [x, y] = arc.point(phi);
        let d1 = hypot2(x, y);
        let d2 = hypot2(x - 1.0, y);
        let gx = x / d1 + (x - 1.0) / d2;
        let gy = y / d1 + y / d2;
        arc.radius * (-phi.sin() * gx + phi.cos() * gy)
    };
    let (psi, value) = maximize_1d(g, dg, lo, hi, 10_000);
    let argmax = arc.point(pole + psi);
    let l_value = 2.0 * (argmax[0].powi(2) + argmax[1].powi(2) + (argmax[0] - 1.0).powi(2) + argmax[1].powi(2));
    Ok(ArcMax {
        argmax,
        value,
        l_value,
        sub_arc: [arc.point(pole + lo), arc.point(pole + hi)],
    })
}

/// Bisects between an infeasible and a feasible parameter, returning the
/// feasible side of the boundary.
fn refine_edge(feasible: impl Fn(f64) -> bool, mut out: f64, mut inside: f64) -> f64 {
    for _ in 0..100 {
        let mid = 0.5 * (out + inside);
        if mid == out || mid == inside {
            break;
        }
        if feasible(mid) {
            inside = mid;
        } else {
            out = mid;
        }
    }
    inside
}

/// ω of {(0,0), (1,0), (1/2, y1), (1/2, y2)} with |y1 − y2| = 1 and both
/// points in the closed lens.
pub fn midnormal_pair_value(y1: f64, y2: f64) -> Result<f64> {
    if ((y1 - y2).abs() - 1.0).abs() > 1e-12 {
        return Err(Error::invalid("y2", format!("|y1 - y2| must be 1, got {}", (y1 - y2).abs())));
    }
    for (name, y) in [("y1", y1), ("y2", y2)] {
        if y.abs() > A3[1] + REGION_EPS {
            return Err(Error::invalid(name, format!("{y} lies outside the lens")));
        }
    }
    let ps = PointSet::new(
        2,
        vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.5, y1], vec![0.5, y2]],
    )?;
    Ok(functionals(&ps)?.omega)
}

/// Circles through A_1 and A_2 with center height below this keep their
/// upper arc inside the lens.
pub const ARC_CENTER_MAX: f64 = SQRT3 / 6.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArcSweep {
    pub count: usize,
    /// Largest |x − 1/2| over the per-arc maximizers.
    pub max_midnormal_offset: f64,
    /// Center height of the arc attaining it.
    pub worst_b: f64,
}

/// Maximizes the chord sum on `count` random circles through A_1 and A_2,
/// with center heights uniform in [−2, ARC_CENTER_MAX − 1e-3] and alternating
/// upper and (mirrored) lower arcs.
pub fn random_arc_sweep(count: usize, seed: u64) -> Result<ArcSweep> {
    let mut rng = substream(seed, 1);
    let b_max = ARC_CENTER_MAX - 1e-3;
    let mut worst = (0.0f64, 0.0f64);
    for k in 0..count {
        let b = -2.0 + (b_max + 2.0) * rng.random::<f64>();
        let (arc, side) = if k % 2 == 0 {
            (Arc::through_diameter_endpoints(b), Side::Upper)
        } else {
            (Arc::through_diameter_endpoints(-b), Side::Lower)
        };
        let off = (arc_chord_sum_max(&arc, side)?.argmax[0] - 0.5).abs();
        if off >= worst.0 {
            worst = (off, arc.b);
        }
    }
    Ok(ArcSweep {
        count,
        max_midnormal_offset: worst.0,
        worst_b: worst.1,
    })
}

/// Uniform sample from the interior of Ω by rejection from its bounding box.
pub fn random_bow_point<R: Rng + ?Sized>(rng: &mut R) -> (f64, f64) {
    loop {
        let x = 0.5 + 0.5 * rng.random::<f64>();
        let y = A3[1] * rng.random::<f64>();
        if in_bow_interior(x, y) {
            return (x, y);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DerivativeCheck {
    pub points: usize,
    pub gradient_step: f64,
    pub hessian_step: f64,
    pub max_gradient_error: f64,
    pub max_hessian_error: f64,
    pub worst_point: [f64; 2],
}

/// Checks the closed-form partials at `points` random interior points of Ω.
/// The gradient is compared with central differences of `f_value` (step
/// `gradient_step`). Second partials are compared with central differences
/// of the gradient (step `hessian_step`): second differences of f lose
/// ~eps/h² to round-off, too much near A_2 and A_3 where the partials grow
/// like 1/distance.
pub fn derivative_check(
    points: usize,
    seed: u64,
    gradient_step: f64,
    hessian_step: f64,
) -> Result<DerivativeCheck> {
    let mut rng = substream(seed, 0);
    let mut max_g = 0.0f64;
    let mut max_h = 0.0f64;
    let mut worst = ([0.0; 2], 0.0f64);
    for _ in 0..points {
        let (x, y) = random_bow_point(&mut rng);
        let p = probe(x, y)?;
        let h = gradient_step;
        let fx = (f_value(x + h, y) - f_value(x - h, y)) / (2.0 * h);
        let fy = (f_value(x, y + h) - f_value(x, y - h)) / (2.0 * h);
        let k = hessian_step;
        let (xp, xm) = (probe(x + k, y)?, probe(x - k, y)?);
        let (yp, ym) = (probe(x, y + k)?, probe(x, y - k)?);
        let fxx = (xp.fx - xm.fx) / (2.0 * k);
        let fyy = (yp.fy - ym.fy) / (2.0 * k);
        let fxy = 0.5 * ((xp.fy - xm.fy) + (yp.fx - ym.fx)) / (2.0 * k);
        let eg = (p.fx - fx).abs().max((p.fy - fy).abs());
        let eh = (p.r - fxx).abs().max((p.t - fyy).abs()).max((p.s - fxy).abs());
        max_g = max_g.max(eg);
        max_h = max_h.max(eh);
        if eg.max(eh) > worst.1 {
            worst = ([x, y], eg.max(eh));
        }
    }
    Ok(DerivativeCheck {
        points,
        gradient_step,
        hessian_step,
        max_gradient_error: max_g,
        max_hessian_error: max_h,
        worst_point: worst.0,
    })
}
