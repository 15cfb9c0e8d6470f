//! Explicit extremal configurations and the known closed-form values.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::PointSet;

/// C(n, 2) as a float.
pub fn pairs(n: usize) -> f64 {
    (n * n.saturating_sub(1) / 2) as f64
}

/// Unit-edge regular n-simplex in E^n, built by recursive lifting: vertex k
/// sits above the centroid of vertices 0..k along axis k-1 at the height
/// that keeps every new edge at length 1. Vertex 0 is the origin.
pub fn regular_simplex(n: usize) -> Result<PointSet> {
    if n == 0 {
        return Err(Error::invalid("n", "regular simplex needs n >= 1"));
    }
    let mut verts: Vec<Vec<f64>> = vec![vec![0.0; n]];
    for k in 1..=n {
        let mut c = vec![0.0; n];
        for v in &verts {
            for (ci, vi) in c.iter_mut().zip(v) {
                *ci += vi;
            }
        }
        c.iter_mut().for_each(|ci| *ci /= k as f64);
        // circumradius of the existing (k-1)-simplex is sqrt((k-1)/(2k))
        c[k - 1] = ((k + 1) as f64 / (2.0 * k as f64)).sqrt();
        verts.push(c);
    }
    PointSet::new(n, verts)
}

/// Height of the unit regular n-simplex over a facet: sqrt((n+1)/(2n)).
pub fn simplex_height(n: usize) -> f64 {
    ((n + 1) as f64 / (2.0 * n as f64)).sqrt()
}

/// Circumradius of a facet of the unit regular n-simplex: sqrt((n-1)/(2n)).
pub fn facet_circumradius(n: usize) -> f64 {
    ((n - 1) as f64 / (2.0 * n as f64)).sqrt()
}

/// Closed-form distance from the cap pole to each of the other facet
/// vertices: sqrt(2(1 - sqrt((n+1)/(2n)))).
pub fn apex_distance(n: usize) -> f64 {
    (2.0 * (1.0 - simplex_height(n))).sqrt()
}

fn require_at_least_two(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::invalid("n", format!("need n >= 2, got {n}")));
    }
    Ok(())
}

/// The unit regular n-simplex A_1..A_{n+1} plus the pole A_{n+2} of the
/// smaller spherical cap cut from the unit sphere about A_1 by the opposite
/// facet: the point at distance 1 from A_1 on the ray through that facet's
/// centroid.
pub fn thm33_configuration(n: usize) -> Result<PointSet> {
    require_at_least_two(n)?;
    let mut pts = regular_simplex(n)?.into_points();
    let a1 = pts[0].clone();
    let mut g = vec![0.0; n];
    for v in &pts[1..] {
        for (gi, vi) in g.iter_mut().zip(v) {
            *gi += vi / n as f64;
        }
    }
    let dir: Vec<f64> = g.iter().zip(&a1).map(|(gi, ai)| gi - ai).collect();
    let len = dir.iter().map(|d| d * d).sum::<f64>().sqrt();
    pts.push(a1.iter().zip(&dir).map(|(a, d)| a + d / len).collect());
    PointSet::new(n, pts)
}

/// C(n+1, 2) + 1 + n·sqrt(2(1 - sqrt((n+1)/(2n)))).
pub fn thm33_bound(n: usize) -> Result<f64> {
    require_at_least_two(n)?;
    Ok(pairs(n + 1) + 1.0 + n as f64 * apex_distance(n))
}

/// 4 + 2·sqrt(2 - sqrt 3).
pub fn sup_omega_2_4() -> f64 {
    4.0 + 2.0 * (2.0 - 3f64.sqrt()).sqrt()
}

/// Unit equilateral triangle (0,0), (1,0), (1/2, √3/2) plus the midpoint of
/// the unit arc about the origin that joins (1,0) to (1/2, √3/2).
pub fn extremal_quadrilateral() -> PointSet {
    let r3 = 3f64.sqrt();
    let (a2, a3) = (0.0f64, std::f64::consts::FRAC_PI_3);
    let half = 0.5 * (a2 + a3);
    PointSet::new(
        2,
        vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![0.5, r3 / 2.0],
            vec![half.cos(), half.sin()],
        ],
    )
    .expect("valid construction")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValueKind {
    ExactSupremum,
    LowerBound,
    ExactInfimum,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReferenceValue {
    pub name: String,
    pub m: usize,
    pub n: usize,
    pub value: f64,
    pub kind: ValueKind,
    pub formula: String,
}

/// inf μ(k, k+2) = C(k+2, 2) - 1 + 2·sqrt((k+1)/(2k)).
pub fn inf_mu_simplex_plus_two(k: usize) -> Result<f64> {
    require_at_least_two(k)?;
    Ok(pairs(k + 2) - 1.0 + 2.0 * simplex_height(k))
}

/// Every known closed form for (m, n): suprema of ω, lower bounds on them,
/// and infima of μ. Empty when none is known.
pub fn reference_values(m: usize, n: usize) -> Vec<ReferenceValue> {
    let mut out = Vec::new();
    let mut push = |name: String, value: f64, kind: ValueKind, formula: String| {
        out.push(ReferenceValue {
            name,
            m,
            n,
            value,
            kind,
            formula,
        })
    };
    if m == 0 || n < 2 {
        return out;
    }
    if n == m + 1 {
        push(
            format!("sup_omega_{m}_{n}"),
            pairs(n),
            ValueKind::ExactSupremum,
            format!("C({n},2)"),
        );
        push(
            format!("inf_mu_{m}_{n}"),
            pairs(n),
            ValueKind::ExactInfimum,
            format!("C({n},2)"),
        );
    }
    if n == m + 2 && m >= 2 {
        if m == 2 {
            push(
                "sup_omega_2_4".into(),
                sup_omega_2_4(),
                ValueKind::ExactSupremum,
                "4 + 2*sqrt(2 - sqrt(3))".into(),
            );
        } else {
            push(
                format!("sup_omega_{m}_{n}"),
                thm33_bound(m).expect("m >= 2"),
                ValueKind::LowerBound,
                format!("C({},2) + 1 + {m}*sqrt(2*(1 - sqrt({}/{})))", m + 1, m + 1, 2 * m),
            );
        }
        push(
            format!("inf_mu_{m}_{n}"),
            inf_mu_simplex_plus_two(m).expect("m >= 2"),
            ValueKind::ExactInfimum,
            format!("C({n},2) - 1 + 2*sqrt({}/{})", m + 1, 2 * m),
        );
    }
    if (m, n) == (2, 5) {
        push(
            "inf_mu_2_5".into(),
            9.0 + 2.0 * 3f64.sqrt(),
            ValueKind::ExactInfimum,
            "9 + 2*sqrt(3)".into(),
        );
    }
    out
}

/// Closed-form inf μ(m, n) if one is known.
pub fn known_inf_mu(m: usize, n: usize) -> Option<f64> {
    reference_values(m, n)
        .into_iter()
        .find(|r| r.kind == ValueKind::ExactInfimum)
        .map(|r| r.value)
}
