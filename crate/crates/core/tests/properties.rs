use extremal_sites::constructions::pairs;
use extremal_sites::geom::normalize_diameter;
use extremal_sites::simplex::{
    barycentric_point, check_lemma, point_vertex_distance_sum, vertex_edge_sum_bound, Simplex,
};
use extremal_sites::{functionals, PointSet};
use proptest::prelude::*;

fn point_set(dim: usize, n: std::ops::Range<usize>) -> impl Strategy<Value = PointSet> {
    prop::collection::vec(prop::collection::vec(-10.0f64..10.0, dim), n)
        .prop_filter_map("degenerate", move |pts| {
            let ps = PointSet::new(dim, pts).ok()?;
            let s = functionals(&ps).ok()?;
            (s.dmin > 1e-3).then_some(ps)
        })
}

fn rotation_2d(theta: f64) -> impl Fn(&[f64]) -> Vec<f64> {
    let (s, c) = theta.sin_cos();
    move |p| vec![c * p[0] - s * p[1], s * p[0] + c * p[1]]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn omega_is_similarity_invariant(
        ps in point_set(2, 3..9),
        theta in 0.0f64..std::f64::consts::TAU,
        scale in 0.01f64..100.0,
        shift in prop::array::uniform2(-50.0f64..50.0),
    ) {
        let rot = rotation_2d(theta);
        let moved = ps
            .map_points(|p| {
                let q = rot(p);
                vec![scale * q[0] + shift[0], scale * q[1] + shift[1]]
            })
            .unwrap();
        let a = functionals(&ps).unwrap();
        let b = functionals(&moved).unwrap();
        prop_assert!((a.omega - b.omega).abs() <= 1e-12 * a.omega.max(1.0) * 10.0);
        prop_assert!((a.mu.unwrap() - b.mu.unwrap()).abs() <= 1e-10 * a.mu.unwrap());
    }

    #[test]
    fn omega_and_mu_bounds(ps in point_set(3, 2..10)) {
        let s = functionals(&ps).unwrap();
        let c = pairs(ps.len());
        prop_assert!(s.omega >= 1.0 - 1e-12);
        prop_assert!(s.omega <= c + 1e-9);
        prop_assert!(s.mu.unwrap() >= c - 1e-9);
    }

    #[test]
    fn normalization_gives_unit_diameter(ps in point_set(4, 2..8)) {
        let n = normalize_diameter(&ps).unwrap();
        let s = functionals(&n).unwrap();
        prop_assert!((s.dmax - 1.0).abs() < 1e-12);
        prop_assert!((s.omega - functionals(&ps).unwrap().omega).abs() < 1e-10);
    }

    #[test]
    fn vertex_sum_bound_holds_inside_simplices(
        verts in prop::collection::vec(prop::collection::vec(-5.0f64..5.0, 3), 4),
        w in prop::collection::vec(0.0f64..1.0, 4),
    ) {
        let Ok(s) = Simplex::new(verts) else { return Ok(()) };
        let total: f64 = w.iter().sum();
        prop_assume!(total > 1e-6);
        let w: Vec<f64> = w.iter().map(|x| x / total).collect();
        let p = barycentric_point(&s, &w).unwrap();
        let c = check_lemma(&s, &p, 1e-9);
        prop_assert!(c.holds, "slack {}", c.slack);
        prop_assert!(point_vertex_distance_sum(&s, &p) <= vertex_edge_sum_bound(&s) + 1e-9);
    }

    #[test]
    fn bound_ignores_vertex_order(
        verts in prop::collection::vec(prop::collection::vec(-5.0f64..5.0, 2), 3),
        k in 0usize..3,
    ) {
        let Ok(s) = Simplex::new(verts.clone()) else { return Ok(()) };
        let mut rotated = verts;
        rotated.rotate_left(k);
        rotated.swap(0, 1);
        let t = Simplex::new(rotated).unwrap();
        prop_assert!((vertex_edge_sum_bound(&s) - vertex_edge_sum_bound(&t)).abs() < 1e-12);
    }
}
