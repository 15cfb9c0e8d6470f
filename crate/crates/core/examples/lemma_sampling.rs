// Random simplices against the vertex edge-sum bound: for P in a simplex,
// the sum of distances from P to the vertices is at most the largest sum of
// edges meeting at one vertex.
//
// cargo run --release --example lemma_sampling

use extremal_sites::simplex::{
    barycentric_point, check_lemma, sample_lemma, Simplex, LEMMA_TOL,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s = Simplex::new(vec![vec![0.0, 0.0], vec![3.0, 0.0], vec![0.0, 4.0]])?;
    println!("3-4-5 triangle: volume {}, bound vertex {}", s.volume(), s.bound_vertex());
    for w in [[1.0, 0.0, 0.0], [0.2, 0.3, 0.5], [0.0, 0.5, 0.5]] {
        let p = barycentric_point(&s, &w)?;
        let c = check_lemma(&s, &p, LEMMA_TOL);
        println!("  P={p:?}: {:.4} <= {:.4} (slack {:.4})", c.lhs, c.rhs, c.slack);
        assert!(c.holds);
    }

    for dim in 2..=4 {
        let r = sample_lemma(dim, 200, 50, 7)?;
        println!(
            "dim {dim}: {} simplices x {} points, min slack {:.3e}, vertex equality error {:.1e}",
            r.count, r.points_per_simplex, r.min_slack, r.max_vertex_equality_error
        );
        assert!(r.passes());
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
