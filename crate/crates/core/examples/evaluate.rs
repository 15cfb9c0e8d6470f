// Distance functionals of a small planar point set, with a JSON round trip.
//
// cargo run --example evaluate

use extremal_sites::geom::{distance_matrix, normalize_diameter};
use extremal_sites::{functionals, PointSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // a unit square: four sides of length 1, two diagonals of length √2
    let square = PointSet::new(
        2,
        vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]],
    )?;
    let s = functionals(&square)?;
    println!("square: sigma={:.6} D={:.6} d={:.6}", s.sigma, s.dmax, s.dmin);
    println!("        omega={:.6} mu={:?}", s.omega, s.mu);
    assert!((s.omega - (4.0 + 2.0 * 2f64.sqrt()) / 2f64.sqrt()).abs() < 1e-12);

    for (i, j, d) in distance_matrix(&square).pairs() {
        println!("  |A{}A{}| = {d:.6}", i + 1, j + 1);
    }

    // ω is scale invariant; normalizing to D = 1 leaves it unchanged
    let unit = normalize_diameter(&square)?;
    let t = functionals(&unit)?;
    assert!((t.dmax - 1.0).abs() < 1e-12);
    assert!((t.omega - s.omega).abs() < 1e-12);

    let json = square.to_json();
    let back = PointSet::from_json(&json)?;
    assert_eq!(back, square);
    println!("{}", serde_json::to_string(&s)?);

    // malformed input is rejected with the offending field named
    let err = PointSet::from_json(r#"{"dim": 2, "points": [[0, 0], [1]]}"#).unwrap_err();
    println!("rejected: {err}");
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
