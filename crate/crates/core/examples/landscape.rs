// The planar landscape f(A_4) = |A_3A_4| + |A_2A_4| over the bow region:
// derivatives, convexity, the boundary maximum, and the circular-arc
// reduction used when the diameter pair is pinned.
//
// cargo run --release --example landscape

use extremal_sites::landscape::{
    arc_chord_sum_max, boundary_maximize, curvature_positive_on_grid, derivative_check,
    midnormal_pair_value, probe, random_arc_sweep, stationary_scan, Arc, Side,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = probe(0.9, 0.3)?;
    println!(
        "f(0.9, 0.3) = {:.6}, grad = ({:.4}, {:.4}), rt - s^2 = {:.4}",
        p.f, p.fx, p.fy, p.curvature_indicator
    );

    let d = derivative_check(200, 1, 1e-5, 1e-6)?;
    println!(
        "finite differences at {} points: gradient err {:.1e}, hessian err {:.1e}",
        d.points, d.max_gradient_error, d.max_hessian_error
    );

    let c = curvature_positive_on_grid(0.01, 1e-3)?;
    let s = stationary_scan(0.01, 1e-3)?;
    println!(
        "grid 0.01: min rt-s^2 = {:.3e} over {} nodes, min |grad f| = {:.3}",
        c.min_curvature_indicator, c.points, s.min_gradient_norm
    );

    let b = boundary_maximize();
    println!(
        "boundary max {:.10} at ({:.8}, {:.8}); chord gives {:.6}",
        b.value, b.argmax[0], b.argmax[1], b.chord_value
    );

    // circles through A_1 and A_2 peak on the midnormal x = 1/2
    for bc in [-1.0, -0.2, 0.1] {
        let m = arc_chord_sum_max(&Arc::through_diameter_endpoints(bc), Side::Upper)?;
        println!("arc b={bc:5.2}: max {:.8} at x = {:.10}", m.value, m.argmax[0]);
    }
    let sweep = random_arc_sweep(50, 3)?;
    println!("50 random arcs: max |x - 1/2| = {:.1e}", sweep.max_midnormal_offset);

    // an off-center circle does not
    let m = arc_chord_sum_max(&Arc::new(-0.5, 1.2)?, Side::Upper)?;
    println!("off-center arc: argmax x = {:.6}", m.argmax[0]);

    let w = midnormal_pair_value(0.5, -0.5)?;
    println!("midnormal pair (1/2, ±1/2): omega = {w:.8}");
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
