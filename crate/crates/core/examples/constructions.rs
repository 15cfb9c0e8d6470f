// Known extremal configurations and the table of closed-form values.
//
// cargo run --example constructions

use extremal_sites::constructions::{
    apex_distance, extremal_quadrilateral, pairs, reference_values, regular_simplex, thm33_bound,
    thm33_configuration,
};
use extremal_sites::functionals;
use extremal_sites::geom::congruence_error;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=5 {
        let s = regular_simplex(n)?;
        println!("regular {n}-simplex: omega = {} = C({},2)", functionals(&s)?.omega, n + 1);
        assert!((functionals(&s)?.omega - pairs(n + 1)).abs() < 1e-10);
    }

    let q = extremal_quadrilateral();
    println!("extremal quadrilateral omega = {:.10}", functionals(&q)?.omega);

    println!("\n n  apex distance  simplex+cap omega");
    for n in 2..=8 {
        let c = thm33_configuration(n)?;
        let w = functionals(&c)?.omega;
        assert!((w - thm33_bound(n)?).abs() < 1e-10);
        println!("{n:2}  {:.10}   {w:.10}", apex_distance(n));
    }
    // in the plane the simplex-plus-cap set is the extremal quadrilateral
    println!(
        "n=2 congruence error vs quadrilateral: {:.1e}",
        congruence_error(&thm33_configuration(2)?, &q)?
    );

    println!();
    for (m, n) in [(2, 3), (2, 4), (2, 5), (3, 5), (4, 6)] {
        for r in reference_values(m, n) {
            println!("{:<14} {:>14.10}  {:?}  {}", r.name, r.value, r.kind, r.formula);
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
