// Brute-force lower estimate of sup ω(2,4) on a lens grid.
//
// cargo run --release --example grid_oracle

use extremal_sites::constructions::{extremal_quadrilateral, sup_omega_2_4};
use extremal_sites::geom::congruence_error;
use extremal_sites::search::grid_oracle_2_4;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for h in [0.05, 0.04, 0.03] {
        let r = grid_oracle_2_4(h)?;
        let cong = congruence_error(&r.best_config, &extremal_quadrilateral())?;
        println!(
            "h={h}: {} nodes, best {:.8} (sup - best = {:.2e}), distance to extremal shape {:.3}",
            r.grid_points,
            r.best_omega,
            sup_omega_2_4() - r.best_omega,
            cong
        );
    }
    match grid_oracle_2_4(0.001) {
        Err(e) => println!("h=0.001 refused: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
