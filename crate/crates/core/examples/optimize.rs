// Multi-start pattern search for the largest ω of n points in E^m.
//
// cargo run --release --example optimize

use extremal_sites::constructions::{reference_values, ValueKind};
use extremal_sites::functionals;
use extremal_sites::parallel::with_threads;
use extremal_sites::search::{optimize_omega, SearchConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (m, n) in [(2, 3), (2, 4), (3, 4), (2, 5)] {
        let cfg = SearchConfig::new(m, n).with_starts(8).with_seed(42);
        let r = optimize_omega(&cfg)?;
        let known = reference_values(m, n)
            .into_iter()
            .find(|v| v.kind == ValueKind::ExactSupremum);
        match known {
            Some(k) => println!(
                "({m},{n}): best {:.10}  known sup {:.10}  gap {:.1e}",
                r.best_omega,
                k.value,
                k.value - r.best_omega
            ),
            None => println!("({m},{n}): best {:.10}", r.best_omega),
        }
        assert_eq!(functionals(&r.best)?.omega, r.best_omega);
    }

    // the pool size does not change the answer
    let cfg = SearchConfig::new(2, 4).with_starts(6).with_seed(5);
    let one = with_threads(Some(1), || optimize_omega(&cfg))?;
    let four = with_threads(Some(4), || optimize_omega(&cfg))?;
    assert_eq!(one, four);
    println!("1 thread and 4 threads agree: {}", one.best_omega);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
