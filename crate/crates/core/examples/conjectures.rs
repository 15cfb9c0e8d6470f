// Numeric probes of two open claims about (m, n) with n > m + 1.
//
// cargo run --release --example conjectures

use extremal_sites::search::{conjecture_41_report, conjecture_42_report, SearchConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SearchConfig::new(2, 5).with_starts(6).with_seed(1);
    for (m, n) in [(2, 4), (2, 5), (3, 5)] {
        let run = conjecture_41_report(m, n, &cfg)?;
        let r = &run.report;
        println!("{:<34} gap {:>+.6}  {}", r.claim, r.gap.unwrap_or(f64::NAN), r.verdict);
    }

    for n in [2, 3] {
        let cfg = SearchConfig::new(n, n + 2).with_starts(6).with_seed(1);
        let run = conjecture_42_report(n, &cfg)?;
        let r = &run.report;
        println!(
            "(n={n}) best {:.8} vs construction {:.8}: excess {:+.3e}  {}",
            r.lhs.unwrap_or(f64::NAN),
            r.rhs.unwrap_or(f64::NAN),
            r.gap.unwrap_or(f64::NAN),
            r.verdict
        );
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
