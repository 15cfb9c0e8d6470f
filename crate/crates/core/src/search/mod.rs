//! Numerical search for ω-maximizing configurations.

mod conjecture;
mod optimize;
mod oracle;

pub use conjecture::{
    conjecture_41_report, conjecture_42_report, ConjectureReport, ConjectureRun, Verdict, CAVEAT,
    VERDICT_TOL,
};
pub use optimize::{
    optimize_omega, run_start, SearchConfig, SearchResult, StartOutcome, DEGENERATE_DIAMETER,
};
pub use oracle::{grid_oracle_2_4, lens_grid, OracleResult, MAX_PAIRS, MAX_RESOLUTION};
