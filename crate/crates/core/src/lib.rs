//! Diameter-normalized distance sums of finite point sets.
//!
//! For S ⊂ E^m with n points, ω(S) = σ(S)/D(S) is the sum of pairwise
//! distances divided by the diameter, and μ(S) = σ(S)/d(S) divides by the
//! minimum separation instead. The crate provides
//!
//! * [`geom`]: point sets, the functionals and small planar predicates;
//! * [`simplex`]: the vertex-distance-sum bound for points in a simplex;
//! * [`constructions`]: regular simplices, the extremal planar quadrilateral,
//!   the simplex-plus-cap configuration and known closed forms;
//! * [`landscape`]: the analytic (2,4) objective, its derivatives and scans;
//! * [`search`]: multi-start pattern search, a brute-force (2,4) grid oracle
//!   and conjecture reports;
//! * [`cli`]: the `extremal-sites` command-line driver.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod geom;
pub mod landscape;
pub mod parallel;
pub mod search;
pub mod simplex;

pub use error::{Error, Result};
pub use geom::{functionals, DistanceSummary, PointSet};
