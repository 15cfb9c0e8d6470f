use extremal_sites::functionals;
use extremal_sites::parallel::with_threads;
use extremal_sites::search::{
    grid_oracle_2_4, optimize_omega, run_start, SearchConfig, SearchResult,
};

fn run(cfg: &SearchConfig, threads: usize) -> SearchResult {
    with_threads(Some(threads), || optimize_omega(cfg)).unwrap()
}

#[test]
fn reported_best_is_sound() {
    for (m, n) in [(2, 4), (2, 6), (3, 5), (4, 4)] {
        let r = optimize_omega(&SearchConfig::new(m, n).with_starts(4).with_seed(3)).unwrap();
        let s = functionals(&r.best).unwrap();
        assert_eq!(s.omega, r.best_omega, "({m},{n})");
        assert!((s.dmax - 1.0).abs() < 1e-12);
        assert_eq!(r.per_start_bests.len(), 4);
        let top = r.per_start_bests.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        assert_eq!(top, r.best_omega);
    }
}

#[test]
fn independent_of_thread_count() {
    let cfg = SearchConfig::new(2, 5).with_starts(12).with_seed(77);
    let a = run(&cfg, 1);
    let b = run(&cfg, 3);
    let c = run(&cfg, 8);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&c).unwrap());
}

#[test]
fn starts_are_independent_substreams() {
    let cfg = SearchConfig::new(2, 4).with_seed(11);
    // start k is the same whether or not the other starts run
    let alone = run_start(&cfg, 5).unwrap();
    let r = optimize_omega(&cfg.clone().with_starts(6)).unwrap();
    assert_eq!(r.per_start_bests[5], alone.omega);
    let other = optimize_omega(&cfg.with_seed(12).with_starts(6)).unwrap();
    assert_ne!(r.per_start_bests, other.per_start_bests);
}

#[test]
fn oracle_is_deterministic_and_sound() {
    let a = with_threads(Some(1), || grid_oracle_2_4(0.03)).unwrap();
    let b = with_threads(Some(6), || grid_oracle_2_4(0.03)).unwrap();
    assert_eq!(a, b);
    let s = functionals(&a.best_config).unwrap();
    assert!((s.omega - a.best_omega).abs() < 1e-12);
}
