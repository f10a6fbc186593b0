//! Solves the Hoffman–Singleton instances with a time budget in seconds
//! (first argument, default 60): `cargo run --release --example hoffman_singleton`.

use std::time::Duration;

use mvis::graph::build_hoffman_singleton;
use mvis::solver::{
    count_dissociation_sets_of_size, max_dissociation, max_induced_matching, Limits, SolveOptions,
};

fn main() {
    let secs: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(60);
    let hs = build_hoffman_singleton().unwrap();
    let options = SolveOptions {
        limits: Limits::new(None, Some(Duration::from_secs(secs))),
        ..Default::default()
    };
    let r = max_dissociation(&hs, options);
    println!(
        "dissociation: {} proven={} nodes={} {:?}",
        r.optimum, r.proven, r.nodes_explored, r.elapsed
    );
    let r = max_induced_matching(&hs, options);
    println!(
        "induced matching: {} proven={} nodes={} {:?}",
        r.optimum, r.proven, r.nodes_explored, r.elapsed
    );
    let t = std::time::Instant::now();
    let c = count_dissociation_sets_of_size(
        &hs,
        20,
        Limits::new(None, Some(Duration::from_secs(secs))),
    );
    println!("size-20 sets: {:?} {:?}", c, t.elapsed());
}
