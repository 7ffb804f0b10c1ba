//! The three search paradigms side by side: maximum cardinality search on
//! the graph, Prim search on its clique graph, generic search from a chosen
//! start, plus verification and exhaustive tie-break enumeration.
//!
//! Run with: cargo run --example search_paradigms

use mcs_psop::testkit::g1;
use mcs_psop::{
    build_clique_graph, enumerate_orderings, generic_search, mcs, prim_search, verify_ordering,
    verify_prim_ordering, Paradigm, SearchPolicy,
};

fn main() -> mcs_psop::Result<()> {
    let g = g1();
    let policy = SearchPolicy::DeterministicLex;

    let sigma = mcs(&g, &policy)?;
    println!("mcs ordering:      {:?}", sigma.as_slice());
    println!(
        "  verifies:        {}",
        verify_ordering(&g, Paradigm::Mcs, &sigma)?
    );

    let tau = generic_search(&g, "c", &policy)?;
    println!("generic from c:    {:?}", tau.as_slice());

    let seeded = mcs(&g, &SearchPolicy::SeededRandom { seed: 7 })?;
    println!("mcs (seeded rng):  {:?}", seeded.as_slice());

    let cg = build_clique_graph(&g)?;
    let start = cg.node_by_vertices(&["c", "e"]).expect("a maximal clique");
    let pi = prim_search(&cg, start, &policy)?;
    println!("prim from {{c,e}}:   {:?}", pi.cliques());
    println!("  verifies:        {}", verify_prim_ordering(&cg, &pi)?);

    // Every ordering the paradigm can produce, branching over all ties.
    let all = enumerate_orderings(&g, Paradigm::Mcs, 9)?;
    println!("distinct mcs orderings of the 5-vertex fixture: {}", all.len());
    Ok(())
}
