//! Random chordal instances end to end: generate by subtree intersection,
//! draw a random partial order, solve, and cross-check small cases against
//! the exhaustive oracle.
//!
//! Run with: cargo run --example random_instances

use mcs_psop::testkit::{oracle_psop, random_chordal, random_order};
use mcs_psop::{solve, verify_solution};

fn main() -> mcs_psop::Result<()> {
    let mut yes = 0;
    for seed in 0..20 {
        let g = random_chordal(8, 3, seed)?;
        let r = random_order(&g, seed ^ 0xF00D);
        let answer = solve(&g, &r)?;
        let want = oracle_psop(&g, &r)?;
        assert_eq!(answer.decision, want, "solver disagrees with the oracle");
        if answer.decision {
            yes += 1;
            assert!(verify_solution(&g, &r, answer.witness.as_ref().unwrap())?);
        }
        println!(
            "seed {seed:>2}: {} vertices, {} constraint pairs -> {}",
            g.vertex_count(),
            r.pair_count(),
            if answer.decision { "YES" } else { "NO" }
        );
    }
    println!("{yes}/20 feasible, all decisions matched the oracle");

    let big = random_chordal(120, 24, 7)?;
    let r = random_order(&big, 99);
    let answer = solve(&big, &r)?;
    println!(
        "120-vertex instance: {} (witness verified: {})",
        if answer.decision { "YES" } else { "NO" },
        answer
            .witness
            .map(|w| verify_solution(&big, &r, &w).unwrap())
            .unwrap_or(false)
    );
    Ok(())
}
