//! The headline operation: decide whether a chordal graph has a maximum
//! cardinality search ordering extending a partial order, with a witness and
//! the Prim certificate it was rebuilt from.
//!
//! Run with: cargo run --example solve_psop

use mcs_psop::testkit::g1;
use mcs_psop::{dp_solve, solve, vertex_order, verify_solution};

fn main() -> mcs_psop::Result<()> {
    let g = g1();

    // Feasible: e (only in the clique {c,e}) must come before a.
    let r = vertex_order(&[("e", "a")])?;
    let answer = solve(&g, &r)?;
    println!("constraints e<a: {}", if answer.decision { "YES" } else { "NO" });
    let witness = answer.witness.expect("yes answers carry a witness");
    println!("  witness: {:?}", witness.as_slice());
    println!("  witness verifies: {}", verify_solution(&g, &r, &witness)?);
    let pi = answer.certificate.expect("connected yes answers carry one");
    println!("  built from the clique ordering: {:?}", pi.cliques());

    // Infeasible: forcing both neighbors of the path center around it.
    let g3 = mcs_psop::Graph::from_edges(&[("a", "b"), ("b", "c")])?;
    let bad = vertex_order(&[("c", "a"), ("a", "b")])?;
    println!(
        "path with c<a<b: {}",
        if solve(&g3, &bad)?.decision { "YES" } else { "NO" }
    );

    // The underlying table: one bit per (level, component, start clique).
    let table = dp_solve(&g, &r)?;
    println!(
        "table: {} weight levels, {} entries, feasible start cliques {:?}",
        table.t(),
        table.entry_count(),
        table.yes_roots()
    );
    Ok(())
}
