//! Clique graphs: maximal cliques as nodes, minimal-separator intersections
//! as labeled weighted edges, label deletion, and the weight-level peeling
//! the solver is built on.
//!
//! Run with: cargo run --example clique_graph

use mcs_psop::testkit::g1;
use mcs_psop::{build_clique_graph, maximal_cliques};

fn main() -> mcs_psop::Result<()> {
    let g = g1();
    for clique in maximal_cliques(&g)? {
        println!("maximal clique: {}", clique.join(" "));
    }

    let cg = build_clique_graph(&g)?;
    for e in cg.edges() {
        println!(
            "edge {:?} -- {:?}  label {:?}  weight {}",
            cg.clique_names(e.a),
            cg.clique_names(e.b),
            cg.label_names(e),
            e.weight
        );
    }

    println!("weight levels: {:?}", cg.weight_levels().as_slice());
    for i in 0..=cg.weight_levels().t() {
        let level = cg.level_graph(i)?;
        println!(
            "level {i}: {} edges, components {:?}",
            level.edge_count(),
            level.components()
        );
    }

    // Deleting all edges with one label can split the graph.
    let split = cg.ominus(&["c"]);
    println!(
        "after deleting label {{c}}: {} edges, {} components",
        split.edge_count(),
        split.components().len()
    );

    println!("unit partition: {:?}", cg.min_weight_components());
    Ok(())
}
