//! DOT renderings: the clique graph with labeled edges, and the layer
//! structure with units as clusters. Pipe either block into `dot -Tsvg`.
//!
//! Run with: cargo run --example dot_export

use mcs_psop::cli::{dot_clique_graph, dot_layers};
use mcs_psop::testkit::g1;
use mcs_psop::{build_clique_graph, build_layer_structure};

fn main() -> mcs_psop::Result<()> {
    let g = g1();
    let cg = build_clique_graph(&g)?;
    print!("{}", dot_clique_graph(&cg));

    let root = cg.node_by_vertices(&["a", "b", "c"]).expect("a maximal clique");
    let ls = build_layer_structure(&cg, root)?;
    print!("{}", dot_layers(&ls));
    Ok(())
}
