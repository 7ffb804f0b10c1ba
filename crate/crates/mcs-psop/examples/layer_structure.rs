//! Layer structures: units from min-weight deletion, layers by distance from
//! a rooted clique, parents and bags, per-vertex entry units, and the
//! structural property validator.
//!
//! Run with: cargo run --example layer_structure

use mcs_psop::testkit::{random_chordal, s3};
use mcs_psop::{build_clique_graph, build_layer_structure};

fn main() -> mcs_psop::Result<()> {
    let g = s3();
    let cg = build_clique_graph(&g)?;
    let root = cg.node_by_vertices(&["c", "x"]).expect("a maximal clique");
    let ls = build_layer_structure(&cg, root)?;

    for (layer, units) in ls.layers().into_iter().enumerate() {
        for u in units {
            let cliques: Vec<String> = ls
                .unit(u)
                .cliques()
                .iter()
                .map(|&n| ls.clique_vertex_names(n).join(""))
                .collect();
            match ls.parent_of(u) {
                None => println!("layer {layer}: U{u} (root) cliques [{}]", cliques.join(" ")),
                Some(p) => println!("layer {layer}: U{u} parent U{p} cliques [{}]", cliques.join(" ")),
            }
        }
    }
    println!("bags: {:?}", ls.bags());
    println!("unit of vertex 'z': U{}", ls.unit_of_vertex("z")?);
    println!("descendants of the root: {:?}", ls.descendants(ls.root()));

    // The validator checks every structural property and reports each one.
    let report = ls.validate_properties();
    for check in &report.checks {
        println!("{:>4} {}", if check.passed { "ok" } else { "FAIL" }, check.name);
    }

    // The same machinery at a larger scale.
    let big = random_chordal(25, 8, 42)?;
    let bcg = build_clique_graph(&big)?;
    let bls = build_layer_structure(&bcg, 0)?;
    println!(
        "random graph: {} cliques, {} units, {} layers, all properties pass: {}",
        bcg.node_count(),
        bls.unit_count(),
        bls.layers().len(),
        bls.validate_properties().all_passed()
    );
    Ok(())
}
