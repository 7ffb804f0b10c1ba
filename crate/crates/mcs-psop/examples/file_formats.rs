//! The text and JSON file formats the command line speaks, round-tripped
//! through the parsers and serializers.
//!
//! Run with: cargo run --example file_formats

use mcs_psop::cli::{graph_to_json, graph_to_text, order_to_text, parse_graph, parse_order};

fn main() -> mcs_psop::Result<()> {
    let graph_text = "\
# a 5-vertex chordal graph plus an isolated vertex
vertex lonely
a b
a c
b c
b d
c d
c e
";
    let g = parse_graph(graph_text)?;
    println!(
        "parsed {} vertices, {} edges, {} components",
        g.vertex_count(),
        g.edge_count(),
        g.connected_components().len()
    );
    print!("canonical text form:\n{}", graph_to_text(&g));
    print!("json form:\n{}", graph_to_json(&g));

    let r = parse_order("e < a\na < d\n", &g)?;
    print!("order closure:\n{}", order_to_text(&r));
    Ok(())
}
