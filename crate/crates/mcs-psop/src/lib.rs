//! Partial search orders for maximum cardinality search on chordal graphs.
//!
//! Given a chordal graph and a partial order over its vertices, this crate
//! decides whether some MCS ordering of the graph extends the order, and if
//! so returns a witness ordering that re-verifies against the MCS selection
//! rule. The machinery is reusable on its own: clique graphs with labeled
//! separator edges, layer structures with units/layers/bags, Prim and
//! generic search, exhaustive tie-break enumeration, and brute-force oracles
//! for cross-checking.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability, and the `mcs-psop` binary for the file-based command line.

#![forbid(unsafe_code)]

pub mod cli;
pub mod clique_graph;
mod dsu;
pub mod error;
pub mod graph;
pub mod layers;
pub mod order;
pub mod search;
pub mod solver;
pub mod testkit;

pub use clique_graph::{build_clique_graph, CliqueGraph, CliqueGraphEdge, NodeId, WeightLevels};
pub use error::{Error, Result};
pub use graph::Graph;
pub use layers::{
    build_layer_structure, LayerStructure, PropertyCheck, PropertyReport, Unit, UnitEdge, UnitId,
};
pub use order::{
    lex_linear_extension, order_from_pairs, vertex_order, vertex_sequence, LinearOrder,
    StrictPartialOrder,
};
pub use search::{
    chordality_peo, enumerate_orderings, enumerate_prim_orderings, generic_search,
    maximal_cliques, mcs, mcs_from_prim, prim_search, verify_ordering, verify_prim_ordering,
    CliqueSequence, Paradigm, SearchPolicy, DEFAULT_ENUMERATION_CAP,
};
pub use solver::{
    dp_solve, end_vertex, extract_witness, project_order, rooted_generic_psop, solve,
    verify_solution, DpTable, ProjectedOrder, PsopAnswer,
};
