//! The end-vertex question: can a given vertex be visited last by some
//! maximum cardinality search? Answered by constraining every other vertex
//! before it.
//!
//! Run with: cargo run --example end_vertex

use mcs_psop::testkit::p3;
use mcs_psop::end_vertex;

fn main() -> mcs_psop::Result<()> {
    let g = p3();
    for v in g.vertices() {
        let answer = end_vertex(&g, v)?;
        match answer.witness {
            Some(w) => println!("{v}: YES, e.g. {:?}", w.as_slice()),
            None => println!("{v}: NO"),
        }
    }
    Ok(())
}
