//! Chordality recognition: compute a perfect elimination ordering or reject.
//!
//! Run with: cargo run --example recognize_chordal

use mcs_psop::{chordality_peo, Graph};

fn main() -> mcs_psop::Result<()> {
    let chordal = Graph::from_edges(&[
        ("a", "b"),
        ("a", "c"),
        ("b", "c"),
        ("b", "d"),
        ("c", "d"),
        ("c", "e"),
    ])?;
    match chordality_peo(&chordal) {
        Some(peo) => {
            let names: Vec<&str> = peo.iter().map(String::as_str).collect();
            println!("chordal, perfect elimination ordering: {}", names.join(" "));
        }
        None => println!("not chordal"),
    }

    let square = Graph::from_edges(&[("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])?;
    println!(
        "4-cycle is chordal: {}",
        chordality_peo(&square).is_some()
    );
    Ok(())
}
