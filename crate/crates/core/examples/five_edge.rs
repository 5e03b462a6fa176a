//! Prints the factored characteristic polynomial of the five-edge hypertree
//! in data/five_edge.txt together with its subgraph table.

use hypertree_spectra::hypergraph::DEFAULT_SUBGRAPH_CAP;
use hypertree_spectra::{charpoly_hypertree, io, Hypertree};

fn main() {
    let src = include_str!("../../../data/five_edge.txt");
    let h = io::parse_text(src).unwrap().into_hypergraph().unwrap();
    let t = Hypertree::new(h).unwrap();
    let report = charpoly_hypertree(&t, DEFAULT_SUBGRAPH_CAP).unwrap();
    for term in &report.per_subgraph {
        println!(
            "{:<24} {:>6}  {}",
            term.handle.label(t.graph()),
            term.exponent.to_string(),
            term.base
        );
    }
    println!("\n{}", report.factored);
}
