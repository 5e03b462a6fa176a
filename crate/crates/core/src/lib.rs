//! Characteristic polynomials of uniform hypertrees.
//!
//! The crate computes the factored characteristic polynomial of an r-uniform
//! hypertree from matching polynomials of its connected subgraphs, and ships
//! the tools used to cross-check it: a chip-firing model on monomials
//! ([`toppling`]) and a resultant-based oracle for tiny inputs ([`oracle`]).

pub mod hypergraph;
pub mod io;
pub mod linalg;
pub mod matching;
pub mod oracle;
pub mod poly;
pub mod spectra;
pub mod toppling;

pub use hypergraph::{
    good_ordering, validate, Hypergraph, HypergraphError, Hypertree, RawHypergraph, SubgraphHandle,
    Validation,
};
pub use matching::{matching_counts, matching_polynomial, MatchingProfile};
pub use poly::{BigExponent, FactoredPoly, IntPoly, PolyError};
pub use spectra::{charpoly_hypertree, CharPolyReport};
pub use toppling::{
    build_toppled_digraph, topple_report, Configuration, ToppleReport, VertexOrder,
};
