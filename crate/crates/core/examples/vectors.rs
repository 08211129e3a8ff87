//! f- and h-vectors of a few complexes, absolute and relative.
//!
//! `cargo run --example vectors`

use simplicial_cert::corpus::corpus_get;
use simplicial_cert::{FaceSet, SimplicialComplex};

fn main() {
    let octahedron =
        SimplicialComplex::from_digit_facets(&["024", "025", "034", "035", "124", "125", "134", "135"]).unwrap();
    println!("{:<12} f = {}  h = {}", "octahedron", octahedron.f_vector(), octahedron.h_vector());

    for name in ["Qbar", "A", "Q", "C3"] {
        let k = corpus_get(name).unwrap().complex().unwrap();
        let kind = if k.is_relative() { "relative" } else { "absolute" };
        println!("{name:<12} f = {}  h = {}  ({kind})", k.f_vector(), k.h_vector());
    }
}
