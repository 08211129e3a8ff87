//! Balancedness: searching for a proper coloring of the vertices by d+1
//! colors in which every facet is rainbow.
//!
//! `cargo run --example balanced`

use simplicial_cert::complex::{is_balanced, verify_coloring};
use simplicial_cert::corpus::corpus_get;
use simplicial_cert::SimplicialComplex;

fn main() {
    let octahedron =
        SimplicialComplex::from_digit_facets(&["024", "025", "034", "035", "124", "125", "134", "135"]).unwrap();
    let tetrahedron = SimplicialComplex::from_digit_facets(&["0123"]).unwrap();
    let qbar = corpus_get("Qbar").unwrap().complex().unwrap().as_absolute().unwrap().clone();
    for (name, k) in [("octahedron", octahedron), ("tetrahedron", tetrahedron), ("Qbar", qbar)] {
        let b = is_balanced(&k).unwrap();
        match &b.coloring {
            Some(colors) => {
                assert!(verify_coloring(&k, colors));
                let shown: Vec<String> = colors.iter().map(|(v, c)| format!("{v}:{c}")).collect();
                println!("{name:<12} balanced, coloring {}", shown.join(" "));
            }
            None => println!("{name:<12} not balanced ({} nodes searched)", b.nodes),
        }
    }
}
