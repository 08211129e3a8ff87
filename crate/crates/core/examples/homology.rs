//! Reduced homology over the integers, including torsion.
//!
//! `cargo run --example homology`

use simplicial_cert::corpus::corpus_get;
use simplicial_cert::homology::reduced_homology;
use simplicial_cert::SimplicialComplex;

fn main() {
    // six-vertex real projective plane
    let rp2 = SimplicialComplex::from_digit_facets(&[
        "012", "023", "034", "045", "015", "124", "235", "134", "245", "135",
    ])
    .unwrap();
    let sphere = SimplicialComplex::from_digit_facets(&["123", "124", "134", "234"]).unwrap();
    println!("{:<14} {}", "RP2", reduced_homology(&rp2));
    println!("{:<14} {}", "2-sphere", reduced_homology(&sphere));
    for name in ["ziegler-Z", "Q", "bjorner"] {
        let k = corpus_get(name).unwrap().complex().unwrap();
        println!("{name:<14} {}", reduced_homology(&k));
    }
}
