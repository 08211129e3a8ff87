//! Verifying a given facet order, searching for a shelling, and exhausting
//! the search on Ziegler's nonshellable ball.
//!
//! `cargo run --release --example shelling`

use simplicial_cert::corpus::corpus_get;
use simplicial_cert::decompose::{find_shelling, verify_shelling, Budget, SearchOutcome};
use simplicial_cert::{Face, FaceSet};

fn main() {
    let b = corpus_get("B").unwrap();
    let k = b.complex().unwrap().as_absolute().unwrap().clone();
    let order = b.expected.shelling_order.unwrap();
    let s = verify_shelling(&k, &order).unwrap();
    println!("B in the listed order: {s}");
    let restrictions: Vec<String> = s.restrictions.iter().map(Face::to_string).collect();
    println!("  restrictions {}  h = {}  (algebraic h = {})", restrictions.join(" "), s.h_vector(), k.h_vector());

    let mut bad = order.clone();
    bad.swap(1, 6);
    println!("B with facets 2 and 7 swapped: {}", verify_shelling(&k, &bad).unwrap_err());

    for name in ["A", "Qbar", "ziegler-Z"] {
        let k = corpus_get(name).unwrap().complex().unwrap().as_absolute().unwrap().clone();
        match find_shelling(&k, &Budget::unlimited()).unwrap() {
            SearchOutcome::Found(s, r) => println!("{name}: shelling {s} ({} nodes)", r.nodes_explored),
            SearchOutcome::Exhausted(r) => println!("{name}: not shellable, {} nodes exhausted", r.nodes_explored),
        }
    }
}
