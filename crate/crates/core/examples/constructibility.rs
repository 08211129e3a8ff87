//! Constructibility certificates: one derived from a shelling of Qbar, and
//! one for C3 assembled from three copies of it joined along A.
//!
//! `cargo run --example constructibility`

use simplicial_cert::corpus::corpus_get;
use simplicial_cert::decompose::{shelling_to_constructibility, verify_constructibility, verify_shelling};
use simplicial_cert::glue::{glue, glued_constructibility, GlueSpec};
use simplicial_cert::SimplicialComplex;

fn shelled(name: &str) -> (SimplicialComplex, simplicial_cert::decompose::ConstructibilityCert) {
    let entry = corpus_get(name).unwrap();
    let k = entry.complex().unwrap().as_absolute().unwrap().clone();
    let s = verify_shelling(&k, &entry.expected.shelling_order.unwrap()).unwrap();
    let cert = shelling_to_constructibility(&k, &s).unwrap();
    verify_constructibility(&k, &cert).unwrap();
    (k, cert)
}

fn main() {
    let (qbar, qbar_cert) = shelled("Qbar");
    let (a, a_cert) = shelled("A");
    println!("Qbar: {} spine joins, {} joins in all", qbar_cert.spine_nodes(), qbar_cert.join_nodes());
    println!("A:    {a_cert}");

    let c3 = glue(&GlueSpec::new(qbar, a, 3)).unwrap();
    let tree = glued_constructibility(&c3, &qbar_cert, &a_cert);
    match verify_constructibility(&c3.complex, &tree) {
        Ok(()) => println!("C3: certificate with {} joins verifies", tree.join_nodes()),
        Err(e) => println!("C3: {e}"),
    }
}
