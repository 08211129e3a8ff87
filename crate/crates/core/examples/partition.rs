//! Exact-cover search for partitionings: a certificate for C2, an exhaustive
//! refutation for Q, and a budget overrun that claims nothing.
//!
//! `cargo run --release --example partition`

use simplicial_cert::corpus::corpus_get;
use simplicial_cert::decompose::{find_partitioning, h_from_partitioning, verify_partitioning, Budget, DecomposeError, SearchOutcome};
use simplicial_cert::FaceSet;

fn main() {
    for name in ["bjorner", "Q", "Qprime", "C2"] {
        let k = corpus_get(name).unwrap().complex().unwrap();
        match find_partitioning(&k, &Budget::unlimited()).unwrap() {
            SearchOutcome::Found(p, report) => {
                verify_partitioning(&k, &p).unwrap();
                let h = h_from_partitioning(&k, &p).unwrap();
                println!("{name}: partitionable after {} nodes, h = {h}", report.nodes_explored);
                println!("  {p}");
            }
            SearchOutcome::Exhausted(report) => {
                println!("{name}: not partitionable, {} nodes exhausted", report.nodes_explored)
            }
        }
    }

    let c3 = corpus_get("C3").unwrap().complex().unwrap();
    match find_partitioning(&c3, &Budget::nodes(100_000)) {
        Err(DecomposeError::BudgetExceeded(r)) => {
            println!("C3: no verdict within {} nodes ({} faces)", r.nodes_explored, c3.faces().len())
        }
        other => println!("C3: {other:?}"),
    }
}
