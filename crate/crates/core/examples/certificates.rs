//! Reading a complex document, writing a partitioning certificate, and
//! loading it back.
//!
//! `cargo run --example certificates`

use simplicial_cert::decompose::{find_partitioning, verify_partitioning, Budget};
use simplicial_cert::io::{parse_complex, partitioning_from_doc, to_json, CertificateDoc};

const DOC: &str = r#"{
  "kind": "complex",
  "vertices": ["a", "b", "c", "d", "e", "f"],
  "facets": [["a", "b", "c"], ["a", "b", "d"], ["a", "c", "d"], ["b", "c", "d"], ["a", "e", "f"]]
}"#;

fn main() {
    let loaded = parse_complex(DOC, "inline").unwrap();
    let outcome = find_partitioning(&loaded.complex, &Budget::unlimited()).unwrap();
    let p = outcome.certificate().unwrap();
    let cert = CertificateDoc::partitioning(&loaded, p, Some(outcome.report()));
    let text = to_json(&cert);
    println!("{text}");

    let back = CertificateDoc::parse(&text, "certificate").unwrap();
    let reloaded = back.complex.to_loaded("certificate").unwrap();
    let p2 = partitioning_from_doc(&reloaded.labels, back.intervals.as_deref().unwrap()).unwrap();
    verify_partitioning(&reloaded.complex, &p2).unwrap();
    println!("reloaded certificate verifies");
}
