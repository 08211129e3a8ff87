//! Reisner's criterion on a CM complex and on one that fails it, with the
//! per-link table for the failure.
//!
//! `cargo run --example cohen_macaulay`

use simplicial_cert::cm::{cm_report, is_cohen_macaulay};
use simplicial_cert::corpus::corpus_get;

fn main() {
    for name in ["Qbar", "Q", "C3", "bjorner"] {
        let k = corpus_get(name).unwrap().complex().unwrap();
        let v = is_cohen_macaulay(&k);
        match &v.witness {
            None => println!("{name:<8} CM ({} links)", v.faces_checked),
            Some(w) => println!("{name:<8} not CM: link of {} has H~_{} = {}", w.face, w.group.dim, w.group),
        }
    }

    let bjorner = corpus_get("bjorner").unwrap().complex().unwrap();
    for row in cm_report(&bjorner).iter().filter(|r| r.face.len() <= 1) {
        let dim = row.link_dim.map_or("void".to_string(), |d| d.to_string());
        println!("  link {:<4} dim {:<4} {:<24} {}", row.face.to_string(), dim, row.homology.to_string(), if row.ok { "ok" } else { "fails" });
    }
}
