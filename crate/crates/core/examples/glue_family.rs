//! Builds the glued family C_N from N copies of Qbar along A and reports the
//! gluing hypotheses and the f-vector identity.
//!
//! `cargo run --example glue_family`

use simplicial_cert::corpus::corpus_get;
use simplicial_cert::glue::{check_glue_hypotheses, glue, GlueSpec};
use simplicial_cert::FaceSet;

fn main() {
    let get = |n: &str| corpus_get(n).unwrap().complex().unwrap().as_absolute().unwrap().clone();
    let (qbar, a) = (get("Qbar"), get("A"));
    let q = corpus_get("Q").unwrap().complex().unwrap();
    println!("f(A) = {}  f(Q) = {}", a.f_vector(), q.f_vector());

    for n in [1, 2, 3, 25] {
        let spec = GlueSpec::new(qbar.clone(), a.clone(), n);
        let g = glue(&spec).unwrap();
        let hyp = check_glue_hypotheses(&spec).unwrap();
        println!(
            "C{n:<2} f = {}  vertices {}  pair conditions {}  N > k = {}: {}",
            g.complex.f_vector(),
            g.labels.len(),
            hyp.pair_conditions_hold(),
            hyp.k,
            hyp.pigeonhole()
        );
    }

    let c3 = glue(&GlueSpec::new(qbar, a, 3)).unwrap();
    let facet = c3.complex.facets()[c3.complex.facets().len() - 1];
    println!("last facet of C3: {}", c3.labels.render(&facet));
    println!("swapping copies 1 and 3: {}", c3.swap_copies(1, 3));
}
