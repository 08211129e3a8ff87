//! Structural facts about the built-in complexes.

use simplicial_cert::cm::is_cohen_macaulay;
use simplicial_cert::corpus::{corpus_get, tau, CorpusObject, NAMES};
use simplicial_cert::glue::{check_glue_hypotheses, glue, GlueSpec};
use simplicial_cert::{Face, FaceSet, RelativeComplex, SimplicialComplex};

fn absolute(name: &str) -> SimplicialComplex {
    corpus_get(name).unwrap().complex().unwrap().as_absolute().unwrap().clone()
}

#[test]
fn facet_counts() {
    for (name, facets, dim, vertices) in
        [("ziegler-Z", 21, 3, 10), ("B", 7, 3, 7), ("Qbar", 14, 3, 10), ("A", 5, 2, 7), ("bjorner", 5, 2, 6)]
    {
        let k = absolute(name);
        assert_eq!(k.facets().len(), facets, "{name}");
        assert_eq!(k.dim(), Some(dim), "{name}");
        assert_eq!(k.vertex_set().len(), vertices, "{name}");
    }
    let a: Vec<Face> = absolute("A").facets().to_vec();
    let want: Vec<Face> = ["023", "026", "234", "347", "478"].iter().map(|f| Face::d(f)).collect();
    assert_eq!(a, want);
}

#[test]
fn q_has_two_presentations() {
    let q = corpus_get("Q").unwrap().complex().unwrap();
    let other = RelativeComplex::new(absolute("Qbar"), absolute("A")).unwrap();
    assert_eq!(q.faces(), other.faces());
    assert_eq!(q.as_relative().unwrap().closure(), absolute("Qbar"));
    let minimal: Vec<Face> = q.as_relative().unwrap().minimal_faces();
    assert_eq!(minimal, vec![Face::d("1"), Face::d("5"), Face::d("9")]);
}

#[test]
fn qprime_vectors() {
    let q = corpus_get("Qprime").unwrap().complex().unwrap();
    assert_eq!(q.f_vector().0, vec![0, 0, 5, 10, 5]);
}

#[test]
fn tau_preserves_qbar_and_a() {
    let t = tau();
    assert!(t.is_automorphism(&absolute("Qbar")).unwrap());
    assert_eq!(t.apply_to(&absolute("A")).unwrap(), absolute("A"));
    assert_eq!(Face::d("48").map(|v| t.apply(v)), Face::d("26"));
    assert_eq!(t.inverse(), t);
}

#[test]
fn c25_hypotheses_hold() {
    let CorpusObject::Glued(spec) = corpus_get("C25").unwrap().object else { panic!("C25 is glued") };
    let h = check_glue_hypotheses(&spec).unwrap();
    assert!(h.all_hold(), "{h:?}");
    assert_eq!(h.k, 24);
    assert_eq!(h.codimension, Some(1));
}

#[test]
fn aprime_is_not_induced() {
    let h = check_glue_hypotheses(&GlueSpec::new(absolute("Xprime"), absolute("Aprime"), 3)).unwrap();
    assert!(!h.induced.induced);
    assert!(!h.all_hold());
}

#[test]
fn c3_copy_swaps_are_automorphisms() {
    let g = glue(&GlueSpec::new(absolute("Qbar"), absolute("A"), 3)).unwrap();
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        assert!(g.swap_copies(i, j).is_automorphism(&g.complex).unwrap(), "swap {i} {j}");
    }
    assert_eq!(g.complex.facets().len(), 3 * 14);
    assert_eq!(g.labels.names()[..7], ["0", "2", "3", "4", "6", "7", "8"]);
    assert_eq!(g.labels.name(7), Some("1_1"));
}

#[test]
fn glued_members_are_cm() {
    for n in [1, 2, 3] {
        let g = glue(&GlueSpec::new(absolute("Qbar"), absolute("A"), n)).unwrap();
        assert!(is_cohen_macaulay(&g.complex).holds, "C{n}");
    }
}

#[test]
fn one_copy_is_qbar() {
    let g = glue(&GlueSpec::new(absolute("Qbar"), absolute("A"), 1)).unwrap();
    assert_eq!(g.complex.relabel(|w| g.provenance[w].original), absolute("Qbar"));
}

#[test]
fn every_name_resolves() {
    for name in NAMES {
        let entry = corpus_get(name).unwrap();
        assert_eq!(entry.name, name);
        assert!(!entry.expected.notes.is_empty(), "{name}");
    }
    assert!(corpus_get("rudin").is_err());
}
