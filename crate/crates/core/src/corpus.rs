//! The named complexes of the nonpartitionable Cohen–Macaulay construction,
//! with the properties each is known to have.

use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::cm::is_cohen_macaulay;
use crate::complex::{is_balanced, Complex, FVector, Face, FaceSet, HVector, RelativeComplex, SimplicialComplex, VertexMap, VertexPermutation};
use crate::decompose::{
    find_partitioning, find_shelling, verify_partitioning, verify_shelling, Budget, DecomposeError, SearchOutcome,
};
use crate::glue::{check_glue_hypotheses, glue, GlueSpec};

const Z: [&str; 21] = [
    "0123", "0125", "0237", "0256", "0267", "1234", "1249", "1256", "1269", "1347", "1457", "1458", "1489", "1569",
    "1589", "2348", "2367", "2368", "3478", "3678", "4578",
];
const B: [&str; 7] = ["0237", "0267", "2367", "2368", "2348", "3678", "3478"];
const QBAR: [&str; 14] = [
    "1249", "1269", "1569", "1589", "1489", "1458", "1457", "4578", "1256", "0125", "0256", "0123", "1234", "1347",
];
const A: [&str; 5] = ["026", "023", "234", "347", "478"];
const XPRIME: [&str; 5] = ["1589", "1489", "1458", "1457", "4578"];
const APRIME: [&str; 4] = ["489", "589", "578", "157"];
const BJORNER: [&str; 5] = ["123", "124", "134", "234", "156"];

pub const NAMES: [&str; 13] =
    ["ziegler-Z", "B", "Qbar", "A", "Q", "C2", "C3", "C25", "Xprime", "Aprime", "Qprime", "bjorner", "tau"];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("unknown corpus entry `{0}` (known: {})", NAMES.join(", "))]
    Unknown(String),
    #[error("`tau` is a vertex permutation, not a complex")]
    NotAComplex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusObject {
    Absolute(SimplicialComplex),
    Relative(RelativeComplex),
    Glued(GlueSpec),
    Permutation(VertexPermutation),
}

/// Known properties; `None` means the entry makes no claim.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expected {
    pub f: Option<FVector>,
    pub h: Option<HVector>,
    pub cm: Option<bool>,
    /// Face whose link fails the CM test first.
    pub cm_witness: Option<Face>,
    pub partitionable: Option<bool>,
    pub shellable: Option<bool>,
    pub balanced: Option<bool>,
    /// A facet order claimed to be a shelling.
    pub shelling_order: Option<Vec<Face>>,
    pub notes: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub object: CorpusObject,
    pub expected: Expected,
}

impl CorpusEntry {
    /// The complex itself; glue specs are glued.
    pub fn complex(&self) -> Result<Complex, CorpusError> {
        match &self.object {
            CorpusObject::Absolute(k) => Ok(Complex::Absolute(k.clone())),
            CorpusObject::Relative(r) => Ok(Complex::Relative(r.clone())),
            CorpusObject::Glued(spec) => Ok(Complex::Absolute(glue(spec).expect("corpus glue spec is valid").complex)),
            CorpusObject::Permutation(_) => Err(CorpusError::NotAComplex),
        }
    }

    /// Vertex names: glued entries use provenance labels, the rest are numeric.
    pub fn labels(&self) -> Result<VertexMap, CorpusError> {
        match &self.object {
            CorpusObject::Glued(spec) => Ok(glue(spec).expect("corpus glue spec is valid").labels),
            _ => Ok(VertexMap::numeric(self.complex()?.ambient().n_vertices())),
        }
    }
}

fn c(facets: &[&str]) -> SimplicialComplex {
    SimplicialComplex::from_digit_facets(facets).expect("corpus facets are digit strings")
}

fn order(facets: &[&str]) -> Option<Vec<Face>> {
    Some(facets.iter().map(|f| Face::d(f)).collect())
}

fn qbar_a_spec(copies: usize) -> GlueSpec {
    GlueSpec::new(c(&QBAR), c(&A), copies)
}

/// `(0 7)(2 4)(6 8)` on ten vertices.
pub fn tau() -> VertexPermutation {
    VertexPermutation::from_cycles(10, &[&[0, 7], &[2, 4], &[6, 8]]).expect("valid cycles")
}

pub fn corpus_get(name: &str) -> Result<CorpusEntry, CorpusError> {
    let f = |v: &[i64]| Some(FVector(v.to_vec()));
    let h = |v: &[i64]| Some(HVector(v.to_vec()));
    let (name, object, expected) = match name {
        "ziegler-Z" => (
            "ziegler-Z",
            CorpusObject::Absolute(c(&Z)),
            Expected {
                cm: Some(true),
                partitionable: Some(true),
                shellable: Some(false),
                notes: "Ziegler's nonshellable 3-ball on 10 vertices; partitionable and CM",
                ..Expected::default()
            },
        ),
        "B" => (
            "B",
            CorpusObject::Absolute(c(&B)),
            Expected {
                cm: Some(true),
                shellable: Some(true),
                shelling_order: order(&B),
                notes: "Z induced on 0234678; the listed order is a shelling",
                ..Expected::default()
            },
        ),
        "Qbar" => (
            "Qbar",
            CorpusObject::Absolute(c(&QBAR)),
            Expected {
                f: f(&[1, 10, 31, 36, 14]),
                h: h(&[1, 6, 7, 0, 0]),
                cm: Some(true),
                shellable: Some(true),
                balanced: Some(false),
                shelling_order: order(&QBAR),
                notes: "closure of Q, a shellable 3-ball in the listed order; 1-skeleton not 4-colorable",
                ..Expected::default()
            },
        ),
        "A" => (
            "A",
            CorpusObject::Absolute(c(&A)),
            Expected {
                f: f(&[1, 7, 11, 5, 0]),
                h: h(&[1, 4, 0, 0, 0]),
                cm: Some(true),
                shellable: Some(true),
                shelling_order: order(&A),
                notes: "Qbar induced on 0234678, a shellable 2-ball; vectors padded to the length of Qbar's",
                ..Expected::default()
            },
        ),
        "Q" => (
            "Q",
            CorpusObject::Relative(RelativeComplex::new(c(&Z), c(&B)).expect("B is a subcomplex of Z")),
            Expected {
                f: f(&[0, 3, 20, 31, 14]),
                h: h(&[0, 3, 11, 0, 0]),
                cm: Some(true),
                partitionable: Some(false),
                notes: "the relative complex (Z, B) = (Qbar, A); minimal faces 1, 5, 9; CM but not partitionable",
                ..Expected::default()
            },
        ),
        "C2" => (
            "C2",
            CorpusObject::Glued(qbar_a_spec(2)),
            Expected {
                cm: Some(true),
                partitionable: Some(true),
                balanced: Some(false),
                notes: "two copies of Qbar glued along A; partitionable",
                ..Expected::default()
            },
        ),
        "C3" => (
            "C3",
            CorpusObject::Glued(qbar_a_spec(3)),
            Expected {
                f: f(&[1, 16, 71, 98, 42]),
                h: h(&[1, 12, 29, 0, 0]),
                cm: Some(true),
                partitionable: Some(false),
                balanced: Some(false),
                notes: "three copies of Qbar glued along A; CM, constructible, not partitionable",
                ..Expected::default()
            },
        ),
        "C25" => (
            "C25",
            CorpusObject::Glued(qbar_a_spec(25)),
            Expected {
                f: f(&[1, 82, 511, 780, 350]),
                cm: Some(true),
                partitionable: Some(false),
                balanced: Some(false),
                notes: "25 copies of Qbar glued along A; A has 24 faces so the pigeonhole bound applies",
                ..Expected::default()
            },
        ),
        "Xprime" => (
            "Xprime",
            CorpusObject::Absolute(c(&XPRIME)),
            Expected {
                cm: Some(true),
                shellable: Some(true),
                shelling_order: order(&XPRIME),
                notes: "Z induced on 145789, a shellable 3-ball in the listed order",
                ..Expected::default()
            },
        ),
        "Aprime" => (
            "Aprime",
            CorpusObject::Absolute(c(&APRIME)),
            Expected {
                cm: Some(true),
                shellable: Some(true),
                shelling_order: order(&APRIME),
                notes: "non-induced 2-ball in the boundary of Xprime, shellable in the listed order",
                ..Expected::default()
            },
        ),
        "Qprime" => (
            "Qprime",
            CorpusObject::Relative(RelativeComplex::new(c(&XPRIME), c(&APRIME)).expect("A' is a subcomplex of X'")),
            Expected {
                f: f(&[0, 0, 5, 10, 5]),
                cm: Some(true),
                partitionable: Some(false),
                notes: "(Xprime, Aprime): small CM relative complex with no partitioning",
                ..Expected::default()
            },
        ),
        "bjorner" => (
            "bjorner",
            CorpusObject::Absolute(c(&BJORNER)),
            Expected {
                h: h(&[1, 3, 0, 1]),
                cm: Some(false),
                cm_witness: Some(Face::d("1")),
                partitionable: Some(true),
                notes: "tetrahedron boundary with a triangle hanging off vertex 1; partitionable, not CM",
                ..Expected::default()
            },
        ),
        "tau" => (
            "tau",
            CorpusObject::Permutation(tau()),
            Expected { notes: "reflection symmetry of Qbar preserving A; swaps edges 48 and 26", ..Expected::default() },
        ),
        other => return Err(CorpusError::Unknown(other.to_string())),
    };
    Ok(CorpusEntry { name, object, expected })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
    OverBudget,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "✓"),
            Status::Fail => write!(f, "✗"),
            Status::Skipped(why) => write!(f, "skipped ({why})"),
            Status::OverBudget => write!(f, "budget exceeded"),
        }
    }
}

/// One checked claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub entry: &'static str,
    pub check: &'static str,
    pub status: Status,
    pub detail: String,
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub budget: Budget,
    /// Skips the shellability search on Z and the partitionability search on C3.
    pub skip_slow: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { budget: Budget::unlimited(), skip_slow: false }
    }
}

fn is_slow(entry: &str, check: &str) -> bool {
    matches!((entry, check), ("ziegler-Z", "shellable") | ("C3", "partitionable"))
}

fn vectors_match(got: &[i64], want: &[i64]) -> bool {
    let n = got.len().max(want.len());
    (0..n).all(|i| got.get(i).copied().unwrap_or(0) == want.get(i).copied().unwrap_or(0))
}

struct Run<'a> {
    entry: &'static str,
    options: &'a VerifyOptions,
    out: Vec<CheckResult>,
}

impl Run<'_> {
    fn record<F: FnOnce() -> (Status, String)>(&mut self, check: &'static str, f: F) {
        let started = Instant::now();
        let (status, detail) = if self.options.skip_slow && is_slow(self.entry, check) {
            (Status::Skipped("slow".into()), String::new())
        } else {
            f()
        };
        self.out.push(CheckResult { entry: self.entry, check, status, detail, elapsed: started.elapsed() });
    }
}

fn verdict(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn search_status<T>(
    result: Result<SearchOutcome<T>, DecomposeError>,
    expected: bool,
    describe: impl FnOnce(&T) -> Result<String, String>,
) -> (Status, String) {
    match result {
        Ok(SearchOutcome::Found(cert, report)) => match describe(&cert) {
            Ok(d) => (verdict(expected), format!("found in {} nodes; {d}", report.nodes_explored)),
            Err(e) => (Status::Fail, format!("found certificate failed verification: {e}")),
        },
        Ok(SearchOutcome::Exhausted(report)) => {
            (verdict(!expected), format!("none exists: {} nodes exhausted", report.nodes_explored))
        }
        Err(DecomposeError::BudgetExceeded(report)) => {
            (Status::OverBudget, format!("stopped after {} nodes", report.nodes_explored))
        }
        Err(e) => (Status::Fail, e.to_string()),
    }
}

fn verify_permutation(run: &mut Run<'_>, tau: &VertexPermutation) {
    let qbar = c(&QBAR);
    let a = c(&A);
    run.record("automorphism of Qbar", || {
        let ok = tau.is_automorphism(&qbar).unwrap_or(false);
        (verdict(ok), tau.to_string())
    });
    run.record("fixes A setwise", || {
        let ok = tau.apply_to(&a).is_ok_and(|img| img == a);
        (verdict(ok), String::new())
    });
    run.record("sends 48 to 26", || {
        let img = Face::d("48").map(|v| tau.apply(v));
        (verdict(img == Face::d("26")), format!("48 -> {img}"))
    });
}

fn verify_complex(run: &mut Run<'_>, entry: &CorpusEntry, k: &Complex) {
    let e = &entry.expected;
    let budget = run.options.budget;
    if let Some(want) = &e.f {
        run.record("f-vector", || {
            let got = k.f_vector();
            (verdict(vectors_match(&got.0, &want.0)), format!("{got}"))
        });
    }
    if let Some(want) = &e.h {
        run.record("h-vector", || {
            let got = k.h_vector();
            (verdict(vectors_match(&got.0, &want.0)), format!("{got}"))
        });
    }
    if let Some(want) = e.cm {
        run.record("cohen-macaulay", || {
            let v = is_cohen_macaulay(k);
            let witness_ok = e.cm_witness.is_none() || v.witness.as_ref().map(|w| w.face) == e.cm_witness;
            let detail = match &v.witness {
                Some(w) => format!("fails at {} (link dim {}, H~_{} = {})", w.face, w.link_dim, w.group.dim, w.group),
                None => format!("{} links checked", v.faces_checked),
            };
            (verdict(v.holds == want && witness_ok), detail)
        });
    }
    if let Some(want) = e.partitionable {
        let pigeonhole = match &entry.object {
            CorpusObject::Glued(spec) if !want && spec.copies > spec.k() => Some(spec),
            _ => None,
        };
        if let Some(spec) = pigeonhole {
            run.record("partitionable", || {
                // too large to search; relies on Q having no partitioning
                let h = check_glue_hypotheses(spec).expect("corpus glue spec is valid");
                let q = corpus_get("Q").expect("Q").complex().expect("Q is a complex");
                let q_unsat = matches!(find_partitioning(&q, &budget), Ok(SearchOutcome::Exhausted(_)));
                let ok = h.all_hold() && q_unsat;
                (verdict(ok), format!("gluing hypotheses hold with N = {} > k = {}; Q exhausted", h.copies, h.k))
            });
        } else {
            run.record("partitionable", || {
                search_status(find_partitioning(k, &budget), want, |p| {
                    verify_partitioning(k, p).map_err(|e| e.to_string())?;
                    let from_r = crate::decompose::h_from_partitioning(k, p).map_err(|e| e.to_string())?;
                    if !vectors_match(&from_r.0, &k.h_vector().0) {
                        return Err(format!("restriction h {from_r} differs from {}", k.h_vector()));
                    }
                    Ok(format!("{p}"))
                })
            });
        }
    }
    if let Some(want) = e.shellable {
        let Complex::Absolute(abs) = k else {
            run.record("shellable", || (Status::Skipped("relative".into()), String::new()));
            return;
        };
        match &e.shelling_order {
            Some(order) => run.record("shellable", || match verify_shelling(abs, order) {
                Ok(s) => {
                    let h_ok = vectors_match(&s.h_vector().0, &abs.h_vector().0);
                    (verdict(want && h_ok), format!("given order verifies; restriction h = {}", s.h_vector()))
                }
                Err(err) => (Status::Fail, err.to_string()),
            }),
            None => run.record("shellable", || {
                search_status(find_shelling(abs, &budget), want, |s| {
                    verify_shelling(abs, &s.order).map_err(|e| e.to_string())?;
                    Ok(s.to_string())
                })
            }),
        }
    }
    if let Some(want) = e.balanced {
        let Complex::Absolute(abs) = k else { return };
        run.record("balanced", || match is_balanced(abs) {
            Ok(b) => (verdict(b.balanced == want), format!("{} coloring nodes", b.nodes)),
            Err(err) => (Status::Fail, err.to_string()),
        });
    }
}

/// Checks every recorded claim of one entry.
pub fn corpus_verify(name: &str, options: &VerifyOptions) -> Result<Vec<CheckResult>, CorpusError> {
    let entry = corpus_get(name)?;
    let mut run = Run { entry: entry.name, options, out: Vec::new() };
    match &entry.object {
        CorpusObject::Permutation(p) => verify_permutation(&mut run, p),
        _ => {
            let k = entry.complex()?;
            verify_complex(&mut run, &entry, &k);
        }
    }
    Ok(run.out)
}

/// All entries whose name contains `filter`.
pub fn corpus_verify_all(filter: &str, options: &VerifyOptions) -> Vec<CheckResult> {
    NAMES
        .iter()
        .filter(|n| n.contains(filter))
        .flat_map(|n| corpus_verify(n, options).expect("listed names exist"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn facet_counts() {
        let count = |n: &str| corpus_get(n).unwrap().complex().unwrap().maximal_faces().len();
        assert_eq!(count("ziegler-Z"), 21);
        assert_eq!(count("Qbar"), 14);
        assert_eq!(count("A"), 5);
        assert_eq!(count("B"), 7);
        let z = corpus_get("ziegler-Z").unwrap().complex().unwrap();
        assert_eq!(z.ambient().n_vertices(), 10);
        assert_eq!(z.dim(), Some(3));
    }

    #[test]
    fn a_is_listed_as_given() {
        let a = corpus_get("A").unwrap().complex().unwrap();
        let mut want: Vec<Face> = A.iter().map(|f| Face::d(f)).collect();
        want.sort();
        assert_eq!(a.maximal_faces(), want);
    }

    #[test]
    fn both_presentations_of_q_agree() {
        let zb = corpus_get("Q").unwrap().complex().unwrap();
        let qa = RelativeComplex::new(c(&QBAR), c(&A)).unwrap();
        assert_eq!(zb.faces(), qa.faces());
        let mut min = qa.minimal_faces();
        min.sort();
        assert_eq!(min, vec![Face::d("1"), Face::d("5"), Face::d("9")]);
    }

    #[test]
    fn qbar_is_z_minus_b() {
        let rest: Vec<Face> = c(&Z).facets().iter().filter(|f| !c(&B).facets().contains(f)).copied().collect();
        assert_eq!(SimplicialComplex::from_facets(rest), c(&QBAR));
        assert_eq!(c(&Z).induced(&Face::d("0234678")), c(&B));
        assert_eq!(c(&QBAR).induced(&Face::d("0234678")), c(&A));
        assert_eq!(c(&Z).induced(&Face::d("145789")), c(&XPRIME));
    }

    #[test]
    fn qprime_vectors() {
        let q = corpus_get("Qprime").unwrap().complex().unwrap();
        assert!(q.is_relative());
        assert_eq!(q.f_vector(), FVector(vec![0, 0, 5, 10, 5]));
    }

    #[test]
    fn unknown_names() {
        assert!(matches!(corpus_get("nope"), Err(CorpusError::Unknown(_))));
        assert_eq!(corpus_get("tau").unwrap().complex(), Err(CorpusError::NotAComplex));
    }

    #[test]
    fn tau_checks_pass() {
        let r = corpus_verify("tau", &VerifyOptions::default()).unwrap();
        assert_eq!(r.len(), 3);
        assert!(r.iter().all(|c| c.status == Status::Pass), "{r:?}");
    }

    #[test]
    fn bjorner_report() {
        let r = corpus_verify("bjorner", &VerifyOptions::default()).unwrap();
        assert!(r.iter().all(|c| c.status == Status::Pass), "{r:?}");
        let cm = r.iter().find(|c| c.check == "cohen-macaulay").unwrap();
        assert!(cm.detail.contains("fails at 1"));
    }

    #[test]
    fn qbar_report() {
        let r = corpus_verify("Qbar", &VerifyOptions::default()).unwrap();
        assert!(r.iter().all(|c| c.status == Status::Pass), "{r:?}");
    }

    #[test]
    fn filter_selects() {
        assert!(corpus_verify_all("no-such-entry", &VerifyOptions::default()).is_empty());
    }

    #[test]
    fn skip_slow_skips() {
        let opts = VerifyOptions { skip_slow: true, ..VerifyOptions::default() };
        let r = corpus_verify("ziegler-Z", &opts).unwrap();
        let shell = r.iter().find(|c| c.check == "shellable").unwrap();
        assert!(matches!(shell.status, Status::Skipped(_)));
    }
}
