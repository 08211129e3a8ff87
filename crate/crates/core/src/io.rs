//! JSON documents for complexes and certificates.
//!
//! A complex document has `facets` (lists of vertex labels), an optional
//! `vertices` label list fixing the numbering, and optional `removed_facets`
//! for a relative complex. Labels are strings or non-negative integers.
//! Without a `vertices` list, integer labels are used as vertex indices
//! directly; any other label set is numbered in order of first appearance.
//! `corpus:<name>` can be loaded wherever a path is accepted.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::cm::{CmVerdict, CmWitness};
use crate::complex::{build_complex, Complex, Face, FaceSet, RelativeComplex, VertexMap, MAX_VERTICES};
use crate::corpus::{corpus_get, CorpusError};
use crate::decompose::{ConstructibilityCert, Interval, Partitioning, SearchReport, ShellingOrder};
use crate::error::ComplexError;
use crate::homology::{HomologyGroup, HomologyProfile};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{origin}:{line}:{column}: {message}")]
    Parse { origin: String, line: usize, column: usize, message: String },
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("{origin}: {source}")]
    Complex { origin: String, source: ComplexError },
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("{origin}: {message}")]
    Invalid { origin: String, message: String },
}

/// A vertex label as written in a document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Index(u64),
    Name(String),
}

impl Label {
    /// Integers for purely numeric names, strings otherwise.
    pub fn from_name(name: &str) -> Label {
        match name.parse::<u64>() {
            Ok(n) if n.to_string() == name => Label::Index(n),
            _ => Label::Name(name.to_string()),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Index(n) => write!(f, "{n}"),
            Label::Name(s) => write!(f, "{s}"),
        }
    }
}

pub type FaceDoc = Vec<Label>;

fn complex_kind() -> String {
    "complex".to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    #[serde(default = "complex_kind")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Label>>,
    pub facets: Vec<FaceDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub removed_facets: Option<Vec<FaceDoc>>,
    /// Free-form per-vertex notes, e.g. where a glued vertex came from.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<BTreeMap<String, String>>,
}

/// A parsed complex with its vertex names and normalization warnings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Loaded {
    pub complex: Complex,
    pub labels: VertexMap,
    pub warnings: Vec<String>,
}

fn parse_error(origin: &str, e: serde_json::Error) -> IoError {
    IoError::Parse { origin: origin.to_string(), line: e.line(), column: e.column(), message: e.to_string() }
}

fn numbering(doc: &ComplexDoc) -> Result<VertexMap, ComplexError> {
    if let Some(names) = &doc.vertices {
        return VertexMap::from_names(names.iter().map(Label::to_string));
    }
    let all = doc.facets.iter().chain(doc.removed_facets.iter().flatten()).flatten();
    let indices: Option<Vec<u64>> = all.clone().map(|l| if let Label::Index(n) = l { Some(*n) } else { None }).collect();
    match indices.and_then(|ix| ix.into_iter().max().map(|m| m as usize + 1).or(Some(0))) {
        Some(n) if n <= MAX_VERTICES => Ok(VertexMap::numeric(n)),
        _ => {
            let mut map = VertexMap::new();
            for label in all {
                map.intern(&label.to_string());
            }
            Ok(map)
        }
    }
}

impl ComplexDoc {
    pub fn to_loaded(&self, origin: &str) -> Result<Loaded, IoError> {
        let wrap = |source| IoError::Complex { origin: origin.to_string(), source };
        if self.kind != "complex" {
            return Err(IoError::Invalid {
                origin: origin.to_string(),
                message: format!("expected kind \"complex\", found \"{}\"", self.kind),
            });
        }
        let labels = numbering(self).map_err(wrap)?;
        let faces = |list: &[FaceDoc]| -> Result<Vec<Face>, IoError> {
            list.iter().map(|f| face_from_doc(&labels, f).map_err(wrap)).collect()
        };
        let (ambient, report) = build_complex(faces(&self.facets)?);
        let mut warnings: Vec<String> = report.warnings();
        let complex = match &self.removed_facets {
            None => Complex::Absolute(ambient),
            Some(removed) => {
                let (gamma, r) = build_complex(faces(removed)?);
                warnings.extend(r.warnings().into_iter().map(|w| format!("removed_facets: {w}")));
                Complex::Relative(RelativeComplex::new(ambient, gamma).map_err(wrap)?)
            }
        };
        Ok(Loaded { complex, labels, warnings })
    }

    pub fn from_complex(k: &Complex, labels: &VertexMap) -> ComplexDoc {
        let default_numbering = labels.names().iter().enumerate().all(|(i, n)| *n == i.to_string());
        let facets = k.ambient().facets().iter().map(|f| face_doc(labels, f)).collect();
        let removed_facets = k.removed().map(|g| g.facets().iter().map(|f| face_doc(labels, f)).collect());
        ComplexDoc {
            kind: complex_kind(),
            vertices: (!default_numbering).then(|| labels.names().iter().map(|n| Label::from_name(n)).collect()),
            facets,
            removed_facets,
            provenance: None,
        }
    }
}

pub fn face_doc(labels: &VertexMap, face: &Face) -> FaceDoc {
    labels.face_names(face).iter().map(|n| Label::from_name(n)).collect()
}

pub fn face_from_doc(labels: &VertexMap, doc: &[Label]) -> Result<Face, ComplexError> {
    let names: Vec<String> = doc.iter().map(Label::to_string).collect();
    labels.face_from_names(&names)
}

pub fn parse_complex(text: &str, origin: &str) -> Result<Loaded, IoError> {
    let doc: ComplexDoc = serde_json::from_str(text).map_err(|e| parse_error(origin, e))?;
    doc.to_loaded(origin)
}

fn read(path: &str) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::Read { path: path.to_string(), source })
}

/// Loads a file, or a corpus entry given as `corpus:<name>`.
pub fn load_complex(spec: &str) -> Result<Loaded, IoError> {
    match spec.strip_prefix("corpus:") {
        Some(name) => {
            let entry = corpus_get(name)?;
            Ok(Loaded { complex: entry.complex()?, labels: entry.labels()?, warnings: Vec::new() })
        }
        None => parse_complex(&read(spec)?, spec),
    }
}

/// Pretty JSON that keeps any value fitting in 100 columns on one line.
pub fn to_json<T: Serialize>(value: &T) -> String {
    const WIDTH: usize = 100;
    fn inline(v: &Value) -> String {
        match v {
            Value::Array(items) => format!("[{}]", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
            Value::Object(map) => {
                let parts: Vec<String> =
                    map.iter().map(|(k, item)| format!("{}: {}", Value::String(k.clone()), inline(item))).collect();
                format!("{{{}}}", parts.join(", "))
            }
            other => other.to_string(),
        }
    }
    fn flat(v: &Value) -> bool {
        match v {
            Value::Array(items) => items.iter().all(|i| !matches!(i, Value::Array(_) | Value::Object(_))),
            Value::Object(_) => false,
            _ => true,
        }
    }
    fn emit(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent + 1);
        let one_line = inline(v);
        match v {
            Value::Array(items) if indent * 2 + one_line.len() > WIDTH && items.iter().all(flat) => {
                // faces and labels: pack several per line
                out.push_str("[\n");
                let mut line = String::new();
                for (i, item) in items.iter().enumerate() {
                    let piece = inline(item) + if i + 1 < items.len() { "," } else { "" };
                    if !line.is_empty() && pad.len() + line.len() + 1 + piece.len() > WIDTH {
                        out.push_str(&format!("{pad}{line}\n"));
                        line.clear();
                    }
                    if !line.is_empty() {
                        line.push(' ');
                    }
                    line.push_str(&piece);
                }
                out.push_str(&format!("{pad}{line}\n"));
                out.push_str(&"  ".repeat(indent));
                out.push(']');
            }
            Value::Array(items) if indent * 2 + one_line.len() > WIDTH => {
                out.push_str("[\n");
                for (i, item) in items.iter().enumerate() {
                    out.push_str(&pad);
                    emit(item, indent + 1, out);
                    out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
                }
                out.push_str(&"  ".repeat(indent));
                out.push(']');
            }
            Value::Object(map) if indent == 0 || indent * 2 + one_line.len() > WIDTH => {
                out.push_str("{\n");
                for (i, (k, item)) in map.iter().enumerate() {
                    out.push_str(&format!("{pad}{}: ", Value::String(k.clone())));
                    emit(item, indent + 1, out);
                    out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
                }
                out.push_str(&"  ".repeat(indent));
                out.push('}');
            }
            _ => out.push_str(&one_line),
        }
    }
    let value = serde_json::to_value(value).expect("documents serialize");
    let mut out = String::new();
    emit(&value, 0, &mut out);
    out.push('\n');
    out
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), IoError> {
    let text = to_json(value);
    std::fs::write(path, text).map_err(|source| IoError::Write { path: path.display().to_string(), source })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertKind {
    Partitioning,
    Shelling,
    Constructibility,
    Unsat,
    Cm,
    Homology,
    Coloring,
}

/// Property refuted by an `unsat` certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Partitionable,
    Shellable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntervalDoc {
    pub bottom: FaceDoc,
    pub top: FaceDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TreeDoc {
    Simplex { simplex: FaceDoc },
    Join { dim: i32, left: Box<TreeDoc>, right: Box<TreeDoc>, intersection: Box<TreeDoc> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    pub satisfiable: bool,
    pub nodes_explored: u64,
    pub options_generated: u64,
    pub wall_time_ms: f64,
}

impl From<&SearchReport> for ReportDoc {
    fn from(r: &SearchReport) -> Self {
        ReportDoc {
            satisfiable: r.satisfiable,
            nodes_explored: r.nodes_explored,
            options_generated: r.options_generated,
            wall_time_ms: r.wall_time.as_secs_f64() * 1000.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub dim: i32,
    pub betti: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub torsion: Vec<String>,
}

impl From<&HomologyGroup> for GroupDoc {
    fn from(g: &HomologyGroup) -> Self {
        GroupDoc { dim: g.dim, betti: g.betti, torsion: g.torsion.iter().map(BigInt::to_string).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDoc {
    pub face: FaceDoc,
    pub link_dim: i32,
    pub group: GroupDoc,
}

/// Certificate or refutation for one property of an embedded complex.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDoc {
    pub kind: CertKind,
    pub complex: ComplexDoc,
    /// Verdict for `cm` and `coloring` documents.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub property: Option<Property>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub intervals: Option<Vec<IntervalDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<FaceDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub restrictions: Option<Vec<FaceDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tree: Option<TreeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homology: Option<Vec<GroupDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<BTreeMap<String, usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportDoc>,
}

impl CertificateDoc {
    pub fn new(kind: CertKind, loaded: &Loaded) -> Self {
        CertificateDoc {
            kind,
            complex: ComplexDoc::from_complex(&loaded.complex, &loaded.labels),
            holds: None,
            property: None,
            intervals: None,
            order: None,
            restrictions: None,
            tree: None,
            witness: None,
            homology: None,
            coloring: None,
            report: None,
        }
    }

    pub fn partitioning(loaded: &Loaded, p: &Partitioning, report: Option<&SearchReport>) -> Self {
        let l = &loaded.labels;
        let intervals =
            p.intervals.iter().map(|i| IntervalDoc { bottom: face_doc(l, &i.bottom), top: face_doc(l, &i.top) }).collect();
        CertificateDoc { intervals: Some(intervals), report: report.map(ReportDoc::from), ..Self::new(CertKind::Partitioning, loaded) }
    }

    pub fn shelling(loaded: &Loaded, s: &ShellingOrder, report: Option<&SearchReport>) -> Self {
        let l = &loaded.labels;
        CertificateDoc {
            order: Some(s.order.iter().map(|f| face_doc(l, f)).collect()),
            restrictions: Some(s.restrictions.iter().map(|f| face_doc(l, f)).collect()),
            report: report.map(ReportDoc::from),
            ..Self::new(CertKind::Shelling, loaded)
        }
    }

    pub fn constructibility(loaded: &Loaded, cert: &ConstructibilityCert) -> Self {
        CertificateDoc { tree: Some(tree_doc(&loaded.labels, cert)), ..Self::new(CertKind::Constructibility, loaded) }
    }

    pub fn unsat(loaded: &Loaded, property: Property, report: &SearchReport) -> Self {
        CertificateDoc { property: Some(property), report: Some(report.into()), ..Self::new(CertKind::Unsat, loaded) }
    }

    pub fn cm(loaded: &Loaded, verdict: &CmVerdict) -> Self {
        let witness = verdict.witness.as_ref().map(|w: &CmWitness| WitnessDoc {
            face: face_doc(&loaded.labels, &w.face),
            link_dim: w.link_dim,
            group: (&w.group).into(),
        });
        CertificateDoc { holds: Some(verdict.holds), witness, ..Self::new(CertKind::Cm, loaded) }
    }

    pub fn homology(loaded: &Loaded, h: &HomologyProfile) -> Self {
        CertificateDoc { homology: Some(h.groups.iter().map(GroupDoc::from).collect()), ..Self::new(CertKind::Homology, loaded) }
    }

    pub fn coloring(loaded: &Loaded, coloring: Option<&BTreeMap<usize, usize>>) -> Self {
        let coloring = coloring.map(|c| c.iter().map(|(v, col)| (loaded.labels.face_names(&Face::singleton(*v))[0].clone(), *col)).collect());
        CertificateDoc { holds: Some(coloring.is_some()), coloring, ..Self::new(CertKind::Coloring, loaded) }
    }

    pub fn parse(text: &str, origin: &str) -> Result<Self, IoError> {
        serde_json::from_str(text).map_err(|e| parse_error(origin, e))
    }

    pub fn load(path: &str) -> Result<Self, IoError> {
        Self::parse(&read(path)?, path)
    }
}

pub fn tree_doc(labels: &VertexMap, cert: &ConstructibilityCert) -> TreeDoc {
    match cert {
        ConstructibilityCert::Simplex(f) => TreeDoc::Simplex { simplex: face_doc(labels, f) },
        ConstructibilityCert::Join { dim, left, right, intersection } => TreeDoc::Join {
            dim: *dim,
            left: Box::new(tree_doc(labels, left)),
            right: Box::new(tree_doc(labels, right)),
            intersection: Box::new(tree_doc(labels, intersection)),
        },
    }
}

pub fn tree_from_doc(labels: &VertexMap, doc: &TreeDoc) -> Result<ConstructibilityCert, ComplexError> {
    Ok(match doc {
        TreeDoc::Simplex { simplex } => ConstructibilityCert::Simplex(face_from_doc(labels, simplex)?),
        TreeDoc::Join { dim, left, right, intersection } => ConstructibilityCert::join(
            *dim,
            tree_from_doc(labels, left)?,
            tree_from_doc(labels, right)?,
            tree_from_doc(labels, intersection)?,
        ),
    })
}

pub fn partitioning_from_doc(labels: &VertexMap, docs: &[IntervalDoc]) -> Result<Partitioning, ComplexError> {
    let intervals = docs
        .iter()
        .map(|d| Ok(Interval::new(face_from_doc(labels, &d.bottom)?, face_from_doc(labels, &d.top)?)))
        .collect::<Result<Vec<_>, ComplexError>>()?;
    Ok(Partitioning::new(intervals))
}

pub fn faces_from_doc(labels: &VertexMap, docs: &[FaceDoc]) -> Result<Vec<Face>, ComplexError> {
    docs.iter().map(|d| face_from_doc(labels, d)).collect()
}

/// Parses a facet order such as `0237,0267` or `a+b+c, b+c+d`. Faces are
/// separated by commas; labels within a face by whitespace or `+`. A token
/// that is not itself a label is read one character per label.
pub fn parse_order(labels: &VertexMap, text: &str) -> Result<Vec<Face>, ComplexError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|token| {
            let parts: Vec<&str> = token.split(|c: char| c.is_whitespace() || c == '+').filter(|s| !s.is_empty()).collect();
            let names: Vec<String> = if parts.len() == 1 && labels.index_of(parts[0]).is_err() {
                parts[0].chars().map(String::from).collect()
            } else {
                parts.iter().map(|s| s.to_string()).collect()
            };
            labels.face_from_names(&names)
        })
        .collect()
}
