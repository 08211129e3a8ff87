//! Command-line front end.
//!
//! Exit codes: 0 the property holds (or the command succeeded), 1 it is
//! refuted, 2 error, 3 search budget exhausted without a verdict.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use crate::cm::is_cohen_macaulay;
use crate::complex::{is_balanced, verify_coloring, Complex, Face, FaceSet, SimplicialComplex, VertexMap};
use crate::corpus::{corpus_get, corpus_verify_all, Status, VerifyOptions, NAMES};
use crate::decompose::{
    find_partitioning, find_shelling, shelling_to_constructibility, verify_constructibility, verify_partitioning,
    verify_shelling, Budget, DecomposeError, SearchOutcome, ShellingOrder,
};
use crate::glue::{check_glue_hypotheses, glue, GlueSpec, Provenance};
use crate::homology::reduced_homology;
use crate::io::{
    faces_from_doc, load_complex, parse_order, partitioning_from_doc, tree_from_doc, write_json, CertKind,
    CertificateDoc, ComplexDoc, GroupDoc, IoError, Loaded, Property,
};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "simplicial-cert", version, about = "Certify Cohen-Macaulayness, partitionability and shellability")]
pub struct Cli {
    /// Worker threads for homology and link checks
    #[arg(long, global = true, env = "SIMPLICIAL_CERT_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Cm,
    Partition,
    Shell,
    Balanced,
    Homology,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension, purity, counts, f- and h-vector
    Info { path: String },
    /// Decide one property, writing a certificate or refutation
    Check {
        which: Which,
        path: String,
        /// Where to write the certificate
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Search time limit in seconds
        #[arg(long)]
        budget: Option<f64>,
        /// Facet order to verify as a shelling, e.g. 0237,0267,2367
        #[arg(long)]
        order: Option<String>,
    },
    /// Glue N copies of X along A
    Glue {
        x: String,
        a: String,
        copies: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Derive a constructibility certificate from a shelling
    Construct {
        path: String,
        #[arg(long)]
        order: Option<String>,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Check every recorded claim of the built-in corpus
    Reproduce {
        /// Only entries whose name contains this
        filter: Option<String>,
        #[arg(long)]
        skip_slow: bool,
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Re-check a certificate file
    Verify { cert: String },
    /// Write corpus entries as complex documents
    Export {
        /// Entry name, or `all`
        name: String,
        /// Output file, or directory for `all`
        #[arg(long)]
        out: PathBuf,
    },
}

fn budget(seconds: Option<f64>) -> Budget {
    Budget { time: seconds.map(Duration::from_secs_f64), nodes: None }
}

fn fmt_vec(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn render_all(labels: &VertexMap, faces: &[Face]) -> String {
    faces.iter().map(|f| labels.render(f)).collect::<Vec<_>>().join(" ")
}

fn save(path: Option<&Path>, doc: &CertificateDoc) -> Result<(), IoError> {
    if let Some(p) = path {
        write_json(p, doc)?;
        println!("certificate written to {}", p.display());
    }
    Ok(())
}

fn absolute<'a>(loaded: &'a Loaded, what: &str) -> Result<&'a SimplicialComplex, IoError> {
    loaded.complex.as_absolute().ok_or_else(|| IoError::Invalid {
        origin: "input".into(),
        message: format!("{what} needs an absolute complex"),
    })
}

fn load(path: &str) -> Result<Loaded, IoError> {
    let loaded = load_complex(path)?;
    for w in &loaded.warnings {
        eprintln!("warning: {w}");
    }
    Ok(loaded)
}

fn info(path: &str) -> Result<i32, IoError> {
    let l = load(path)?;
    let k = &l.complex;
    match k.dim() {
        Some(d) => println!("dimension {d}, {}", if k.is_pure() { "pure" } else { "not pure" }),
        None => println!("void complex"),
    }
    println!("{} vertices, {} facets", k.ambient().vertex_set().len(), k.maximal_faces().len());
    println!("f = {}; h = {}", fmt_vec(&k.f_vector().0), fmt_vec(&k.h_vector().0));
    if let Complex::Relative(r) = k {
        println!("relative; minimal faces: {}", render_all(&l.labels, &r.minimal_faces()));
    }
    Ok(EXIT_HOLDS)
}

fn search_exit<T>(
    l: &Loaded,
    outcome: Result<SearchOutcome<T>, DecomposeError>,
    property: Property,
    cert: Option<&Path>,
    found: impl FnOnce(&T, &crate::decompose::SearchReport) -> CertificateDoc,
) -> Result<i32, IoError> {
    match outcome {
        Ok(SearchOutcome::Found(t, report)) => {
            println!("holds ({} nodes, {:.3}s)", report.nodes_explored, report.wall_time.as_secs_f64());
            save(cert, &found(&t, &report))?;
            Ok(EXIT_HOLDS)
        }
        Ok(SearchOutcome::Exhausted(report)) => {
            println!(
                "refuted: search exhausted after {} nodes ({} options, {:.3}s)",
                report.nodes_explored,
                report.options_generated,
                report.wall_time.as_secs_f64()
            );
            save(cert, &CertificateDoc::unsat(l, property, &report))?;
            Ok(EXIT_REFUTED)
        }
        Err(DecomposeError::BudgetExceeded(report)) => {
            println!("budget exceeded after {} nodes; no verdict", report.nodes_explored);
            Ok(EXIT_BUDGET)
        }
        Err(e) => Err(IoError::Invalid { origin: "search".into(), message: e.to_string() }),
    }
}

fn print_shelling(labels: &VertexMap, s: &ShellingOrder) {
    for (f, r) in s.order.iter().zip(&s.restrictions) {
        println!("  {}  R = {}", labels.render(f), labels.render(r));
    }
    println!("h from restrictions = {}", s.h_vector());
}

fn check(which: Which, path: &str, cert: Option<&Path>, seconds: Option<f64>, order: Option<&str>) -> Result<i32, IoError> {
    let l = load(path)?;
    let k = &l.complex;
    let budget = budget(seconds);
    match which {
        Which::Cm => {
            let v = is_cohen_macaulay(k);
            match &v.witness {
                None => println!("Cohen-Macaulay: all {} links pass", v.faces_checked),
                Some(w) => println!(
                    "not Cohen-Macaulay: link of {} (dim {}) has H~_{} = {}",
                    l.labels.render(&w.face),
                    w.link_dim,
                    w.group.dim,
                    w.group
                ),
            }
            save(cert, &CertificateDoc::cm(&l, &v))?;
            Ok(if v.holds { EXIT_HOLDS } else { EXIT_REFUTED })
        }
        Which::Partition => search_exit(&l, find_partitioning(k, &budget), Property::Partitionable, cert, |p, r| {
            for i in &p.intervals {
                println!("  [{}, {}]", l.labels.render(&i.bottom), l.labels.render(&i.top));
            }
            CertificateDoc::partitioning(&l, p, Some(r))
        }),
        Which::Shell => {
            let abs = absolute(&l, "shelling")?;
            if let Some(text) = order {
                let order = parse_order(&l.labels, text).map_err(|source| IoError::Complex { origin: "--order".into(), source })?;
                return match verify_shelling(abs, &order) {
                    Ok(s) => {
                        println!("valid shelling");
                        print_shelling(&l.labels, &s);
                        save(cert, &CertificateDoc::shelling(&l, &s, None))?;
                        Ok(EXIT_HOLDS)
                    }
                    Err(v) => {
                        println!("not a shelling: {v}");
                        Ok(EXIT_REFUTED)
                    }
                };
            }
            search_exit(&l, find_shelling(abs, &budget), Property::Shellable, cert, |s, r| {
                print_shelling(&l.labels, s);
                CertificateDoc::shelling(&l, s, Some(r))
            })
        }
        Which::Balanced => {
            let abs = absolute(&l, "balancedness")?;
            let b = is_balanced(abs).map_err(|source| IoError::Complex { origin: path.into(), source })?;
            println!("{} ({} nodes)", if b.balanced { "balanced" } else { "not balanced" }, b.nodes);
            save(cert, &CertificateDoc::coloring(&l, b.coloring.as_ref()))?;
            Ok(if b.balanced { EXIT_HOLDS } else { EXIT_REFUTED })
        }
        Which::Homology => {
            let h = reduced_homology(k);
            for g in &h.groups {
                println!("H~_{} = {}", g.dim, g);
            }
            save(cert, &CertificateDoc::homology(&l, &h))?;
            Ok(EXIT_HOLDS)
        }
    }
}

/// Reads `a` in the numbering of `x` by matching vertex names.
fn as_subcomplex_of(x: &Loaded, a: &Loaded) -> Result<SimplicialComplex, IoError> {
    let a_abs = absolute(a, "glue")?;
    let facets = a_abs
        .facets()
        .iter()
        .map(|f| x.labels.face_from_names(&a.labels.face_names(f)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|source| IoError::Complex { origin: "A".into(), source })?;
    Ok(SimplicialComplex::from_facets(facets))
}

fn glue_cmd(x_path: &str, a_path: &str, copies: usize, out: &Path) -> Result<i32, IoError> {
    let x = load(x_path)?;
    let a = load(a_path)?;
    let spec = GlueSpec::new(absolute(&x, "glue")?.clone(), as_subcomplex_of(&x, &a)?, copies).with_labels(x.labels.clone());
    let invalid = |e: crate::glue::GlueError| IoError::Invalid { origin: "glue".into(), message: e.to_string() };
    let g = glue(&spec).map_err(invalid)?;
    let h = check_glue_hypotheses(&spec).map_err(invalid)?;
    let mark = |ok: bool| if ok { "✓" } else { "✗" };
    let induced = match &h.induced.witness {
        None => String::new(),
        Some(w) => format!(" ({} is a minimal face of X outside A)", x.labels.render(w)),
    };
    let codim = h.codimension.map_or("undefined".to_string(), |c| c.to_string());
    println!("{:<24}{}", "X Cohen-Macaulay", mark(h.x_cm.holds));
    println!("{:<24}{}", "A Cohen-Macaulay", mark(h.a_cm.holds));
    println!("{:<24}{}{induced}", "A induced in X", mark(h.induced.induced));
    println!("{:<24}{}", format!("codimension {codim}"), mark(h.codimension_ok()));
    println!("{:<24}{}", format!("N = {} > k = {}", h.copies, h.k), mark(h.pigeonhole()));
    if !h.induced.induced {
        eprintln!("warning: A is not induced in X; the glued complex need not inherit non-partitionability");
    }
    let result = Complex::Absolute(g.complex.clone());
    let mut doc = ComplexDoc::from_complex(&result, &g.labels);
    let provenance: BTreeMap<String, String> = g
        .provenance
        .iter()
        .enumerate()
        .map(|(w, p): (usize, &Provenance)| {
            let original = x.labels.name(p.original).unwrap_or("?");
            let note = match p.copy {
                None => format!("shared vertex {original} of A"),
                Some(i) => format!("vertex {original} of copy {i}"),
            };
            (g.labels.name(w).unwrap_or("?").to_string(), note)
        })
        .collect();
    doc.provenance = Some(provenance);
    write_json(out, &doc)?;
    println!("f = {}; written to {}", fmt_vec(&result.f_vector().0), out.display());
    Ok(EXIT_HOLDS)
}

fn construct(path: &str, order: Option<&str>, cert: &Path) -> Result<i32, IoError> {
    let l = load(path)?;
    let abs = absolute(&l, "constructibility")?;
    let shelling = match order {
        Some(text) => {
            let order = parse_order(&l.labels, text).map_err(|source| IoError::Complex { origin: "--order".into(), source })?;
            match verify_shelling(abs, &order) {
                Ok(s) => s,
                Err(v) => {
                    println!("not a shelling: {v}");
                    return Ok(EXIT_REFUTED);
                }
            }
        }
        None => match find_shelling(abs, &Budget::unlimited()) {
            Ok(SearchOutcome::Found(s, _)) => s,
            Ok(SearchOutcome::Exhausted(_)) => {
                println!("not shellable; no certificate derived");
                return Ok(EXIT_REFUTED);
            }
            Err(e) => return Err(IoError::Invalid { origin: path.into(), message: e.to_string() }),
        },
    };
    let tree = shelling_to_constructibility(abs, &shelling)
        .map_err(|e| IoError::Invalid { origin: path.into(), message: e.to_string() })?;
    println!("constructible: {} join nodes ({} on the spine)", tree.join_nodes(), tree.spine_nodes());
    save(Some(cert), &CertificateDoc::constructibility(&l, &tree))?;
    Ok(EXIT_HOLDS)
}

fn reproduce(filter: &str, skip_slow: bool, seconds: Option<f64>) -> i32 {
    let options = VerifyOptions { budget: budget(seconds), skip_slow };
    let started = Instant::now();
    let results = corpus_verify_all(filter, &options);
    for r in &results {
        println!(
            "{:<10} {:<22} {:<18} {:>8.3}s  {}",
            r.entry,
            r.check,
            r.status.to_string(),
            r.elapsed.as_secs_f64(),
            r.detail
        );
    }
    let failed = results.iter().filter(|r| r.status == Status::Fail).count();
    let over = results.iter().filter(|r| r.status == Status::OverBudget).count();
    println!("{} checks, {} failed, {} over budget, {:.2}s", results.len(), failed, over, started.elapsed().as_secs_f64());
    if failed > 0 {
        EXIT_REFUTED
    } else if over > 0 {
        EXIT_BUDGET
    } else {
        EXIT_HOLDS
    }
}

fn invalid(origin: &str, message: impl Into<String>) -> IoError {
    IoError::Invalid { origin: origin.into(), message: message.into() }
}

fn missing(path: &str, field: &str) -> IoError {
    invalid(path, format!("certificate has no `{field}` field"))
}

/// `Ok(None)` when the certificate checks out, `Ok(Some(reason))` when it does not.
fn verify_doc(path: &str, doc: &CertificateDoc) -> Result<Option<String>, IoError> {
    let l = doc.complex.to_loaded(path)?;
    let k = &l.complex;
    let labels = &l.labels;
    let bad_face = |source| IoError::Complex { origin: path.into(), source };
    Ok(match doc.kind {
        CertKind::Partitioning => {
            let p = partitioning_from_doc(labels, doc.intervals.as_ref().ok_or_else(|| missing(path, "intervals"))?)
                .map_err(bad_face)?;
            verify_partitioning(k, &p).err().map(|v| v.to_string())
        }
        CertKind::Shelling => {
            let order = faces_from_doc(labels, doc.order.as_ref().ok_or_else(|| missing(path, "order"))?).map_err(bad_face)?;
            match verify_shelling(absolute(&l, "shelling")?, &order) {
                Err(v) => Some(v.to_string()),
                Ok(s) => match &doc.restrictions {
                    Some(r) if faces_from_doc(labels, r).map_err(bad_face)? != s.restrictions => {
                        Some("listed restriction faces differ from the recomputed ones".into())
                    }
                    _ => None,
                },
            }
        }
        CertKind::Constructibility => {
            let tree = tree_from_doc(labels, doc.tree.as_ref().ok_or_else(|| missing(path, "tree"))?).map_err(bad_face)?;
            verify_constructibility(absolute(&l, "constructibility")?, &tree).err().map(|v| v.to_string())
        }
        CertKind::Unsat => {
            let property = doc.property.ok_or_else(|| missing(path, "property"))?;
            let claimed = doc.report.as_ref().map(|r| r.nodes_explored);
            let outcome = match property {
                Property::Partitionable => {
                    find_partitioning(k, &Budget::unlimited()).map(|o| (o.is_found(), o.report().nodes_explored))
                }
                Property::Shellable => find_shelling(absolute(&l, "shelling")?, &Budget::unlimited())
                    .map(|o| (o.is_found(), o.report().nodes_explored)),
            }
            .map_err(|e| invalid(path, e.to_string()))?;
            match outcome {
                (true, _) => Some("a certificate exists, so the refutation is false".into()),
                (false, nodes) if claimed.is_some_and(|c| c != nodes) => {
                    Some(format!("search exhausted, but after {nodes} nodes rather than the recorded {}", claimed.unwrap()))
                }
                _ => None,
            }
        }
        CertKind::Cm => {
            let v = is_cohen_macaulay(k);
            let holds = doc.holds.ok_or_else(|| missing(path, "holds"))?;
            let witness = doc.witness.as_ref().map(|w| crate::io::face_from_doc(labels, &w.face)).transpose().map_err(bad_face)?;
            if v.holds != holds {
                Some(format!("recomputed verdict is {}", v.holds))
            } else if witness.is_some() && witness != v.witness.as_ref().map(|w| w.face) {
                Some("witness face differs from the first failing face".into())
            } else {
                None
            }
        }
        CertKind::Homology => {
            let groups = doc.homology.as_ref().ok_or_else(|| missing(path, "homology"))?;
            let got: Vec<GroupDoc> = reduced_homology(k).groups.iter().map(GroupDoc::from).collect();
            (&got != groups).then(|| "homology differs from the recomputed groups".into())
        }
        CertKind::Coloring => {
            let abs = absolute(&l, "balancedness")?;
            match &doc.coloring {
                Some(named) => {
                    let coloring = named
                        .iter()
                        .map(|(n, c)| labels.index_of(n).map(|v| (v, *c)))
                        .collect::<Result<BTreeMap<_, _>, _>>()
                        .map_err(bad_face)?;
                    (!verify_coloring(abs, &coloring)).then(|| "coloring is not proper or not rainbow on every facet".into())
                }
                None => {
                    let b = is_balanced(abs).map_err(bad_face)?;
                    b.balanced.then(|| "a balanced coloring exists".into())
                }
            }
        }
    })
}

fn verify(path: &str) -> Result<i32, IoError> {
    let doc = CertificateDoc::load(path)?;
    match verify_doc(path, &doc)? {
        None => {
            println!("valid {:?} certificate", doc.kind);
            Ok(EXIT_HOLDS)
        }
        Some(reason) => {
            println!("invalid: {reason}");
            Ok(EXIT_REFUTED)
        }
    }
}

fn export(name: &str, out: &Path) -> Result<i32, IoError> {
    let write = |name: &str, path: &Path| -> Result<(), IoError> {
        let entry = corpus_get(name)?;
        let doc = ComplexDoc::from_complex(&entry.complex()?, &entry.labels()?);
        write_json(path, &doc)?;
        println!("{name} -> {}", path.display());
        Ok(())
    };
    if name == "all" {
        std::fs::create_dir_all(out).map_err(|source| IoError::Write { path: out.display().to_string(), source })?;
        for n in NAMES.iter().filter(|n| **n != "tau") {
            write(n, &out.join(format!("{n}.json")))?;
        }
    } else {
        write(name, out)?;
    }
    Ok(EXIT_HOLDS)
}

pub fn execute(cli: Cli) -> i32 {
    if let Some(n) = cli.threads {
        // a second initialisation in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let result = match &cli.command {
        Command::Info { path } => info(path),
        Command::Check { which, path, cert, budget, order } => {
            check(*which, path, cert.as_deref(), *budget, order.as_deref())
        }
        Command::Glue { x, a, copies, out } => glue_cmd(x, a, *copies, out),
        Command::Construct { path, order, cert } => construct(path, order.as_deref(), cert),
        Command::Reproduce { filter, skip_slow, budget } => Ok(reproduce(filter.as_deref().unwrap_or(""), *skip_slow, *budget)),
        Command::Verify { cert } => verify(cert),
        Command::Export { name, out } => export(name, out),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        EXIT_ERROR
    })
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_HOLDS };
            let _ = e.print();
            code
        }
    }
}
