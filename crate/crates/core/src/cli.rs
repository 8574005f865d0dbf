//! The `kmorbits` command line.
//!
//! Every index printed here is 1-based. JSON documents carry a `schema`
//! field. Exit status is 0 on success, 1 on a domain error and 2 on a usage
//! or input error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::dynkin::{is_complete, Arrow, DynkinDiagram, EdgeKind, Skeleton};
use crate::error::Error;
use crate::fixedpoints::{fixed_roots, transitivity_report};
use crate::fixtures::{fixture, NAMES};
use crate::gcm::GeneralizedCartanMatrix;
use crate::imaginary::{orbit_census, HyperboloidQuery};
use crate::orbitgraph::build_orbit_graph;
use crate::orbits::{generate_real_roots, orbit_partition};
use crate::roots::Rational;
use crate::SCHEMA;

#[derive(Parser, Debug)]
#[command(
    name = "kmorbits",
    version,
    about = "Weyl group orbits on Kac-Moody root systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the generalized Cartan matrix axioms.
    Validate {
        /// Fixture name or path to a JSON matrix file.
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Type, symmetrizer and Coxeter matrix.
    Classify {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Components of the skeleton (single edges only).
    Skeleton {
        input: String,
        /// Emit the Dynkin diagram and the skeleton as DOT.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Orbit classes of the simple roots.
    Orbits {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Real roots generated inside the sup-norm box.
    Roots {
        input: String,
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        json: bool,
    },
    /// The orbit graph on generated real roots.
    Graph {
        input: String,
        #[arg(long)]
        bound: u64,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
    /// Real roots fixed by simple reflections, and transitivity.
    Fixed {
        input: String,
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        json: bool,
    },
    /// Orbit census of imaginary roots of a given norm.
    Imaginary {
        input: String,
        /// Norm value, an integer or `p/q`, at most 0.
        #[arg(long, allow_hyphen_values = true)]
        norm: String,
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        json: bool,
    },
    /// List the built-in matrices.
    Fixtures,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

enum Failure {
    Usage(String),
    Domain(Error),
    /// A domain error whose report still goes to stdout.
    Reported(String, Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

#[derive(Deserialize)]
struct MatrixFile {
    #[allow(dead_code)]
    name: Option<String>,
    matrix: Vec<Vec<i64>>,
}

/// Runs the command line with `args` (including the program name) and
/// returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Reported(text, e)) => {
            let _ = out.write_all(text.as_bytes());
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn load_rows(input: &str) -> Result<Vec<Vec<i64>>, Failure> {
    if let Some(a) = fixture(input) {
        return Ok(a.rows().to_vec());
    }
    let text = std::fs::read_to_string(input).map_err(|e| {
        Failure::Usage(format!(
            "{input:?} is neither a fixture name nor a readable file ({e})"
        ))
    })?;
    let file: MatrixFile = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("malformed matrix file {input:?}: {e}")))?;
    Ok(file.matrix)
}

fn load(input: &str) -> Result<GeneralizedCartanMatrix, Failure> {
    Ok(GeneralizedCartanMatrix::new(load_rows(input)?)?)
}

fn to_json(v: Value) -> String {
    let mut s = serde_json::to_string(&v).expect("json value serializes");
    s.push('\n');
    s
}

fn one_based(classes: &[Vec<usize>]) -> Vec<Vec<usize>> {
    classes
        .iter()
        .map(|c| c.iter().map(|i| i + 1).collect())
        .collect()
}

fn execute(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Validate { input, json } => validate(&input, json),
        Command::Classify { input, json } => classify(&input, json),
        Command::Skeleton { input, dot, json } => skeleton(&input, dot, json),
        Command::Orbits { input, json } => {
            let p = orbit_partition(&load(&input)?);
            Ok(if json {
                to_json(json!({ "schema": SCHEMA, "classes": one_based(&p.classes) }))
            } else {
                format!("{}\n", p.to_text())
            })
        }
        Command::Roots { input, bound, json } => roots(&input, bound, json),
        Command::Graph {
            input,
            bound,
            format,
        } => {
            let g = build_orbit_graph(&load(&input)?, bound)?;
            Ok(match format {
                GraphFormat::Dot => g.export_dot(),
                GraphFormat::Json => g.export_json() + "\n",
            })
        }
        Command::Fixed { input, bound, json } => fixed(&input, bound, json),
        Command::Imaginary {
            input,
            norm,
            bound,
            json,
        } => imaginary(&input, &norm, bound, json),
        Command::Fixtures => Ok(NAMES.iter().map(|n| format!("{n}\n")).collect()),
    }
}

fn validate(input: &str, json: bool) -> Result<String, Failure> {
    let verdict = GeneralizedCartanMatrix::new(load_rows(input)?);
    match (verdict, json) {
        (Ok(a), false) => Ok(format!(
            "valid generalized Cartan matrix of rank {}\n",
            a.rank()
        )),
        (Ok(a), true) => Ok(to_json(
            json!({ "schema": SCHEMA, "valid": true, "rank": a.rank() }),
        )),
        (Err(e), false) => Err(e.into()),
        (Err(e), true) => Err(Failure::Reported(
            to_json(json!({ "schema": SCHEMA, "valid": false, "reason": e.to_string() })),
            e,
        )),
    }
}

fn classify(input: &str, json: bool) -> Result<String, Failure> {
    let a = load(input)?;
    let kind = match a.classify() {
        Ok(t) => Some(t),
        Err(Error::Decomposable) => None,
        Err(e) => return Err(e.into()),
    };
    let symmetrizer = match a.symmetrizer() {
        Ok(q) => Some(q),
        Err(Error::NotSymmetrizable) => None,
        Err(e) => return Err(e.into()),
    };
    let coxeter = a.coxeter_matrix();
    let det = a.determinant();
    let mrank = a.matrix_rank();
    if json {
        let det_value: Value = match i64::try_from(&det) {
            Ok(d) => d.into(),
            Err(_) => det.to_string().into(),
        };
        return Ok(to_json(json!({
            "schema": SCHEMA,
            "rank": a.rank(),
            "type": kind,
            "blocks": one_based(&a.blocks()),
            "symmetrizer": symmetrizer,
            "coxeter": coxeter,
            "determinant": det_value,
            "matrix_rank": mrank,
            "cartan_dim": 2 * a.rank() - mrank,
        })));
    }
    let mut s = String::new();
    let _ = writeln!(s, "matrix: {a}");
    match kind {
        Some(t) => {
            let _ = writeln!(s, "type: {t}");
        }
        None => {
            let blocks = crate::orbits::OrbitPartition {
                classes: a.blocks(),
                class_of: Vec::new(),
            };
            let _ = writeln!(s, "type: decomposable, blocks {}", blocks.to_text());
        }
    }
    match symmetrizer {
        Some(q) => {
            let _ = writeln!(s, "symmetrizer: {q}");
        }
        None => s.push_str("symmetrizer: not symmetrizable\n"),
    }
    let _ = writeln!(s, "coxeter: {coxeter}");
    let _ = writeln!(s, "determinant: {det}");
    let _ = writeln!(s, "matrix rank: {mrank}");
    let _ = writeln!(s, "cartan dim: {}", 2 * a.rank() - mrank);
    Ok(s)
}

fn edge_json(e: &crate::dynkin::DynkinEdge) -> Value {
    let (i, j) = (e.i + 1, e.j + 1);
    match e.kind {
        EdgeKind::Plain {
            multiplicity,
            arrow,
        } => {
            let arrow: Value = match arrow {
                None => Value::Null,
                Some(Arrow::Both) => "both".into(),
                Some(Arrow::Toward(v)) => (v + 1).into(),
            };
            json!({ "i": i, "j": j, "kind": "plain", "multiplicity": multiplicity, "arrow": arrow })
        }
        EdgeKind::Bold { labels } => {
            json!({ "i": i, "j": j, "kind": "bold", "labels": [labels.0, labels.1] })
        }
    }
}

fn skeleton(input: &str, dot: bool, json: bool) -> Result<String, Failure> {
    let a = load(input)?;
    let sk = Skeleton::new(&a);
    let diagram = DynkinDiagram::new(&a);
    if dot {
        return Ok(diagram.to_dot() + &sk.to_dot());
    }
    let completeness = is_complete(&a);
    if json {
        let pairs = |v: &[(usize, usize)]| -> Vec<[usize; 2]> {
            v.iter().map(|&(i, j)| [i + 1, j + 1]).collect()
        };
        return Ok(to_json(json!({
            "schema": SCHEMA,
            "edges": pairs(&sk.edges),
            "components": one_based(&sk.components),
            "connected": sk.is_connected(),
            "diagram": diagram.edges.iter().map(edge_json).collect::<Vec<_>>(),
            "complete": completeness.complete,
            "missing_pairs": pairs(&completeness.missing_pairs),
        })));
    }
    let p = orbit_partition(&a);
    let edges: Vec<String> = sk
        .edges
        .iter()
        .map(|&(i, j)| format!("{}-{}", i + 1, j + 1))
        .collect();
    Ok(format!(
        "components: {}\nedges: {}\nconnected: {}\ncomplete: {}\n",
        p.to_text(),
        if edges.is_empty() {
            "none".to_string()
        } else {
            edges.join(" ")
        },
        sk.is_connected(),
        completeness.complete,
    ))
}

fn roots(input: &str, bound: u64, json: bool) -> Result<String, Failure> {
    let set = generate_real_roots(&load(input)?, bound)?;
    if json {
        return Ok(to_json(json!({
            "schema": SCHEMA,
            "bound": bound,
            "frontier_complete": set.frontier_complete,
            "roots": set.roots,
        })));
    }
    let mut s = format!(
        "{} real roots within bound {} (frontier complete: {})\n",
        set.len(),
        bound,
        set.frontier_complete
    );
    for r in &set.roots {
        let _ = writeln!(s, "{r}");
    }
    Ok(s)
}

fn fixed(input: &str, bound: u64, json: bool) -> Result<String, Failure> {
    let a = load(input)?;
    let report = fixed_roots(&a, bound)?;
    let t = transitivity_report(&a, bound)?;
    if json {
        let pairs: Vec<Value> = report
            .pairs
            .iter()
            .map(|(r, i)| json!({ "root": r, "reflection": i + 1 }))
            .collect();
        return Ok(to_json(json!({
            "schema": SCHEMA,
            "bound": bound,
            "fixed": pairs,
            "transitive": t.transitive,
            "simply_transitive_possible": t.simply_transitive_possible,
            "fixed_roots_found": t.fixed_roots_found,
        })));
    }
    let mut s = format!(
        "{} fixed roots within bound {}\n",
        report.pairs.len(),
        bound
    );
    for (r, i) in &report.pairs {
        let _ = writeln!(s, "{r} fixed by w_{}", i + 1);
    }
    let _ = writeln!(s, "transitive: {}", t.transitive);
    let _ = writeln!(
        s,
        "simply transitive possible: {}",
        t.simply_transitive_possible
    );
    let _ = writeln!(s, "fixed roots found: {}", t.fixed_roots_found);
    Ok(s)
}

fn imaginary(input: &str, norm: &str, bound: u64, json: bool) -> Result<String, Failure> {
    let a = load(input)?;
    let value: Rational = norm.trim().parse().map_err(|_| {
        Failure::Usage(format!("invalid norm {norm:?}; expected an integer or p/q"))
    })?;
    let census = orbit_census(&a, &HyperboloidQuery::new(value, bound)?)?;
    if json {
        return Ok(census.to_json() + "\n");
    }
    let mut s = format!(
        "norm {}, bound {}\norbit count: {}\nlattice point bound: {}\ntruncated: {}\n",
        census.norm_value,
        census.bound,
        census.orbit_count,
        census.lattice_point_bound,
        census.truncated
    );
    for r in &census.representatives {
        let _ = writeln!(s, "{r}");
    }
    Ok(s)
}
