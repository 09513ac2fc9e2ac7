//! The `clustertilt` command line: building categories, enumerating and
//! classifying tilting objects, drawing AR quivers and running the
//! verification suites.

pub mod cache;
pub mod report;
pub mod suites;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use clustertilt::category::ObjectKind;
use clustertilt::cta;
use clustertilt::diagram;
use clustertilt::dn::{DnRowInfo, RowClass};
use clustertilt::quiver::{classify_shape_d, DShapeReport, QuiverDoc};
use clustertilt::{DynkinSpec, Error, Family, Quiver};
use serde::Serialize;

use report::VerifyOutput;
use suites::Context;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "clustertilt", version, about = "Cluster categories of Dynkin type and their cluster-tilted algebras")]
pub struct Cli {
    /// Cache directory for Hom tables and tilting lists.
    #[arg(long, global = true, env = "CLUSTERTILT_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct TypeArgs {
    /// A, D, E6, E7 or E8.
    #[arg(long = "type")]
    pub kind: String,
    #[arg(long)]
    pub rank: Option<usize>,
    /// Arrow list such as `1>3,2>3,3>4` (1-based diagram vertices).
    #[arg(long)]
    pub orientation: Option<String>,
}

impl TypeArgs {
    pub fn spec(&self) -> clustertilt::Result<DynkinSpec> {
        let spec = DynkinSpec::from_type(&self.kind, self.rank)?;
        match &self.orientation {
            Some(o) => spec.with_orientation(o),
            None => Ok(spec),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Grid,
    Graph,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Objects,
    ExtSupport,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the cluster category and write its objects.
    Build {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mutate a quiver file at a vertex.
    Mutate {
        /// Quiver file `{"vertices": n, "arrows": [[s, t], ...]}`.
        #[arg(long)]
        quiver: PathBuf,
        /// 1-based vertex.
        #[arg(long)]
        vertex: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List all cluster-tilting objects.
    Enumerate {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyse the cluster-tilted algebra of every tilting object.
    Classify {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the AR quiver, optionally marking the Ext-support of an object.
    Diagram {
        #[command(flatten)]
        ty: TypeArgs,
        /// Object name such as `row:3,col:2` or `P1[1]`.
        #[arg(long)]
        object: Option<String>,
        #[arg(long, value_enum, default_value = "objects")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "grid")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long = "type")]
        kind: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        orientation: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Outcome of a command: text for stdout or the output file, and an exit code.
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Argument(_) => EXIT_USAGE,
        _ => EXIT_INTERNAL,
    }
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(format!("cannot write stdout: {e}")),
                _ => Ok(()),
            }
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("document serializes") + "\n"
}

/// Parses and runs; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    if let Some(j) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    let out = match &cli.command {
        Command::Build { out, .. }
        | Command::Mutate { out, .. }
        | Command::Enumerate { out, .. }
        | Command::Classify { out, .. }
        | Command::Diagram { out, .. }
        | Command::Verify { out, .. } => out.clone(),
    };
    match execute(&cli) {
        Ok(o) => match write_out(out.as_deref(), &o.output) {
            Ok(()) => o.code,
            Err(msg) => {
                eprintln!("error: {msg}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

#[derive(Serialize)]
struct ObjectRecord {
    id: usize,
    name: String,
    kind: &'static str,
    column: i64,
    row: usize,
    tau: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    dimension_vector: Option<Vec<u32>>,
    middle_terms: usize,
}

#[derive(Serialize)]
struct CategoryDoc {
    spec: String,
    orientation: String,
    objects: Vec<ObjectRecord>,
}

#[derive(Serialize)]
struct TiltingRecord {
    id: usize,
    summands: Vec<String>,
}

#[derive(Serialize)]
struct TiltingDoc {
    spec: String,
    orientation: String,
    count: usize,
    tilting: Vec<TiltingRecord>,
}

#[derive(Serialize)]
struct AlgebraRecord {
    id: usize,
    summands: Vec<String>,
    quiver: QuiverDoc,
    relations: cta::RelationSet,
    total_dim: usize,
    sb: bool,
    sb_witness: Option<String>,
    gentle: bool,
    alpha: usize,
    beta: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    row_classes: Option<Vec<RowClass>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    shape: Option<DShapeReport>,
}

#[derive(Serialize)]
struct ClassifyDoc {
    spec: String,
    orientation: String,
    tilting_count: usize,
    sb_count: usize,
    gentle_count: usize,
    max_beta: usize,
    algebras: Vec<AlgebraRecord>,
}

pub fn execute(cli: &Cli) -> clustertilt::Result<Outcome> {
    let ctx = Context::new(cli.cache_dir.clone());
    let ok = |output: String| Ok(Outcome { output, code: EXIT_PASS });
    match &cli.command {
        Command::Build { ty, .. } => {
            let spec = ty.spec()?;
            let l = ctx.load(&spec)?;
            let c = &l.category;
            let objects = (0..c.len())
                .map(|x| {
                    let (column, row) = c.coordinate(x);
                    let (kind, dimension_vector) = match c.kind(x) {
                        ObjectKind::Module(m) => ("module", Some(c.module_category().module(m).dimv.clone())),
                        ObjectKind::ShiftedProjective(_) => ("shifted projective", None),
                    };
                    ObjectRecord {
                        id: x,
                        name: c.name(x),
                        kind,
                        column,
                        row: row + 1,
                        tau: c.name(c.tau(x)),
                        dimension_vector,
                        middle_terms: c.alpha_count(x),
                    }
                })
                .collect();
            ok(json(&CategoryDoc { spec: spec.label(), orientation: spec.orientation_string(), objects }))
        }
        Command::Mutate { quiver, vertex, .. } => {
            let text = fs::read_to_string(quiver)
                .map_err(|e| Error::Argument(format!("cannot read {}: {e}", quiver.display())))?;
            let q = Quiver::from_json(&text)?;
            if *vertex == 0 || *vertex > q.vertex_count() {
                return Err(Error::Argument(format!("vertex {vertex} out of range 1..={}", q.vertex_count())));
            }
            ok(json(&q.mutate(vertex - 1)?.to_doc()))
        }
        Command::Enumerate { ty, .. } => {
            let spec = ty.spec()?;
            let l = ctx.load(&spec)?;
            let tilting = l
                .tilting
                .iter()
                .enumerate()
                .map(|(id, t)| TiltingRecord { id, summands: t.names(&l.category) })
                .collect();
            ok(json(&TiltingDoc {
                spec: spec.label(),
                orientation: spec.orientation_string(),
                count: l.tilting.len(),
                tilting,
            }))
        }
        Command::Classify { ty, .. } => {
            let spec = ty.spec()?;
            let l = ctx.load(&spec)?;
            let c = &l.category;
            let info = if spec.family() == Family::D { Some(DnRowInfo::build(c)?) } else { None };
            let mut algebras = Vec::new();
            for (id, a) in l.algebras()?.iter().enumerate() {
                algebras.push(AlgebraRecord {
                    id,
                    summands: a.tilting.names(c),
                    quiver: a.quiver.to_doc(),
                    relations: a.relations.clone(),
                    total_dim: a.total_dim,
                    sb: a.sb.special_biserial,
                    sb_witness: a.sb.witness.clone(),
                    gentle: a.gentle,
                    alpha: a.alpha,
                    beta: a.beta,
                    row_classes: info.as_ref().map(|i| a.tilting.summands.iter().map(|&x| i.row_class(x)).collect()),
                    shape: match info {
                        Some(_) => Some(classify_shape_d(&a.quiver)?),
                        None => None,
                    },
                });
            }
            ok(json(&ClassifyDoc {
                spec: spec.label(),
                orientation: spec.orientation_string(),
                tilting_count: algebras.len(),
                sb_count: algebras.iter().filter(|a| a.sb).count(),
                gentle_count: algebras.iter().filter(|a| a.gentle).count(),
                max_beta: algebras.iter().map(|a| a.beta).max().unwrap_or(0),
                algebras,
            }))
        }
        Command::Diagram { ty, object, mode, format, .. } => {
            let spec = ty.spec()?;
            let l = ctx.load(&spec)?;
            let c = &l.category;
            let marks = match mode {
                Mode::Objects => diagram::object_marks(c),
                Mode::ExtSupport => {
                    let name = object
                        .as_deref()
                        .ok_or_else(|| Error::Argument("--mode ext-support needs --object".into()))?;
                    let m = c.parse_name(name).ok_or_else(|| Error::Argument(format!("no object named {name:?}")))?;
                    diagram::ext_support_marks(c, m)
                }
            };
            ok(match format {
                Format::Grid => diagram::grid(c, &marks),
                Format::Graph => diagram::dot(c, &marks),
                Format::Text => diagram::listing(c, &marks),
            })
        }
        Command::Verify { suite, kind, rank, orientation, .. } => {
            let spec = match kind {
                Some(k) => Some(TypeArgs { kind: k.clone(), rank: *rank, orientation: orientation.clone() }.spec()?),
                None if rank.is_some() || orientation.is_some() => {
                    return Err(Error::Argument("--rank and --orientation need --type".into()))
                }
                None => None,
            };
            let start = Instant::now();
            let reports = suites::run(&ctx, suite, spec.as_ref())?;
            for r in &reports {
                eprintln!("{:<20} {:<4} {} ({:.2?})", r.suite, r.spec, r.verdict, r.runtime);
            }
            let doc = VerifyOutput::new(reports);
            eprintln!("{} in {:.2?}", doc.verdict, start.elapsed());
            let code = if doc.verdict == "pass" { EXIT_PASS } else { EXIT_FAIL };
            Ok(Outcome { output: doc.to_json(), code })
        }
    }
}
