//! Command-line front end. `run` parses an argument vector and returns a
//! [`CommandResult`]; the binary only prints it and maps the status to an
//! exit code.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::milnorlattice::{
    brieskorn_signature_oracle, embedding_delta, intersection_matrix, lattice_invariants,
    stein_handles, IntersectionLattice, LatticeInvariants,
};
use crate::monodromy::{
    boundary_twist_word, lefschetz_invariants, milnor_fiber_word, substitute, torus_link_word,
    LefschetzFibration, WordDocument,
};
use crate::resolution::{
    chain_singularity_resolution, fermat_resolution_graph, torus_link_resolution_graph,
    validate_s3, ChainParity,
};
use crate::selftest;
use crate::surfaces::{build_chain, build_packing, torus_link_fiber};
use crate::surgery::{
    apply_gc, format_table, gc_surgery_delta, sp_fibration_table, Direction, FourManifoldInvariants,
};
use crate::twistrep::{verify_relation, RelationId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    VerificationFailed,
    InvalidInput,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::VerificationFailed => 1,
            Status::InvalidInput => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Json(Value),
    Text(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Payload,
}

impl CommandResult {
    fn ok(payload: Payload) -> Self {
        CommandResult {
            status: Status::Ok,
            payload,
        }
    }

    fn invalid(message: impl Into<String>) -> Self {
        CommandResult {
            status: Status::InvalidInput,
            payload: Payload::Json(json!({ "error": message.into() })),
        }
    }

    pub fn json(&self) -> Option<&Value> {
        match &self.payload {
            Payload::Json(v) => Some(v),
            Payload::Text(_) => None,
        }
    }

    /// Rendered output, newline terminated.
    pub fn render(&self) -> String {
        match &self.payload {
            Payload::Json(v) => {
                let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
                s.push('\n');
                s
            }
            Payload::Text(t) => t.clone(),
        }
    }

    /// Invalid-input reports go to stderr, everything else to stdout.
    pub fn emit(&self) {
        if self.status == Status::InvalidInput {
            eprint!("{}", self.render());
        } else {
            print!("{}", self.render());
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "brieskorn",
    version,
    about = "Milnor fibers of Brieskorn singularities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Intersection lattice of M(p,q,r) and its invariants
    Lattice {
        p: usize,
        q: usize,
        r: usize,
        #[arg(long, conflicts_with = "matrix")]
        json: bool,
        /// Print the gram matrix as plain text
        #[arg(long)]
        matrix: bool,
    },
    /// Lattice-point signature count compared with the matrix signature
    Oracle { p: usize, q: usize, r: usize },
    /// Check a twist relation on homology
    #[command(subcommand)]
    Relation(RelationCmd),
    /// Twist words for Lefschetz fibrations
    #[command(subcommand)]
    Word(WordCmd),
    /// Curve systems as JSON
    #[command(subcommand)]
    Curves(CurvesCmd),
    /// Replace an occurrence of a pattern in a word
    Substitute(SubstituteArgs),
    /// Generalized chain surgery bookkeeping
    #[command(subcommand)]
    Surgery(SurgeryCmd),
    /// Lefschetz fibrations on S_p # p CP^2-bar
    SpTable {
        p_max: i64,
        /// Aligned text instead of JSON
        #[arg(long)]
        text: bool,
    },
    /// Resolution graphs
    Resolve(ResolveArgs),
    /// Legendrian handle data for M(p,q,r)
    Stein { p: usize, q: usize, r: usize },
    /// Stein embedding M(p,q,r) into M(p',q',r')
    Embed {
        p: usize,
        q: usize,
        r: usize,
        p2: usize,
        q2: usize,
        r2: usize,
    },
    /// Run every consistency check
    Selftest,
}

#[derive(Debug, Subcommand)]
enum RelationCmd {
    /// Generalized chain relation over a (p-1)x(p-1) packing
    Gchain { p: usize },
    /// Chain relation for a 2g-chain
    ChainEven { g: usize },
    /// Chain relation for a (2g+1)-chain
    ChainOdd { g: usize },
}

#[derive(Debug, Subcommand)]
enum WordCmd {
    /// phi_{p,q}^r on M(p,q,r)
    Milnor { p: usize, q: usize, r: usize },
    /// Boundary twists on the minimal resolution of x^p+y^p+z^p
    Boundary { p: usize },
    /// phi_{p,q} of the (p,q) torus link
    Torus { p: usize, q: usize },
}

#[derive(Debug, Subcommand)]
enum CurvesCmd {
    Packing { rows: usize, cols: usize },
    Chain { m: usize },
}

#[derive(Debug, Args)]
struct SubstituteArgs {
    #[arg(long)]
    word: PathBuf,
    #[arg(long)]
    pattern: PathBuf,
    #[arg(long)]
    replacement: PathBuf,
    /// Which occurrence of the pattern to replace (0-based)
    #[arg(long, default_value_t = 0)]
    at: usize,
}

#[derive(Debug, Subcommand)]
enum SurgeryCmd {
    /// Blow-up deltas for degree p
    Delta { p: i64 },
    /// Apply a blow-up or blow-down to (e, sigma)
    #[command(allow_negative_numbers = true)]
    Apply {
        #[arg(long, allow_negative_numbers = true)]
        euler: i64,
        #[arg(long, allow_negative_numbers = true)]
        sigma: i64,
        #[arg(
            long,
            value_name = "P",
            conflicts_with = "blowup",
            required_unless_present = "blowup"
        )]
        blowdown: Option<i64>,
        #[arg(long, value_name = "P")]
        blowup: Option<i64>,
    },
}

#[derive(Debug, Args)]
struct ResolveArgs {
    #[command(subcommand)]
    which: ResolveCmd,
    /// Graphviz output
    #[arg(long, global = true)]
    dot: bool,
}

#[derive(Debug, Subcommand)]
enum ResolveCmd {
    /// Embedded resolution of x^p + y^q
    TorusLink { p: i64, q: i64 },
    /// Minimal resolution of x^p + y^p + z^p
    Fermat { p: i64 },
    /// Resolution matching a chain relation
    Chain {
        g: u64,
        #[arg(long, conflicts_with = "odd", required_unless_present = "odd")]
        even: bool,
        #[arg(long)]
        odd: bool,
    },
}

pub fn run<S: AsRef<str>>(argv: &[S]) -> CommandResult {
    let cli = match Cli::try_parse_from(argv.iter().map(AsRef::as_ref)) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    CommandResult::ok(Payload::Text(e.to_string()))
                }
                _ => CommandResult::invalid(e.to_string()),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(result) => result,
        Err(e) => CommandResult::invalid(e.to_string()),
    }
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report types serialize")
}

fn json_ok<T: Serialize>(value: &T) -> Result<CommandResult> {
    Ok(CommandResult::ok(Payload::Json(to_json(value))))
}

fn verdict(pass: bool, value: Value) -> Result<CommandResult> {
    Ok(CommandResult {
        status: if pass {
            Status::Ok
        } else {
            Status::VerificationFailed
        },
        payload: Payload::Json(value),
    })
}

#[derive(Serialize)]
struct LatticeReport<'a> {
    #[serde(flatten)]
    lattice: &'a IntersectionLattice,
    #[serde(flatten)]
    invariants: &'a LatticeInvariants,
}

#[derive(Serialize)]
struct WordReport<'a> {
    #[serde(flatten)]
    fibration: &'a LefschetzFibration,
    letter_count: usize,
    euler: i64,
}

fn word_report(fib: &LefschetzFibration) -> Result<CommandResult> {
    json_ok(&WordReport {
        fibration: fib,
        letter_count: fib.word.len(),
        euler: lefschetz_invariants(fib).euler,
    })
}

fn read_word(path: &Path) -> Result<WordDocument> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    WordDocument::parse(&text)
}

fn dispatch(command: Command) -> Result<CommandResult> {
    match command {
        Command::Lattice {
            p,
            q,
            r,
            json: _,
            matrix,
        } => {
            let lattice = intersection_matrix(p, q, r)?;
            if matrix {
                return Ok(CommandResult::ok(Payload::Text(lattice.gram.to_string())));
            }
            let invariants = lattice_invariants(&lattice.gram)?;
            json_ok(&LatticeReport {
                lattice: &lattice,
                invariants: &invariants,
            })
        }
        Command::Oracle { p, q, r } => {
            let oracle = brieskorn_signature_oracle(p, q, r);
            let matrix = intersection_matrix(p, q, r)?.invariants().signature;
            verdict(
                oracle == matrix,
                json!({
                    "p": p, "q": q, "r": r,
                    "oracle_signature": oracle,
                    "matrix_signature": matrix,
                    "pass": oracle == matrix,
                }),
            )
        }
        Command::Relation(cmd) => {
            let id = match cmd {
                RelationCmd::Gchain { p } => RelationId::GeneralizedChain { p },
                RelationCmd::ChainEven { g } => RelationId::ChainEven { g },
                RelationCmd::ChainOdd { g } => RelationId::ChainOdd { g },
            };
            let report = verify_relation(id)?;
            verdict(report.pass, to_json(&report))
        }
        Command::Word(cmd) => match cmd {
            WordCmd::Milnor { p, q, r } => word_report(&milnor_fiber_word(p, q, r)?),
            WordCmd::Boundary { p } => word_report(&boundary_twist_word(p)?),
            WordCmd::Torus { p, q } => {
                let doc = WordDocument {
                    fiber: torus_link_fiber(p as u64, q as u64)?,
                    word: torus_link_word(p, q)?,
                };
                json_ok(&doc)
            }
        },
        Command::Curves(cmd) => match cmd {
            CurvesCmd::Packing { rows, cols } => json_ok(&build_packing(rows, cols)?),
            CurvesCmd::Chain { m } => json_ok(&build_chain(m)?),
        },
        Command::Substitute(args) => {
            let word = read_word(&args.word)?;
            let pattern = read_word(&args.pattern)?;
            let replacement = read_word(&args.replacement)?;
            let out = substitute(&word.word, &pattern.word, &replacement.word, args.at)?;
            json_ok(&WordDocument {
                fiber: word.fiber,
                word: out,
            })
        }
        Command::Surgery(cmd) => match cmd {
            SurgeryCmd::Delta { p } => {
                let up = gc_surgery_delta(p)?;
                json_ok(&json!({
                    "p": p,
                    "blowup": up,
                    "blowdown": up.negate(),
                }))
            }
            SurgeryCmd::Apply {
                euler,
                sigma,
                blowdown,
                blowup,
            } => {
                let (direction, p) = match (blowdown, blowup) {
                    (Some(p), None) => (Direction::Blowdown, p),
                    (None, Some(p)) => (Direction::Blowup, p),
                    _ => {
                        return Ok(CommandResult::invalid(
                            "give exactly one of --blowdown/--blowup",
                        ))
                    }
                };
                json_ok(&apply_gc(
                    FourManifoldInvariants::new(euler, sigma),
                    direction,
                    p,
                )?)
            }
        },
        Command::SpTable { p_max, text } => {
            let rows = sp_fibration_table(p_max)?;
            if text {
                Ok(CommandResult::ok(Payload::Text(format_table(&rows))))
            } else {
                json_ok(&rows)
            }
        }
        Command::Resolve(args) => {
            let graph = match args.which {
                ResolveCmd::TorusLink { p, q } => torus_link_resolution_graph(p, q)?,
                ResolveCmd::Fermat { p } => fermat_resolution_graph(p)?,
                ResolveCmd::Chain { g, even, .. } => chain_singularity_resolution(
                    g,
                    if even {
                        ChainParity::Even
                    } else {
                        ChainParity::Odd
                    },
                )?,
            };
            if args.dot {
                return Ok(CommandResult::ok(Payload::Text(graph.to_dot())));
            }
            let mut value = to_json(&graph);
            if graph.vertices.iter().all(|v| v.genus == 0) {
                value["s3_unimodular"] = json!(validate_s3(&graph));
            }
            Ok(CommandResult::ok(Payload::Json(value)))
        }
        Command::Stein { p, q, r } => json_ok(&stein_handles(p, q, r)?),
        Command::Embed {
            p,
            q,
            r,
            p2,
            q2,
            r2,
        } => {
            let delta = embedding_delta([p, q, r], [p2, q2, r2])?;
            verdict(delta.principal_sublattice, to_json(&delta))
        }
        Command::Selftest => {
            let checks = selftest::run_all();
            let pass = checks.iter().all(|c| c.pass);
            verdict(pass, json!({ "checks": checks, "pass": pass }))
        }
    }
}
