//! Batch command-line front end over JSON inputs.
//!
//! Every run reads one JSON value (from `--input` or stdin), executes one
//! subcommand, and prints a deterministic machine-readable report. Exit
//! codes: 0 when the checked condition holds (or a construction succeeds),
//! 1 when a condition fails (the report carries the witness), 2 on input
//! errors. Variable and vertex indices are 1-based on the wire.

use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use volpoly::poly::Exponent;
use volpoly::rat::format_rational;
use volpoly::{
    bivariate_lorentzian, certify, falsify_definition, kostka, kt_scan, normalized_schur,
    one_positive_condition, principal_4x4_condition, rkt_scan, t2_plucker_condition,
    triangle_condition, BodyCollection, Graph, HomogeneousPoly, MConvexSet, MonomialOperator,
    PairVector, PolymatroidRank, PrimeFieldMatrix, ProjectionMode, RationalPolytope,
    TriangleVerdict, YoungDiagram,
};

/// Vertex budget for one exact volume call.
const VERTEX_CAP: usize = 60;

#[derive(Parser)]
#[command(
    name = "volpoly",
    version,
    about = "Exact checks for log-concave polynomial classes, mixed volumes, and polymatroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input file with the JSON payload; stdin when absent.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Include wall-clock timing in the report (off by default so that
    /// identical inputs give byte-identical reports).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Certify the Lorentzian property of a polynomial.
    CheckLorentzian,
    /// Sample the defining inequality, looking for a violating direction tuple.
    Falsify {
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the symmetric basis exchange property of a point set.
    CheckMconvex,
    /// Rank function of an M-convex set.
    RankBases,
    /// Basis set of a polymatroid rank table.
    BasesRank,
    /// Reflect an M-convex set in a dominating vector.
    Dual {
        /// Comma-separated dominating vector, e.g. "2,2,2".
        #[arg(long)]
        mu: String,
    },
    /// Spanning-tree matroid of a connected graph.
    Graphic,
    /// Column matroid of a matrix over a prime field or the rationals.
    LinearMatroid,
    /// Basis generating polynomial of an M-convex set.
    BasisPoly,
    /// Volume polynomial of a collection of convex bodies.
    VolumePoly,
    /// One mixed volume of a collection, at a multiplicity vector.
    MixedVolume {
        /// Comma-separated multiplicities summing to the dimension.
        #[arg(long)]
        alpha: String,
    },
    /// Coordinate projection of a polytope, with its hull volume.
    Project {
        /// Comma-separated 1-based coordinate indices.
        #[arg(long)]
        coords: String,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Four-index realizability: the exact triangle condition.
    Realizable4,
    /// Matrix conditions on a pair vector (five or more indices).
    ConditionN5 {
        #[arg(long, value_enum)]
        condition: Condition,
    },
    /// Normalized Schur polynomial from {"parts": [...], "num_vars": n}.
    Schur,
    /// Kostka number from {"parts": [...], "weight": [...]}.
    Kostka,
    /// The 28-term basis generating cubic of the seven-point plane.
    Fano,
    /// Apply a deletion/contraction chain, e.g. --chain "contract:5,delete:5".
    Minors {
        #[arg(long)]
        chain: String,
    },
    /// Symbol of a monomial operator.
    Symbol,
    /// Scan the reverse coefficient inequality over variable triples.
    RktScan,
    /// Scan the forward (log-concavity) coefficient inequality.
    KtScan,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Keep,
    Drop,
}

#[derive(Clone, Copy, ValueEnum)]
enum Condition {
    OnePositive,
    #[value(name = "principal-4x4")]
    Principal4x4,
    T2Plucker,
}

#[derive(Serialize)]
struct Report {
    command: String,
    input_digest: String,
    result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

struct Failure {
    message: String,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure {
            message: e.to_string(),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let started = Instant::now();
    // `fano` is generated, not read; everything else consumes one JSON value.
    let needs_input = !matches!(cli.command, Command::Fano);
    let raw = if needs_input {
        match read_raw(&cli.input) {
            Ok(r) => r,
            Err(f) => {
                eprintln!("input error: {}", f.message);
                std::process::exit(2);
            }
        }
    } else {
        Vec::new()
    };
    let digest = format!("sha256:{:x}", Sha256::digest(&raw));
    let command_name = command_name(&cli.command);
    match run(&cli.command, &raw) {
        Ok((result, holds)) => {
            let report = Report {
                command: command_name.to_string(),
                input_digest: digest,
                result,
                timing_ms: cli.timing.then(|| started.elapsed().as_millis()),
            };
            print_report(&report, cli.format);
            std::process::exit(if holds { 0 } else { 1 });
        }
        Err(f) => {
            eprintln!("input error: {}", f.message);
            std::process::exit(2);
        }
    }
}

fn read_raw(input: &Option<PathBuf>) -> Result<Vec<u8>, Failure> {
    match input {
        Some(path) => Ok(std::fs::read(path)?),
        None => {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf)?;
            Ok(buf)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::CheckLorentzian => "check-lorentzian",
        Command::Falsify { .. } => "falsify",
        Command::CheckMconvex => "check-mconvex",
        Command::RankBases => "rank-bases",
        Command::BasesRank => "bases-rank",
        Command::Dual { .. } => "dual",
        Command::Graphic => "graphic",
        Command::LinearMatroid => "linear-matroid",
        Command::BasisPoly => "basis-poly",
        Command::VolumePoly => "volume-poly",
        Command::MixedVolume { .. } => "mixed-volume",
        Command::Project { .. } => "project",
        Command::Realizable4 => "realizable4",
        Command::ConditionN5 { .. } => "condition-n5",
        Command::Schur => "schur",
        Command::Kostka => "kostka",
        Command::Fano => "fano",
        Command::Minors { .. } => "minors",
        Command::Symbol => "symbol",
        Command::RktScan => "rkt-scan",
        Command::KtScan => "kt-scan",
    }
}

fn parse_input<T: serde::de::DeserializeOwned>(raw: &[u8]) -> Result<T, Failure> {
    serde_json::from_slice(raw).map_err(|e| Failure {
        message: format!("{e}"),
    })
}

fn parse_index_list(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|p| {
            let i: usize = p.trim().parse().map_err(|_| Failure {
                message: format!("bad index {p:?}"),
            })?;
            if i == 0 {
                return Err(Failure {
                    message: "indices are 1-based".into(),
                });
            }
            Ok(i - 1)
        })
        .collect()
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>, Failure> {
    s.split(',')
        .map(|p| {
            p.trim().parse::<u32>().map_err(|_| Failure {
                message: format!("bad entry {p:?}"),
            })
        })
        .collect()
}

fn vertex_cap(bodies: &[RationalPolytope]) -> Result<(), Failure> {
    let total: usize = bodies.iter().map(|b| b.vertices().len()).sum();
    if total > VERTEX_CAP {
        return Err(Failure {
            message: format!("vertex-cap: {total} summed vertices exceed {VERTEX_CAP}"),
        });
    }
    Ok(())
}

/// Runs one command; returns the result value and whether the checked
/// condition holds (which drives the exit code).
fn run(command: &Command, raw: &[u8]) -> Result<(Value, bool), Failure> {
    match command {
        Command::CheckLorentzian => {
            let f: HomogeneousPoly = parse_input(raw)?;
            let verdict = certify(&f);
            let holds = verdict.accepted();
            let mut result = serde_json::to_value(&verdict).unwrap();
            if f.num_vars() == 2 {
                result["bivariate_log_concave"] = json!(bivariate_lorentzian(&f).unwrap());
            }
            Ok((result, holds))
        }
        Command::Falsify { samples, seed } => {
            let f: HomogeneousPoly = parse_input(raw)?;
            let witness = falsify_definition(&f, *samples, *seed)?;
            let holds = witness.is_none();
            Ok((
                json!({
                    "samples": samples,
                    "seed": seed,
                    "witness": witness.map(|w| serde_json::to_value(&w).unwrap()),
                }),
                holds,
            ))
        }
        Command::CheckMconvex => {
            let j: MConvexSet = parse_input(raw)?;
            let failure = j.exchange_failure();
            let holds = failure.is_none();
            Ok((
                json!({
                    "mconvex": holds,
                    "matroid": j.is_matroid(),
                    "empty": j.is_empty(),
                    "witness": failure.map(|w| serde_json::to_value(&w).unwrap()),
                }),
                holds,
            ))
        }
        Command::RankBases => {
            let j: MConvexSet = parse_input(raw)?;
            let h = j.rank_function()?;
            Ok((serde_json::to_value(&h).unwrap(), true))
        }
        Command::BasesRank => {
            let h: PolymatroidRank = parse_input(raw)?;
            match h.bases() {
                Ok(j) => Ok((serde_json::to_value(&j).unwrap(), true)),
                Err(volpoly::Error::RankAxiom(v)) => Ok((
                    json!({ "violation": serde_json::to_value(&v).unwrap() }),
                    false,
                )),
                Err(e) => Err(e.into()),
            }
        }
        Command::Dual { mu } => {
            let j: MConvexSet = parse_input(raw)?;
            let mu = Exponent(parse_u32_list(mu)?);
            let dual = j.dual(&mu)?;
            Ok((serde_json::to_value(&dual).unwrap(), true))
        }
        Command::Graphic => {
            let g: Graph = parse_input(raw)?;
            let j = g.spanning_trees()?;
            Ok((serde_json::to_value(&j).unwrap(), true))
        }
        Command::LinearMatroid => {
            let m: PrimeFieldMatrix = parse_input(raw)?;
            let j = m.column_matroid();
            Ok((serde_json::to_value(&j).unwrap(), true))
        }
        Command::BasisPoly => {
            let j: MConvexSet = parse_input(raw)?;
            let f = j.generating_poly()?;
            Ok((serde_json::to_value(&f).unwrap(), true))
        }
        Command::VolumePoly => {
            let coll: BodyCollection = parse_input(raw)?;
            vertex_cap(coll.bodies())?;
            let f = coll.volume_polynomial()?;
            Ok((serde_json::to_value(&f).unwrap(), true))
        }
        Command::MixedVolume { alpha } => {
            let coll: BodyCollection = parse_input(raw)?;
            vertex_cap(coll.bodies())?;
            let alpha = Exponent(parse_u32_list(alpha)?);
            let mv = coll.mixed_volume(&alpha)?;
            Ok((json!({ "mixed_volume": format_rational(&mv) }), true))
        }
        Command::Project { coords, mode } => {
            let p: RationalPolytope = parse_input(raw)?;
            vertex_cap(std::slice::from_ref(&p))?;
            let coords = parse_index_list(coords)?;
            let mode = match mode {
                Mode::Keep => ProjectionMode::Keep,
                Mode::Drop => ProjectionMode::Drop,
            };
            let proj = p.project(&coords, mode)?;
            let vol = proj.hull_volume()?;
            let mut result = serde_json::to_value(&proj).unwrap();
            result["volume"] = json!(format_rational(&vol));
            Ok((result, true))
        }
        Command::Realizable4 => {
            let p: PairVector = parse_input(raw)?;
            let verdict = triangle_condition(&p)?;
            let holds = verdict != TriangleVerdict::Fail;
            Ok((
                json!({
                    "condition": "triangle",
                    "verdict": serde_json::to_value(verdict).unwrap(),
                }),
                holds,
            ))
        }
        Command::ConditionN5 { condition } => {
            let p: PairVector = parse_input(raw)?;
            let (name, holds) = match condition {
                Condition::OnePositive => ("one-positive", one_positive_condition(&p)),
                Condition::Principal4x4 => ("principal-4x4", principal_4x4_condition(&p)?),
                Condition::T2Plucker => ("t2-plucker", t2_plucker_condition(&p)?),
            };
            Ok((json!({ "condition": name, "holds": holds }), holds))
        }
        Command::Schur => {
            #[derive(serde::Deserialize)]
            struct SchurInput {
                parts: Vec<u32>,
                num_vars: usize,
            }
            let input: SchurInput = parse_input(raw)?;
            let lambda = YoungDiagram::new(input.parts)?;
            let f = normalized_schur(&lambda, input.num_vars)?;
            Ok((serde_json::to_value(&f).unwrap(), true))
        }
        Command::Kostka => {
            #[derive(serde::Deserialize)]
            struct KostkaInput {
                parts: Vec<u32>,
                weight: Vec<u32>,
            }
            let input: KostkaInput = parse_input(raw)?;
            let lambda = YoungDiagram::new(input.parts)?;
            let k = kostka(&lambda, &input.weight)?;
            Ok((json!({ "kostka": k }), true))
        }
        Command::Fano => {
            let f = volpoly::fano_poly();
            Ok((serde_json::to_value(&f).unwrap(), true))
        }
        Command::Minors { chain } => {
            let mut f: HomogeneousPoly = parse_input(raw)?;
            for step in chain.split(',') {
                let step = step.trim();
                let (op, var) = step.split_once(':').ok_or_else(|| Failure {
                    message: format!("bad chain step {step:?}, expected op:var"),
                })?;
                let idx = parse_index_list(var)?[0];
                f = match op {
                    "delete" => f.delete(idx)?,
                    "contract" => f.contract(idx)?,
                    other => {
                        return Err(Failure {
                            message: format!("unknown minor operation {other:?}"),
                        });
                    }
                };
            }
            Ok((serde_json::to_value(&f).unwrap(), true))
        }
        Command::Symbol => {
            let t: MonomialOperator = parse_input(raw)?;
            let s = t.symbol();
            Ok((serde_json::to_value(&s).unwrap(), true))
        }
        Command::RktScan => {
            let f: HomogeneousPoly = parse_input(raw)?;
            let violations = rkt_scan(&f)?;
            let holds = violations.is_empty();
            Ok((
                json!({ "violations": serde_json::to_value(&violations).unwrap() }),
                holds,
            ))
        }
        Command::KtScan => {
            let f: HomogeneousPoly = parse_input(raw)?;
            let violations = kt_scan(&f);
            let holds = violations.is_empty();
            Ok((
                json!({ "violations": serde_json::to_value(&violations).unwrap() }),
                holds,
            ))
        }
    }
}

fn print_report(report: &Report, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(report).unwrap()),
        Format::Text => {
            println!("command: {}", report.command);
            println!("input: {}", report.input_digest);
            println!(
                "result: {}",
                serde_json::to_string_pretty(&report.result).unwrap()
            );
            if let Some(ms) = report.timing_ms {
                println!("timing: {ms} ms");
            }
        }
    }
}
