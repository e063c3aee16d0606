//! The `turan` command line. Every invocation prints one JSON document on
//! standard output:
//!
//! ```text
//! {"schema": 1, "command": "...", "status": "...", "payload": ..., "elapsed_ms": N}
//! ```
//!
//! Exit codes: 0 for sat/accept/pass/ok, 1 for unsat/reject/fail, 2 for usage
//! errors and malformed input, 3 for timeouts and exceeded guards.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{self, Named};
use crate::construct::{density_audit, random_construction};
use crate::error::Error;
use crate::palette::{
    classify_with, solve_with, ClassifyOptions, PaletteCertificate, PropertyKind, SolveOptions, SolveOutcome,
    Verdict,
};
use crate::reduced::{embeds_with, random_reduced, EmbedMode, ReducedThreeGraph};

pub const SCHEMA_VERSION: u32 = 1;
pub const THREADS_ENV: &str = "TURAN_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Sat,
    Unsat,
    Accept,
    Reject,
    Pass,
    Fail,
    Ok,
    Error,
    Timeout,
    Guard,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Sat | Status::Accept | Status::Pass | Status::Ok => 0,
            Status::Unsat | Status::Reject | Status::Fail => 1,
            Status::Error => 2,
            Status::Timeout | Status::Guard => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommandResult {
    pub schema: u32,
    pub command: String,
    pub status: Status,
    pub payload: Value,
    pub elapsed_ms: u64,
}

impl CommandResult {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("command results serialize")
    }
}

#[derive(Debug, Parser)]
#[command(name = "turan", version, about = "Palette certificates and bounds for the uniform Turan density of small 3-graphs")]
struct Cli {
    #[command(flatten)]
    limits: Limits,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Limits {
    /// Largest vertex count the solvers accept.
    #[arg(long, global = true, default_value_t = crate::palette::DEFAULT_MAX_VERTICES)]
    max_vertices: usize,
    /// Search deadline in milliseconds.
    #[arg(long, global = true, default_value_t = 60_000)]
    timeout_ms: u64,
    /// Worker threads; falls back to the TURAN_THREADS environment variable.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the named graphs, or print one of them.
    Catalog {
        #[arg(long)]
        name: Option<String>,
    },
    /// Decide one palette property and print a certificate when it holds.
    Check {
        #[arg(long)]
        property: PropertyKind,
        /// `name:<catalog entry>` or a path to a graph JSON file.
        #[arg(long)]
        graph: String,
    },
    /// Check a certificate against a graph.
    Verify {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Run every solver and report bounds on the uniform Turan density.
    Classify {
        #[arg(long)]
        graph: String,
        /// Skip the spades-star search, which does not affect the bounds.
        #[arg(long)]
        skip_star: bool,
    },
    /// Build a random instance.
    Construct {
        #[command(subcommand)]
        what: ConstructKind,
    },
    /// Test the (d, mu)-density inequality on sampled vertex subsets.
    Audit {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        d: f64,
        #[arg(long)]
        mu: f64,
        /// Comma-separated subset sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Search for an embedding of a 3-graph into a reduced 3-graph.
    Embed {
        /// Path to a reduced 3-graph JSON file.
        #[arg(long)]
        reduced: PathBuf,
        #[arg(long)]
        target: String,
        /// Allow any injective index map instead of increasing ones only.
        #[arg(long)]
        all_orderings: bool,
    },
}

#[derive(Debug, Subcommand)]
enum ConstructKind {
    /// The random red/blue construction on `n` vertices.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A random reduced 3-graph on indices `1..=indices`.
    Reduced {
        #[arg(long)]
        indices: usize,
        #[arg(long)]
        class_size: usize,
        #[arg(long)]
        edge_prob: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Catalog { .. } => "catalog",
            Command::Check { .. } => "check",
            Command::Verify { .. } => "verify",
            Command::Classify { .. } => "classify",
            Command::Construct { .. } => "construct",
            Command::Audit { .. } => "audit",
            Command::Embed { .. } => "embed",
        }
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let start = Instant::now();
    let finish = |command: &str, status: Status, payload: Value| CommandResult {
        schema: SCHEMA_VERSION,
        command: command.to_string(),
        status,
        payload,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let status = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Status::Ok,
                _ => Status::Error,
            };
            return finish("", status, json!({ "message": e.render().to_string() }));
        }
    };
    let name = cli.command.name();
    let threads = cli.limits.threads.or_else(|| {
        std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
    });
    let opts = SolveOptions {
        max_vertices: cli.limits.max_vertices,
        timeout: Some(Duration::from_millis(cli.limits.timeout_ms)),
        threads: None,
    };
    let dispatch = || dispatch(&cli.command, &opts);
    let outcome = match threads {
        Some(t) if t > 0 => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(dispatch),
            Err(e) => Err(Error::InvalidArgument(format!("thread pool: {e}"))),
        },
        _ => dispatch(),
    };
    match outcome {
        Ok((status, payload)) => finish(name, status, payload),
        Err(e) => finish(name, error_status(&e), error_payload(&e)),
    }
}

fn error_status(e: &Error) -> Status {
    match e {
        Error::Timeout { .. } => Status::Timeout,
        Error::GuardExceeded { .. } => Status::Guard,
        _ => Status::Error,
    }
}

fn error_payload(e: &Error) -> Value {
    match e {
        Error::Json { line, column, .. } => json!({
            "message": e.to_string(),
            "line": line,
            "column": column,
        }),
        _ => json!({ "message": e.to_string() }),
    }
}

type Outcome = crate::error::Result<(Status, Value)>;

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("library types serialize")
}

fn graph_summary(graph: &crate::graph::ThreeGraph) -> Value {
    json!({ "n": graph.n(), "edge_count": graph.edge_count() })
}

fn dispatch(command: &Command, opts: &SolveOptions) -> Outcome {
    match command {
        Command::Catalog { name } => catalog_cmd(name.as_deref()),
        Command::Check { property, graph } => check_cmd(*property, graph, opts),
        Command::Verify { graph, certificate } => verify_cmd(graph, certificate),
        Command::Classify { graph, skip_star } => {
            let graph = catalog::resolve(graph)?;
            let report = classify_with(
                &graph,
                &ClassifyOptions {
                    solve: opts.clone(),
                    skip_star: *skip_star,
                },
            )?;
            Ok((Status::Ok, to_value(&report)))
        }
        Command::Construct { what } => construct_cmd(what),
        Command::Audit {
            graph,
            d,
            mu,
            sizes,
            samples,
            seed,
        } => {
            let graph = catalog::resolve(graph)?;
            let audit = density_audit(&graph, *d, *mu, sizes, *samples, *seed)?;
            let status = if audit.pass { Status::Pass } else { Status::Fail };
            Ok((status, to_value(&audit)))
        }
        Command::Embed {
            reduced,
            target,
            all_orderings,
        } => {
            let a = ReducedThreeGraph::from_json(&std::fs::read_to_string(reduced)?)?;
            let f = catalog::resolve(target)?;
            let mode = if *all_orderings {
                EmbedMode::Injective
            } else {
                EmbedMode::OrderRespecting
            };
            Ok(match embeds_with(&a, &f, mode)? {
                Some(w) => (Status::Sat, json!({ "mode": mode, "witness": w })),
                None => (Status::Unsat, json!({ "mode": mode, "witness": null })),
            })
        }
    }
}

fn catalog_cmd(name: Option<&str>) -> Outcome {
    match name {
        Some(name) => {
            let named: Named = name.strip_prefix("name:").unwrap_or(name).parse()?;
            let graph = catalog::build(&named)?;
            Ok((Status::Ok, json!({ "name": named.to_string(), "graph": to_value(&graph) })))
        }
        None => {
            let entries = Named::examples()
                .iter()
                .map(|named| {
                    let graph = catalog::build(named)?;
                    Ok(json!({
                        "name": named.to_string(),
                        "n": graph.n(),
                        "edge_count": graph.edge_count(),
                    }))
                })
                .collect::<crate::error::Result<Vec<Value>>>()?;
            Ok((Status::Ok, json!({ "entries": entries })))
        }
    }
}

fn check_cmd(property: PropertyKind, graph: &str, opts: &SolveOptions) -> Outcome {
    let graph = catalog::resolve(graph)?;
    let report = solve_with(&graph, property, opts)?;
    let base = json!({
        "property": property,
        "graph": graph_summary(&graph),
        "nodes": report.nodes,
    });
    let with = |certificate: Value| {
        let mut v = base.clone();
        v["certificate"] = certificate;
        v
    };
    match report.outcome {
        SolveOutcome::Sat(cert) => Ok((Status::Sat, with(to_value(&cert)))),
        SolveOutcome::Unsat => Ok((Status::Unsat, with(Value::Null))),
        SolveOutcome::Timeout => Err(Error::Timeout {
            what: format!("{property} search"),
            elapsed_ms: report.elapsed.as_millis() as u64,
        }),
    }
}

fn verify_cmd(graph: &str, certificate: &PathBuf) -> Outcome {
    let graph = catalog::resolve(graph)?;
    let cert = PaletteCertificate::from_json(&std::fs::read_to_string(certificate)?)?;
    let verdict = cert.verify(&graph)?;
    let status = match verdict {
        Verdict::Accept { .. } => Status::Accept,
        Verdict::Reject { .. } => Status::Reject,
    };
    Ok((status, json!({ "kind": cert.kind, "verdict": to_value(&verdict) })))
}

fn construct_cmd(what: &ConstructKind) -> Outcome {
    let (summary, body, out) = match what {
        ConstructKind::Random { n, seed, out } => {
            let h = random_construction(*n, *seed);
            let summary = json!({
                "kind": "random",
                "n": n,
                "seed": seed,
                "edge_count": h.graph.edge_count(),
            });
            (summary, to_value(&h.graph), out)
        }
        ConstructKind::Reduced {
            indices,
            class_size,
            edge_prob,
            seed,
            out,
        } => {
            let a = random_reduced(*indices, *class_size, *edge_prob, *seed)?;
            let summary = json!({
                "kind": "reduced",
                "indices": indices,
                "class_size": class_size,
                "edge_prob": edge_prob,
                "seed": seed,
                "edge_count": a.edge_count(),
            });
            (summary, to_value(&a), out)
        }
    };
    let mut payload = summary;
    match out {
        Some(path) => {
            std::fs::write(path, serde_json::to_string(&body).expect("values serialize"))?;
            payload["out"] = json!(path);
        }
        None => payload["value"] = body,
    }
    Ok((Status::Ok, payload))
}
