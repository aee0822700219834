//! `crystal-grid`: command-line access to the crystal structures, the
//! module-theoretic checks and the verification suites.
//!
//! Results go to stdout as JSON. The effective configuration, including the
//! random seed, is written to stderr as a `# config` line. Exit codes: 0 clean,
//! 1 violation found, 2 usage error.

mod verify;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crystal_grid::an::{an_apply_word, AnComponent, AnCrystal};
use crystal_grid::binfty::{words_distinct, IotaSequence, PolyhedralModel, DEFAULT_LENGTH};
use crystal_grid::crystal::OperatorWord;
use crystal_grid::g22::{apply_word, enumerate_components, invariant, Component2x2, G22Crystal, InvariantKind};
use crystal_grid::graph::{build_crystal_graph, export_dot, export_json, export_text, CrystalGraph};
use crystal_grid::modules::decomposition_summary;
use crystal_grid::oracle::{estimate_component_invariant, OracleKind, SampleConfig, DEFAULT_PRIME};
use crystal_grid::quiver::GridQuiver;

#[derive(Parser, Debug)]
#[command(name = "crystal-grid", version, about = "Crystals on irreducible components of grid quiver representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply an operator word on the equioriented chain A_n.
    An {
        #[arg(long)]
        n: usize,
        /// Word such as "f1 f2 e1"; the rightmost letter acts first.
        #[arg(long)]
        apply: String,
        /// Dimension vector, comma separated.
        #[arg(long)]
        start: String,
    },
    /// Components and operators of the commutative 2x2 grid.
    G22 {
        #[command(subcommand)]
        command: G22Command,
    },
    /// Build and export a crystal graph.
    Graph(GraphArgs),
    /// Estimate invariants from random points of a component.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// The polyhedral model of B(infinity).
    Binfty {
        #[command(subcommand)]
        command: BinftyCommand,
    },
    /// Run a named verification suite.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum G22Command {
    /// Apply an operator word to a component.
    Apply {
        /// Component `d1,d2,d3,d4:r1,r2`.
        #[arg(long)]
        start: String,
        #[arg(long)]
        word: String,
    },
    /// List the components of a dimension vector.
    Components {
        #[arg(long)]
        dims: String,
    },
    /// Generic decomposition of a component into indecomposables.
    Decomp {
        #[arg(long)]
        component: String,
    },
    /// All statistics of a component.
    Invariants {
        #[arg(long)]
        component: String,
    },
}

#[derive(Args, Debug)]
struct SamplingArgs {
    #[arg(long, default_value_t = 50)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Random seed; falls back to CRYSTAL_GRID_SEED, then to a fresh random seed.
    #[arg(long, env = "CRYSTAL_GRID_SEED")]
    seed: Option<u64>,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long)]
    component: String,
    /// Vertex 1 to 4.
    #[arg(long)]
    i: usize,
    #[command(flatten)]
    sampling: SamplingArgs,
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Minimum of dim coker of the map into vertex i.
    Epsilon(OracleArgs),
    /// Minimum of dim ker of the map out of vertex i.
    EpsilonStar(OracleArgs),
}

#[derive(Subcommand, Debug)]
enum BinftyCommand {
    /// Decide whether two f-words give distinct elements.
    Compare {
        #[arg(long = "wordA")]
        word_a: String,
        #[arg(long = "wordB")]
        word_b: String,
        /// Truncation length.
        #[arg(long, default_value_t = DEFAULT_LENGTH)]
        length: usize,
        /// Use the pattern 4,3,2,1 instead of 1,2,3,4.
        #[arg(long)]
        reversed: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// `2x2` for the square, `n` for the chain A_n.
    #[arg(long, default_value = "2x2")]
    grid: String,
    /// Seed element of the graph; defaults to the zero dimension vector.
    #[arg(long)]
    seed: Option<String>,
    /// Largest total dimension explored.
    #[arg(long)]
    bound: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// One of: axioms2x2, axiomsAn, star, duality, oracle, decomp, cbs,
    /// counterexample, connectivity, seminormal.
    suite: String,
    /// Total-dimension bound, or the per-vertex bound for oracle, decomp and cbs.
    #[arg(long)]
    bound: Option<u32>,
    #[command(flatten)]
    sampling: SamplingArgs,
}

pub enum Failure {
    Usage(String),
    Violation(Value),
}

pub type Outcome = Result<Value, Failure>;

pub fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

pub fn resolve_seed(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(rand::random)
}

fn log_config(config: Value) {
    eprintln!("# config {config}");
}

fn parse_component(s: &str) -> Result<Component2x2, Failure> {
    s.parse().map_err(usage)
}

fn parse_word(s: &str) -> Result<OperatorWord, Failure> {
    s.parse().map_err(usage)
}

fn parse_dims(s: &str) -> Result<Vec<u32>, Failure> {
    s.split(',').map(|t| t.trim().parse::<u32>().map_err(|_| usage(format!("bad dimension vector {s:?}")))).collect()
}

fn cmd_an(n: usize, apply: &str, start: &str) -> Outcome {
    let dims = parse_dims(start)?;
    if dims.len() != n {
        return Err(usage(format!("start has {} entries, expected {n}", dims.len())));
    }
    let word = parse_word(apply)?;
    if word.max_color() > n {
        return Err(usage(format!("word uses color {} beyond n = {n}", word.max_color())));
    }
    let start = AnComponent::new(dims).map_err(usage)?;
    let trace = an_apply_word(&word, start).map_err(usage)?;
    Ok(json!({
        "result": trace.result.map(|c| c.dims().to_vec()),
        "trace": trace.states.iter().map(|c| c.dims().to_vec()).collect::<Vec<_>>(),
    }))
}

fn cmd_g22(command: &G22Command) -> Outcome {
    match command {
        G22Command::Apply { start, word } => {
            let start = parse_component(start)?;
            let word = parse_word(word)?;
            if word.max_color() > 4 {
                return Err(usage(format!("color {} is not a vertex of the square", word.max_color())));
            }
            let trace = apply_word(&word, start).map_err(usage)?;
            Ok(json!({
                "result": trace.result.map(|c| c.to_string()),
                "trace": trace.states.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            }))
        }
        G22Command::Components { dims } => {
            let d: [u32; 4] = parse_dims(dims)?.try_into().map_err(|_| usage("expected four dimensions"))?;
            let list: Vec<String> = enumerate_components(d).iter().map(|c| c.to_string()).collect();
            Ok(json!({ "dims": d, "count": list.len(), "components": list }))
        }
        G22Command::Decomp { component } => Ok(json!(decomposition_summary(&parse_component(component)?))),
        G22Command::Invariants { component } => {
            let c = parse_component(component)?;
            let mut out = serde_json::Map::new();
            for kind in InvariantKind::ALL {
                let values: Vec<Value> = (1..=4).map(|i| json!(invariant(&c, i, kind))).collect();
                out.insert(format!("{kind:?}"), values.into());
            }
            Ok(Value::Object(out))
        }
    }
}

fn cmd_graph(args: &GraphArgs) -> Outcome {
    let shape = GridQuiver::parse_shape(&args.grid.replace('x', ",")).map_err(usage)?;
    let graph: CrystalGraph = match shape.as_slice() {
        [2, 2] => {
            let seed = args.seed.as_deref().map(parse_component).transpose()?.unwrap_or_else(Component2x2::highest);
            build_crystal_graph(&G22Crystal::new(), &[seed], args.bound).map_err(usage)?
        }
        &[n] => {
            let seed = match &args.seed {
                Some(s) => AnComponent::new(parse_dims(s)?).map_err(usage)?,
                None => AnComponent::zero(n),
            };
            if seed.n() != n {
                return Err(usage(format!("seed has {} entries, expected {n}", seed.n())));
            }
            build_crystal_graph(&AnCrystal::new(n), &[seed], args.bound).map_err(usage)?
        }
        _ => return Err(usage(format!("no crystal operators are implemented for the grid {}", args.grid))),
    };
    let text = match args.format {
        Format::Json => export_json(&graph),
        Format::Dot => export_dot(&graph),
        Format::Text => export_text(&graph),
    };
    let summary = json!({ "nodes": graph.nodes.len(), "edges": graph.edges.len() });
    match &args.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(summary)
        }
        None => {
            print!("{text}");
            Ok(Value::Null)
        }
    }
}

fn cmd_oracle(command: &OracleCommand) -> Outcome {
    let (args, kind) = match command {
        OracleCommand::Epsilon(a) => (a, OracleKind::Epsilon),
        OracleCommand::EpsilonStar(a) => (a, OracleKind::EpsilonStar),
    };
    let c = parse_component(&args.component)?;
    let seed = resolve_seed(args.sampling.seed);
    let cfg = SampleConfig::new(args.sampling.prime, args.sampling.samples, seed).map_err(usage)?;
    log_config(
        json!({ "command": "oracle", "kind": format!("{kind:?}"), "component": c.to_string(), "i": args.i, "prime": cfg.prime, "samples": cfg.count, "seed": seed }),
    );
    let value = estimate_component_invariant(&c, args.i, kind, &cfg).map_err(usage)?;
    Ok(json!({ "value": value, "samples": cfg.count, "seed": seed }))
}

fn cmd_binfty(command: &BinftyCommand) -> Outcome {
    let BinftyCommand::Compare { word_a, word_b, length, reversed } = command;
    let (a, b) = (parse_word(word_a)?, parse_word(word_b)?);
    let pattern = if *reversed { IotaSequence::reversed() } else { IotaSequence::standard() };
    let iota = pattern.with_length(*length).map_err(usage)?;
    let model = PolyhedralModel::square(iota).map_err(usage)?;
    let cmp = words_distinct(&model, &a, &b).map_err(usage)?;
    Ok(serde_json::to_value(cmp).expect("comparison serializes"))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::An { n, apply, start } => cmd_an(*n, apply, start),
        Command::G22 { command } => cmd_g22(command),
        Command::Graph(args) => cmd_graph(args),
        Command::Oracle { command } => cmd_oracle(command),
        Command::Binfty { command } => cmd_binfty(command),
        Command::Verify(args) => {
            let seed = resolve_seed(args.sampling.seed);
            let cfg = SampleConfig::new(args.sampling.prime, args.sampling.samples, seed).map_err(usage)?;
            let bound = verify::effective_bound(&args.suite, args.bound);
            log_config(
                json!({ "command": "verify", "suite": args.suite, "bound": bound, "prime": cfg.prime, "samples": cfg.count, "seed": seed }),
            );
            verify::run_suite(&args.suite, bound, &cfg)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Value::Null) => ExitCode::SUCCESS,
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(Failure::Violation(v)) => {
            println!("{v}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
