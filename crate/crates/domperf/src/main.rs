//! Command-line front end.
//!
//! Exit codes: 0 on success (graph judged perfect, value computed, or
//! verification passed); 1 when the asked-for negative answer holds (graph
//! not perfect, violation witness found, verification failed); 2 on usage
//! or input errors; 3 when the recognizers disagree — which the
//! characterization theorem rules out.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use domperf::{
    classify_forbidden, classify_structural, covering_number, domination_number,
    find_violating_induced_subgraph, parse_graph, solvers, verify_theorem, Format, Graph,
    PerfectionError, SampleConfig, Verdict, VerifyConfig, ORACLE_CAP,
};

/// Largest order the `gamma` subcommand accepts; domination search cost
/// grows fastest of the three numbers.
const GAMMA_ORDER_CAP: usize = 40;
/// Largest order the `beta` subcommand accepts.
const BETA_ORDER_CAP: usize = 50;

#[derive(Parser)]
#[command(
    name = "domperf",
    version,
    about = "Exact domination/covering numbers and recognizers for graphs \
             whose domination and covering numbers agree hereditarily"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input format; auto treats a leading digit as an edge list.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Auto)]
    format: FormatArg,
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Graph6,
    Edges,
    Auto,
}

impl From<FormatArg> for Format {
    fn from(arg: FormatArg) -> Format {
        match arg {
            FormatArg::Graph6 => Format::Graph6,
            FormatArg::Edges => Format::Edges,
            FormatArg::Auto => Format::Auto,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide perfection with the structural and forbidden-configuration
    /// recognizers; the definitional oracle joins in for small graphs.
    Classify {
        /// Input file, or `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Compute the domination number with an optimal dominating set.
    Gamma {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Compute the vertex covering number with an optimal cover.
    Beta {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Find a smallest connected induced subgraph whose domination number
    /// is strictly below its covering number, if one exists.
    Witness {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Cross-check the recognizers over all labeled connected graphs.
    Verify {
        /// Largest order to sweep (2..=7).
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Largest order the oracle checks exhaustively; defaults to
        /// max_n capped at 6.
        #[arg(long)]
        oracle_max_n: Option<usize>,
        /// Oracle sample size per order above the exhaustive threshold.
        #[arg(long)]
        sample: Option<usize>,
        /// Seed for the oracle sample.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Worker threads (0 = one per core).
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A terminal failure: message for stderr plus the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    fn disagreement(message: impl Into<String>) -> Failure {
        Failure { code: 3, message: message.into() }
    }

    fn from_perfection(error: PerfectionError) -> Failure {
        match error {
            PerfectionError::TheoremViolation => Failure::disagreement(error.to_string()),
            other => Failure::input(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let format = cli.format.into();
    let json = cli.json;
    match cli.command {
        Command::Classify { input } => classify_cmd(&load_graph(&input, format)?, json),
        Command::Gamma { input } => gamma_cmd(&load_graph(&input, format)?, json),
        Command::Beta { input } => beta_cmd(&load_graph(&input, format)?, json),
        Command::Witness { input } => witness_cmd(&load_graph(&input, format)?, json),
        Command::Verify { max_n, oracle_max_n, sample, seed, jobs, out } => {
            verify_cmd(max_n, oracle_max_n, sample, seed, jobs, out, json)
        }
    }
}

fn load_graph(input: &str, format: Format) -> Result<Graph, Failure> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::input(format!("reading stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(input)
            .map_err(|e| Failure::input(format!("reading {input}: {e}")))?
    };
    let graph = parse_graph(&text, format).map_err(|e| Failure::input(e.to_string()))?;
    if let Some(limit) = max_order_limit()? {
        if graph.order() > limit {
            return Err(Failure::input(format!(
                "graph order {} exceeds DOMPERF_MAX_ORDER={limit}",
                graph.order()
            )));
        }
    }
    Ok(graph)
}

/// Reads the optional `DOMPERF_MAX_ORDER` override (1..=62).
fn max_order_limit() -> Result<Option<usize>, Failure> {
    let Some(raw) = std::env::var_os("DOMPERF_MAX_ORDER") else {
        return Ok(None);
    };
    let parsed = raw
        .to_str()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|n| (1..=domperf::MAX_ORDER).contains(n));
    match parsed {
        Some(n) => Ok(Some(n)),
        None => Err(Failure::input(format!(
            "DOMPERF_MAX_ORDER must be an integer in 1..={}, got {:?}",
            domperf::MAX_ORDER,
            raw.to_string_lossy()
        ))),
    }
}

fn classify_cmd(g: &Graph, json: bool) -> Result<u8, Failure> {
    let structural = classify_structural(g).map_err(Failure::from_perfection)?;
    let forbidden = classify_forbidden(g).map_err(Failure::from_perfection)?;
    if structural.verdict() != forbidden.verdict() {
        return Err(Failure::disagreement(format!(
            "structural recognizer says {}, forbidden-configuration recognizer says {}",
            structural.verdict(),
            forbidden.verdict()
        )));
    }
    let oracle = if g.order() <= ORACLE_CAP {
        Some(find_violating_induced_subgraph(g).map_err(Failure::from_perfection)?)
    } else {
        None
    };
    if let Some(violation) = &oracle {
        let oracle_verdict = match violation {
            Some(_) => Verdict::NotPerfect,
            None => Verdict::Perfect,
        };
        if oracle_verdict != structural.verdict() {
            return Err(Failure::disagreement(format!(
                "recognizers say {}, definitional oracle says {oracle_verdict}",
                structural.verdict()
            )));
        }
    }
    if json {
        let oracle_json = match &oracle {
            None => json!(null),
            Some(None) => json!({ "verdict": "perfect" }),
            Some(Some(set)) => json!({ "verdict": "not_perfect", "violating": set }),
        };
        print_json(&json!({
            "order": g.order(),
            "certificate": structural,
            "oracle": oracle_json,
        }));
    } else {
        println!("{structural}");
        match &oracle {
            None => {}
            Some(None) => println!("oracle perfect"),
            Some(Some(set)) => println!("oracle not_perfect {set}"),
        }
    }
    Ok(match structural.verdict() {
        Verdict::Perfect => 0,
        Verdict::NotPerfect => 1,
    })
}

fn gamma_cmd(g: &Graph, json: bool) -> Result<u8, Failure> {
    check_cap(g, GAMMA_ORDER_CAP, "gamma")?;
    let result = domination_number(g).map_err(|e| Failure::input(e.to_string()))?;
    if json {
        print_json(&json!({ "gamma": result.value, "witness": result.witness }));
    } else {
        println!("gamma={} witness={}", result.value, result.witness);
    }
    Ok(0)
}

fn beta_cmd(g: &Graph, json: bool) -> Result<u8, Failure> {
    check_cap(g, BETA_ORDER_CAP, "beta")?;
    let result = covering_number(g).map_err(|e| Failure::input(e.to_string()))?;
    if json {
        print_json(&json!({ "beta": result.value, "witness": result.witness }));
    } else {
        println!("beta={} witness={}", result.value, result.witness);
    }
    Ok(0)
}

fn witness_cmd(g: &Graph, json: bool) -> Result<u8, Failure> {
    let violation = find_violating_induced_subgraph(g).map_err(Failure::from_perfection)?;
    match violation {
        None => {
            if json {
                print_json(&json!({ "witness": null }));
            } else {
                println!("none");
            }
            Ok(0)
        }
        Some(set) => {
            let (sub, _) = g
                .induced_subgraph(set)
                .map_err(|e| Failure::input(e.to_string()))?;
            let gamma = solvers::brute::domination_number(&sub)
                .map_err(|e| Failure::input(e.to_string()))?;
            let beta = solvers::brute::covering_number(&sub)
                .map_err(|e| Failure::input(e.to_string()))?;
            if json {
                print_json(&json!({
                    "witness": set,
                    "gamma": gamma.value,
                    "beta": beta.value,
                }));
            } else {
                println!("{set} gamma={} beta={}", gamma.value, beta.value);
            }
            Ok(1)
        }
    }
}

fn check_cap(g: &Graph, cap: usize, what: &str) -> Result<(), Failure> {
    if g.order() > cap {
        return Err(Failure::input(format!(
            "graph order {} is above the {what} solver capability ({cap})",
            g.order()
        )));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn verify_cmd(
    max_n: usize,
    oracle_max_n: Option<usize>,
    sample: Option<usize>,
    seed: u64,
    jobs: Option<usize>,
    out: Option<PathBuf>,
    json: bool,
) -> Result<u8, Failure> {
    let oracle_max_n = oracle_max_n.unwrap_or_else(|| max_n.min(6));
    // Sampling kicks in when asked for, or by default whenever some order
    // would otherwise go entirely unchecked by the oracle.
    let sample = match sample {
        Some(count) => Some(SampleConfig { count, seed }),
        None if max_n > oracle_max_n => Some(SampleConfig { count: 10_000, seed }),
        None => None,
    };
    let config = VerifyConfig { max_n, oracle_max_n, sample, jobs };
    let report = verify_theorem(&config).map_err(|e| Failure::input(e.to_string()))?;
    let rendered = if json {
        let mut s = serde_json::to_string_pretty(&report)
            .map_err(|e| Failure::input(format!("serializing report: {e}")))?;
        s.push('\n');
        s
    } else {
        report.to_text()
    };
    match out {
        Some(path) => fs::write(&path, rendered)
            .map_err(|e| Failure::input(format!("writing {}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    Ok(if report.ok { 0 } else { 1 })
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON value serializes")
    );
}
