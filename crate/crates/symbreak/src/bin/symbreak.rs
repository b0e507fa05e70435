//! Command-line front end: generate family graphs, analyze arbitrary graphs,
//! evaluate closed forms, and run verification sweeps.
//!
//! Exit codes: 0 success, 1 input error, 2 resource cap hit, 3 verification
//! mismatch. Logging is controlled by the `SYMBREAK_LOG` environment
//! variable (`error`, `warn`, `info`, `debug`, `trace`).

use std::fs;
use std::io::Read;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use symbreak::automorphism::{enumerate_automorphisms, group_order_formula_dutch};
use symbreak::distinguishing::{
    distinguishing_index, distinguishing_number, DistError,
};
use symbreak::formulas::{self, chemical_constants, ChemFamily};
use symbreak::generators::{family, FamilyKind, FamilySpec};
use symbreak::graph::Graph;
use symbreak::io;
use symbreak::report::{run_verification, Instance, RunConfig};
use symbreak::Exact;

const EXIT_INPUT: u8 = 1;
const EXIT_CAP: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(
    name = "symbreak",
    version,
    about = "Distinguishing numbers and indices of point-attached graph families"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a family graph and print it.
    Gen(GenArgs),
    /// Compute the automorphism group, D and D' of a graph.
    Analyze(AnalyzeArgs),
    /// Evaluate the closed forms for a family without building the graph.
    Formula(FormulaArgs),
    /// Sweep a family, comparing formulas against the exact solvers.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Family name: complete, cycle, path, star, q, dutch, friendship,
    /// spiro, poly, nanostar.
    #[arg(long, conflicts_with = "spec")]
    family: Option<String>,
    /// Comma-separated numeric parameters, e.g. --params 5,3.
    #[arg(long, value_delimiter = ',')]
    params: Vec<u64>,
    /// JSON spec file describing a family or composition ("-" for stdin).
    #[arg(long)]
    spec: Option<String>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
    format: GraphFormat,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Json,
    Dot,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Graph file, edge-list or JSON ("-" for stdin).
    #[arg(long = "in")]
    input: String,
    /// Give up if the automorphism group exceeds this many elements.
    #[arg(long, default_value_t = 1_000_000)]
    aut_cap: usize,
    /// Cap on the number of labels tried by each solver.
    #[arg(long)]
    max_labels: Option<u32>,
    /// Skip the edge solver.
    #[arg(long)]
    no_edge: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FormulaArgs {
    /// Family name: q, dutch, friendship, spiro, poly, nanostar.
    #[arg(long)]
    family: String,
    #[arg(long, value_delimiter = ',')]
    params: Vec<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Family to sweep: dutch, q, friendship, spiro, poly, nanostar, bounds.
    #[arg(long)]
    family: String,
    /// Range "a..b" (inclusive) or a single value, for the family's n.
    #[arg(long)]
    n: Option<String>,
    /// Range for the family's k (cycle length, chain length or recursion
    /// depth, depending on the family).
    #[arg(long)]
    k: Option<String>,
    /// Range for m (q family).
    #[arg(long)]
    m: Option<String>,
    /// Range for q (spiro and poly cycle length).
    #[arg(long)]
    q: Option<String>,
    /// Range for h (spiro and poly contact distance).
    #[arg(long)]
    h: Option<String>,
    /// Number of random compositions (bounds family).
    #[arg(long, default_value_t = 50)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1_000_000)]
    aut_cap: usize,
    /// Largest graph the vertex solver is run on; bigger rows are skipped.
    #[arg(long, default_value_t = 20)]
    max_vertices: usize,
    /// Edge-count threshold above which high-symmetry rows skip the edge
    /// solver.
    #[arg(long, default_value_t = 16)]
    max_edges: usize,
    #[arg(long)]
    max_labels: Option<u32>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
    format: ReportFormat,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
    Table,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("SYMBREAK_LOG")).init();
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Gen(args) => cmd_gen(args),
        Cmd::Analyze(args) => cmd_analyze(args),
        Cmd::Formula(args) => cmd_formula(args),
        Cmd::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn build_graph(args: &GenArgs) -> Result<Graph, String> {
    let spec = match (&args.family, &args.spec) {
        (Some(name), None) => FamilySpec {
            kind: FamilyKind::parse(name).map_err(|e| e.to_string())?,
            params: args.params.clone(),
            parts: vec![],
        },
        (None, Some(path)) => {
            let text = read_input(path)?;
            serde_json::from_str(&text).map_err(|e| format!("parsing spec: {e}"))?
        }
        _ => return Err("exactly one of --family or --spec is required".into()),
    };
    family(&spec).map_err(|e| e.to_string())
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode, String> {
    let g = build_graph(&args)?;
    let text = match args.format {
        GraphFormat::Edgelist => io::to_edgelist(&g),
        GraphFormat::Json => format!("{}\n", io::to_json(&g)),
        GraphFormat::Dot => io::to_dot(&g),
    };
    emit(&args.output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<ExitCode, String> {
    let started = Instant::now();
    let text = read_input(&args.input)?;
    let g = io::from_str(&text).map_err(|e| e.to_string())?;
    log::info!("analyzing graph: {} vertices, {} edges", g.n(), g.edge_count());

    let auts = enumerate_automorphisms(&g, args.aut_cap).map_err(|e| e.to_string())?;
    if auts.is_capped() {
        let doc = json!({
            "n": g.n(),
            "m": g.edge_count(),
            "aut_order_at_least": auts.order(),
            "capped": true,
            "elapsed_ms": started.elapsed().as_millis() as u64,
        });
        emit(&args.output, &format!("{doc:#}\n"))?;
        return Ok(ExitCode::from(EXIT_CAP));
    }
    log::info!("group order {}", auts.order());

    let mut capped_labels = false;
    let d = match distinguishing_number(&g, &auts, args.max_labels) {
        Ok(res) => json!({ "value": res.value, "witness": res.witness.labels() }),
        Err(DistError::RMaxExceeded { r_max }) => {
            capped_labels = true;
            json!({ "value": null, "reason": format!("no labeling within {r_max} labels") })
        }
        Err(e) => return Err(e.to_string()),
    };
    let dprime = if args.no_edge || g.edge_count() == 0 {
        json!(null)
    } else {
        match distinguishing_index(&g, &auts, args.max_labels) {
            Ok(res) => json!({
                "value": res.value,
                "witness": res.witness.labels(),
                "kernel_nontrivial": res.kernel_nontrivial,
            }),
            Err(DistError::RMaxExceeded { r_max }) => {
                capped_labels = true;
                json!({ "value": null, "reason": format!("no labeling within {r_max} labels") })
            }
            Err(e) => return Err(e.to_string()),
        }
    };
    let doc = json!({
        "n": g.n(),
        "m": g.edge_count(),
        "aut_order": auts.order(),
        "capped": false,
        "d": d,
        "dprime": dprime,
        "elapsed_ms": started.elapsed().as_millis() as u64,
    });
    emit(&args.output, &format!("{doc:#}\n"))?;
    Ok(if capped_labels {
        ExitCode::from(EXIT_CAP)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_formula(args: FormulaArgs) -> Result<ExitCode, String> {
    let p = &args.params;
    let need = |count: usize, what: &str| -> Result<(), String> {
        if p.len() == count {
            Ok(())
        } else {
            Err(format!("{what} takes {count} parameter(s), got {}", p.len()))
        }
    };
    let doc = match args.family.as_str() {
        "q" | "q_graph" => {
            need(2, "q")?;
            let (m, n) = (p[0], p[1]);
            let d = formulas::d_q::<Exact>(m, n).map_err(|e| e.to_string())?;
            let dprime = match formulas::dprime_q(m, n) {
                Ok(v) => json!(v),
                Err(e) => json!({ "value": null, "reason": e.to_string() }),
            };
            json!({ "family": "q", "params": p, "d": d, "dprime": dprime })
        }
        "dutch" => {
            need(2, "dutch")?;
            let (n, k) = (p[0], p[1]);
            json!({
                "family": "dutch",
                "params": p,
                "d": formulas::d_dutch::<Exact>(n, k).map_err(|e| e.to_string())?,
                "dprime": formulas::dprime_dutch::<Exact>(n, k).map_err(|e| e.to_string())?,
                "aut_order": group_order_formula_dutch(n, k)
                    .map_err(|e| e.to_string())?
                    .to_string(),
            })
        }
        "friendship" => {
            need(1, "friendship")?;
            let closed =
                formulas::friendship_closed::<Exact>(p[0]).map_err(|e| e.to_string())?;
            json!({
                "family": "friendship",
                "params": p,
                "d": closed.d,
                "dprime": closed.dprime,
                "d_float": closed.d_float,
                "dprime_float": closed.dprime_float,
                "floats_agree": closed.floats_agree(),
                "aut_order": group_order_formula_dutch(p[0], 3)
                    .map_err(|e| e.to_string())?
                    .to_string(),
            })
        }
        name @ ("spiro" | "poly" | "nanostar") => {
            let family = match name {
                "spiro" => ChemFamily::Spiro,
                "poly" => ChemFamily::Poly,
                _ => ChemFamily::Nanostar,
            };
            let res = chemical_constants(family, p).map_err(|e| e.to_string())?;
            json!({ "family": name, "params": p, "d": res.d, "dprime": res.dprime })
        }
        other => return Err(format!("unknown family {other:?}")),
    };
    println!("{doc:#}");
    Ok(ExitCode::SUCCESS)
}

/// "a..b" (inclusive) or a single number.
fn parse_range(text: &str, what: &str) -> Result<RangeInclusive<u64>, String> {
    let parse = |tok: &str| -> Result<u64, String> {
        tok.parse()
            .map_err(|e| format!("range for {what}: {e} in {text:?}"))
    };
    match text.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b)?);
            if a > b {
                return Err(format!("range for {what} is empty: {text:?}"));
            }
            Ok(a..=b)
        }
        None => {
            let v = parse(text)?;
            Ok(v..=v)
        }
    }
}

fn range_opt(
    arg: &Option<String>,
    what: &str,
    default: RangeInclusive<u64>,
) -> Result<RangeInclusive<u64>, String> {
    match arg {
        Some(text) => parse_range(text, what),
        None => Ok(default),
    }
}

fn build_instances(args: &VerifyArgs) -> Result<Vec<Instance>, String> {
    let mut out = Vec::new();
    match args.family.as_str() {
        "dutch" => {
            for n in range_opt(&args.n, "n", 2..=4)? {
                for k in range_opt(&args.k, "k", 3..=5)? {
                    out.push(Instance::Dutch { n, k });
                }
            }
        }
        "q" | "q_graph" => {
            for m in range_opt(&args.m, "m", 2..=5)? {
                for n in range_opt(&args.n, "n", 2..=4)? {
                    out.push(Instance::Q { m, n });
                }
            }
        }
        "friendship" => {
            for n in range_opt(&args.n, "n", 2..=6)? {
                out.push(Instance::Friendship { n });
            }
        }
        "spiro" | "poly" => {
            for q in range_opt(&args.q, "q", 3..=6)? {
                for h in range_opt(&args.h, "h", 1..=3)? {
                    if h > q / 2 {
                        continue;
                    }
                    for k in range_opt(&args.k, "k", 2..=3)? {
                        out.push(if args.family == "spiro" {
                            Instance::Spiro { q, h, k }
                        } else {
                            Instance::Poly { q, h, k }
                        });
                    }
                }
            }
        }
        "nanostar" => {
            for k in range_opt(&args.k, "k", 1..=1)? {
                out.push(Instance::Nanostar { k });
            }
        }
        "bounds" => {
            for index in 0..args.samples {
                out.push(Instance::BoundSample { index });
            }
        }
        other => return Err(format!("unknown family {other:?}")),
    }
    if out.is_empty() {
        return Err("the requested ranges produce no instances".into());
    }
    Ok(out)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let instances = build_instances(&args)?;
    let config = RunConfig {
        aut_cap: args.aut_cap,
        max_vertices: args.max_vertices,
        max_edges: args.max_edges,
        max_labels: args.max_labels,
        jobs: args.jobs,
        seed: args.seed,
    };
    log::info!("verifying {} instances", instances.len());
    let report = run_verification(&instances, &config);
    let text = match args.format {
        ReportFormat::Json => format!("{}\n", report.to_json()),
        ReportFormat::Csv => report.to_csv(),
        ReportFormat::Table => report.to_table(),
    };
    emit(&args.output, &text)?;
    Ok(if report.summary.mismatched > 0 {
        ExitCode::from(EXIT_MISMATCH)
    } else {
        ExitCode::SUCCESS
    })
}
