use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use adjdim_core::census::{format_summary, run_census, write_jsonl, CensusOptions, CensusRecord};
use adjdim_core::graph::{diameter, graph6_decode, graph6_encode, twin_partition};
use adjdim_core::solver::{lower_bound_population, lower_bound_twins, upper_bound_diameter};
use adjdim_core::verify::{self, explore_open_question, render_json, render_text, TheoremId, Universe, VerifyOptions};
use adjdim_core::{adjacency_dimension, metric_dimension, Error, FamilySpec, Graph, SolveMode};

#[derive(Parser)]
#[command(name = "adjdim", version, about = "Adjacency dimension of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Adjacency dimension of one graph.
    Dim2 {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value = "pruned")]
        mode: SolveMode,
        /// Print a minimum resolving set.
        #[arg(long)]
        show_basis: bool,
        /// Also print the metric dimension (connected graphs only).
        #[arg(long)]
        with_dim: bool,
        /// Print the full census record as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Metric dimension of one connected graph.
    Dim {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        show_basis: bool,
    },
    /// Every graph of order 1..=max-n, one JSON line per isomorphism class.
    Census {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long)]
        connected_only: bool,
        /// Worker threads, 0 for one per core.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long, default_value = "pruned")]
        mode: SolveMode,
        /// Record file. Without it records go to stdout and the summary to stderr.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the known results exhaustively.
    Verify {
        /// Check ids, or `all`.
        #[arg(required = true)]
        ids: Vec<String>,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Text report path; the JSON report goes next to it with a `.json` suffix.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the JSON report to stdout instead of the text one.
        #[arg(long)]
        json: bool,
        /// Include the extremal construction at diameter 10.
        #[arg(long)]
        extended: bool,
    },
    /// Expand a family spec such as `path:10`, `kst:2,3`, `extremal:8,5`, `omega:2,1,63`.
    Family {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        #[arg(long)]
        with_dim: bool,
    },
    /// Search for graphs attaining the diameter bound at small diameters.
    Explore {
        #[arg(long, value_delimiter = ',', default_values_t = [3, 4, 5, 6])]
        diameters: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph in graph6.
    graph6: Option<String>,
    /// Family spec instead of graph6.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
    Json,
}

enum Failure {
    /// Runtime problem such as I/O, or a failed verdict.
    Runtime(String),
    /// Bad input or usage.
    Usage(String),
    /// The input parsed but the solver cannot handle it.
    Precondition(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Runtime(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }
}

fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn precondition(e: Error) -> Failure {
    match e {
        Error::Io(_) => Failure::Runtime(e.to_string()),
        _ => Failure::Precondition(e.to_string()),
    }
}

fn runtime(e: impl std::fmt::Display) -> Failure {
    Failure::Runtime(e.to_string())
}

/// Errors from scope checks are the caller's fault; anything else is a runtime failure.
fn scoped(e: Error) -> Failure {
    match e {
        Error::ScopeTooLarge(_) | Error::InvalidParameters(_) | Error::OrderOutOfRange { .. } => usage(e),
        _ => runtime(e),
    }
}

type Outcome = std::result::Result<(), Failure>;

fn parse_family(spec: &str) -> std::result::Result<Graph, Failure> {
    spec.parse::<FamilySpec>().and_then(|s| s.build()).map_err(usage)
}

fn read_graph(input: &GraphInput) -> std::result::Result<Graph, Failure> {
    match (&input.graph6, &input.family) {
        (_, Some(spec)) => parse_family(spec),
        (Some(g6), None) => graph6_decode(g6.trim()).map_err(usage),
        (None, None) => Err(Failure::Usage("expected a graph6 string or --family".into())),
    }
}

fn fmt_list(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn cmd_dim2(input: &GraphInput, mode: SolveMode, show_basis: bool, with_dim: bool, as_json: bool) -> Outcome {
    let g = read_graph(input)?;
    if as_json {
        let record = CensusRecord::compute(&g, mode).map_err(precondition)?;
        println!("{}", serde_json::to_string(&record).map_err(runtime)?);
        return Ok(());
    }
    let result = adjacency_dimension(&g, mode).map_err(precondition)?;
    let n = g.order();
    println!("graph: {}", graph6_encode(&g));
    println!("n = {n}, m = {}", g.edge_count());
    println!("dim2 = {}", result.value);
    if show_basis {
        println!("basis = {}", fmt_list(&result.basis));
    }
    let connected = g.is_connected() && n >= 2;
    if with_dim {
        if connected {
            println!("dim = {}", metric_dimension(&g).map_err(precondition)?.value);
        } else {
            println!("dim = undefined (disconnected)");
        }
    }
    let ub = if connected {
        upper_bound_diameter(&g).map_err(precondition)?.to_string()
    } else {
        "undefined".into()
    };
    println!(
        "bounds: population {}, twins {}, diameter {ub}",
        lower_bound_population(n),
        lower_bound_twins(&g)
    );
    println!("twin classes: {:?}", twin_partition(&g).sorted_sizes());
    Ok(())
}

fn cmd_dim(input: &GraphInput, show_basis: bool) -> Outcome {
    let g = read_graph(input)?;
    let result = metric_dimension(&g).map_err(precondition)?;
    println!("graph: {}", graph6_encode(&g));
    println!("dim = {}", result.value);
    if show_basis {
        println!("basis = {}", fmt_list(&result.basis));
    }
    Ok(())
}

fn create(path: &Path) -> std::result::Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", path.display())))
}

fn cmd_census(opts: CensusOptions, out: Option<&Path>) -> Outcome {
    let start = Instant::now();
    let records = run_census(&opts).map_err(scoped)?;
    let summary = format_summary(&records);
    match out {
        Some(path) => {
            write_jsonl(&records, create(path)?).map_err(runtime)?;
            print!("{summary}");
            println!("{} records written to {}", records.len(), path.display());
        }
        None => {
            write_jsonl(&records, io::stdout().lock()).map_err(runtime)?;
            eprint!("{summary}");
        }
    }
    eprintln!("census finished in {:.2?}", start.elapsed());
    Ok(())
}

fn parse_ids(ids: &[String]) -> std::result::Result<Vec<TheoremId>, Failure> {
    let mut out = Vec::new();
    for id in ids {
        if id == "all" {
            out.extend(TheoremId::ALL);
        } else {
            out.push(id.parse().map_err(|_| {
                let known: Vec<&str> = TheoremId::ALL.iter().map(|t| t.as_str()).collect();
                Failure::Usage(format!("unknown check {id:?}; expected all or one of {}", known.join(", ")))
            })?);
        }
    }
    Ok(out)
}

fn json_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn cmd_verify(ids: &[String], opts: &VerifyOptions, out: Option<&Path>, as_json: bool) -> Outcome {
    let ids = parse_ids(ids)?;
    let start = Instant::now();
    let reports = verify::run(&ids, opts).map_err(scoped)?;
    let text = render_text(&reports);
    let json = render_json(&reports);
    match out {
        Some(path) => {
            let mut t = create(path)?;
            t.write_all(text.as_bytes()).map_err(runtime)?;
            t.flush().map_err(runtime)?;
            let jp = json_path(path);
            let mut j = create(&jp)?;
            writeln!(j, "{json}").map_err(runtime)?;
            j.flush().map_err(runtime)?;
            eprintln!("reports written to {} and {}", path.display(), jp.display());
        }
        None if as_json => println!("{json}"),
        None => print!("{text}"),
    }
    for r in &reports {
        eprintln!("{}: {:?} in {:.2?}", r.theorem, r.verdict, r.elapsed);
    }
    eprintln!("total {:.2?}", start.elapsed());
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Runtime(format!("{failed} of {} checks failed", reports.len())))
    }
}

fn cmd_family(spec: &str, format: Format, with_dim: bool) -> Outcome {
    let g = parse_family(spec)?;
    let dim2 = if with_dim {
        Some(adjacency_dimension(&g, SolveMode::Pruned).map_err(precondition)?.value)
    } else {
        None
    };
    let g6 = graph6_encode(&g);
    match format {
        Format::Graph6 => match dim2 {
            Some(d) => println!("{g6} dim2={d}"),
            None => println!("{g6}"),
        },
        Format::Edges => {
            println!("{} {}", g.order(), g.edge_count());
            for (u, v) in g.edges() {
                println!("{u} {v}");
            }
            if let Some(d) = dim2 {
                println!("# dim2 = {d}");
            }
        }
        Format::Json => {
            let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
            let diam = diameter(&g).map_err(precondition)?.finite().map_or(-1, i64::from);
            let mut obj = json!({
                "spec": spec,
                "graph6": g6,
                "n": g.order(),
                "m": g.edge_count(),
                "diameter": diam,
                "edges": edges,
            });
            if let Some(d) = dim2 {
                obj["dim2"] = json!(d);
            }
            println!("{obj}");
        }
    }
    Ok(())
}

fn cmd_explore(diameters: &[usize], n_max: usize, max_n: usize, workers: usize) -> Outcome {
    if n_max > 32 {
        return Err(Failure::Usage(format!("--n-max must be at most 32, got {n_max}")));
    }
    let universe = Universe::build(max_n, workers).map_err(scoped)?;
    let report = explore_open_question(&universe, diameters, n_max).map_err(scoped)?;
    print!("{}", render_text(std::slice::from_ref(&report)));
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Dim2 {
            input,
            mode,
            show_basis,
            with_dim,
            json,
        } => cmd_dim2(&input, mode, show_basis, with_dim, json),
        Command::Dim { input, show_basis } => cmd_dim(&input, show_basis),
        Command::Census {
            max_n,
            connected_only,
            workers,
            mode,
            out,
        } => cmd_census(
            CensusOptions {
                max_n,
                connected_only,
                workers,
                mode,
            },
            out.as_deref(),
        ),
        Command::Verify {
            ids,
            max_n,
            workers,
            out,
            json,
            extended,
        } => {
            let mut opts = VerifyOptions {
                workers,
                ..VerifyOptions::with_max_n(max_n)
            };
            if extended {
                opts = opts.extended();
            }
            cmd_verify(&ids, &opts, out.as_deref(), json)
        }
        Command::Family { spec, format, with_dim } => cmd_family(&spec, format, with_dim),
        Command::Explore {
            diameters,
            n_max,
            max_n,
            workers,
        } => cmd_explore(&diameters, n_max, max_n, workers),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Runtime(msg) | Failure::Usage(msg) | Failure::Precondition(msg)) = &f;
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}
