//! `chromon`: censuses, per-graph reports, subdivision and jacket splits.
//!
//! Data goes to stdout or the named output files; diagnostics go to stderr.
//! Exit codes: 0 success, 1 input error, 2 invariant violation, 3 budget
//! exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chromon::census::{census_csv, census_for_order, degree_csv, min_genus_csv};
use chromon::{
    analyze, barycentric_colorize, decompose, run_census, CensusConfig, ColoredGraph, Error, Mode,
    SimplicialComplex, DEFAULT_BUDGET,
};
use clap::{ArgGroup, Parser, Subcommand};

const BUDGET_ENV: &str = "CHROMON_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "chromon", version, about = "Exact combinatorics of edge-colored graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate every connected graph of each even order and write
    /// census.csv, degree_histogram.csv and min_genus_histogram.csv.
    #[command(group(ArgGroup::new("order").required(true).args(["order_max", "order_only"])))]
    Census {
        /// Dimension d (graphs have d+1 colors), 2..=8.
        #[arg(long = "dim")]
        dim: usize,
        /// Run every even order 2, 4, ..., N.
        #[arg(long = "order-max", value_name = "N")]
        order_max: Option<usize>,
        /// Run the single even order N.
        #[arg(long = "order", value_name = "N")]
        order_only: Option<usize>,
        /// labeled (sigma_0 fixed to the identity) or canonical (one graph per
        /// conjugation orbit).
        #[arg(long, default_value = "labeled")]
        mode: Mode,
        /// Worker threads; results do not depend on this.
        #[arg(long, value_name = "T")]
        threads: Option<usize>,
        /// Maximum tuples per order, (n/2)!^d. Defaults to $CHROMON_BUDGET,
        /// else 1000000000.
        #[arg(long, value_name = "B")]
        budget: Option<u128>,
        /// Output directory for the CSV files.
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
    },
    /// Print the full report for one graph file.
    Analyze {
        file: PathBuf,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Convert a closed simplicial complex into the colored graph of its
    /// barycentric subdivision.
    Subdivide {
        file: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Split the edges of a graph into tree, cotree and crossing edges for one
    /// jacket.
    Decompose {
        file: PathBuf,
        /// Cyclic color order, e.g. 0,1,2,3.
        #[arg(long, value_name = "CYCLE")]
        jacket: String,
    },
}

/// Failure with its exit code.
#[derive(Debug)]
enum Failure {
    Input(String),
    Violation { message: String, reproducer: Option<PathBuf> },
    Budget(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Violation { .. } => 2,
            Failure::Budget(_) => 3,
        }
    }
}

fn classify(err: Error, reproducer: Option<PathBuf>) -> Failure {
    match err {
        Error::BudgetExceeded { .. } => Failure::Budget(err.to_string()),
        Error::InvariantViolation { .. }
        | Error::InternalMismatch(_)
        | Error::GaugeRankMismatch { .. } => Failure::Violation {
            message: err.to_string(),
            reproducer,
        },
        other => Failure::Input(other.to_string()),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<ColoredGraph, Failure> {
    ColoredGraph::parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn budget_from_env() -> Result<u128, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("{BUDGET_ENV}=`{v}` is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Census {
            dim,
            order_max,
            order_only,
            mode,
            threads,
            budget,
            out,
        } => {
            let budget = match budget {
                Some(b) => b,
                None => budget_from_env()?,
            };
            let threads = match threads {
                Some(0) => return Err(Failure::Input("--threads must be at least 1".into())),
                Some(t) => t,
                None => std::thread::available_parallelism().map_or(1, |n| n.get()),
            };
            if !out.is_dir() {
                return Err(Failure::Input(format!("{} is not a directory", out.display())));
            }
            let reproducer = out.join("counterexample.cg");
            let on_error = |e: Error| {
                if let Error::InvariantViolation { graph, .. } = &e {
                    if fs::write(&reproducer, graph).is_ok() {
                        return classify(e, Some(reproducer.clone()));
                    }
                }
                classify(e, None)
            };
            let tables = match (order_max, order_only) {
                (Some(n_max), _) => {
                    let config = CensusConfig::new(dim, n_max)
                        .mode(mode)
                        .threads(threads)
                        .budget(budget);
                    run_census(&config).map_err(on_error)?
                }
                (None, Some(n)) => {
                    vec![census_for_order(dim, n, mode, threads, budget).map_err(on_error)?]
                }
                (None, None) => unreachable!("clap enforces one order flag"),
            };
            write(&out.join("census.csv"), &census_csv(&tables))?;
            write(&out.join("degree_histogram.csv"), &degree_csv(&tables))?;
            write(&out.join("min_genus_histogram.csv"), &min_genus_csv(&tables))?;
            for t in &tables {
                eprintln!(
                    "d={} n={}: {} connected, {} rational / {} integral homology spheres",
                    t.d, t.n, t.total_connected, t.h1q_trivial, t.h1z_trivial
                );
            }
            Ok(())
        }
        Command::Analyze { file, json } => {
            let g = load_graph(&file)?;
            let report = analyze(&g).map_err(|e| classify(e, Some(file.clone())))?;
            if json {
                let text = serde_json::to_string_pretty(&report.to_json())
                    .map_err(|e| Failure::Input(e.to_string()))?;
                println!("{text}");
            } else {
                print!("{}", report.to_text());
            }
            Ok(())
        }
        Command::Subdivide { file, out } => {
            let text = read(&file)?;
            let sc = SimplicialComplex::parse(&text)
                .map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
            let g = barycentric_colorize(&sc)
                .map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
            write(&out, &g.to_text())?;
            eprintln!("wrote {} (d={} n={})", out.display(), g.dimension(), g.order());
            Ok(())
        }
        Command::Decompose { file, jacket } => {
            let g = load_graph(&file)?;
            let split = decompose(&g, &jacket).map_err(|e| classify(e, Some(file.clone())))?;
            print!("{}", split.to_text());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Input(m) => eprintln!("error: {m}"),
                Failure::Budget(m) => eprintln!("budget exceeded: {m}"),
                Failure::Violation {
                    message,
                    reproducer,
                } => {
                    eprintln!("invariant violation: {message}");
                    if let Some(path) = reproducer {
                        eprintln!("counterexample: {}", path.display());
                    }
                }
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
