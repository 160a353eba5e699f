//! Command-line front end: generate family graphs, solve external graphs,
//! sweep verification grids, and cross-check the line-graph identity on
//! random graphs.
//!
//! Exit codes: 0 on success with every comparison matching, 1 when a
//! verification mismatch / identity failure / exhausted budget prevented an
//! answer, 2 on configuration errors.

use alphaline::{
    alpha_line, check_line_identity, default_grid, emit_report, is_perfect_matching, max_matching,
    mis_exact, write_report, FamilySelector, FamilySpec, LineIdentityConfig, OracleMode,
    ReportFormat, RunConfig, RunReport, SolveError, Witness, DEFAULT_NODE_BUDGET,
};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "alphaline",
    version,
    about = "Independence numbers, matching numbers, and line-graph independence numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family graph, e.g. `wheel:n=5` or `armed_crown:m=3,n=4`
    Generate {
        /// Family spec such as `complete:n=5`, `sunlet:n=6`, `armed_crown:m=3,n=4`
        spec: String,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphFormatArg::Dimacs)]
        format: GraphFormatArg,
    },
    /// Solve a graph from a file (DIMACS `p edge` or JSON edge list)
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = WhatArg::All)]
        what: WhatArg,
        /// Input format; inferred from the extension when omitted
        #[arg(long, value_enum)]
        format: Option<GraphFormatArg>,
        /// Node budget for the branch-and-bound searches
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Sweep family grids and compare solvers against the closed forms
    Verify {
        /// Family selector, repeatable: `wheel`, `wheel:n=3..10`, `armed_crown:m=2..5,n=3..6`
        #[arg(long = "family", conflicts_with = "all")]
        family: Vec<String>,
        /// Sweep the default grid of all eight families
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = OracleArg::On)]
        oracle: OracleArg,
        #[arg(long, value_enum, default_value_t = ReportFormatArg::Table)]
        format: ReportFormatArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
        /// Write the report to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check alpha(L(G)) = nu(G) = exhaustive nu on seeded random graphs
    Theorem1 {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 10)]
        max_vertices: usize,
        #[arg(long, default_value_t = 20)]
        max_edges: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormatArg {
    Dimacs,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhatArg {
    Alpha,
    Nu,
    AlphaLine,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleArg {
    On,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormatArg {
    Table,
    Csv,
    Json,
}

impl From<ReportFormatArg> for ReportFormat {
    fn from(arg: ReportFormatArg) -> Self {
        match arg {
            ReportFormatArg::Table => ReportFormat::Table,
            ReportFormatArg::Csv => ReportFormat::Csv,
            ReportFormatArg::Json => ReportFormat::Json,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Generate { spec, out, format } => generate(&spec, out.as_deref(), format),
        Command::Solve {
            file,
            what,
            format,
            budget,
        } => solve(&file, what, format, budget),
        Command::Verify {
            family,
            all,
            oracle,
            format,
            seed,
            budget,
            out,
        } => verify(&family, all, oracle, format, seed, budget, out.as_deref()),
        Command::Theorem1 {
            count,
            max_vertices,
            max_edges,
            seed,
        } => theorem1(count, max_vertices, max_edges, seed),
    }
}

/// `--budget` wins over the `ALPHALINE_BUDGET` environment variable, which
/// wins over the built-in default.
fn resolve_budget(flag: Option<u64>) -> Result<u64, String> {
    if let Some(budget) = flag {
        return Ok(budget);
    }
    match std::env::var("ALPHALINE_BUDGET") {
        Ok(value) => value
            .parse()
            .map_err(|_| format!("ALPHALINE_BUDGET must be a non-negative integer, got `{value}`")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_NODE_BUDGET),
        Err(e) => Err(format!("cannot read ALPHALINE_BUDGET: {e}")),
    }
}

fn generate(
    spec: &str,
    out: Option<&std::path::Path>,
    format: GraphFormatArg,
) -> Result<ExitCode, String> {
    let spec: FamilySpec = spec.parse().map_err(|e| format!("{e}"))?;
    let graph = spec.generate().map_err(|e| format!("{e}"))?;
    let rendered = match format {
        GraphFormatArg::Dimacs => alphaline::io::to_dimacs(&graph),
        GraphFormatArg::Json => alphaline::io::to_json(&graph),
    };
    match out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| format!("failed to write {}: {e}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn solve(
    file: &std::path::Path,
    what: WhatArg,
    format: Option<GraphFormatArg>,
    budget: Option<u64>,
) -> Result<ExitCode, String> {
    let budget = resolve_budget(budget)?;
    let format = match format {
        Some(GraphFormatArg::Dimacs) => alphaline::io::GraphFormat::Dimacs,
        Some(GraphFormatArg::Json) => alphaline::io::GraphFormat::Json,
        None => alphaline::io::GraphFormat::from_path(file),
    };
    let loaded = alphaline::io::load_graph(file, format).map_err(|e| format!("{e}"))?;
    for warning in &loaded.warnings {
        eprintln!("warning: {warning}");
    }
    let g = &loaded.graph;
    println!("graph: {} vertices, {} edges", g.vertex_count(), g.edge_count());

    let mut budget_hit = false;
    if matches!(what, WhatArg::Alpha | WhatArg::All) {
        match mis_exact(g, budget) {
            Ok(result) => println!(
                "alpha(G)    = {}   witness vertices: {}",
                result.value,
                format_witness(&result.witness)
            ),
            Err(SolveError::BudgetExhausted { budget, .. }) => {
                println!("alpha(G)    : budget of {budget} nodes exhausted");
                budget_hit = true;
            }
            Err(e) => return Err(format!("{e}")),
        }
    }
    if matches!(what, WhatArg::Nu | WhatArg::All) {
        let result = max_matching(g);
        println!(
            "nu(G)       = {}   witness edges: {}{}",
            result.value,
            format_witness(&result.witness),
            if is_perfect_matching(g, result.value) {
                "   (perfect matching)"
            } else {
                ""
            }
        );
    }
    if matches!(what, WhatArg::AlphaLine | WhatArg::All) {
        match alpha_line(g, budget) {
            Ok(result) => println!(
                "alpha(L(G)) = {}   witness edges: {}",
                result.value,
                format_witness(&result.witness)
            ),
            Err(SolveError::BudgetExhausted { budget, .. }) => {
                println!("alpha(L(G)) : budget of {budget} nodes exhausted");
                budget_hit = true;
            }
            Err(e) => return Err(format!("{e}")),
        }
    }
    Ok(if budget_hit {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn format_witness(witness: &Witness) -> String {
    match witness {
        Witness::Vertices(vs) => vs
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" "),
        Witness::Edges(es) => es
            .iter()
            .map(|(u, v)| format!("({u},{v})"))
            .collect::<Vec<_>>()
            .join(" "),
    }
}

fn verify(
    family: &[String],
    all: bool,
    oracle: OracleArg,
    format: ReportFormatArg,
    seed: u64,
    budget: Option<u64>,
    out: Option<&std::path::Path>,
) -> Result<ExitCode, String> {
    let selectors = if family.is_empty() || all {
        default_grid()
    } else {
        family
            .iter()
            .map(|s| s.parse::<FamilySelector>().map_err(|e| format!("{e}")))
            .collect::<Result<Vec<_>, _>>()?
    };
    let config = RunConfig {
        selectors,
        node_budget: resolve_budget(budget)?,
        oracle: match oracle {
            OracleArg::On => OracleMode::On,
            OracleArg::Off => OracleMode::Off,
        },
        format: format.into(),
        seed,
        ..RunConfig::default()
    };
    let records = alphaline::verify_selected(&config).map_err(|e| format!("{e}"))?;
    let report = RunReport::new(config.clone(), records);

    match out {
        Some(path) => write_report(&report, config.format, path).map_err(|e| format!("{e}"))?,
        None => print!(
            "{}",
            emit_report(&report, config.format).map_err(|e| format!("{e}"))?
        ),
    }
    eprintln!(
        "verify: pass={} fail={} skipped={}",
        report.summary.pass, report.summary.fail, report.summary.skipped
    );
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn theorem1(
    count: usize,
    max_vertices: usize,
    max_edges: usize,
    seed: u64,
) -> Result<ExitCode, String> {
    let config = LineIdentityConfig {
        count,
        max_vertices,
        max_edges,
        seed,
    };
    let summary = check_line_identity(&config).map_err(|e| format!("{e}"))?;
    println!(
        "line-graph identity on {} random graphs (<= {} vertices, <= {} edges, seed {}): {}/{} passed",
        summary.checked, max_vertices, max_edges, seed, summary.passed, summary.checked
    );
    if summary.all_passed() {
        return Ok(ExitCode::SUCCESS);
    }
    for failure in &summary.failures {
        match serde_json::to_string(failure) {
            Ok(json) => println!("counterexample: {json}"),
            Err(e) => println!("counterexample (serialization failed: {e})"),
        }
    }
    Ok(ExitCode::from(1))
}
