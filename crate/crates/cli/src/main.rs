use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mvchroma::gluedtrees::{build_glued_tree, constructive_coloring, verify_theorem, TheoremOptions, TheoremReport};
use mvchroma::reduction::{
    build_reduction, normalize, parse_nae_formula, verify_reduction, NaeFormula, NormalizeOutcome,
};
use mvchroma::solver::nae::{nae_satisfiable, DEFAULT_VARIABLE_CAP};
use mvchroma::solver::{chi_mu_exact, Budget, SearchStatus, Solver};
use mvchroma::{
    parse_coloring, parse_graph, validate_gp_coloring, validate_mv_coloring, write_coloring, write_graph,
    DistanceOracle, Graph, ReportMode,
};
use serde::Serialize;
use thiserror::Error;

const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 2;
const EXIT_NEGATIVE: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: mvchroma::Error },
    #[error(transparent)]
    Lib(#[from] mvchroma::Error),
    #[error("cannot configure thread pool: {0}")]
    Threads(String),
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "mvchroma", version, about = "Mutual-visibility colorings of graphs")]
struct Cli {
    /// Worker threads for distance and validation passes (0 = all cores).
    #[arg(long, global = true, env = "MVCHROMA_THREADS", default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the glued t-ary tree GT(r, t) and its label sidecar.
    GenTree(GenTreeArgs),
    /// Write the constructive MV coloring of GT(r, t).
    Color(ColorArgs),
    /// Compare formula, construction and (optionally) exact search on GT(r, t).
    Theorem(TheoremArgs),
    /// Check a coloring against a graph.
    Validate(ValidateArgs),
    /// Decide k-colorability, or compute the MV chromatic number.
    Solve(SolveArgs),
    /// Build the two-color reduction graph of an NAE3SAT formula.
    Reduce(ReduceArgs),
    /// Decide a formula both directly and through its reduction graph.
    ReduceVerify(ReduceVerifyArgs),
    /// Brute-force NAE satisfiability.
    Nae(NaeArgs),
}

#[derive(Debug, Args, Serialize)]
struct TreeParams {
    #[arg(long)]
    r: u32,
    #[arg(long)]
    t: usize,
    /// Refuse trees with more vertices than this.
    #[arg(long, default_value_t = mvchroma::gluedtrees::DEFAULT_SIZE_CAP)]
    size_cap: usize,
}

#[derive(Debug, Args, Serialize)]
struct BudgetArgs {
    /// Stop after this many search nodes.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Stop after this many seconds.
    #[arg(long)]
    budget_secs: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget { max_nodes: self.budget_nodes, max_time: self.budget_secs.map(|s| Duration::from_secs_f64(s.max(0.0))) }
    }
}

#[derive(Debug, Args, Serialize)]
struct GenTreeArgs {
    #[command(flatten)]
    tree: TreeParams,
    /// Graph output (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Label sidecar output.
    #[arg(long)]
    labels: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
struct ColorArgs {
    #[command(flatten)]
    tree: TreeParams,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
struct TheoremArgs {
    #[command(flatten)]
    tree: TreeParams,
    /// Also compute the exact value by search.
    #[arg(long)]
    exact: bool,
    /// Also check the construction's classes for general position.
    #[arg(long)]
    gp: bool,
    #[command(flatten)]
    budget: BudgetArgs,
    /// JSON report output (stdout when omitted).
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Mode {
    Mv,
    Gp,
}

#[derive(Debug, Args, Serialize)]
struct ValidateArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    coloring: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Mv)]
    mode: Mode,
    /// Stop at the first violation.
    #[arg(long)]
    fail_fast: bool,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
struct SolveArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Decide this many colors instead of computing the minimum.
    #[arg(long)]
    k: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Coloring output when one is found.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
struct ReduceArgs {
    #[arg(long)]
    formula: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Vertex legend as JSON.
    #[arg(long)]
    legend: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
struct ReduceVerifyArgs {
    #[arg(long)]
    formula: PathBuf,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Variable cap for the brute-force side.
    #[arg(long, default_value_t = DEFAULT_VARIABLE_CAP)]
    max_vars: usize,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
struct NaeArgs {
    #[arg(long)]
    formula: PathBuf,
    #[arg(long, default_value_t = DEFAULT_VARIABLE_CAP)]
    max_vars: usize,
}

#[derive(Serialize)]
struct Envelope<'a, C: Serialize, R: Serialize> {
    tool_version: &'static str,
    command: &'a str,
    config: &'a C,
    #[serde(flatten)]
    report: R,
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn write_to(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io { path: p.to_owned(), source }),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: PathBuf::from("<stdout>"), source }),
    }
}

fn emit_json<C: Serialize, R: Serialize>(path: Option<&Path>, command: &str, config: &C, report: R) -> CliResult<()> {
    let envelope = Envelope { tool_version: TOOL_VERSION, command, config, report };
    let mut text = serde_json::to_string_pretty(&envelope).expect("reports serialize");
    text.push('\n');
    write_to(path, &text)
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    parse_graph(&read(path)?).map_err(|source| CliError::Parse { path: path.to_owned(), source })
}

fn load_formula(path: &Path) -> CliResult<NaeFormula> {
    parse_nae_formula(&read(path)?).map_err(|source| CliError::Parse { path: path.to_owned(), source })
}

fn gen_tree(args: &GenTreeArgs) -> CliResult<u8> {
    let tree = build_glued_tree(args.tree.r, args.tree.t, args.tree.size_cap)?;
    write_to(args.out.as_deref(), &write_graph(tree.graph()))?;
    if let Some(path) = &args.labels {
        write_to(Some(path), &tree.label_sidecar())?;
    }
    Ok(EXIT_OK)
}

fn color(args: &ColorArgs) -> CliResult<u8> {
    let tree = build_glued_tree(args.tree.r, args.tree.t, args.tree.size_cap)?;
    let oracle = DistanceOracle::new(tree.graph());
    let construction = constructive_coloring(&tree, &oracle)?;
    write_to(args.out.as_deref(), &write_coloring(&construction.coloring))?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct TheoremOut {
    #[serde(flatten)]
    report: TheoremReport,
    agree: bool,
}

fn theorem(args: &TheoremArgs) -> CliResult<u8> {
    let opts =
        TheoremOptions { exact: args.exact, gp: args.gp, budget: args.budget.budget(), size_cap: args.tree.size_cap };
    let report = verify_theorem(args.tree.r, args.tree.t, &opts)?;
    let agree = report.agree();
    let budget_hit = report.exact.as_ref().is_some_and(|e| e.chi.is_none());
    emit_json(args.json.as_deref(), "theorem", args, TheoremOut { report, agree })?;
    Ok(match (agree, budget_hit) {
        (false, _) => EXIT_NEGATIVE,
        (true, true) => EXIT_BUDGET,
        (true, false) => EXIT_OK,
    })
}

#[derive(Serialize)]
struct ViolationOut {
    u: usize,
    v: usize,
    color: usize,
}

#[derive(Serialize)]
struct ValidateOut {
    valid: bool,
    mode: Mode,
    violations: Vec<ViolationOut>,
    checked_pairs: usize,
    /// External label of each dense color, present when the input was renumbered.
    #[serde(skip_serializing_if = "Option::is_none")]
    color_labels: Option<Vec<usize>>,
}

fn validate(args: &ValidateArgs) -> CliResult<u8> {
    let g = load_graph(&args.graph)?;
    let loaded = parse_coloring(&read(&args.coloring)?)
        .map_err(|source| CliError::Parse { path: args.coloring.clone(), source })?;
    let oracle = DistanceOracle::new(&g);
    let mode = if args.fail_fast { ReportMode::FailFast } else { ReportMode::Exhaustive };
    let report = match args.mode {
        Mode::Mv => validate_mv_coloring(&g, &oracle, &loaded.coloring, mode)?,
        Mode::Gp => validate_gp_coloring(&g, &oracle, &loaded.coloring, mode)?,
    };
    let out = ValidateOut {
        valid: report.valid,
        mode: args.mode,
        violations: report
            .violations
            .iter()
            .map(|v| ViolationOut { u: v.u + 1, v: v.v + 1, color: loaded.labels[v.color] })
            .collect(),
        checked_pairs: report.checked_pairs,
        color_labels: loaded.renumbered().then(|| loaded.labels.clone()),
    };
    emit_json(args.json.as_deref(), "validate", args, out)?;
    Ok(if report.valid { EXIT_OK } else { EXIT_NEGATIVE })
}

#[derive(Serialize)]
struct SolveOut {
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nodes_explored: Option<u64>,
}

fn solve(args: &SolveArgs) -> CliResult<u8> {
    let g = load_graph(&args.graph)?;
    let oracle = DistanceOracle::new(&g);
    let budget = args.budget.budget();
    let empty = SolveOut { verdict: "", k: args.k, chi: None, lower: None, upper: None, nodes_explored: None };
    let (line, out, coloring, code) = match args.k {
        Some(k) => {
            let outcome = Solver::new(&g, &oracle).decide(k, budget);
            let nodes = Some(outcome.nodes_explored);
            match outcome.status {
                SearchStatus::Feasible(c) => (
                    "FEASIBLE".to_string(),
                    SolveOut { verdict: "feasible", nodes_explored: nodes, ..empty },
                    Some(c),
                    EXIT_OK,
                ),
                SearchStatus::Infeasible => (
                    "INFEASIBLE".to_string(),
                    SolveOut { verdict: "infeasible", nodes_explored: nodes, ..empty },
                    None,
                    EXIT_NEGATIVE,
                ),
                SearchStatus::BudgetExhausted => (
                    "BUDGET".to_string(),
                    SolveOut { verdict: "budget", nodes_explored: nodes, ..empty },
                    None,
                    EXIT_BUDGET,
                ),
            }
        }
        None => match chi_mu_exact(&g, &oracle, budget) {
            Ok(res) => (
                format!("CHI {}", res.chi),
                SolveOut { verdict: "chi", chi: Some(res.chi), nodes_explored: Some(res.nodes_explored), ..empty },
                Some(res.coloring),
                EXIT_OK,
            ),
            Err(mvchroma::Error::BudgetExhausted { lo, hi }) => (
                format!("BUDGET {lo} {hi}"),
                SolveOut { verdict: "budget", lower: Some(lo), upper: Some(hi), ..empty },
                None,
                EXIT_BUDGET,
            ),
            Err(e) => return Err(e.into()),
        },
    };
    if let (Some(path), Some(c)) = (&args.out, &coloring) {
        write_to(Some(path), &write_coloring(c))?;
    }
    match &args.json {
        Some(path) => emit_json(Some(path), "solve", args, out)?,
        None => println!("{line}"),
    }
    Ok(code)
}

fn reduce(args: &ReduceArgs) -> CliResult<u8> {
    let f = load_formula(&args.formula)?;
    let normalized = match normalize(&f) {
        NormalizeOutcome::Normalized(n) => n,
        NormalizeOutcome::TriviallyUnsat { clause } => {
            eprintln!("TRIVIALLY-UNSAT: clause {} repeats one literal", clause + 1);
            return Ok(EXIT_NEGATIVE);
        }
    };
    let rg = build_reduction(&normalized)?;
    write_to(args.out.as_deref(), &write_graph(&rg.graph))?;
    if let Some(path) = &args.legend {
        let mut text = serde_json::to_string_pretty(&rg.legend.to_file()).expect("legend serializes");
        text.push('\n');
        write_to(Some(path), &text)?;
    }
    Ok(EXIT_OK)
}

fn reduce_verify(args: &ReduceVerifyArgs) -> CliResult<u8> {
    let f = load_formula(&args.formula)?;
    let report = verify_reduction(&f, args.budget.budget(), args.max_vars)?;
    let code = match report.agree {
        Some(true) => EXIT_OK,
        Some(false) => EXIT_NEGATIVE,
        None => EXIT_BUDGET,
    };
    emit_json(args.json.as_deref(), "reduce-verify", args, report)?;
    Ok(code)
}

fn nae(args: &NaeArgs) -> CliResult<u8> {
    let f = load_formula(&args.formula)?;
    if let NormalizeOutcome::TriviallyUnsat { .. } = normalize(&f) {
        println!("TRIVIALLY-UNSAT");
        return Ok(EXIT_NEGATIVE);
    }
    match nae_satisfiable(&f, args.max_vars)? {
        Some(a) => {
            println!("SAT {}", a.to_literals());
            Ok(EXIT_OK)
        }
        None => {
            println!("UNSAT");
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn run(cli: &Cli) -> CliResult<u8> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
        .map_err(|e| CliError::Threads(e.to_string()))?;
    match &cli.command {
        Command::GenTree(a) => gen_tree(a),
        Command::Color(a) => color(a),
        Command::Theorem(a) => theorem(a),
        Command::Validate(a) => validate(a),
        Command::Solve(a) => solve(a),
        Command::Reduce(a) => reduce(a),
        Command::ReduceVerify(a) => reduce_verify(a),
        Command::Nae(a) => nae(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
