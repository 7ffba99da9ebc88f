//! `hoffgraph`: spectra, Hoffman graphs, the certified constructions, the
//! cubic extremal search and the acceptance suite from the command line.
//!
//! Exit codes: 0 success, 2 input error, 3 construction or validity error,
//! 4 capacity error (including an exhausted node budget), 5 acceptance
//! failure.

mod config;
mod manifest;

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use hoffgraph::constructions::{
    build_gk, build_gk_wn, build_triangle_free, default_partitions, limit_sequence, semiregular_bipartite,
    ConstructionReport,
};
use hoffgraph::graph::graph6;
use hoffgraph::hoffman::{clique_extension, Catalog, CatalogName, HoffmanGraph};
use hoffgraph::search::{resume_eta3, search_eta3, Checkpoint, Phase, SearchConfig, CHECKPOINT_FORMAT};
use hoffgraph::spectra::{char_poly, poly_divides, ConstantName, IntPolynomial, SpectralReport, DEFAULT_TOL};
use hoffgraph::verify::{run_criterion, CriterionOutcome, CRITERIA};
use hoffgraph::{Error, SimpleGraph};

use config::Config;
use manifest::RunManifest;

/// Graphs above this order are written as adjacency-list JSON, not graph6.
const GRAPH6_OUTPUT_LIMIT: usize = 4096;

#[derive(Parser, Debug)]
#[command(name = "hoffgraph", version, about = "Hoffman graphs and graphs with smallest eigenvalue a little below -2")]
struct Cli {
    /// TOML file with defaults for the flags.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Write the run manifest here instead of standard error.
    #[arg(long, global = true, value_name = "FILE")]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Smallest eigenvalue of a graph (graph6 or JSON) or of a Hoffman graph (JSON with `fat`).
    Eigen(EigenArgs),
    /// Build one of the certified families.
    Construct(ConstructArgs),
    /// Hoffman-graph catalog and clique extensions.
    Hoffman {
        #[command(subcommand)]
        command: HoffmanCommand,
    },
    /// Search for connected cubic graphs with smallest eigenvalue in [beta, -2).
    #[command(name = "search-eta3")]
    SearchEta3(SearchArgs),
    /// Run the acceptance criteria.
    #[command(name = "verify-paper")]
    VerifyPaper(VerifyArgs),
}

#[derive(Args, Debug)]
struct EigenArgs {
    /// graph6 string or JSON document; omit to use --file.
    graph: Option<String>,
    /// Read the graph from a file (`-` for standard input).
    #[arg(long, value_name = "FILE", conflicts_with = "graph")]
    file: Option<PathBuf>,
    #[arg(long)]
    tol: Option<f64>,
    /// Also compute the exact characteristic polynomial.
    #[arg(long)]
    exact: bool,
    /// Also report the full spectrum.
    #[arg(long)]
    spectrum: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Gk,
    Trianglefree,
    Gkwn,
    Limitseq,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Catalog entry for `limitseq`.
    #[arg(long, default_value = "HWN")]
    name: String,
    /// Write the graph here instead of standard output.
    #[arg(long, value_name = "FILE")]
    graph_out: Option<PathBuf>,
    /// Write the JSON report here instead of standard output.
    #[arg(long, value_name = "FILE")]
    report_out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum HoffmanCommand {
    /// Catalog entries as JSON, with their slim graphs in graph6.
    Catalog {
        #[arg(long)]
        name: Option<String>,
    },
    /// The clique extension of a catalog entry.
    Extend {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
    },
    /// Summary of a Hoffman graph given as JSON.
    Lambda {
        file: PathBuf,
        #[arg(long)]
        exact: bool,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    max_vertices: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    /// 1, 2 or both.
    #[arg(long)]
    phase: Option<String>,
    /// Write the search tree as Graphviz DOT.
    #[arg(long, value_name = "FILE")]
    tree: Option<PathBuf>,
    /// Write the search tree as JSON.
    #[arg(long, value_name = "FILE")]
    tree_json: Option<PathBuf>,
    /// Write the full result as JSON.
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
    /// Worker threads; defaults to $HOFFGRAPH_WORKERS, then the config file.
    #[arg(long)]
    workers: Option<usize>,
    /// Stop after this many node expansions and write a checkpoint.
    #[arg(long)]
    node_budget: Option<usize>,
    /// Where the checkpoint goes when the budget runs out.
    #[arg(long, value_name = "FILE", default_value = "eta3.checkpoint.json")]
    checkpoint: PathBuf,
    /// Continue from a checkpoint.
    #[arg(long, value_name = "FILE")]
    resume: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Print the outcomes as JSON.
    #[arg(long)]
    json: bool,
    /// Run only these criteria.
    #[arg(long = "only", value_name = "ID")]
    only: Vec<String>,
    /// Replace a catalog entry, as NAME=FILE with a Hoffman-graph JSON document.
    #[arg(long = "replace", value_name = "NAME=FILE")]
    replace: Vec<String>,
}

enum Failure {
    Lib(Error),
    Input(String),
    Acceptance(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Acceptance(_) => 5,
            Failure::Lib(e) => match e {
                Error::Input(_) | Error::Parse { .. } | Error::Precondition(_) => 2,
                Error::Validity(_) | Error::SumValidity(_) | Error::Construction { .. } | Error::Domain(_) => 3,
                Error::Capacity { .. } | Error::Budget { .. } => 4,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Input(m) => format!("input error: {m}"),
            Failure::Acceptance(m) => m.clone(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome<T = ()> = std::result::Result<T, Failure>;

/// Everything a command produces, routed through one place so the manifest
/// sees every byte.
struct Run {
    manifest: RunManifest,
    stdout: Vec<u8>,
}

impl Run {
    fn read(&mut self, path: &Path, format: &str) -> Outcome<String> {
        let bytes = if path == Path::new("-") {
            let mut buf = Vec::new();
            io::stdin().read_to_end(&mut buf).map_err(|e| Failure::Input(format!("standard input: {e}")))?;
            buf
        } else {
            fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
        };
        self.manifest.input(path, format, &bytes);
        String::from_utf8(bytes).map_err(|_| Failure::Input(format!("{}: not UTF-8", path.display())))
    }

    fn write(&mut self, path: &Path, format: &str, text: &str) -> Outcome {
        fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        self.manifest.output(&path.display().to_string(), format, text.as_bytes());
        Ok(())
    }

    /// To `path` if given, otherwise to standard output.
    fn emit(&mut self, path: Option<&Path>, format: &str, text: &str) -> Outcome {
        match path {
            Some(p) => self.write(p, format, text),
            None => {
                self.stdout.extend_from_slice(text.as_bytes());
                if !text.ends_with('\n') {
                    self.stdout.push(b'\n');
                }
                Ok(())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut run = Run { manifest: RunManifest::start(std::env::args().collect()), stdout: Vec::new() };
    let result = load_config(&cli, &mut run).and_then(|config| dispatch(&cli, &config, &mut run));
    let code = match &result {
        Ok(()) => 0,
        Err(f) => f.code(),
    };
    if !run.stdout.is_empty() {
        run.manifest.output("-", "text", &run.stdout);
        let mut out = io::stdout().lock();
        let _ = out.write_all(&run.stdout);
        let _ = out.flush();
    }
    if let Err(f) = &result {
        eprintln!("hoffgraph: {}", f.message());
    }
    let manifest = run.manifest.finish(code as i32);
    match &cli.manifest {
        Some(path) => {
            if let Err(e) = fs::write(path, &manifest) {
                eprintln!("hoffgraph: cannot write manifest {}: {e}", path.display());
            }
        }
        None => eprintln!("{manifest}"),
    }
    ExitCode::from(code)
}

fn load_config(cli: &Cli, run: &mut Run) -> Outcome<Config> {
    match &cli.config {
        None => Ok(Config::default()),
        Some(path) => {
            let text = run.read(path, "hoffgraph-config/1")?;
            Config::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
    }
}

fn dispatch(cli: &Cli, config: &Config, run: &mut Run) -> Outcome {
    match &cli.command {
        Command::Eigen(args) => cmd_eigen(args, config, run),
        Command::Construct(args) => cmd_construct(args, run),
        Command::Hoffman { command } => cmd_hoffman(command, run),
        Command::SearchEta3(args) => cmd_search(args, config, run),
        Command::VerifyPaper(args) => cmd_verify(args, run),
    }
}

fn parse_catalog_name(s: &str) -> Outcome<CatalogName> {
    Ok(s.parse::<CatalogName>()?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

#[derive(Serialize)]
struct EigenReport {
    kind: &'static str,
    order: usize,
    #[serde(flatten)]
    spectral: SpectralReport,
    /// Which of the minimal polynomials of α₀, α₁ and β divide the
    /// characteristic polynomial; present with `--exact`.
    #[serde(skip_serializing_if = "Option::is_none")]
    minimal_poly_factors: Option<Vec<ConstantName>>,
}

fn factors(p: &IntPolynomial) -> Vec<ConstantName> {
    ConstantName::ALL.into_iter().filter(|c| poly_divides(&c.minimal_poly(), p)).collect()
}

fn cmd_eigen(args: &EigenArgs, config: &Config, run: &mut Run) -> Outcome {
    let text = match (&args.graph, &args.file) {
        (Some(g), _) => g.clone(),
        (None, Some(path)) => run.read(path, "graph")?,
        (None, None) => return Err(Failure::Input("give a graph or --file".into())),
    };
    let tol = args.tol.or(config.eigen.tol).unwrap_or(DEFAULT_TOL);
    let exact = args.exact || config.eigen.exact.unwrap_or(false);
    let with_spectrum = args.spectrum || config.eigen.spectrum.unwrap_or(false);
    run.manifest.parameters = json!({ "tol": tol, "exact": exact, "spectrum": with_spectrum });
    let trimmed = text.trim();
    let report = if trimmed.starts_with('{') {
        let doc: Value = serde_json::from_str(trimmed).map_err(|e| Error::Parse {
            offset: e.column().saturating_sub(1),
            message: e.to_string(),
        })?;
        if doc.get("fat").is_some() {
            let h = HoffmanGraph::from_json(trimmed)?;
            let poly = if exact { Some(char_poly(&h.b_matrix())?) } else { None };
            EigenReport {
                kind: "hoffman",
                order: h.order(),
                minimal_poly_factors: poly.as_ref().map(factors),
                spectral: SpectralReport { lambda_min: h.lambda_min(tol)?, tolerance: tol, char_poly: poly, spectrum: None },
            }
        } else {
            graph_report(&SimpleGraph::from_json(trimmed)?, tol, with_spectrum, exact)?
        }
    } else {
        graph_report(&graph6::decode(trimmed)?, tol, with_spectrum, exact)?
    };
    run.emit(None, "hoffgraph-eigen/1", &to_json(&report))
}

fn graph_report(g: &SimpleGraph, tol: f64, with_spectrum: bool, exact: bool) -> Outcome<EigenReport> {
    let spectral = SpectralReport::for_graph(g, tol, with_spectrum, exact)?;
    Ok(EigenReport {
        kind: "graph",
        order: g.order(),
        minimal_poly_factors: spectral.char_poly.as_ref().map(factors),
        spectral,
    })
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Outcome<usize> {
    value.ok_or_else(|| Failure::Input(format!("--family {family} needs --{flag}")))
}

fn graph_text(g: &SimpleGraph) -> (&'static str, String) {
    if g.order() <= GRAPH6_OUTPUT_LIMIT {
        ("graph6", graph6::encode(g) + "\n")
    } else {
        ("hoffgraph-graph-json/1", g.to_json() + "\n")
    }
}

fn cmd_construct(args: &ConstructArgs, run: &mut Run) -> Outcome {
    run.manifest.parameters = json!({
        "family": format!("{:?}", args.family).to_lowercase(),
        "k": args.k, "a": args.a, "n": args.n, "name": args.name,
    });
    let (graph, report) = match args.family {
        FamilyArg::Gk => {
            let b = semiregular_bipartite(need(args.k, "k", "gk")?, need(args.a, "a", "gk")?)?;
            split(build_gk(&b)?)
        }
        FamilyArg::Trianglefree => split(build_triangle_free(need(args.n, "n", "trianglefree")?)?),
        FamilyArg::Gkwn => {
            let k = need(args.k, "k", "gkwn")?;
            split(build_gk_wn(k, &default_partitions(k, need(args.a, "a", "gkwn")?)?)?)
        }
        FamilyArg::Limitseq => {
            let name = parse_catalog_name(&args.name)?;
            let n = need(args.n, "n", "limitseq")?;
            let seq = limit_sequence(name, n)?;
            let g = clique_extension(Catalog::standard().get(name), n)?;
            (g, to_json(&json!({ "family": "limitseq", "name": name.to_string(), "sequence": seq })))
        }
    };
    let (format, text) = graph_text(&graph);
    run.emit(args.graph_out.as_deref(), format, &text)?;
    run.emit(args.report_out.as_deref(), "hoffgraph-construction-report/1", &report)
}

fn split(report: ConstructionReport) -> (SimpleGraph, String) {
    let text = report.to_json() + "\n";
    (report.graph, text)
}

fn cmd_hoffman(command: &HoffmanCommand, run: &mut Run) -> Outcome {
    match command {
        HoffmanCommand::Catalog { name } => {
            let names = match name {
                Some(n) => vec![parse_catalog_name(n)?],
                None => CatalogName::ALL.to_vec(),
            };
            run.manifest.parameters = json!({ "names": names.iter().map(|n| n.to_string()).collect::<Vec<_>>() });
            let catalog = Catalog::standard();
            let mut docs = Vec::new();
            for n in names {
                let h = catalog.get(n);
                let doc: Value = serde_json::from_str(&h.to_json()).expect("Hoffman JSON");
                docs.push(json!({
                    "name": n.to_string(),
                    "hoffman": doc,
                    "slim_graph6": graph6::encode(&h.slim_graph()),
                    "summary": h.summary(1e-12)?,
                }));
            }
            let out = if docs.len() == 1 { docs.pop().expect("one entry") } else { Value::Array(docs) };
            run.emit(None, "hoffgraph-catalog/1", &to_json(&out))
        }
        HoffmanCommand::Extend { name, n } => {
            let cname = parse_catalog_name(name)?;
            run.manifest.parameters = json!({ "name": cname.to_string(), "n": n });
            let g = clique_extension(Catalog::standard().get(cname), *n)?;
            let (format, text) = graph_text(&g);
            run.emit(None, format, &text)
        }
        HoffmanCommand::Lambda { file, exact } => {
            run.manifest.parameters = json!({ "exact": exact });
            let h = HoffmanGraph::from_json(&run.read(file, "hoffgraph-hoffman-json/1")?)?;
            let mut doc = serde_json::to_value(h.summary(1e-12)?).expect("summary JSON");
            if *exact {
                let p = char_poly(&h.b_matrix())?;
                doc["minimal_poly_factors"] = serde_json::to_value(factors(&p)).expect("names");
                doc["char_poly"] = serde_json::to_value(&p).expect("polynomial JSON");
            }
            run.emit(None, "hoffgraph-hoffman-summary/1", &to_json(&doc))
        }
    }
}

fn cmd_search(args: &SearchArgs, config: &Config, run: &mut Run) -> Outcome {
    let defaults = SearchConfig::default();
    let phase_text = args.phase.clone().or_else(|| config.search.phase.clone());
    let phase = match phase_text {
        Some(p) => p.parse::<Phase>()?,
        None => defaults.phase,
    };
    let workers = config::workers(args.workers, config).map_err(Failure::Input)?;
    let search = SearchConfig {
        max_vertices: args.max_vertices.or(config.search.max_vertices).unwrap_or(defaults.max_vertices),
        tol: args.tol.or(config.search.tol).unwrap_or(defaults.tol),
        phase,
        emit_tree: args.tree.is_some() || args.tree_json.is_some(),
        workers,
        node_budget: args.node_budget.or(config.search.node_budget),
    };
    let result = match &args.resume {
        Some(path) => {
            let checkpoint = Checkpoint::from_json(&run.read(path, CHECKPOINT_FORMAT)?)?;
            resume_eta3(&search, &checkpoint)
        }
        None => search_eta3(&search),
    };
    // Worker count does not change the output, so it stays out of the
    // parameters and identical runs get identical manifests.
    run.manifest.parameters = json!({
        "max_vertices": search.max_vertices,
        "tol": search.tol,
        "phase": search.phase.to_string(),
        "node_budget": search.node_budget,
        "resume": args.resume.as_ref().map(|p| p.display().to_string()),
    });
    let result = match result {
        Err(Error::Budget { budget, expanded, checkpoint }) => {
            run.write(&args.checkpoint, CHECKPOINT_FORMAT, &checkpoint)?;
            return Err(Failure::Lib(Error::Budget {
                budget,
                expanded,
                checkpoint: args.checkpoint.display().to_string(),
            }));
        }
        other => other?,
    };
    if let Some(tree) = &result.tree {
        if let Some(p) = &args.tree {
            run.write(p, "graphviz-dot", &tree.to_dot())?;
        }
        if let Some(p) = &args.tree_json {
            run.write(p, "hoffgraph-eta3-tree/1", &tree.to_json())?;
        }
    }
    if let Some(p) = &args.json {
        run.write(p, "hoffgraph-eta3-result/1", &(result.to_json() + "\n"))?;
    }
    let mut text = String::new();
    for g in &result.extremal_graphs {
        text.push_str(&g.graph6);
        text.push('\n');
    }
    eprintln!(
        "{} extremal graph(s); complete up to {} vertices{}",
        result.extremal_graphs.len(),
        result.complete_up_to,
        if result.exhausted { "; search tree exhausted" } else { "" }
    );
    if !text.is_empty() {
        run.emit(None, "graph6", &text)?;
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, run: &mut Run) -> Outcome {
    let mut catalog = Catalog::standard();
    let mut replaced = BTreeMap::new();
    for spec in &args.replace {
        let (name, path) = spec
            .split_once('=')
            .ok_or_else(|| Failure::Input(format!("--replace expects NAME=FILE, got `{spec}`")))?;
        let cname = parse_catalog_name(name)?;
        let h = HoffmanGraph::from_json(&run.read(Path::new(path), "hoffgraph-hoffman-json/1")?)?;
        catalog = catalog.with_entry(cname, h);
        replaced.insert(cname.to_string(), path.to_string());
    }
    let ids: Vec<&str> = if args.only.is_empty() {
        CRITERIA.iter().map(|c| c.id).collect()
    } else {
        args.only.iter().map(String::as_str).collect()
    };
    run.manifest.parameters = json!({ "only": ids, "replace": replaced });
    let mut outcomes: Vec<CriterionOutcome> = Vec::new();
    for id in &ids {
        let o = run_criterion(id, &catalog).ok_or_else(|| Failure::Input(format!("unknown criterion `{id}`")))?;
        if !args.json {
            eprintln!("{}", o.line());
        }
        outcomes.push(o);
    }
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    if args.json {
        run.emit(None, "hoffgraph-acceptance/1", &to_json(&outcomes))?;
    } else {
        let mut table = String::new();
        for o in &outcomes {
            table.push_str(&format!("{:<4} {:<4} {}\n", o.id, if o.passed { "pass" } else { "FAIL" }, o.claim));
        }
        table.push_str(&format!("{} of {} criteria pass\n", outcomes.len() - failed.len(), outcomes.len()));
        run.emit(None, "text", &table)?;
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Acceptance(format!("criteria failed: {}", failed.join(", "))))
    }
}
