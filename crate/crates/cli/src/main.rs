//! `triameter` command line: compute certificates, classify graphs,
//! construct families and fixtures, evaluate tree bounds, verify laws,
//! and scan small-graph spaces for hypothesis counterexamples.
//!
//! Structured output (JSON/JSONL) goes to stdout; human-readable
//! summaries go to stderr so pipes stay clean. Exit status: 0 on
//! success, 1 when a law is violated or a counterexample is found
//! (so CI can gate on it), 2 on usage or input errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use triameter::classes::{antipode_map, classify_with_matrix, is_block_graph};
use triameter::explorer::{
    scan_graph6_lines, scan_range, ClassFilter, Hypothesis, ScanConfig, ScanOutcome, MAX_ENUM_ORDER,
};
use triameter::families::{build, extremal_tree, fixture, Family, FamilySpec, FIXTURE_NAMES};
use triameter::laws::{
    check_law, tree_bound_baseline, tree_bound_optimal, Law, LawInput, TreeParams,
};
use triameter::metrics::{
    diameter, triameter_antipodal, triameter_block_fast, triameter_bruteforce,
    triameter_tree_linear, TriametralCertificate,
};
use triameter::{parse_graph6, write_graph6, DistanceMatrix, Graph};

#[derive(Parser)]
#[command(
    name = "triameter",
    version,
    about = "Distance invariants, metric graph classes, and counterexample scans for small graphs",
    after_help = "Graphs are read as graph6 lines or \"n m\" edge-list text; the format is \
inferred from the file extension (.g6 / .el) or the content, or forced with --format. \
Scans honor RAYON_NUM_THREADS for the worker count (default: available parallelism)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute diameter and triameter certificates for each input graph
    Compute {
        /// Input path, or - for stdin
        #[arg(default_value = "-")]
        input: String,
        /// Force the input format instead of inferring it
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        /// brute: exhaustive scan; auto: use the tree / antipodal /
        /// block fast path when the recognizers license one
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Print the class profile of each input graph as JSON
    Classify {
        /// Input path, or - for stdin
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Emit a named family, fixture, or extremal tree
    #[command(group(ArgGroup::new("source").required(true).args(["family", "fixture", "extremal_tree"])))]
    Construct {
        /// Family name followed by its size parameters,
        /// e.g. --family hypercube 4 or --family complete_bipartite 2 3
        #[arg(long, num_args = 2..=3, value_names = ["NAME", "SIZE"])]
        family: Option<Vec<String>>,
        /// One of: fig2_theta, fig3_G, fig3_H, fig4_median
        #[arg(long)]
        fixture: Option<String>,
        /// Extremal tree on N vertices with L leaves
        #[arg(long, num_args = 2, value_names = ["N", "L"])]
        extremal_tree: Option<Vec<usize>>,
        /// Output format
        #[arg(long, value_enum, default_value_t = FormatArg::Graph6)]
        format: FormatArg,
        /// Also print the fixture's label-to-index table (JSON, stderr)
        #[arg(long)]
        labels: bool,
    },
    /// Evaluate the tree triameter bounds for an (order, leaves) pair
    Bound {
        /// Tree order N and leaf count L
        #[arg(long, num_args = 2, value_names = ["N", "L"], required = true)]
        tree: Vec<usize>,
    },
    /// Check a named law against the input, printing a verdict per graph
    Verify {
        /// Law name; see --law help for the catalog
        #[arg(long, value_parser = parse_law)]
        law: Law,
        /// Input path, or - for stdin (graph laws only)
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        /// Dimension for hypercube_triameter
        #[arg(long)]
        param: Option<usize>,
    },
    /// Enumerate or read graphs, filter by class, check hypotheses,
    /// and report verified counterexamples as JSONL
    Scan {
        /// Smallest order for the built-in enumerator
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        /// Largest order for the built-in enumerator (at most 7)
        #[arg(long)]
        max_n: Option<usize>,
        /// Read graph6 lines from this file instead of enumerating
        #[arg(long, conflicts_with_all = ["min_n", "max_n"])]
        input: Option<PathBuf>,
        /// Class filter
        #[arg(long, value_parser = parse_class, default_value = "any")]
        class: ClassFilter,
        /// Hypotheses to check (repeatable); default: all four
        #[arg(long = "hypothesis", value_parser = parse_hypothesis)]
        hypotheses: Vec<Hypothesis>,
        /// Write reports to this file instead of stdout
        #[arg(long)]
        jsonl: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Brute,
}

fn parse_law(s: &str) -> Result<Law, String> {
    Law::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Law::ALL.iter().map(|l| l.name()).collect();
        format!("unknown law {s:?}; expected one of {}", names.join(", "))
    })
}

fn parse_class(s: &str) -> Result<ClassFilter, String> {
    ClassFilter::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = ClassFilter::ALL.iter().map(|c| c.name()).collect();
        format!("unknown class {s:?}; expected one of {}", names.join(", "))
    })
}

fn parse_hypothesis(s: &str) -> Result<Hypothesis, String> {
    Hypothesis::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Hypothesis::ALL.iter().map(|h| h.name()).collect();
        format!(
            "unknown hypothesis {s:?}; expected one of {}",
            names.join(", ")
        )
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Compute {
            input,
            format,
            method,
        } => cmd_compute(&input, format, method),
        Command::Classify { input, format } => cmd_classify(&input, format),
        Command::Construct {
            family,
            fixture,
            extremal_tree,
            format,
            labels,
        } => cmd_construct(family, fixture, extremal_tree, format, labels),
        Command::Bound { tree } => cmd_bound(tree[0], tree[1]),
        Command::Verify {
            law,
            input,
            format,
            param,
        } => cmd_verify(law, &input, format, param),
        Command::Scan {
            min_n,
            max_n,
            input,
            class,
            hypotheses,
            jsonl,
        } => cmd_scan(min_n, max_n, input, class, &hypotheses, jsonl),
    }
}

/// Reads all graphs from a path or stdin. graph6 input holds one graph
/// per line; edge-list input holds a single graph.
fn read_graphs(input: &str, format: Option<FormatArg>) -> Result<Vec<Graph>> {
    let text = if input == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        buf
    } else {
        fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    };
    let format = format.unwrap_or_else(|| infer_format(input, &text));
    match format {
        FormatArg::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, line)| !line.trim().is_empty())
            .map(|(idx, line)| {
                parse_graph6(line).with_context(|| format!("line {}: bad graph6", idx + 1))
            })
            .collect(),
        FormatArg::Edgelist => Ok(vec![Graph::parse_edge_list_text(&text)?]),
    }
}

fn infer_format(path: &str, text: &str) -> FormatArg {
    if path.ends_with(".g6") || path.ends_with(".graph6") {
        return FormatArg::Graph6;
    }
    if path.ends_with(".el") || path.ends_with(".edges") || path.ends_with(".edgelist") {
        return FormatArg::Edgelist;
    }
    // graph6 lines never contain whitespace; an edge-list header does
    match text.lines().find(|l| !l.trim().is_empty()) {
        Some(first) if first.trim().contains(char::is_whitespace) => FormatArg::Edgelist,
        _ => FormatArg::Graph6,
    }
}

fn connected_matrix(g: &Graph) -> Result<DistanceMatrix> {
    g.distance_matrix()
        .map_err(|e| anyhow!("{e}; metric invariants need connected input"))
}

/// Picks the fastest licensed triameter route: trees take the linear
/// double sweep, antipodal graphs the 2*diam formula, block graphs the
/// diametral-pair extension; everything else is brute-forced.
fn auto_triameter(g: &Graph, dm: &DistanceMatrix) -> TriametralCertificate {
    if g.is_tree() {
        return triameter_tree_linear(g).expect("is_tree checked");
    }
    if let Some(map) = antipode_map(dm).expect("antipodes are unique") {
        return triameter_antipodal(dm, &map).expect("map just computed");
    }
    if is_block_graph(g).expect("connected") {
        return triameter_block_fast(g, dm).expect("block graph checked");
    }
    triameter_bruteforce(dm)
}

#[derive(serde::Serialize)]
struct ComputeOutput<'a> {
    n: usize,
    m: usize,
    diameter: usize,
    triameter: usize,
    method: &'static str,
    diameter_certificate: &'a triameter::metrics::DiametralCertificate,
    triameter_certificate: &'a TriametralCertificate,
}

fn cmd_compute(input: &str, format: Option<FormatArg>, method: MethodArg) -> Result<u8> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for g in read_graphs(input, format)? {
        let dm = connected_matrix(&g)?;
        let diam = diameter(&dm);
        let tri = match method {
            MethodArg::Brute => triameter_bruteforce(&dm),
            MethodArg::Auto => auto_triameter(&g, &dm),
        };
        let line = ComputeOutput {
            n: g.n(),
            m: g.m(),
            diameter: diam.value,
            triameter: tri.value,
            method: tri.method.name(),
            diameter_certificate: &diam,
            triameter_certificate: &tri,
        };
        writeln!(out, "{}", serde_json::to_string(&line)?)?;
    }
    Ok(0)
}

fn cmd_classify(input: &str, format: Option<FormatArg>) -> Result<u8> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for g in read_graphs(input, format)? {
        let dm = connected_matrix(&g)?;
        let profile = classify_with_matrix(&g, &dm);
        writeln!(out, "{}", serde_json::to_string(&profile)?)?;
    }
    Ok(0)
}

fn cmd_construct(
    family: Option<Vec<String>>,
    fixture_name: Option<String>,
    extremal: Option<Vec<usize>>,
    format: FormatArg,
    labels: bool,
) -> Result<u8> {
    let g = if let Some(args) = family {
        let name = &args[0];
        let family = Family::from_name(name).ok_or_else(|| {
            let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
            anyhow!(
                "unknown family {name:?}; expected one of {}",
                names.join(", ")
            )
        })?;
        let params: Vec<usize> = args[1..]
            .iter()
            .map(|p| p.parse().with_context(|| format!("bad size {p:?}")))
            .collect::<Result<_>>()?;
        build(&FamilySpec::new(family, params))?
    } else if let Some(name) = fixture_name {
        let fx = fixture(&name)
            .map_err(|e| anyhow!("{e}; known fixtures: {}", FIXTURE_NAMES.join(", ")))?;
        if labels {
            let map: serde_json::Map<String, serde_json::Value> = fx
                .labels
                .iter()
                .map(|&(l, i)| (l.to_string(), serde_json::json!(i)))
                .collect();
            eprintln!("{}", serde_json::Value::Object(map));
        }
        fx.graph
    } else {
        let params = extremal.expect("clap group guarantees one source");
        extremal_tree(params[0], params[1])?
    };
    match format {
        FormatArg::Graph6 => println!("{}", write_graph6(&g)),
        FormatArg::Edgelist => print!("{}", g.to_edge_list_text()),
    }
    Ok(0)
}

#[derive(serde::Serialize)]
struct BoundOutput {
    optimal: usize,
    baseline: usize,
}

fn cmd_bound(n: usize, l: usize) -> Result<u8> {
    let params = TreeParams::new(n, l)?;
    let line = BoundOutput {
        optimal: tree_bound_optimal(params),
        baseline: tree_bound_baseline(n, l)?,
    };
    println!("{}", serde_json::to_string(&line)?);
    Ok(0)
}

fn cmd_verify(
    law: Law,
    input: &str,
    format: Option<FormatArg>,
    param: Option<usize>,
) -> Result<u8> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut all_hold = true;
    let mut emit = |verdict: &triameter::laws::LawVerdict| -> Result<()> {
        all_hold &= verdict.holds;
        writeln!(out, "{}", serde_json::to_string(verdict)?)?;
        Ok(())
    };
    match law.input_kind() {
        triameter::laws::InputKind::Dimension => {
            let dim = param.ok_or_else(|| anyhow!("{law} needs --param DIM"))?;
            emit(&check_law(law, LawInput::Dimension(dim))?)?;
        }
        triameter::laws::InputKind::TwoGraphs => {
            let graphs = read_graphs(input, format)?;
            if graphs.len() != 2 {
                bail!("{law} needs exactly two input graphs, got {}", graphs.len());
            }
            emit(&check_law(
                law,
                LawInput::TwoGraphs(&graphs[0], &graphs[1]),
            )?)?;
        }
        triameter::laws::InputKind::Graph => {
            let graphs = read_graphs(input, format)?;
            if graphs.is_empty() {
                bail!("no input graphs");
            }
            for g in &graphs {
                emit(&check_law(law, LawInput::Graph(g))?)?;
            }
        }
    }
    if all_hold {
        Ok(0)
    } else {
        eprintln!("{law}: violated");
        Ok(1)
    }
}

fn cmd_scan(
    min_n: usize,
    max_n: Option<usize>,
    input: Option<PathBuf>,
    class: ClassFilter,
    hypotheses: &[Hypothesis],
    jsonl: Option<PathBuf>,
) -> Result<u8> {
    let hypotheses = if hypotheses.is_empty() {
        Hypothesis::ALL.to_vec()
    } else {
        hypotheses.to_vec()
    };
    let cfg = ScanConfig::new(class, &hypotheses);
    let outcome: ScanOutcome = if let Some(path) = input {
        let text =
            fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
        scan_graph6_lines(text.lines().map(str::to_string), &cfg)?
    } else {
        let max = max_n
            .ok_or_else(|| anyhow!("scan needs --max-n (1..={MAX_ENUM_ORDER}) or --input FILE"))?;
        scan_range(min_n, max, &cfg)?
    };

    let stdout = io::stdout();
    let mut out = stdout.lock();
    if let Some(path) = jsonl {
        let mut file =
            fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
        for report in &outcome.reports {
            writeln!(file, "{}", serde_json::to_string(report)?)?;
        }
    } else {
        for report in &outcome.reports {
            writeln!(out, "{}", serde_json::to_string(report)?)?;
        }
    }
    writeln!(out, "{}", serde_json::json!({ "summary": outcome.summary }))?;
    eprintln!(
        "scanned {} graphs, {} in class {}, {} violation(s)",
        outcome.summary.scanned,
        outcome.summary.in_class,
        class.name(),
        outcome.summary.violations
    );
    Ok(u8::from(outcome.summary.violations > 0))
}
