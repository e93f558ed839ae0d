//! Command-line front end: per-graph analysis, batch corpus processing with
//! JSON-lines reports, and graph generation.
//!
//! Exit codes: 0 on success, 2 on input parse errors, 3 when a fast verdict
//! contradicts the flow oracle (a correctness alarm), 1 for other errors.

mod report;

use std::io::{Read, Write};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use idealconn::cliquetree::{
    clique_tree_to_dot, construct_clique_tree, is_clique_tree_universal, kj_profile,
    maximal_cliques_chordal, star_clique_tree_check,
};
use idealconn::connectivity::{
    average_connectivity, disjoint_paths, is_ideally_connected, is_strongly_m_menger,
};
use idealconn::decomposition::{cut_subgraphs, find_kappa_clique_cut, verify_structure_theorem};
use idealconn::generators::{
    all_graphs, random_chordal, random_cograph, random_threshold, split_non_threshold6,
    split_universal_variant6, threshold16,
};
use idealconn::graph::{parse_edge_list, parse_graph6, to_dot, to_graph6};
use idealconn::recognizers::{
    recognize_chordal, recognize_cograph, recognize_split, recognize_threshold, Cotree,
};
use idealconn::Graph;

use report::{analyze, AnalyzeOptions, BatchSummary, ErrorRecord};

#[derive(Parser)]
#[command(name = "idealconn", version, about = "Local connectivity analysis for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input format for graph-reading commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Graph6)]
    format: Format,

    /// Emit JSON instead of human-oriented text where text is the default.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for the generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker count for batch processing.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Args)]
struct InputArg {
    /// Input file, or "-" for standard input.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Class membership with certificates or forbidden-structure witnesses.
    Recognize {
        #[command(flatten)]
        input: InputArg,
        /// Restrict to one class.
        #[arg(long, value_enum)]
        class: Option<ClassName>,
    },
    /// Ideal-connectedness report from the flow oracle.
    Ideal {
        #[command(flatten)]
        input: InputArg,
        /// Include the full pairwise local-connectivity matrix.
        #[arg(long)]
        table: bool,
    },
    /// A maximum internally disjoint path system between two vertices.
    Paths {
        u: usize,
        v: usize,
        #[command(flatten)]
        input: InputArg,
    },
    /// Exact average local connectivity over vertex pairs.
    Avg {
        #[command(flatten)]
        input: InputArg,
    },
    /// Strong m-Menger check: every removal of at most m vertices must leave
    /// an ideally connected graph.
    Menger {
        m: usize,
        #[command(flatten)]
        input: InputArg,
    },
    /// Clique-cut decomposition and the structural conditions.
    Decompose {
        #[command(flatten)]
        input: InputArg,
    },
    /// Clique-tree construction, profile, and universality summaries.
    Cliquetree {
        #[command(flatten)]
        input: InputArg,
        /// Emit the constructed tree as DOT.
        #[arg(long)]
        dot: bool,
        /// Also decide clique-tree universality (clique count <= 9).
        #[arg(long)]
        universal: bool,
    },
    /// Full per-graph report.
    Analyze {
        #[command(flatten)]
        input: InputArg,
        /// Include the clique-cut decomposition summary.
        #[arg(long)]
        decompose: bool,
        /// Include the clique-tree summary.
        #[arg(long)]
        cliquetree: bool,
        /// Include the local-connectivity matrix.
        #[arg(long)]
        table: bool,
    },
    /// One JSON report per graph6 line, with a summary on stderr.
    Batch {
        #[command(flatten)]
        input: InputArg,
        /// Abort on the first unparsable line.
        #[arg(long)]
        strict: bool,
        /// Include the clique-cut decomposition summary per graph.
        #[arg(long)]
        decompose: bool,
        /// Include the clique-tree summary per graph.
        #[arg(long)]
        cliquetree: bool,
    },
    /// Emit generated graphs as graph6 lines.
    Gen {
        #[arg(long, value_enum)]
        class: GenClass,
        /// Vertex count (class-dependent meaning; leaf count for star).
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Number of graphs to emit (seeded classes advance the seed).
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Restrict the chordal generator to connected outputs.
        #[arg(long)]
        connected: bool,
    },
    /// DOT rendering of the input graph.
    Dot {
        #[command(flatten)]
        input: InputArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassName {
    Cograph,
    Chordal,
    Split,
    Threshold,
    TriviallyPerfect,
    TwoK2Free,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenClass {
    Threshold,
    Cograph,
    Chordal,
    Complete,
    Edgeless,
    Path,
    Cycle,
    Star,
    /// Every labeled graph on n <= 7 vertices.
    All,
    /// The 16-vertex nested threshold fixture.
    Threshold16,
    /// The 6-vertex split non-threshold fixture.
    Split6,
    /// The universal variant of the 6-vertex fixture.
    Split6Universal,
}

/// Errors that should exit with code 2.
#[derive(Debug)]
struct ParseFailure(String);

impl std::fmt::Display for ParseFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ParseFailure {}

/// Errors that should exit with code 3.
#[derive(Debug)]
struct DisagreementAlarm;

impl std::fmt::Display for DisagreementAlarm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "fast verdict disagrees with the flow oracle")
    }
}

impl std::error::Error for DisagreementAlarm {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            if err.is::<ParseFailure>() {
                ExitCode::from(2)
            } else if err.is::<DisagreementAlarm>() {
                ExitCode::from(3)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).context("reading standard input")?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn read_graph(path: &str, format: Format) -> Result<Graph> {
    let text = read_source(path)?;
    match format {
        Format::Graph6 => {
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| anyhow!(ParseFailure("empty input".into())))?;
            parse_graph6(line).map_err(|e| anyhow!(ParseFailure(e.to_string())))
        }
        Format::Edgelist => parse_edge_list(&text).map_err(|e| anyhow!(ParseFailure(e.to_string()))),
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Recognize { ref input, class } => {
            let g = read_graph(&input.input, cli.format)?;
            cmd_recognize(&g, class, cli.json)
        }
        Command::Ideal { ref input, table } => {
            let g = read_graph(&input.input, cli.format)?;
            cmd_ideal(&g, table, cli.json)
        }
        Command::Paths { u, v, ref input } => {
            let g = read_graph(&input.input, cli.format)?;
            cmd_paths(&g, u, v, cli.json)
        }
        Command::Avg { ref input } => {
            let g = read_graph(&input.input, cli.format)?;
            cmd_avg(&g, cli.json)
        }
        Command::Menger { m, ref input } => {
            let g = read_graph(&input.input, cli.format)?;
            cmd_menger(&g, m, cli.json)
        }
        Command::Decompose { ref input } => {
            let g = read_graph(&input.input, cli.format)?;
            cmd_decompose(&g)
        }
        Command::Cliquetree { ref input, dot, universal } => {
            let g = read_graph(&input.input, cli.format)?;
            cmd_cliquetree(&g, dot, universal)
        }
        Command::Analyze { ref input, decompose, cliquetree, table } => {
            let g = read_graph(&input.input, cli.format)?;
            cmd_analyze(&g, &input.input, decompose, cliquetree, table)
        }
        Command::Batch { ref input, strict, decompose, cliquetree } => {
            let text = read_source(&input.input)?;
            cmd_batch(&text, strict, decompose, cliquetree, cli.jobs.max(1))
        }
        Command::Gen { class, n, count, connected } => cmd_gen(class, n, count, connected, cli.seed),
        Command::Dot { ref input } => {
            let g = read_graph(&input.input, cli.format)?;
            print!("{}", to_dot(&g));
            Ok(())
        }
    }
}

fn cotree_string(t: &Cotree) -> String {
    match t {
        Cotree::Leaf(v) => v.to_string(),
        Cotree::Union(cs) => {
            let inner: Vec<String> = cs.iter().map(cotree_string).collect();
            format!("union({})", inner.join(","))
        }
        Cotree::Join(cs) => {
            let inner: Vec<String> = cs.iter().map(cotree_string).collect();
            format!("join({})", inner.join(","))
        }
    }
}

fn class_verdict(g: &Graph, class: ClassName) -> serde_json::Value {
    match class {
        ClassName::Cograph => match recognize_cograph(g) {
            Ok(t) => json!({"class": "cograph", "member": true, "certificate": {"cotree": cotree_string(&t)}}),
            Err(w) => json!({"class": "cograph", "member": false, "witness": {"kind": "P4", "vertices": w}}),
        },
        ClassName::Chordal => match recognize_chordal(g) {
            Ok(peo) => json!({"class": "chordal", "member": true, "certificate": {"elimination_ordering": peo.0}}),
            Err(cycle) => json!({"class": "chordal", "member": false, "witness": {"kind": "chordless-cycle", "vertices": cycle}}),
        },
        ClassName::Split => match recognize_split(g) {
            Ok(p) => json!({"class": "split", "member": true, "certificate": {
                "clique": p.clique.iter().collect::<Vec<_>>(),
                "independent": p.independent.iter().collect::<Vec<_>>(),
            }}),
            Err(o) => json!({"class": "split", "member": false, "witness": {"kind": format!("{:?}", o.kind), "vertices": o.vertices}}),
        },
        ClassName::Threshold => match recognize_threshold(g) {
            Ok(seq) => {
                let steps: Vec<serde_json::Value> = seq
                    .order
                    .iter()
                    .zip(&seq.tags)
                    .map(|(v, t)| json!({"vertex": v, "tag": format!("{t:?}").to_lowercase()}))
                    .collect();
                json!({"class": "threshold", "member": true, "certificate": {"creation_sequence": steps}})
            }
            Err(w) => json!({"class": "threshold", "member": false, "witness": {"kind": format!("{:?}", w.kind), "vertices": w.vertices}}),
        },
        ClassName::TriviallyPerfect => {
            json!({"class": "trivially_perfect", "member": idealconn::recognizers::is_trivially_perfect(g)})
        }
        ClassName::TwoK2Free => match idealconn::recognizers::find_induced_2k2(g) {
            None => json!({"class": "two_k2_free", "member": true}),
            Some(w) => json!({"class": "two_k2_free", "member": false, "witness": {"kind": "2K2", "vertices": w}}),
        },
    }
}

fn cmd_recognize(g: &Graph, class: Option<ClassName>, json_out: bool) -> Result<()> {
    let classes = match class {
        Some(c) => vec![c],
        None => vec![
            ClassName::Cograph,
            ClassName::Chordal,
            ClassName::Split,
            ClassName::Threshold,
            ClassName::TriviallyPerfect,
            ClassName::TwoK2Free,
        ],
    };
    for c in classes {
        let verdict = class_verdict(g, c);
        if json_out {
            println!("{verdict}");
        } else {
            let name = verdict["class"].as_str().unwrap().to_string();
            let member = verdict["member"].as_bool().unwrap();
            println!("{name}: {}", if member { "yes" } else { "no" });
        }
    }
    Ok(())
}

fn cmd_ideal(g: &Graph, table: bool, json_out: bool) -> Result<()> {
    let report = is_ideally_connected(g, table).map_err(|e| anyhow!(e.to_string()))?;
    if json_out {
        println!("{}", serde_json::to_string(&report::IdealJson::from_report(&report))?);
    } else {
        println!("ideal: {}", report.ideally_connected);
        println!("kappa: {}", report.kappa);
        if let Some(w) = &report.witness {
            println!("witness: pair ({}, {}) has {} < {}", w.u, w.v, w.local, w.bound);
        }
        if let Some(t) = &report.local_table {
            for row in t {
                let cells: Vec<String> = row.iter().map(usize::to_string).collect();
                println!("{}", cells.join(" "));
            }
        }
    }
    Ok(())
}

fn cmd_paths(g: &Graph, u: usize, v: usize, json_out: bool) -> Result<()> {
    let ps = disjoint_paths(g, u, v).map_err(|e| anyhow!(e.to_string()))?;
    if json_out {
        println!(
            "{}",
            json!({"source": ps.source, "target": ps.target, "count": ps.paths.len(), "paths": ps.paths})
        );
    } else {
        for path in &ps.paths {
            let cells: Vec<String> = path.iter().map(usize::to_string).collect();
            println!("{}", cells.join(" "));
        }
    }
    Ok(())
}

fn cmd_avg(g: &Graph, json_out: bool) -> Result<()> {
    let avg = average_connectivity(g).map_err(|e| anyhow!(e.to_string()))?;
    if json_out {
        println!(
            "{}",
            json!({"numerator": avg.numer(), "denominator": avg.denom(), "value": avg.to_string()})
        );
    } else {
        println!("{avg}");
    }
    Ok(())
}

fn cmd_menger(g: &Graph, m: usize, json_out: bool) -> Result<()> {
    let verdict = is_strongly_m_menger(g, m).map_err(|e| anyhow!(e.to_string()))?;
    if json_out {
        println!(
            "{}",
            json!({"m": m, "holds": verdict.holds, "failing_fault_set": verdict.failing_fault_set})
        );
    } else if verdict.holds {
        println!("strongly {m}-menger connected: yes");
    } else {
        println!(
            "strongly {m}-menger connected: no (fault set {:?})",
            verdict.failing_fault_set.unwrap()
        );
    }
    Ok(())
}

fn cmd_decompose(g: &Graph) -> Result<()> {
    if g.n() < 2 || !g.is_connected() || g.is_complete() {
        return Err(anyhow!("decomposition needs a connected, non-complete graph"));
    }
    let Some(cut) = find_kappa_clique_cut(g).map_err(|e| anyhow!(e.to_string()))? else {
        println!("{}", json!({"cut": null, "reason": "no minimum-size clique cut exists"}));
        return Ok(());
    };
    let decomp = cut_subgraphs(g, &cut).map_err(|e| anyhow!(e.to_string()))?;
    let report = verify_structure_theorem(g, &cut).map_err(|e| anyhow!(e.to_string()))?;
    let subgraphs: Vec<serde_json::Value> = decomp
        .subgraphs
        .iter()
        .map(|s| {
            json!({
                "vertices": s.old_of_new,
                "component": s.component,
                "graph6": to_graph6(&s.graph).expect("desk-scale subgraph"),
            })
        })
        .collect();
    println!(
        "{}",
        json!({
            "cut": cut.members.iter().collect::<Vec<_>>(),
            "subgraphs": subgraphs,
            "distinguished_index": decomp.distinguished_index,
            "conditions": {
                "cond1": report.cond1(),
                "cond2": report.cond2(),
                "cond3": report.cond3(),
                "overall": report.overall(),
            },
        })
    );
    Ok(())
}

fn cmd_cliquetree(g: &Graph, dot: bool, universal: bool) -> Result<()> {
    let cliques = maximal_cliques_chordal(g).map_err(|e| anyhow!(e.to_string()))?;
    let pair = construct_clique_tree(g).map_err(|e| anyhow!(e.to_string()))?;
    if dot {
        print!("{}", clique_tree_to_dot(&cliques, &pair));
        return Ok(());
    }
    let nodes: Vec<&Vec<usize>> =
        pair.assignment.iter().map(|&c| &cliques.cliques[c]).collect();
    let mut payload = json!({
        "nodes": nodes,
        "edges": pair.tree.edges,
        "omega": cliques.omega(),
        "profile": kj_profile(g).map_err(|e| anyhow!(e.to_string()))?.counts,
        "star_clique_tree": star_clique_tree_check(g).map_err(|e| anyhow!(e.to_string()))?,
    });
    if universal {
        let verdict = is_clique_tree_universal(g).map_err(|e| anyhow!(e.to_string()))?;
        payload["universal"] = json!(verdict.universal);
        payload["failing_tree"] =
            json!(verdict.failing_tree.map(|t| json!({"nodes": t.node_count, "edges": t.edges})));
    }
    println!("{payload}");
    Ok(())
}

fn cmd_analyze(
    g: &Graph,
    label: &str,
    decompose: bool,
    cliquetree: bool,
    table: bool,
) -> Result<()> {
    let options = AnalyzeOptions {
        with_decomposition: decompose,
        with_cliquetree: cliquetree,
        with_table: table,
    };
    let report = analyze(g, label.to_string(), options);
    println!("{}", serde_json::to_string(&report)?);
    if !report.agreement {
        return Err(anyhow!(DisagreementAlarm));
    }
    Ok(())
}

fn cmd_batch(
    text: &str,
    strict: bool,
    decompose: bool,
    cliquetree: bool,
    jobs: usize,
) -> Result<()> {
    let options = AnalyzeOptions {
        with_decomposition: decompose,
        with_cliquetree: cliquetree,
        with_table: false,
    };
    let lines: Vec<&str> = text.lines().collect();
    enum Outcome {
        Report(Box<report::Report>),
        Skip, // blank line
        Bad(String),
    }
    let process = |index: usize| -> Outcome {
        let line = lines[index].trim();
        if line.is_empty() {
            return Outcome::Skip;
        }
        match parse_graph6(line) {
            Ok(g) => Outcome::Report(Box::new(analyze(&g, (index + 1).to_string(), options))),
            Err(e) => Outcome::Bad(e.to_string()),
        }
    };

    let mut results: Vec<Option<Outcome>> = Vec::new();
    results.resize_with(lines.len(), || None);
    if jobs <= 1 {
        for (i, slot) in results.iter_mut().enumerate() {
            *slot = Some(process(i));
        }
    } else {
        let total = lines.len();
        let counter = AtomicUsize::new(0);
        let (tx, rx) = mpsc::channel::<(usize, Outcome)>();
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                let tx = tx.clone();
                let counter = &counter;
                let process = &process;
                scope.spawn(move || loop {
                    let i = counter.fetch_add(1, Ordering::Relaxed);
                    if i >= total {
                        break;
                    }
                    let outcome = process(i);
                    if tx.send((i, outcome)).is_err() {
                        break;
                    }
                });
            }
            drop(tx);
            for (i, outcome) in rx {
                results[i] = Some(outcome);
            }
        });
    }

    // Emit in input order and accumulate the summary.
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut summary = BatchSummary::default();
    let mut disagreement = false;
    for (i, outcome) in results.into_iter().enumerate() {
        match outcome.expect("every line processed") {
            Outcome::Skip => {}
            Outcome::Bad(message) => {
                summary.inputs += 1;
                summary.parse_errors += 1;
                if strict {
                    return Err(anyhow!(ParseFailure(format!("line {}: {message}", i + 1))));
                }
                let record = ErrorRecord { input_id: (i + 1).to_string(), error: message };
                writeln!(out, "{}", serde_json::to_string(&record)?)?;
            }
            Outcome::Report(report) => {
                summary.inputs += 1;
                for (&class, &member) in &report.classes {
                    if member {
                        *summary.class_counts.entry(class).or_insert(0) += 1;
                    }
                }
                if report.ideal.ideal {
                    summary.ideal_count += 1;
                }
                if !report.agreement {
                    summary.disagreements += 1;
                    disagreement = true;
                }
                writeln!(out, "{}", serde_json::to_string(&*report)?)?;
            }
        }
    }
    eprintln!("{}", serde_json::to_string(&summary)?);
    if disagreement {
        return Err(anyhow!(DisagreementAlarm));
    }
    Ok(())
}

fn cmd_gen(class: GenClass, n: usize, count: usize, connected: bool, seed: u64) -> Result<()> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut emit = |g: &Graph| -> Result<()> {
        writeln!(out, "{}", to_graph6(g).map_err(|e| anyhow!(e.to_string()))?)?;
        Ok(())
    };
    match class {
        GenClass::All => {
            let stream = all_graphs(n).map_err(|e| anyhow!(e.to_string()))?;
            for g in stream {
                emit(&g)?;
            }
        }
        GenClass::Threshold16 => emit(&threshold16())?,
        GenClass::Split6 => emit(&split_non_threshold6())?,
        GenClass::Split6Universal => emit(&split_universal_variant6())?,
        _ => {
            if n == 0 {
                return Err(anyhow!("--n must be at least 1"));
            }
            for i in 0..count as u64 {
                let g = match class {
                    GenClass::Threshold => random_threshold(n, seed + i),
                    GenClass::Cograph => random_cograph(n, seed + i),
                    GenClass::Chordal => random_chordal(n, seed + i, connected),
                    GenClass::Complete => Graph::complete(n),
                    GenClass::Edgeless => Graph::edgeless(n),
                    GenClass::Path => Graph::path(n),
                    GenClass::Cycle => {
                        if n < 3 {
                            return Err(anyhow!("cycles need --n of at least 3"));
                        }
                        Graph::cycle(n)
                    }
                    GenClass::Star => Graph::star(n),
                    _ => unreachable!(),
                };
                emit(&g)?;
            }
        }
    }
    Ok(())
}
