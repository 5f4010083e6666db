//! `pathchrom`: generate graphs and decompositions, verify them, solve small
//! instances, and check interval patterns.
//!
//! Exit codes: 0 success, 1 a verification or property check failed (the
//! JSON report is still written), 2 bad usage or unreadable input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pathchrom::constructions::{
    embed_shift_in_g, embed_shift_in_h, geometric_path_decomposition_g, natural_tree_decomposition_h,
    shift_path_decomposition, two_coloring_failures,
};
use pathchrom::decomp::decomposition_chromatic_with;
use pathchrom::graphs::vees;
use pathchrom::patterns::{classify_pair, property_report, PatternClass};
use pathchrom::{
    build_g, build_h, build_shift, chromatic_number, path_as_tree, pchr_exact, verify_path_decomposition,
    verify_tree_decomposition, AnyDecomposition, ChromaticOptions, ChromaticSolver, Decomposition, Graph,
    VertexLabel,
};

#[derive(Parser)]
#[command(name = "pathchrom", version, about = "Tree and path decompositions of V/Y graphs on binary trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph of the given family.
    Gen {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        output: Output,
    },
    /// Write one of the explicit decompositions.
    Decompose {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum)]
        method: Method,
        #[command(flatten)]
        shrink: Shrink,
        #[command(flatten)]
        output: Output,
    },
    /// Check vertex/edge coverage and trace connectivity of a decomposition, optionally its bag chromatic number.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        decomp: PathBuf,
        #[arg(long)]
        chromatic: bool,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Exact chromatic or path-chromatic number of a small graph.
    #[command(group(ArgGroup::new("metric").required(true).args(["pchr", "chi"])))]
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        pchr: bool,
        #[arg(long)]
        chi: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Pattern class of one ordered pair of V's, or counts for all of G_n.
    #[command(group(ArgGroup::new("what").required(true).args(["n", "first"])))]
    Classify {
        #[arg(long)]
        n: Option<usize>,
        /// Key of the first V, e.g. "V:.,0,1".
        #[arg(long, requires = "second")]
        first: Option<String>,
        #[arg(long, requires = "first")]
        second: Option<String>,
    },
    /// Interval patterns of every pair of V's plus the bag 2-colouring.
    CheckProperties {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "geometric")]
        method: Method,
        #[command(flatten)]
        shrink: Shrink,
        #[command(flatten)]
        output: Output,
    },
    /// A copy of a shift graph inside G_n or H_n.
    Embed {
        #[arg(long, value_enum)]
        embed: EmbedKind,
        #[arg(long)]
        size: usize,
        /// Depth of the host tree; defaults to the smallest that fits.
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Re-serialize a graph, or draw a decomposition's host tree.
    Export {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        decomp: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
struct Target {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct Output {
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct Shrink {
    /// Shrink each interval by one unit at both ends (the default).
    #[arg(long, overrides_with = "no_shrink")]
    shrink: bool,
    #[arg(long, overrides_with = "shrink")]
    no_shrink: bool,
}

impl Shrink {
    fn on(&self) -> bool {
        !self.no_shrink
    }
}

#[derive(Args)]
struct Jobs {
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    #[value(name = "S")]
    S,
    #[value(name = "G")]
    G,
    #[value(name = "H")]
    H,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Shift,
    NaturalTree,
    Geometric,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmbedKind {
    #[value(name = "shift-in-G")]
    ShiftInG,
    #[value(name = "shift-in-H")]
    ShiftInH,
}

/// What went wrong, mapped to an exit code.
enum Failure {
    /// Report already printed; exit 1.
    Check,
    /// Exit 2.
    Usage(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn emit(output: &Output, text: &str) -> Outcome {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::from_json_str(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn build(family: Family, n: usize) -> Result<Graph, Failure> {
    Ok(match family {
        Family::S => build_shift(n)?,
        Family::G => build_g(n)?,
        Family::H => build_h(n)?,
    })
}

fn gen(target: &Target, output: &Output) -> Outcome {
    let g = build(target.family, target.n)?;
    match output.format {
        Format::Json => emit(output, &g.to_json_string()),
        Format::Dot => emit(output, &g.to_dot()),
    }
}

fn decompose(target: &Target, method: Method, shrink: bool, output: &Output) -> Outcome {
    let n = target.n;
    let d = match (method, target.family) {
        (Method::Shift, Family::S) => AnyDecomposition::Path(shift_path_decomposition(n)?.decomposition),
        (Method::Geometric, Family::G) => {
            AnyDecomposition::Path(geometric_path_decomposition_g(n, shrink)?.decomposition)
        }
        (Method::NaturalTree, Family::H) => AnyDecomposition::Tree(natural_tree_decomposition_h(n)?.decomposition),
        _ => {
            return Err(Failure::Usage(
                "methods pair with families: shift with S, geometric with G, natural-tree with H".into(),
            ))
        }
    };
    let g = build(target.family, n)?;
    match output.format {
        Format::Json => emit(output, &pretty(&d.to_json(&g))),
        Format::Dot => emit(output, &host_dot(&d)),
    }
}

fn host_dot(d: &AnyDecomposition) -> String {
    match d {
        AnyDecomposition::Path(p) => path_as_tree(p).host_to_dot(),
        AnyDecomposition::Tree(t) => t.host_to_dot(),
    }
}

fn verify(graph: &Path, decomp: &Path, chromatic: bool, jobs: u32) -> Outcome {
    let g = load_graph(graph)?;
    let d = AnyDecomposition::from_json_str(&read(decomp)?, &g)
        .map_err(|e| Failure::Usage(format!("{}: {e}", decomp.display())))?;
    let report = match &d {
        AnyDecomposition::Path(p) => verify_path_decomposition(&g, p)?,
        AnyDecomposition::Tree(t) => verify_tree_decomposition(&g, t)?,
    };
    let mut out = report.to_json(&g);
    out["width"] = json!(d.width());
    if chromatic && report.is_valid() {
        let opts = ChromaticOptions {
            solver: ChromaticSolver::default(),
            jobs: jobs as usize,
        };
        out["chromatic"] = json!(decomposition_chromatic_with(&g, &d, &opts)?);
    }
    print!("{}", pretty(&out));
    if report.is_valid() {
        match out.get("chromatic") {
            Some(c) => eprintln!("valid, bag chromatic number {c}"),
            None => eprintln!("valid"),
        }
        Ok(())
    } else {
        eprintln!(
            "invalid: {} uncovered vertices, {} uncovered edges, {} disconnected traces",
            report.uncovered_vertices.len(),
            report.uncovered_edges.len(),
            report.disconnected_traces.len()
        );
        Err(Failure::Check)
    }
}

fn solve(graph: &Path, pchr: bool, output: &Output) -> Outcome {
    let g = load_graph(graph)?;
    let result = if pchr { pchr_exact(&g)? } else { chromatic_number(&g)? };
    emit(output, &pretty(&result.to_json(&g)))
}

fn parse_vee(key: &str) -> Result<pathchrom::Vee, Failure> {
    match VertexLabel::parse_key(key)? {
        VertexLabel::Vee(v) => Ok(v),
        other => Err(Failure::Usage(format!("{other} is not a V"))),
    }
}

fn classify(n: Option<usize>, first: Option<&str>, second: Option<&str>) -> Outcome {
    if let (Some(a), Some(b)) = (first, second) {
        let (v1, v2) = (parse_vee(a)?, parse_vee(b)?);
        let out = json!({
            "pattern": classify_pair(&v1, &v2),
            "adjacent": pathchrom::adjacent(&v1.into(), &v2.into()),
        });
        print!("{}", pretty(&out));
        return Ok(());
    }
    let n = n.expect("argument group requires --n or --first");
    let vs = vees(n)?;
    let mut counts = serde_json::Map::new();
    for q in PatternClass::CLASSIFIED.into_iter().chain([PatternClass::Other]) {
        counts.insert(q.to_string(), json!(0u64));
    }
    for (i, a) in vs.iter().enumerate() {
        for (j, b) in vs.iter().enumerate() {
            if i != j {
                let slot = counts.get_mut(&classify_pair(a, b).to_string()).unwrap();
                *slot = json!(slot.as_u64().unwrap() + 1);
            }
        }
    }
    print!("{}", pretty(&json!({ "n": n, "ordered_pairs": counts })));
    Ok(())
}

const MAX_LISTED_FAILURES: usize = 100;

fn check_properties(n: usize, method: Method, shrink: bool, output: &Output) -> Outcome {
    if method != Method::Geometric {
        return Err(Failure::Usage("check-properties applies to the geometric method only".into()));
    }
    if output.format != Format::Json {
        return Err(Failure::Usage("check-properties writes JSON only".into()));
    }
    let gd = geometric_path_decomposition_g(n, shrink)?;
    let report = property_report(&gd.vees, &gd.decomposition)?;
    let coloring = two_coloring_failures(&gd)?;
    let key = |v: usize| VertexLabel::Vee(gd.vees[v]).key();
    let mut out = report.to_json();
    let listed: Vec<Value> = coloring
        .iter()
        .take(MAX_LISTED_FAILURES)
        .map(|(x0, (u, v))| json!({ "x0": x0, "edge": [key(*u), key(*v)] }))
        .collect();
    out["two_coloring"] = json!({
        "proper": coloring.is_empty(),
        "failure_count": coloring.len(),
        "failures": listed,
    });
    let conformant = report.is_conformant() && coloring.is_empty();
    out["conformant"] = json!(conformant);
    emit(output, &pretty(&out))?;
    if conformant {
        eprintln!("conformant: every pair has its expected label and every bag 2-colouring is proper");
        Ok(())
    } else {
        if report.violation_count > 0 {
            eprintln!("{} pairs break the expected interval pattern", report.violation_count);
        }
        if let Some((x0, (u, v))) = coloring.first() {
            eprintln!(
                "{} bag 2-colouring failures; first at x0={}: {} -- {} both in C1 or C3",
                coloring.len(),
                x0,
                key(*u),
                key(*v)
            );
        }
        Err(Failure::Check)
    }
}

fn embed(kind: EmbedKind, size: usize, n: Option<usize>, output: &Output) -> Outcome {
    let (out, ok) = match kind {
        EmbedKind::ShiftInG => {
            let e = embed_shift_in_g(size, n.unwrap_or(size.saturating_sub(1)))?;
            let vees: serde_json::Map<String, Value> = e
                .vees
                .iter()
                .map(|(&(i, j), v)| (format!("{i},{j}"), json!(VertexLabel::Vee(*v).key())))
                .collect();
            let ok = e.is_isomorphic();
            (json!({ "p": e.p, "n": e.n, "vertices": vees, "isomorphic": ok }), ok)
        }
        EmbedKind::ShiftInH => {
            let e = embed_shift_in_h(size, n.unwrap_or((3 * size).saturating_sub(1)))?;
            let wyes: serde_json::Map<String, Value> = e
                .wyes
                .iter()
                .map(|(&(i, j), y)| (format!("{i},{j}"), json!(VertexLabel::Wye(*y).key())))
                .collect();
            let key = |v: &pathchrom::Vee| VertexLabel::Vee(*v).key();
            let ok = e.is_isomorphic() && e.missing_attachments().is_empty();
            (
                json!({
                    "m": e.m,
                    "n": e.n,
                    "vertices": wyes,
                    "vees": e.vees.iter().map(|(j, v)| (j.to_string(), json!(key(v)))).collect::<serde_json::Map<_, _>>(),
                    "primes": e.primes.iter().map(|(j, v)| (j.to_string(), json!(key(v)))).collect::<serde_json::Map<_, _>>(),
                    "isomorphic": ok,
                }),
                ok,
            )
        }
    };
    emit(output, &pretty(&out))?;
    if ok {
        Ok(())
    } else {
        eprintln!("embedding check failed");
        Err(Failure::Check)
    }
}

fn export(graph: &Path, decomp: Option<&Path>, output: &Output) -> Outcome {
    let g = load_graph(graph)?;
    let Some(decomp) = decomp else {
        return match output.format {
            Format::Json => emit(output, &g.to_json_string()),
            Format::Dot => emit(output, &g.to_dot()),
        };
    };
    let d = AnyDecomposition::from_json_str(&read(decomp)?, &g)
        .map_err(|e| Failure::Usage(format!("{}: {e}", decomp.display())))?;
    match output.format {
        Format::Json => emit(output, &pretty(&d.to_json(&g))),
        Format::Dot => emit(output, &host_dot(&d)),
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen { target, output } => gen(&target, &output),
        Command::Decompose {
            target,
            method,
            shrink,
            output,
        } => decompose(&target, method, shrink.on(), &output),
        Command::Verify {
            graph,
            decomp,
            chromatic,
            jobs,
        } => verify(&graph, &decomp, chromatic, jobs.jobs),
        Command::Solve { graph, pchr, chi, output } => {
            debug_assert!(pchr != chi);
            solve(&graph, pchr, &output)
        }
        Command::Classify { n, first, second } => classify(n, first.as_deref(), second.as_deref()),
        Command::CheckProperties {
            n,
            method,
            shrink,
            output,
        } => check_properties(n, method, shrink.on(), &output),
        Command::Embed { embed: kind, size, n, output } => embed(kind, size, n, &output),
        Command::Export { graph, decomp, output } => export(&graph, decomp.as_deref(), &output),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
