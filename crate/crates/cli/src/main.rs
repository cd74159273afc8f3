//! `starcolor`: generate graphs, color them, verify colorings, compute
//! exact star chromatic indices and run the benchmark suite.
//!
//! Exit codes: 0 success, 1 the checked property fails (violation found or
//! no coloring within `--max-k`), 2 input error, 3 benchmark discrepancy,
//! 4 search budget exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use starcolor_core::colorers::{self, figures};
use starcolor_core::exact::{self, ExactOptions};
use starcolor_core::families::{self, CompleteHalinSpec, Named};
use starcolor_core::io::{read_json, write_json};
use starcolor_core::{
    export_dot, run_suite, verify, EdgeColoring, Error, Family, Graph, GraphFile, HalinGraph,
};

#[derive(Parser)]
#[command(name = "starcolor", version, about = "Star edge-colorings of graph families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph as JSON.
    Gen(GenArgs),
    /// Color a graph with one of the constructive algorithms.
    Color(ColorArgs),
    /// Check a coloring; prints the first violation as JSON.
    Verify(VerifyArgs),
    /// Exact star chromatic index with a certificate.
    Exact(ExactArgs),
    /// Run the benchmark suite and write the report.
    Bench(BenchArgs),
    /// Export a graph, optionally colored.
    Export(ExportArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
    Grid,
    Tree,
    PathSquare,
    CycleSquare,
    Petersen,
    Petersen3n,
    Necklace,
    CubicHalin,
    CompleteHalin,
    Named,
    /// A figure coloring; needs `--name` and `--coloring-out`.
    Figure,
}

#[derive(clap::Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    h: Option<usize>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
    #[arg(long)]
    leaves: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Complete Halin tree as nested JSON arrays, e.g. `[[[],[]],[[],[]],[[],[]]]`.
    #[arg(long)]
    spec: Option<String>,
    /// Gadget name (k4, net, fan3, fan3-drawn, h0, k5, wheel(N)) or figure name.
    #[arg(long)]
    name: Option<String>,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    coloring_out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Auto,
    CubicHalin,
    Necklace,
    CompleteHalin,
    Tree,
    PathSquare,
    CycleSquare,
    Petersen3n,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fallback {
    Exact,
}

#[derive(clap::Args)]
struct ColorArgs {
    #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
    algorithm: Algorithm,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Solve exactly when the construction fails.
    #[arg(long, value_enum)]
    fallback: Option<Fallback>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Star,
    Proper,
    Strong,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    coloring: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Star)]
    mode: Mode,
    /// JSON array of edge ids; with `--mode strong` the coloring is aligned
    /// with this list.
    #[arg(long)]
    sub: Option<PathBuf>,
}

#[derive(clap::Args)]
struct ExactArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    max_k: Option<usize>,
    #[arg(long, default_value_t = exact::DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long)]
    parallel: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Paper,
}

#[derive(clap::Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long)]
    out: PathBuf,
    /// Search nodes per exact computation.
    #[arg(long, default_value_t = exact::DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
}

#[derive(clap::Args)]
struct ExportArgs {
    #[arg(long, value_enum)]
    format: Format,
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    coloring: Option<PathBuf>,
    /// Defaults to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Color(a) => color(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Exact(a) => exact_cmd(a),
        Command::Bench(a) => bench(a),
        Command::Export(a) => export(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn need<T>(value: Option<T>, flag: &str) -> anyhow::Result<T> {
    value.with_context(|| format!("--{flag} is required for this family"))
}

fn gen(a: GenArgs) -> anyhow::Result<u8> {
    if let FamilyArg::Figure = a.family {
        let name = need(a.name.as_deref(), "name")?;
        let fixture = match name {
            "necklace-1" => figures::necklace_1,
            "necklace-2" => figures::necklace_2,
            "necklace-3" => figures::necklace_3,
            "cycle-square-7" => figures::cycle_square_7,
            "cycle-square-10" => figures::cycle_square_10,
            "cycle-square-11" => figures::cycle_square_11,
            other => bail!("unknown figure `{other}`"),
        };
        let (g, c) = fixture()?;
        write_json(&a.out, &GraphFile::from_graph(&g))?;
        write_json(need(a.coloring_out.as_ref(), "coloring-out")?, &c)?;
        return Ok(0);
    }
    let family = match a.family {
        FamilyArg::Path => Family::Path { n: need(a.n, "n")? },
        FamilyArg::Cycle => Family::Cycle { n: need(a.n, "n")? },
        FamilyArg::Grid => Family::Grid {
            rows: need(a.rows, "rows")?,
            cols: need(a.cols, "cols")?,
        },
        FamilyArg::Tree => Family::Tree {
            n: need(a.n, "n")?,
            seed: a.seed,
        },
        FamilyArg::PathSquare => Family::PathSquare { n: need(a.n, "n")? },
        FamilyArg::CycleSquare => Family::CycleSquare { n: need(a.n, "n")? },
        FamilyArg::Petersen => Family::Petersen {
            m: need(a.m, "m")?,
            n: need(a.n, "n")?,
        },
        FamilyArg::Petersen3n => Family::Petersen3n { n: need(a.n, "n")? },
        FamilyArg::Necklace => Family::Necklace { h: need(a.h, "h")? },
        FamilyArg::CubicHalin => Family::CubicHalin {
            leaves: need(a.leaves, "leaves")?,
            seed: a.seed,
        },
        FamilyArg::CompleteHalin => {
            let text = need(a.spec, "spec")?;
            let spec: CompleteHalinSpec =
                serde_json::from_str(&text).context("--spec is not a nested JSON array")?;
            Family::CompleteHalin { spec }
        }
        FamilyArg::Named => {
            let name: Named = need(a.name.as_deref(), "name")?.parse()?;
            Family::Named {
                which: name.to_string(),
            }
        }
        FamilyArg::Figure => unreachable!("handled above"),
    };
    let (g, hg) = family.build()?;
    let file = match &hg {
        Some(hg) => GraphFile::from_halin(hg),
        None => GraphFile::from_graph(&g),
    };
    write_json(&a.out, &file.with_family(family))?;
    Ok(0)
}

/// Reorders a coloring of `canonical` onto the edge ids of `g`; the two
/// graphs must have the same edge set.
fn transfer(canonical: &Graph, c: &EdgeColoring, g: &Graph, family: &str) -> anyhow::Result<EdgeColoring> {
    if canonical.order() != g.order() || canonical.size() != g.size() {
        return Err(Error::FamilyMismatch(family.into()).into());
    }
    let colors = g
        .edges()
        .iter()
        .map(|&(u, v)| canonical.edge_between(u, v).map(|e| c.colors[e]))
        .collect::<Option<Vec<u32>>>()
        .ok_or_else(|| Error::FamilyMismatch(family.into()))?;
    Ok(EdgeColoring::new(colors))
}

fn halin_of(file: &GraphFile, family: &str) -> anyhow::Result<HalinGraph> {
    file.to_halin()?
        .with_context(|| format!("{family} coloring needs the `halin` decomposition in the graph file"))
}

/// Family parameter from the file's metadata, else inferred from the order.
fn param(file: &GraphFile, g: &Graph, algorithm: Algorithm) -> anyhow::Result<usize> {
    let n = match (&file.family, algorithm) {
        (Some(Family::PathSquare { n }), Algorithm::PathSquare)
        | (Some(Family::CycleSquare { n }), Algorithm::CycleSquare)
        | (Some(Family::Petersen3n { n }), Algorithm::Petersen3n)
        | (Some(Family::Necklace { h: n }), Algorithm::Necklace) => *n,
        (_, Algorithm::Petersen3n) => g.order() / 6,
        (_, Algorithm::Necklace) => g.order().saturating_sub(2) / 2,
        _ => g.order(),
    };
    Ok(n)
}

fn infer(file: &GraphFile, g: &Graph) -> anyhow::Result<Algorithm> {
    Ok(match &file.family {
        Some(Family::Tree { .. }) => Algorithm::Tree,
        Some(Family::PathSquare { .. }) => Algorithm::PathSquare,
        Some(Family::CycleSquare { .. }) => Algorithm::CycleSquare,
        Some(Family::Petersen3n { .. }) => Algorithm::Petersen3n,
        Some(Family::Necklace { h }) if h % 2 == 1 => Algorithm::Necklace,
        Some(Family::CompleteHalin { .. }) => Algorithm::CompleteHalin,
        _ if g.is_tree() => Algorithm::Tree,
        _ if file.halin.is_some() && g.is_regular(3) => Algorithm::CubicHalin,
        _ if file.halin.is_some() => Algorithm::CompleteHalin,
        _ => bail!("cannot infer the family of this graph; pass --algorithm"),
    })
}

fn run_colorer(algorithm: Algorithm, file: &GraphFile, g: &Graph) -> anyhow::Result<EdgeColoring> {
    let n = param(file, g, algorithm)?;
    let c = match algorithm {
        Algorithm::Auto => unreachable!("resolved by infer"),
        Algorithm::Tree => colorers::tree_star_coloring(g)?,
        Algorithm::CubicHalin => colorers::color_cubic_halin(&halin_of(file, "cubic Halin")?)?,
        Algorithm::CompleteHalin => colorers::color_complete_halin(&halin_of(file, "complete Halin")?)?,
        Algorithm::Necklace => {
            let canonical = families::necklace(n)?.into_graph();
            transfer(&canonical, &colorers::color_necklace_odd(n)?, g, "necklace")?
        }
        Algorithm::PathSquare => {
            transfer(&families::path_square(n)?, &colorers::color_path_square(n)?, g, "path square")?
        }
        Algorithm::CycleSquare => {
            transfer(&families::cycle_square(n)?, &colorers::color_cycle_square(n)?, g, "cycle square")?
        }
        Algorithm::Petersen3n => {
            transfer(&families::petersen_3n(n)?, &colorers::color_petersen_3n(n)?, g, "P(3n, n)")?
        }
    };
    Ok(c)
}

fn color(a: ColorArgs) -> anyhow::Result<u8> {
    let file: GraphFile = load(&a.input)?;
    let g = file.to_graph()?;
    let algorithm = match a.algorithm {
        Algorithm::Auto => infer(&file, &g)?,
        other => other,
    };
    let c = match (run_colorer(algorithm, &file, &g), a.fallback) {
        (Ok(c), _) => c,
        (Err(e), Some(Fallback::Exact))
            if matches!(e.downcast_ref::<Error>(), Some(Error::ConstructionFailed { .. })) =>
        {
            eprintln!("construction failed ({e}); solving exactly");
            exact::star_chromatic_index(&g, ExactOptions::default())?.certificate
        }
        (Err(e), _) => return Err(e),
    };
    write_json(&a.out, &c)?;
    eprintln!("{} colors", c.color_count());
    Ok(0)
}

fn verify_cmd(a: VerifyArgs) -> anyhow::Result<u8> {
    let g = load::<GraphFile>(&a.graph)?.to_graph()?;
    let c: EdgeColoring = load(&a.coloring)?;
    let violation = match a.mode {
        Mode::Star => verify::check_star(&g, &c)?,
        Mode::Proper => verify::check_proper(&g, &c)?,
        Mode::Strong => {
            let sub: Vec<usize> = match &a.sub {
                Some(p) => load(p)?,
                None => (0..g.size()).collect(),
            };
            verify::check_restricted_strong(&g, &sub, &c)?
        }
    };
    match violation {
        None => {
            println!("{}", json!({"ok": true, "colors": c.color_count()}));
            Ok(0)
        }
        Some(v) => {
            println!("{}", serde_json::to_string(&v)?);
            Ok(1)
        }
    }
}

fn exact_cmd(a: ExactArgs) -> anyhow::Result<u8> {
    let g = load::<GraphFile>(&a.graph)?.to_graph()?;
    let opts = ExactOptions {
        upper_hint: a.max_k,
        budget: a.budget,
        parallel: a.parallel,
        ..ExactOptions::default()
    };
    match exact::star_chromatic_index(&g, opts) {
        Ok(r) => {
            let out = json!({"k": r.k, "certificate": r.certificate.colors, "nodes": r.nodes_explored});
            println!("{out}");
            Ok(0)
        }
        Err(Error::UpperBoundTooLow(k)) => {
            println!("{}", json!({"k": null, "infeasible_up_to": k}));
            Ok(1)
        }
        Err(e @ Error::BudgetExhausted { .. }) => {
            eprintln!("{e}");
            Ok(4)
        }
        Err(e) => Err(e.into()),
    }
}

fn bench(a: BenchArgs) -> anyhow::Result<u8> {
    let Suite::Paper = a.suite;
    let report = run_suite(a.budget);
    report.write(&a.out)?;
    eprintln!(
        "{} entries written to {}; exit code {}",
        report.entries.len(),
        a.out.join("report.md").display(),
        report.exit_code()
    );
    Ok(report.exit_code() as u8)
}

fn export(a: ExportArgs) -> anyhow::Result<u8> {
    let Format::Dot = a.format;
    let g = load::<GraphFile>(&a.graph)?.to_graph()?;
    let c: Option<EdgeColoring> = a.coloring.as_deref().map(load::<EdgeColoring>).transpose()?;
    let dot = export_dot(&g, c.as_ref())?;
    match &a.out {
        Some(p) => write_text(p, &dot)?,
        None => print!("{dot}"),
    }
    Ok(0)
}

fn load<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    read_json(path).with_context(|| format!("reading {}", path.display()))
}

fn write_text(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}
