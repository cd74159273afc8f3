//! The benchmark suite: every numeric claim about the studied families,
//! checked against the exact solver or the constructive colorers.
//!
//! Entries run in parallel; the report follows the fixed entry list, so
//! identical budgets give byte-identical output.

use std::fmt;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::colorers::{self, figures};
use crate::error::{Error, Result};
use crate::exact::{self, Decision, ExactOptions};
use crate::families::{self, CompleteHalinSpec, Named};
use crate::graph::{EdgeColoring, Graph, HalinGraph};
use crate::io::{self, GraphFile};
use crate::verify::{self, StarViolation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Section {
    ExactValues,
    LowerBounds,
    Figures,
    Trees,
    CubicHalin,
    Necklaces,
    CompleteHalin,
    PathSquares,
    CycleSquares,
    Petersen,
}

impl Section {
    pub const ALL: [Section; 10] = [
        Section::ExactValues,
        Section::LowerBounds,
        Section::Figures,
        Section::Trees,
        Section::CubicHalin,
        Section::Necklaces,
        Section::CompleteHalin,
        Section::PathSquares,
        Section::CycleSquares,
        Section::Petersen,
    ];

    pub fn title(self) -> &'static str {
        match self {
            Section::ExactValues => "Exact values",
            Section::LowerBounds => "Lower bounds",
            Section::Figures => "Figure colorings",
            Section::Trees => "Trees",
            Section::CubicHalin => "Cubic Halin graphs",
            Section::Necklaces => "Odd necklaces",
            Section::CompleteHalin => "Complete Halin graphs",
            Section::PathSquares => "Squares of paths",
            Section::CycleSquares => "Squares of cycles",
            Section::Petersen => "Generalized Petersen graphs P(3n, n)",
        }
    }

    fn key(self) -> &'static str {
        match self {
            Section::ExactValues => "exact",
            Section::LowerBounds => "lower",
            Section::Figures => "figure",
            Section::Trees => "tree",
            Section::CubicHalin => "cubic-halin",
            Section::Necklaces => "necklace",
            Section::CompleteHalin => "complete-halin",
            Section::PathSquares => "path-square",
            Section::CycleSquares => "cycle-square",
            Section::Petersen => "petersen",
        }
    }
}

/// What the source asserts about an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum Claim {
    Equals(usize),
    AtMost(usize),
    AtLeast(usize),
    /// No star coloring with this many colors exists.
    NoColoring(usize),
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Equals(k) => write!(f, "= {k}"),
            Claim::AtMost(k) => write!(f, "≤ {k}"),
            Claim::AtLeast(k) => write!(f, "≥ {k}"),
            Claim::NoColoring(k) => write!(f, "no star {k}-coloring"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum Computed {
    /// Number of colors of a verified star coloring, or the exact index.
    Colors(usize),
    Infeasible,
    /// A star coloring with this many colors was found.
    Feasible(usize),
    /// The colorer or fixture produced no valid coloring.
    Failed(String),
    Timeout,
}

impl fmt::Display for Computed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Computed::Colors(k) => write!(f, "{k}"),
            Computed::Infeasible => write!(f, "infeasible"),
            Computed::Feasible(k) => write!(f, "star {k}-coloring found"),
            Computed::Failed(why) => write!(f, "failed: {why}"),
            Computed::Timeout => write!(f, "budget exhausted"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    WithinBound,
    Discrepancy,
    Timeout,
}

impl Status {
    pub fn derive(claim: Claim, computed: &Computed) -> Status {
        use std::cmp::Ordering::*;
        match (claim, computed) {
            (_, Computed::Timeout) => Status::Timeout,
            (Claim::Equals(k), Computed::Colors(c)) if *c == k => Status::Match,
            (Claim::AtMost(k), Computed::Colors(c)) | (Claim::AtLeast(k), Computed::Colors(c)) => {
                match (c.cmp(&k), claim) {
                    (Equal, _) => Status::Match,
                    (Less, Claim::AtMost(_)) | (Greater, Claim::AtLeast(_)) => Status::WithinBound,
                    _ => Status::Discrepancy,
                }
            }
            (Claim::NoColoring(_), Computed::Infeasible) => Status::Match,
            _ => Status::Discrepancy,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::WithinBound => "within-bound",
            Status::Discrepancy => "discrepancy",
            Status::Timeout => "timeout",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchEntry {
    pub section: Section,
    pub instance: String,
    pub claim: Claim,
    /// Where the claim comes from.
    pub source: String,
    pub computed: Computed,
    pub status: Status,
    /// CLI commands that recompute `computed`.
    pub replay: String,
    /// Path of the witness files, relative to the report directory.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

struct Witness {
    graph: GraphFile,
    coloring: Option<EdgeColoring>,
    violation: Option<StarViolation>,
}

struct Outcome {
    computed: Computed,
    witness: Option<Witness>,
}

type Job = Box<dyn Fn(u64) -> Outcome + Send + Sync>;

struct Planned {
    section: Section,
    instance: String,
    claim: Claim,
    source: String,
    replay: String,
    job: Job,
}

pub struct Report {
    pub budget: u64,
    pub entries: Vec<BenchEntry>,
    witnesses: Vec<(String, Witness)>,
}

/// Runs every entry with `budget` search nodes per exact computation.
pub fn run_suite(budget: u64) -> Report {
    let plan = plan();
    let outcomes: Vec<Outcome> = plan.par_iter().map(|p| (p.job)(budget)).collect();
    let mut entries = Vec::with_capacity(plan.len());
    let mut witnesses = Vec::new();
    for (p, out) in plan.into_iter().zip(outcomes) {
        let status = Status::derive(p.claim, &out.computed);
        let mut witness = None;
        if status == Status::Discrepancy {
            if let Some(w) = out.witness {
                let stem = format!("witnesses/{}-{}", p.section.key(), slug(&p.instance));
                witness = Some(stem.clone());
                witnesses.push((stem, w));
            }
        }
        entries.push(BenchEntry {
            section: p.section,
            instance: p.instance,
            claim: p.claim,
            source: p.source,
            computed: out.computed,
            status,
            replay: p.replay,
            witness,
        });
    }
    Report {
        budget,
        entries,
        witnesses,
    }
}

impl Report {
    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    /// 0 when everything matches or is within bound, 3 on any discrepancy,
    /// 4 on any timeout.
    pub fn exit_code(&self) -> i32 {
        if self.count(Status::Timeout) > 0 {
            4
        } else if self.count(Status::Discrepancy) > 0 {
            3
        } else {
            0
        }
    }

    pub fn markdown(&self) -> String {
        let mut s = String::from("# Star edge-coloring benchmark\n\n");
        s += &format!("Node budget per exact computation: {}.\n\n", self.budget);
        s += "| Status | Entries |\n|---|---|\n";
        for st in [Status::Match, Status::WithinBound, Status::Discrepancy, Status::Timeout] {
            s += &format!("| {} | {} |\n", st.as_str(), self.count(st));
        }
        for section in Section::ALL {
            s += &format!("\n## {}\n\n", section.title());
            s += "| Instance | Claim | Source | Computed | Status | Replay |\n";
            s += "|---|---|---|---|---|---|\n";
            for e in self.entries.iter().filter(|e| e.section == section) {
                let status = match &e.witness {
                    Some(w) => format!("{} ([witness]({w}.graph.json))", e.status.as_str()),
                    None => e.status.as_str().to_string(),
                };
                s += &format!(
                    "| {} | {} | {} | {} | {} | `{}` |\n",
                    cell(&e.instance),
                    cell(&e.claim.to_string()),
                    cell(&e.source),
                    cell(&e.computed.to_string()),
                    status,
                    e.replay.replace('|', "\\|"),
                );
            }
        }
        s
    }

    pub fn json(&self) -> Result<String> {
        #[derive(Serialize)]
        struct Twin<'a> {
            budget: u64,
            exit_code: i32,
            entries: &'a [BenchEntry],
        }
        let mut s = serde_json::to_string_pretty(&Twin {
            budget: self.budget,
            exit_code: self.exit_code(),
            entries: &self.entries,
        })?;
        s.push('\n');
        Ok(s)
    }

    /// Writes `report.md`, `report.json` and, for every discrepancy with
    /// a witness, `<stem>.graph.json`, `<stem>.coloring.json` and
    /// `<stem>.violation.json` into `dir`.
    pub fn write(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir.join("witnesses"))?;
        fs::write(dir.join("report.md"), self.markdown())?;
        fs::write(dir.join("report.json"), self.json()?)?;
        for (stem, w) in &self.witnesses {
            io::write_json(dir.join(format!("{stem}.graph.json")), &w.graph)?;
            if let Some(c) = &w.coloring {
                io::write_json(dir.join(format!("{stem}.coloring.json")), c)?;
            }
            if let Some(v) = &w.violation {
                io::write_json(dir.join(format!("{stem}.violation.json")), v)?;
            }
        }
        Ok(())
    }
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

fn slug(s: &str) -> String {
    let mut out = String::new();
    for ch in s.chars() {
        if ch.is_ascii_alphanumeric() {
            out.push(ch.to_ascii_lowercase());
        } else if !out.ends_with('-') {
            out.push('-');
        }
    }
    out.trim_matches('-').to_string()
}

fn failed(e: &Error) -> Outcome {
    Outcome {
        computed: Computed::Failed(e.to_string()),
        witness: None,
    }
}

fn exact_job(build: impl Fn() -> Result<GraphFile> + Send + Sync + 'static) -> Job {
    Box::new(move |budget| {
        let file = match build() {
            Ok(f) => f,
            Err(e) => return failed(&e),
        };
        let g = file.to_graph().expect("generated graphs are valid");
        let opts = ExactOptions {
            budget,
            ..ExactOptions::default()
        };
        match exact::star_chromatic_index(&g, opts) {
            Ok(r) => Outcome {
                computed: Computed::Colors(r.k),
                witness: Some(Witness {
                    graph: file,
                    coloring: Some(r.certificate),
                    violation: None,
                }),
            },
            Err(Error::BudgetExhausted { .. }) => Outcome {
                computed: Computed::Timeout,
                witness: None,
            },
            Err(e) => failed(&e),
        }
    })
}

fn decide_job(build: impl Fn() -> Result<GraphFile> + Send + Sync + 'static, k: usize) -> Job {
    Box::new(move |budget| {
        let file = match build() {
            Ok(f) => f,
            Err(e) => return failed(&e),
        };
        let g = file.to_graph().expect("generated graphs are valid");
        match exact::exists_star_k_coloring(&g, k, budget) {
            Ok(s) => match s.decision {
                Decision::Infeasible => Outcome {
                    computed: Computed::Infeasible,
                    witness: None,
                },
                Decision::Colorable(c) => Outcome {
                    computed: Computed::Feasible(c.color_count()),
                    witness: Some(Witness {
                        graph: file,
                        coloring: Some(c),
                        violation: None,
                    }),
                },
                Decision::BudgetExhausted => Outcome {
                    computed: Computed::Timeout,
                    witness: None,
                },
            },
            Err(e) => failed(&e),
        }
    })
}

/// Runs a colorer and re-verifies its output independently.
fn colorer_job<G, C>(build: G, color: C) -> Job
where
    G: Fn() -> Result<GraphFile> + Send + Sync + 'static,
    C: Fn(&GraphFile) -> Result<EdgeColoring> + Send + Sync + 'static,
{
    Box::new(move |_| {
        let file = match build() {
            Ok(f) => f,
            Err(e) => return failed(&e),
        };
        let g = file.to_graph().expect("generated graphs are valid");
        match color(&file) {
            Ok(c) => judge(file, &g, c),
            Err(Error::ConstructionFailed {
                case,
                detail,
                witness: Some(w),
            }) => Outcome {
                computed: Computed::Failed(format!("{case}: {detail}")),
                witness: Some(Witness {
                    graph: file,
                    coloring: Some(w.coloring),
                    violation: Some(w.violation),
                }),
            },
            Err(e) => failed(&e),
        }
    })
}

fn judge(file: GraphFile, g: &Graph, c: EdgeColoring) -> Outcome {
    match verify::check_star(g, &c) {
        Ok(None) => Outcome {
            computed: Computed::Colors(c.color_count()),
            witness: None,
        },
        Ok(Some(v)) => Outcome {
            computed: Computed::Failed(v.to_string()),
            witness: Some(Witness {
                graph: file,
                coloring: Some(c),
                violation: Some(v),
            }),
        },
        Err(e) => failed(&e),
    }
}

fn figure_job(fixture: figures::Fixture) -> Job {
    Box::new(move |_| match fixture() {
        Ok((g, c)) => judge(GraphFile::from_graph(&g), &g, c),
        Err(e) => failed(&e),
    })
}

fn plain(g: Result<Graph>) -> Result<GraphFile> {
    g.map(|g| GraphFile::from_graph(&g))
}

fn halin(hg: Result<HalinGraph>) -> Result<GraphFile> {
    hg.map(|hg| GraphFile::from_halin(&hg))
}

fn halin_of(file: &GraphFile) -> Result<HalinGraph> {
    file.to_halin()?
        .ok_or_else(|| Error::InvalidHalin("missing decomposition".into()))
}

/// The complete Halin corpus: 20 specs with maximum degree 6 to 10.
pub fn complete_halin_corpus() -> Vec<CompleteHalinSpec> {
    let uniform: [&[usize]; 12] = [
        &[3, 5],
        &[6, 2],
        &[4, 5],
        &[3, 6],
        &[7, 3],
        &[3, 3, 5],
        &[8, 2],
        &[3, 7],
        &[9, 3],
        &[4, 8],
        &[10, 2],
        &[3, 9],
    ];
    let two_level: [&[usize]; 8] = [
        &[5, 5, 5, 5, 5, 5],
        &[2, 6, 3, 4],
        &[7, 2, 5, 3, 6],
        &[9, 2, 2],
        &[8, 8, 8],
        &[9, 4, 5, 2, 3],
        &[2, 2, 2, 2, 2, 2, 2],
        &[6, 7, 5, 2],
    ];
    uniform
        .iter()
        .map(|b| CompleteHalinSpec::uniform(b))
        .chain(two_level.iter().map(|g| CompleteHalinSpec::two_level(g)))
        .collect()
}

/// Parameters `(leaves, seed)` of the random cubic Halin graphs.
pub fn cubic_halin_params() -> Vec<(usize, u64)> {
    (0..100u64).map(|i| (3 + (i as usize) % 38, i)).collect()
}

fn gen(args: &str) -> String {
    format!("starcolor gen {args} --out g.json")
}

fn gen_exact(args: &str) -> String {
    format!("{} && starcolor exact --graph g.json", gen(args))
}

fn gen_color(args: &str, algorithm: &str) -> String {
    format!(
        "{} && starcolor color --algorithm {algorithm} --in g.json --out c.json",
        gen(args)
    )
}

fn gen_figure(name: &str) -> String {
    format!(
        "starcolor gen --family figure --name {name} --out g.json --coloring-out c.json \
         && starcolor verify --graph g.json --coloring c.json"
    )
}

fn plan() -> Vec<Planned> {
    let mut p: Vec<Planned> = Vec::new();
    let mut add = |section, instance: String, claim, source: &str, replay: String, job: Job| {
        p.push(Planned {
            section,
            instance,
            claim,
            source: source.to_string(),
            replay,
            job,
        })
    };

    use Section::*;
    let named = |which: Named| move || plain(families::named(which));
    for (which, k, source) in [
        (Named::K4, 5, "cubic Halin theorem: χ'st(K4) = 5"),
        (Named::Net, 4, "cubic Halin theorem: χ'st(Net) = 4"),
    ] {
        add(
            ExactValues,
            which.to_string(),
            Claim::Equals(k),
            source,
            gen_exact(&format!("--family named --name {which}")),
            exact_job(named(which)),
        );
    }
    for (h, k) in [(1, 5), (2, 6), (3, 5)] {
        add(
            ExactValues,
            format!("necklace N{h}"),
            Claim::Equals(k),
            &format!("cubic Halin base cases: χ'st(N{h}) = {k}"),
            gen_exact(&format!("--family necklace --h {h}")),
            exact_job(move || halin(families::necklace(h))),
        );
    }
    for (n, k) in [(3, 3), (4, 4), (5, 6), (6, 6)] {
        add(
            ExactValues,
            format!("P{n}²"),
            Claim::Equals(k),
            "path square theorem",
            gen_exact(&format!("--family path-square --n {n}")),
            exact_job(move || plain(families::path_square(n))),
        );
    }
    add(
        ExactValues,
        "K5".into(),
        Claim::Equals(9),
        "cycle square theorem: χ'st(C5²) = χ'st(K5) = 9",
        gen_exact("--family named --name k5"),
        exact_job(named(Named::K5)),
    );
    add(
        ExactValues,
        "P(6, 2)".into(),
        Claim::Equals(5),
        "P(3n, n) theorem: χ'st(P(6, 2)) = 5",
        gen_exact("--family petersen3n --n 2"),
        exact_job(|| plain(families::petersen_3n(2))),
    );
    add(
        ExactValues,
        "C5".into(),
        Claim::Equals(4),
        "derived: C5 has no star 3-coloring",
        gen_exact("--family cycle --n 5"),
        exact_job(|| plain(families::cycle(5))),
    );

    add(
        LowerBounds,
        "fan3".into(),
        Claim::NoColoring(5),
        "fan lemma: χ'st(F3) ≥ 6",
        format!("{} --max-k 5", gen_exact("--family named --name fan3")),
        decide_job(named(Named::Fan3), 5),
    );
    add(
        LowerBounds,
        "fan3".into(),
        Claim::AtLeast(6),
        "fan lemma: χ'st(F3) ≥ 6",
        gen_exact("--family named --name fan3"),
        exact_job(named(Named::Fan3)),
    );
    add(
        LowerBounds,
        "fan3-drawn (literal drawing)".into(),
        Claim::AtLeast(6),
        "fan lemma: χ'st(F3) ≥ 6, alternate reading of F3",
        gen_exact("--family named --name fan3-drawn"),
        exact_job(named(Named::Fan3Drawn)),
    );
    add(
        LowerBounds,
        "h0".into(),
        Claim::NoColoring(4),
        "H0 lemma: χ'st(H0) ≥ 5",
        format!("{} --max-k 4", gen_exact("--family named --name h0")),
        decide_job(named(Named::H0), 4),
    );

    let fixtures: [(&str, &str, usize, &str, figures::Fixture); 6] = [
        ("necklace-1", "N1 = K4", 5, "necklace figure: N1", figures::necklace_1),
        ("necklace-2", "N2", 6, "necklace figure: N2", figures::necklace_2),
        ("necklace-3", "N3", 5, "necklace figure: N3", figures::necklace_3),
        ("cycle-square-7", "C7²", 7, "figure: star 7-edge-coloring of C7²", figures::cycle_square_7),
        ("cycle-square-10", "C10²", 8, "figure caption: star 8-edge-coloring of C10²", figures::cycle_square_10),
        ("cycle-square-11", "C11²", 9, "figure: star 9-edge-coloring of C11²", figures::cycle_square_11),
    ];
    for (name, label, k, source, fixture) in fixtures {
        add(
            Figures,
            format!("{label} figure"),
            Claim::Equals(k),
            source,
            gen_figure(name),
            figure_job(fixture),
        );
    }
    add(
        Figures,
        "C10² figure".into(),
        Claim::AtMost(9),
        "cycle square text: star 9-edge-coloring for n = 10",
        gen_figure("cycle-square-10"),
        figure_job(figures::cycle_square_10),
    );

    for (n, seed) in [(2, 0), (10, 0), (20, 1), (50, 2), (100, 3), (200, 4), (500, 5), (1000, 6)] {
        let t = families::random_tree(n, seed).expect("valid tree parameters");
        let bound = 3 * t.max_degree() / 2;
        add(
            Trees,
            format!("random tree n={n} seed={seed} (Δ={})", t.max_degree()),
            Claim::AtMost(bound),
            "tree theorem: ⌊3Δ/2⌋ colors",
            gen_color(&format!("--family tree --n {n} --seed {seed}"), "tree"),
            colorer_job(
                move || plain(families::random_tree(n, seed)),
                |f| colorers::tree_star_coloring(&f.to_graph()?),
            ),
        );
    }
    for (leaves, seed) in cubic_halin_params() {
        add(
            CubicHalin,
            format!("leaves={leaves} seed={seed}"),
            Claim::AtMost(6),
            "cubic Halin theorem: χ'st ≤ 6",
            gen_color(&format!("--family cubic-halin --leaves {leaves} --seed {seed}"), "cubic-halin"),
            colorer_job(
                move || halin(families::random_cubic_halin(leaves, seed)),
                |f| colorers::color_cubic_halin(&halin_of(f)?),
            ),
        );
    }

    for h in (1..=49).step_by(2) {
        add(
            Necklaces,
            format!("N{h}"),
            Claim::AtMost(5),
            "odd necklace theorem: χ'st(N_h) ≤ 5",
            gen_color(&format!("--family necklace --h {h}"), "necklace"),
            colorer_job(
                move || halin(families::necklace(h)),
                move |_| colorers::color_necklace_odd(h),
            ),
        );
    }

    for spec in complete_halin_corpus() {
        let hg = families::complete_halin(&spec).expect("corpus specs are valid");
        let delta = hg.graph().max_degree();
        let text = serde_json::to_string(&spec).expect("specs serialize");
        add(
            CompleteHalin,
            format!("{text} (Δ={delta})"),
            Claim::AtMost(3 * delta / 2 + 1),
            "complete Halin theorem: ⌊3Δ/2⌋ + 1 colors",
            gen_color(&format!("--family complete-halin --spec '{text}'"), "complete-halin"),
            colorer_job(
                move || halin(families::complete_halin(&spec)),
                |f| colorers::color_complete_halin(&halin_of(f)?),
            ),
        );
    }

    for n in 5..=200 {
        add(
            PathSquares,
            format!("P{n}²"),
            Claim::Equals(6),
            "path square theorem: χ'st(P_n²) = 6 for n ≥ 5",
            gen_color(&format!("--family path-square --n {n}"), "path-square"),
            colorer_job(
                move || plain(families::path_square(n)),
                move |_| colorers::color_path_square(n),
            ),
        );
    }

    let mut squares: Vec<(usize, Claim, &str)> = vec![
        (5, Claim::Equals(9), "cycle square theorem: χ'st(C5²) = 9"),
        (7, Claim::Equals(7), "cycle square theorem: C7² via its figure"),
        (11, Claim::Equals(9), "cycle square theorem: C11² via its figure"),
    ];
    squares.extend((6..=100).step_by(2).map(|n| (n, Claim::AtMost(9), "cycle square theorem: even n")));
    squares.extend(
        (9..=99)
            .step_by(2)
            .filter(|&n| n != 11)
            .map(|n| (n, Claim::AtMost(8), "cycle square theorem: odd n")),
    );
    for (n, claim, source) in squares {
        add(
            CycleSquares,
            format!("C{n}²"),
            claim,
            source,
            gen_color(&format!("--family cycle-square --n {n}"), "cycle-square"),
            colorer_job(
                move || plain(families::cycle_square(n)),
                move |_| colorers::color_cycle_square(n),
            ),
        );
    }

    for n in 2..=20 {
        add(
            Petersen,
            format!("P({}, {n})", 3 * n),
            Claim::Equals(5),
            "P(3n, n) theorem: χ'st = 5",
            gen_color(&format!("--family petersen3n --n {n}"), "petersen3n"),
            colorer_job(
                move || plain(families::petersen_3n(n)),
                move |_| colorers::color_petersen_3n(n),
            ),
        );
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_derivation() {
        use Computed::*;
        assert_eq!(Status::derive(Claim::Equals(5), &Colors(5)), Status::Match);
        assert_eq!(Status::derive(Claim::Equals(5), &Colors(4)), Status::Discrepancy);
        assert_eq!(Status::derive(Claim::AtMost(6), &Colors(6)), Status::Match);
        assert_eq!(Status::derive(Claim::AtMost(6), &Colors(5)), Status::WithinBound);
        assert_eq!(Status::derive(Claim::AtMost(6), &Colors(7)), Status::Discrepancy);
        assert_eq!(Status::derive(Claim::AtLeast(6), &Colors(7)), Status::WithinBound);
        assert_eq!(Status::derive(Claim::AtLeast(6), &Colors(5)), Status::Discrepancy);
        assert_eq!(Status::derive(Claim::NoColoring(5), &Infeasible), Status::Match);
        assert_eq!(Status::derive(Claim::NoColoring(5), &Feasible(5)), Status::Discrepancy);
        assert_eq!(Status::derive(Claim::Equals(5), &Timeout), Status::Timeout);
        assert_eq!(Status::derive(Claim::AtMost(5), &Failed("x".into())), Status::Discrepancy);
    }

    #[test]
    fn corpus_degrees() {
        let corpus = complete_halin_corpus();
        assert_eq!(corpus.len(), 20);
        let mut seen = Vec::new();
        for spec in &corpus {
            let hg = families::complete_halin(spec).unwrap();
            let d = hg.graph().max_degree();
            assert!((6..=10).contains(&d), "{spec:?}: Δ = {d}");
            seen.push(d);
        }
        for d in 6..=10 {
            assert!(seen.contains(&d), "no spec with Δ = {d}");
        }
    }

    #[test]
    fn cubic_params_cover_range() {
        let params = cubic_halin_params();
        assert_eq!(params.len(), 100);
        assert_eq!(params.iter().map(|p| p.0).min(), Some(3));
        assert_eq!(params.iter().map(|p| p.0).max(), Some(40));
    }

    #[test]
    fn slugs() {
        assert_eq!(slug("C10² figure"), "c10-figure");
        assert_eq!(slug("P(6, 2)"), "p-6-2");
    }
}
