//! Command-line front end: subcommands, text and JSON reports, exit codes.
//!
//! Exit codes: 0 ok, 1 check failure, 2 parse error, 3 precondition
//! failure, 4 scale cap exceeded. Stdout is byte-deterministic for
//! identical invocations; timing goes to stderr.

use std::fmt::Write as _;
use std::fs;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::anngame::{AnnError, AnnGraph, DEFAULT_POSITION_CAP};
use crate::codes::{parse_vector_lines, Code};
use crate::gf2::{rank_words, BitVec, Gf2Matrix};
use crate::groundgraph::{example2_graph, gamma_t, nim_heap, star_into_leaf, GroundGraph};
use crate::lexicode::{
    greedy, greedy_value_ordered, lexi_anncode, make_ordering, GreedyResult, DEFAULT_M_CAP,
};
use crate::selftest;
use crate::solver::{classify_pnd, gamma_solve, GammaTable, GammaValue, Outcome};

#[derive(Parser)]
#[command(
    name = "gamecodes",
    version,
    about = "Binary linear codes from annihilation games and greedy lexicodes"
)]
struct Cli {
    /// Emit machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress listings and timing; keep one-line summaries.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Greedy codes from matrix-defined orderings.
    Lexicode {
        #[command(subcommand)]
        cmd: LexicodeCmd,
    },
    /// Greedy code over the span of a basis file.
    LexiAnncode(LexiAnncodeArgs),
    /// Codes from annihilation games on a groundgraph.
    Anncode {
        #[command(subcommand)]
        cmd: AnncodeCmd,
    },
    /// Solve the annihilation game of a groundgraph.
    Solve(SolveArgs),
    /// Report size, dimension, distance, and basis of a code file.
    Analyze(AnalyzeArgs),
    /// Print a built-in family groundgraph in the graph file format.
    Family {
        #[command(subcommand)]
        which: FamilyCmd,
    },
    /// Reproduction checks for the published values this crate rests on.
    Paper {
        #[command(subcommand)]
        cmd: PaperCmd,
    },
}

#[derive(Subcommand)]
enum LexicodeCmd {
    /// Build the ordering for a matrix file and run the greedy scan.
    Gen(LexicodeGenArgs),
}

#[derive(Args)]
struct LexicodeGenArgs {
    /// Matrix file: one row of '0'/'1' per line, top row first.
    #[arg(long)]
    matrix: String,
    /// Distance threshold.
    #[arg(long)]
    d: u32,
    /// Ordering bits; defaults to the full matrix size.
    #[arg(long)]
    m: Option<u32>,
    /// Scan order over the 2^m vectors.
    #[arg(long, value_enum, default_value_t = OrderArg::Index)]
    order: OrderArg,
    /// Cap on m (2^m vectors are enumerated).
    #[arg(long, default_value_t = DEFAULT_M_CAP)]
    max_m: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    /// Ordering index (the defining order).
    Index,
    /// Ascending integer value (the exercise variant).
    Value,
}

#[derive(Args)]
struct LexiAnncodeArgs {
    /// Basis file in the code file format (one vector per line).
    #[arg(long)]
    basis: String,
    /// Distance threshold.
    #[arg(long)]
    d: u32,
    /// Cap on basis size (2^dim span words are enumerated).
    #[arg(long, default_value_t = DEFAULT_M_CAP)]
    max_dim: u32,
}

#[derive(Subcommand)]
enum AnncodeCmd {
    /// Solve the game and print the code of losing positions.
    Gen(AnncodeGenArgs),
}

#[derive(Args)]
struct AnncodeGenArgs {
    /// Groundgraph file.
    #[arg(long)]
    graph: String,
    /// Keep sink vertices as position coordinates.
    #[arg(long)]
    no_project_sinks: bool,
    /// Also print a value-table summary.
    #[arg(long)]
    gamma: bool,
    /// Cap on coordinate count (2^c positions are enumerated).
    #[arg(long, default_value_t = DEFAULT_POSITION_CAP)]
    max_coords: u32,
}

#[derive(Args)]
struct SolveArgs {
    /// Groundgraph file.
    #[arg(long)]
    graph: String,
    /// Position to report, binary MSB-first (decimal with --decimal).
    #[arg(long)]
    position: Option<String>,
    /// Parse --position as decimal.
    #[arg(long)]
    decimal: bool,
    /// Include the value-table summary in the whole-graph report.
    #[arg(long)]
    gamma: bool,
    /// Keep sink vertices as position coordinates.
    #[arg(long)]
    no_project_sinks: bool,
    /// Cap on coordinate count (2^c positions are enumerated).
    #[arg(long, default_value_t = DEFAULT_POSITION_CAP)]
    max_coords: u32,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Code file: one codeword per line, MSB first.
    #[arg(long)]
    code: String,
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Two-layer graph on J = 2^(t-1) x-vertices and J y-vertices.
    GammaT {
        #[arg(long)]
        t: u32,
    },
    /// Single heap: take any positive number of tokens.
    NimHeap {
        #[arg(long)]
        size: u32,
    },
    /// k vertices, each with one move into a shared sink.
    Star {
        #[arg(long)]
        k: u32,
    },
    /// Fixed five-vertex graph with a two-cycle and two sink feeders.
    Example2,
}

#[derive(Subcommand)]
enum PaperCmd {
    /// Run every built-in reproduction check.
    Examples,
}

enum CliError {
    Check(String),
    Parse(String),
    Precondition(String),
    Scale(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Check(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Scale(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Check(m)
            | CliError::Parse(m)
            | CliError::Precondition(m)
            | CliError::Scale(m) => m,
        }
    }
}

fn ann_err(e: AnnError) -> CliError {
    CliError::Scale(e.to_string())
}

#[derive(Serialize)]
struct InputDigest {
    path: String,
    sha256: String,
}

fn read_input(path: &str) -> Result<(String, InputDigest), CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{path}: {e}")))?;
    let mut h = Sha256::new();
    h.update(text.as_bytes());
    let sha256 = h.finalize().iter().map(|b| format!("{b:02x}")).collect();
    Ok((
        text,
        InputDigest {
            path: path.to_string(),
            sha256,
        },
    ))
}

#[derive(Serialize)]
struct CodeReport {
    n: u32,
    size: usize,
    dim: usize,
    d: Option<u32>,
    linear: bool,
    basis: Vec<String>,
}

impl CodeReport {
    fn of(code: &Code) -> CodeReport {
        CodeReport {
            n: code.length(),
            size: code.size(),
            dim: code.span_dimension(),
            d: code.min_distance(),
            linear: code.is_linear(),
            basis: code.basis().iter().map(ToString::to_string).collect(),
        }
    }

    fn summary_line(&self) -> String {
        format!(
            "code: n = {}, size = {}, dim = {}, {}, d = {}",
            self.n,
            self.size,
            self.dim,
            if self.linear { "linear" } else { "not linear" },
            self.d.map_or_else(|| "-".into(), |d| d.to_string()),
        )
    }
}

#[derive(Serialize)]
struct GammaSummary {
    positions: usize,
    finite: usize,
    max_finite: Option<u64>,
    t: Option<u32>,
    kernel_dim: usize,
}

impl GammaSummary {
    /// Vertex indices must be the positions' integer encodings (true for
    /// every annihilation graph this binary builds).
    fn of(table: &GammaTable) -> GammaSummary {
        let kernel: Vec<u64> = (0..table.len())
            .filter(|&u| table.value(u).finite() == Some(0))
            .map(|u| u as u64)
            .collect();
        let max_finite = table.max_finite();
        let t = max_finite.and_then(|m| {
            (m + 1).is_power_of_two().then(|| (m + 1).trailing_zeros())
        });
        GammaSummary {
            positions: table.len(),
            finite: table.finite_count(),
            max_finite,
            t,
            kernel_dim: rank_words(&kernel),
        }
    }

    fn summary_line(&self) -> String {
        format!(
            "gamma: {} finite of {}, max finite = {}, t = {}, kernel dim = {}",
            self.finite,
            self.positions,
            self.max_finite
                .map_or_else(|| "-".into(), |v| v.to_string()),
            self.t.map_or_else(|| "-".into(), |v| v.to_string()),
            self.kernel_dim,
        )
    }
}

#[derive(Serialize)]
#[serde(rename_all = "lowercase")]
enum GammaJson {
    Finite(u64),
    Infinite(Vec<u64>),
}

impl GammaJson {
    fn of(v: &GammaValue) -> GammaJson {
        match v {
            GammaValue::Finite(k) => GammaJson::Finite(*k),
            GammaValue::Infinite(ks) => GammaJson::Infinite(ks.iter().copied().collect()),
        }
    }
}

fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::P => "P",
        Outcome::N => "N",
        Outcome::D => "D",
    }
}

fn json_line<T: Serialize>(out: &mut String, value: &T) {
    let line = serde_json::to_string(value).expect("report types serialize");
    out.push_str(&line);
    out.push('\n');
}

fn word_line(out: &mut String, w: BitVec) {
    let _ = writeln!(out, "  {w} = {}", w.bits());
}

/// Entry point for the `gamecodes` binary.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let started = Instant::now();
    let mut out = String::new();
    let result = dispatch(&cli, &mut out);
    print!("{out}");
    match result {
        Ok(()) => {
            if !cli.quiet {
                eprintln!("wall {} ms", started.elapsed().as_millis());
            }
            0
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<(), CliError> {
    match &cli.command {
        Cmd::Lexicode {
            cmd: LexicodeCmd::Gen(args),
        } => cmd_lexicode_gen(cli, args, out),
        Cmd::LexiAnncode(args) => cmd_lexi_anncode(cli, args, out),
        Cmd::Anncode {
            cmd: AnncodeCmd::Gen(args),
        } => cmd_anncode_gen(cli, args, out),
        Cmd::Solve(args) => cmd_solve(cli, args, out),
        Cmd::Analyze(args) => cmd_analyze(cli, args, out),
        Cmd::Family { which } => cmd_family(which, out),
        Cmd::Paper {
            cmd: PaperCmd::Examples,
        } => cmd_paper_examples(cli, out),
    }
}

#[derive(Serialize)]
struct SelectionReport {
    command: String,
    inputs: Vec<InputDigest>,
    ordering_id: String,
    d: u32,
    selected: Vec<String>,
    selected_decimals: Vec<u64>,
    code: CodeReport,
}

fn emit_selection(
    cli: &Cli,
    out: &mut String,
    command: String,
    inputs: Vec<InputDigest>,
    result: &GreedyResult,
) {
    let code = result.to_code();
    let report = SelectionReport {
        command,
        inputs,
        ordering_id: result.ordering_id().to_string(),
        d: result.d(),
        selected: result.selected().iter().map(ToString::to_string).collect(),
        selected_decimals: result.selected().iter().map(|w| w.bits()).collect(),
        code: CodeReport::of(&code),
    };
    if cli.json {
        json_line(out, &report);
        return;
    }
    let _ = writeln!(
        out,
        "ordering {}: kept {} words at d = {}",
        report.ordering_id,
        report.selected.len(),
        report.d
    );
    if !cli.quiet {
        for &w in result.selected() {
            word_line(out, w);
        }
    }
    out.push_str(&report.code.summary_line());
    out.push('\n');
}

fn cmd_lexicode_gen(cli: &Cli, args: &LexicodeGenArgs, out: &mut String) -> Result<(), CliError> {
    if args.d < 1 {
        return Err(CliError::Precondition("d must be at least 1".into()));
    }
    let (text, digest) = read_input(&args.matrix)?;
    let w = Gf2Matrix::parse(&text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", args.matrix)))?;
    let m = args.m.unwrap_or(w.n_cols() as u32);
    let ordering = make_ordering(w, m).map_err(|e| CliError::Precondition(e.to_string()))?;
    let cap = args.max_m.min(30);
    if m > cap {
        return Err(CliError::Scale(format!(
            "m = {m} exceeds the cap of {cap}; raise --max-m to proceed"
        )));
    }
    let result = match args.order {
        OrderArg::Index => greedy(&ordering, args.d),
        OrderArg::Value => greedy_value_ordered(&ordering.vectors(), args.d),
    };
    let command = format!(
        "lexicode gen --matrix {} --d {} --m {m} --order {}",
        args.matrix,
        args.d,
        match args.order {
            OrderArg::Index => "index",
            OrderArg::Value => "value",
        }
    );
    emit_selection(cli, out, command, vec![digest], &result);
    Ok(())
}

fn cmd_lexi_anncode(cli: &Cli, args: &LexiAnncodeArgs, out: &mut String) -> Result<(), CliError> {
    if args.d < 1 {
        return Err(CliError::Precondition("d must be at least 1".into()));
    }
    let (text, digest) = read_input(&args.basis)?;
    let basis = parse_vector_lines(&text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", args.basis)))?;
    let cap = args.max_dim.min(30);
    if basis.len() as u32 > cap {
        return Err(CliError::Scale(format!(
            "basis of {} vectors exceeds the cap of {cap}; raise --max-dim to proceed",
            basis.len()
        )));
    }
    let result =
        lexi_anncode(&basis, args.d).map_err(|e| CliError::Precondition(e.to_string()))?;
    let command = format!("lexi-anncode --basis {} --d {}", args.basis, args.d);
    emit_selection(cli, out, command, vec![digest], &result);
    Ok(())
}

#[derive(Serialize)]
struct AnncodeReport {
    command: String,
    inputs: Vec<InputDigest>,
    vertices: usize,
    coords: u32,
    projected: bool,
    positions: usize,
    code: CodeReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma: Option<GammaSummary>,
}

fn build_game(
    path: &str,
    text: &str,
    project: bool,
    max_coords: u32,
) -> Result<(AnnGraph, crate::gamegraph::GameGraph), CliError> {
    let ground =
        GroundGraph::parse(text).map_err(|e| CliError::Parse(format!("{path}: {e}")))?;
    let ann = AnnGraph::new(ground, project).map_err(ann_err)?;
    let g = ann.materialize(max_coords).map_err(ann_err)?;
    Ok((ann, g))
}

fn cmd_anncode_gen(cli: &Cli, args: &AnncodeGenArgs, out: &mut String) -> Result<(), CliError> {
    let (text, digest) = read_input(&args.graph)?;
    let (ann, g) = build_game(&args.graph, &text, !args.no_project_sinks, args.max_coords)?;
    let outcomes = classify_pnd(&g);
    let width = ann.width().max(1);
    let words: Vec<BitVec> = outcomes
        .iter()
        .enumerate()
        .filter(|(_, &o)| o == Outcome::P)
        .map(|(u, _)| BitVec::new(width, u as u64))
        .collect();
    let code = Code::new(width, words);
    let gamma = args.gamma.then(|| GammaSummary::of(&gamma_solve(&g)));

    let report = AnncodeReport {
        command: format!("anncode gen --graph {}", args.graph),
        inputs: vec![digest],
        vertices: ann.ground().n(),
        coords: ann.width(),
        projected: ann.project_sinks(),
        positions: g.n(),
        code: CodeReport::of(&code),
        gamma,
    };
    if cli.json {
        json_line(out, &report);
        return Ok(());
    }
    let _ = writeln!(
        out,
        "anngraph: {} positions over {} coordinates{}",
        report.positions,
        report.coords,
        if report.projected {
            " (sinks projected)"
        } else {
            ""
        }
    );
    let _ = writeln!(out, "P-set ({} words):", code.size());
    if !cli.quiet {
        for &w in code.words() {
            word_line(out, w);
        }
    }
    out.push_str(&report.code.summary_line());
    out.push('\n');
    if let Some(gs) = &report.gamma {
        out.push_str(&gs.summary_line());
        out.push('\n');
    }
    Ok(())
}

#[derive(Serialize)]
struct PositionReport {
    position: String,
    decimal: u64,
    outcome: &'static str,
    gamma: GammaJson,
    counter: Option<u64>,
}

#[derive(Serialize)]
struct SolveReport {
    command: String,
    inputs: Vec<InputDigest>,
    vertices: usize,
    coords: u32,
    positions: usize,
    p: usize,
    n: usize,
    d: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma: Option<GammaSummary>,
}

fn parse_position(args: &SolveArgs, width: u32, s: &str) -> Result<BitVec, CliError> {
    if args.decimal {
        let v: u64 = s
            .parse()
            .map_err(|e| CliError::Parse(format!("position {s}: {e}")))?;
        if width < 64 && v >= (1u64 << width) {
            return Err(CliError::Precondition(format!(
                "position {v} needs more than {width} coordinates"
            )));
        }
        Ok(BitVec::new(width, v))
    } else {
        let b = BitVec::parse_binary(s)
            .map_err(|e| CliError::Parse(format!("position {s}: {e}")))?;
        if b.width() != width {
            return Err(CliError::Precondition(format!(
                "position has {} bits, the game has {width} coordinates",
                b.width()
            )));
        }
        Ok(b)
    }
}

fn cmd_solve(cli: &Cli, args: &SolveArgs, out: &mut String) -> Result<(), CliError> {
    let (text, digest) = read_input(&args.graph)?;
    let (ann, g) = build_game(&args.graph, &text, !args.no_project_sinks, args.max_coords)?;
    let outcomes = classify_pnd(&g);
    let width = ann.width().max(1);

    if let Some(s) = &args.position {
        let pos = parse_position(args, width, s)?;
        let table = gamma_solve(&g);
        let u = pos.bits() as usize;
        let report = PositionReport {
            position: pos.to_string(),
            decimal: pos.bits(),
            outcome: outcome_name(outcomes[u]),
            gamma: GammaJson::of(table.value(u)),
            counter: table.counter(u),
        };
        if cli.json {
            json_line(out, &report);
        } else {
            let gamma_text = match table.value(u) {
                GammaValue::Finite(k) => format!("finite {k}"),
                GammaValue::Infinite(ks) => {
                    let list: Vec<String> = ks.iter().map(ToString::to_string).collect();
                    format!("infinite {{{}}}", list.join(", "))
                }
            };
            let counter_text = report
                .counter
                .map_or_else(|| "-".into(), |c| c.to_string());
            let _ = writeln!(
                out,
                "position {} = {}: outcome {}, gamma {}, counter {}",
                report.position, report.decimal, report.outcome, gamma_text, counter_text
            );
        }
        return Ok(());
    }

    let count = |o: Outcome| outcomes.iter().filter(|&&x| x == o).count();
    let report = SolveReport {
        command: format!("solve --graph {}", args.graph),
        inputs: vec![digest],
        vertices: ann.ground().n(),
        coords: ann.width(),
        positions: g.n(),
        p: count(Outcome::P),
        n: count(Outcome::N),
        d: count(Outcome::D),
        gamma: args.gamma.then(|| GammaSummary::of(&gamma_solve(&g))),
    };
    if cli.json {
        json_line(out, &report);
        return Ok(());
    }
    let _ = writeln!(
        out,
        "anngraph: {} positions over {} coordinates",
        report.positions, report.coords
    );
    let _ = writeln!(
        out,
        "outcomes: P = {}, N = {}, D = {}",
        report.p, report.n, report.d
    );
    if let Some(gs) = &report.gamma {
        out.push_str(&gs.summary_line());
        out.push('\n');
    }
    Ok(())
}

fn cmd_analyze(cli: &Cli, args: &AnalyzeArgs, out: &mut String) -> Result<(), CliError> {
    let (text, _digest) = read_input(&args.code)?;
    let code =
        Code::parse(&text).map_err(|e| CliError::Parse(format!("{}: {e}", args.code)))?;
    let report = CodeReport::of(&code);
    if cli.json {
        json_line(out, &report);
        return Ok(());
    }
    out.push_str(&report.summary_line());
    out.push('\n');
    if !cli.quiet {
        out.push_str("basis:\n");
        for &w in code.basis() {
            word_line(out, w);
        }
    }
    Ok(())
}

fn cmd_family(which: &FamilyCmd, out: &mut String) -> Result<(), CliError> {
    let graph = match which {
        FamilyCmd::GammaT { t } => {
            if !(1..=10).contains(t) {
                return Err(CliError::Precondition(format!(
                    "t = {t} out of supported range 1..=10"
                )));
            }
            gamma_t(*t)
        }
        FamilyCmd::NimHeap { size } => {
            if !(1..=4096).contains(size) {
                return Err(CliError::Precondition(format!(
                    "size = {size} out of supported range 1..=4096"
                )));
            }
            nim_heap(*size as usize)
        }
        FamilyCmd::Star { k } => {
            if !(1..=4096).contains(k) {
                return Err(CliError::Precondition(format!(
                    "k = {k} out of supported range 1..=4096"
                )));
            }
            star_into_leaf(*k as usize)
        }
        FamilyCmd::Example2 => example2_graph(),
    };
    out.push_str(&graph.serialize());
    Ok(())
}

#[derive(Serialize)]
struct CheckJson {
    name: &'static str,
    pass: bool,
    detail: String,
}

#[derive(Serialize)]
struct PaperReport {
    command: String,
    checks: Vec<CheckJson>,
}

fn cmd_paper_examples(cli: &Cli, out: &mut String) -> Result<(), CliError> {
    let results = selftest::run_all();
    let first_fail = results.iter().find(|r| !r.pass);
    let failure = first_fail.map(|r| format!("check {} failed: {}", r.name, r.detail));

    if cli.json {
        let report = PaperReport {
            command: "paper examples".into(),
            checks: results
                .iter()
                .map(|r| CheckJson {
                    name: r.name,
                    pass: r.pass,
                    detail: r.detail.clone(),
                })
                .collect(),
        };
        json_line(out, &report);
    } else {
        if !cli.quiet {
            for r in &results {
                let _ = writeln!(
                    out,
                    "{:<18} {}  {}",
                    r.name,
                    if r.pass { "ok  " } else { "FAIL" },
                    r.detail
                );
            }
        }
        let passed = results.iter().filter(|r| r.pass).count();
        let _ = writeln!(out, "{} checks, {} passed", results.len(), passed);
    }
    match failure {
        None => Ok(()),
        Some(msg) => Err(CliError::Check(msg)),
    }
}
