//! The `cops-robbers` command-line tool.
//!
//! JSON results go to `--out` or standard output; human-readable summaries
//! go to standard error. Exit status: 0 success, 1 a verification failed,
//! 2 bad input, 3 resource limit, 4 illegal move.

use std::fs::File;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::arena::{Arena, ArenaParams, DEFAULT_MAX_POSITIONS};
use crate::corpus;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::oracle::{
    check_bound, check_memoryless_sufficiency, check_no_repetition, Claim, RobberBattery, Status,
    VerificationReport,
};
use crate::play::{default_max_rounds, run_play, Behavior, Interactive, RandomBehavior, Scripted, Stationary};
use crate::solver::{cop_number, extract_strategies, Strategy, StrategyFile, ValueTable};

#[derive(Debug, Parser)]
#[command(name = "cops-robbers", version, about = "Solve and verify Cops and Robbers games on graphs")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one instance and print its result record.
    Solve(SolveArgs),
    /// Find the smallest number of cops that wins.
    Copnumber(CopNumberArgs),
    /// Run verification checks, one JSON line per (check, instance).
    Verify(VerifyArgs),
    /// Play a match and print its transcript.
    Play(PlayArgs),
    /// Write the move digraph and, optionally, the optimal strategies.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Input {
    /// Edge-list file.
    #[arg(long, conflicts_with = "corpus", required_unless_present = "corpus")]
    pub graph: Option<PathBuf>,
    /// Bundled corpus (`small4`) or corpus graph (`named/petersen`).
    #[arg(long)]
    pub corpus: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Output file (default: standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Largest arena to build.
    #[arg(long, default_value_t = DEFAULT_MAX_POSITIONS)]
    pub max_positions: usize,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long, default_value_t = 1)]
    pub cops: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct CopNumberArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long, default_value_t = 3)]
    pub max_cops: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Bound,
    Norepeat,
    Memoryless,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long, default_value_t = 1)]
    pub cops: usize,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    pub checks: Vec<CheckKind>,
    /// Truncation horizon in plies for the memoryless check.
    #[arg(long)]
    pub horizon: Option<u64>,
    #[arg(long, default_value_t = 100)]
    pub random_robbers: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Node budget for the exhaustive robber tree.
    #[arg(long, default_value_t = 1_000_000)]
    pub tree_budget: u64,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct PlayArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long, default_value_t = 1)]
    pub cops: usize,
    /// optimal | random:SEED | stationary | interactive | scripted:FILE
    #[arg(long, default_value = "optimal")]
    pub cop: String,
    /// optimal | random:SEED | stationary | interactive | scripted:FILE
    #[arg(long, default_value = "optimal")]
    pub robber: String,
    /// Rounds after placement before the play is cut off (default n² + 1).
    #[arg(long)]
    pub max_rounds: Option<u64>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long, default_value_t = 1)]
    pub cops: usize,
    /// Directory for cop_strategy.json and robber_strategy.json.
    #[arg(long)]
    pub emit_strategies: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let config = RunConfig::parse();
    let stdin = io::stdin();
    run(config, &mut stdin.lock(), &mut io::stdout().lock(), &mut io::stderr().lock())
}

pub fn run(config: RunConfig, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match config.command {
        Command::Solve(args) => cmd_solve(&args, stdout, stderr),
        Command::Copnumber(args) => cmd_copnumber(&args, stdout, stderr),
        Command::Verify(args) => cmd_verify(&args, stdout, stderr),
        Command::Play(args) => cmd_play(&args, stdin, stdout, stderr),
        Command::Export(args) => cmd_export(&args, stdout, stderr),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn load_single(input: &Input) -> Result<(String, Graph)> {
    match (&input.graph, &input.corpus) {
        (Some(path), _) => Ok((path.display().to_string(), Graph::from_file(path)?)),
        (None, Some(sel)) => Ok((sel.clone(), corpus::graph(sel)?)),
        (None, None) => Err(Error::Behavior("one of --graph or --corpus is required".into())),
    }
}

fn load_many(input: &Input) -> Result<Vec<(String, Graph)>> {
    match (&input.graph, &input.corpus) {
        (None, Some(sel)) => corpus::load(sel),
        _ => Ok(vec![load_single(input)?]),
    }
}

fn with_output(common: &Common, stdout: &mut dyn Write, f: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<()> {
    match &common.out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            f(&mut file)?;
            file.flush()?;
            Ok(())
        }
        None => f(stdout),
    }
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn solve_table(graph: Graph, k: usize, max_positions: usize) -> Result<ValueTable> {
    let arena = Arena::new(&ArenaParams::new(graph, k).with_max_positions(max_positions))?;
    Ok(ValueTable::solve(Arc::new(arena)))
}

pub fn cmd_solve(args: &SolveArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let (name, graph) = load_single(&args.input)?;
    let table = solve_table(graph, args.cops, args.common.max_positions)?;
    let summary = table.summary();
    writeln!(
        stderr,
        "{name}: k={} {} capture time {} ({} positions)",
        summary.k,
        if summary.cop_win { "cop-win" } else { "robber-win" },
        summary.capture_time,
        summary.positions
    )?;
    with_output(&args.common, stdout, |out| write_json(out, &summary))?;
    Ok(0)
}

pub fn cmd_copnumber(args: &CopNumberArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let (name, graph) = load_single(&args.input)?;
    let report = cop_number(Arc::new(graph), args.max_cops, args.common.max_positions)?;
    match report.cop_number {
        Some(c) => writeln!(stderr, "{name}: cop number {c}")?,
        None => writeln!(stderr, "{name}: cop number exceeds {}", args.max_cops)?,
    }
    with_output(&args.common, stdout, |out| write_json(out, &report))?;
    Ok(0)
}

fn verify_instance(args: &VerifyArgs, name: &str, graph: Graph) -> Vec<VerificationReport> {
    let k = args.cops;
    let wanted = |c: CheckKind| args.checks.contains(&c) || args.checks.contains(&CheckKind::All);
    let claims: Vec<Claim> = [
        (CheckKind::Bound, Claim::Bound),
        (CheckKind::Norepeat, Claim::NoRepetition),
        (CheckKind::Memoryless, Claim::MemorylessSufficiency),
    ]
    .into_iter()
    .filter(|(kind, _)| wanted(*kind))
    .map(|(_, claim)| claim)
    .collect();

    let table = match solve_table(graph, k, args.common.max_positions) {
        Ok(t) => t,
        Err(e) => {
            return claims
                .into_iter()
                .map(|c| VerificationReport::skipped(c, name, k, e.to_string()))
                .collect()
        }
    };
    let battery = RobberBattery {
        random_robbers: args.random_robbers,
        seed: args.seed,
        tree_budget: args.tree_budget,
    };
    claims
        .into_iter()
        .map(|claim| {
            let result = match claim {
                Claim::Bound => check_bound(name, &table),
                Claim::NoRepetition => check_no_repetition(name, &table, &battery),
                Claim::MemorylessSufficiency => check_memoryless_sufficiency(name, &table, args.horizon),
            };
            result.unwrap_or_else(|e| VerificationReport::skipped(claim, name, k, e.to_string()))
        })
        .collect()
}

pub fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let instances = load_many(&args.input)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()
        .map_err(|e| Error::Behavior(e.to_string()))?;
    let reports: Vec<VerificationReport> = pool.install(|| {
        instances
            .into_par_iter()
            .map(|(name, graph)| verify_instance(args, &name, graph))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    });

    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let (pass, fail, skipped) = (count(Status::Pass), count(Status::Fail), count(Status::Skipped));
    for r in reports.iter().filter(|r| r.status != Status::Pass) {
        writeln!(stderr, "{:?} {} {} k={}: {}", r.status, r.claim, r.graph, r.k, r.detail)?;
    }
    writeln!(stderr, "verify: {pass} passed, {fail} failed, {skipped} skipped")?;
    with_output(&args.common, stdout, |out| {
        for r in &reports {
            write_json(out, r)?;
        }
        Ok(())
    })?;
    Ok(if fail == 0 { 0 } else { 1 })
}

enum Side {
    Optimal,
    Random(u64),
    Stationary,
    Interactive,
    Scripted(PathBuf),
}

fn parse_side(spec: &str) -> Result<Side> {
    let bad = || Error::Behavior(format!("unknown side {spec:?}"));
    Ok(match spec.split_once(':') {
        None => match spec {
            "optimal" => Side::Optimal,
            "stationary" => Side::Stationary,
            "interactive" => Side::Interactive,
            "random" => Side::Random(0),
            _ => return Err(bad()),
        },
        Some(("random", seed)) => Side::Random(seed.parse().map_err(|_| bad())?),
        Some(("scripted", path)) => Side::Scripted(PathBuf::from(path)),
        Some(_) => return Err(bad()),
    })
}

/// A scripted side file is either a strategy file or a JSON array of
/// destinations (`[[0, 2], [1, 2]]` for cops, `[3, 2]` for a robber).
fn load_script(path: &Path, arena: &Arc<Arena>) -> Result<Box<dyn Behavior>> {
    let text = std::fs::read_to_string(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    if value.is_object() {
        let file: StrategyFile = serde_json::from_value(value)?;
        return Ok(Box::new(Strategy::from_file(arena.clone(), &file)?));
    }
    let steps: Vec<serde_json::Value> = serde_json::from_value(value)?;
    let steps = steps
        .into_iter()
        .map(|step| match step {
            serde_json::Value::Array(_) => serde_json::from_value::<Vec<Vertex>>(step),
            other => serde_json::from_value::<Vertex>(other).map(|v| vec![v]),
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(Box::new(Scripted::new(steps)))
}

fn make_side<'a, R: BufRead + 'a, W: Write + 'a>(
    side: &Side,
    optimal: &Strategy,
    arena: &Arc<Arena>,
    interactive: &mut Option<Interactive<R, W>>,
) -> Result<Box<dyn Behavior + 'a>> {
    Ok(match side {
        Side::Optimal => Box::new(optimal.clone()),
        Side::Random(seed) => Box::new(RandomBehavior::new(*seed)),
        Side::Stationary => Box::new(Stationary),
        Side::Scripted(path) => load_script(path, arena)?,
        Side::Interactive => Box::new(
            interactive
                .take()
                .ok_or_else(|| Error::Behavior("only one side can be interactive".into()))?,
        ),
    })
}

pub fn cmd_play(
    args: &PlayArgs,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32> {
    let (name, graph) = load_single(&args.input)?;
    let cop_side = parse_side(&args.cop)?;
    let robber_side = parse_side(&args.robber)?;
    let max_rounds = args.max_rounds.unwrap_or_else(|| default_max_rounds(graph.n()));
    let table = solve_table(graph, args.cops, args.common.max_positions)?;
    let arena = table.shared_arena();
    let (cop_strategy, robber_strategy) = extract_strategies(&table);

    let play = {
        let mut interactive = Some(Interactive::new(stdin, &mut *stdout));
        let cop = make_side(&cop_side, &cop_strategy, &arena, &mut interactive)?;
        let robber = make_side(&robber_side, &robber_strategy, &arena, &mut interactive)?;
        run_play(&arena, cop, robber, max_rounds)?
    };
    finish_play(args, &name, play, stdout, stderr)
}

fn finish_play(
    args: &PlayArgs,
    name: &str,
    play: crate::play::Play,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32> {
    writeln!(stderr, "{name}: {:?} after {} plies", play.outcome, play.plies())?;
    with_output(&args.common, stdout, |out| write_json(out, &play))?;
    Ok(0)
}

pub fn cmd_export(args: &ExportArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let (name, graph) = load_single(&args.input)?;
    let table = solve_table(graph, args.cops, args.common.max_positions)?;
    let arena = table.arena();
    let mut edges = 0;
    with_output(&args.common, stdout, |out| {
        edges = arena.export_move_digraph(out)?;
        Ok(())
    })?;
    writeln!(stderr, "{name}: {} nodes, {edges} edges", arena.len())?;
    if let Some(dir) = &args.emit_strategies {
        std::fs::create_dir_all(dir)?;
        let (cop, robber) = extract_strategies(&table);
        for (file, strategy) in [("cop_strategy.json", cop), ("robber_strategy.json", robber)] {
            let mut w = BufWriter::new(File::create(dir.join(file))?);
            write_json(&mut w, &strategy.to_file())?;
            w.flush()?;
        }
    }
    Ok(0)
}
