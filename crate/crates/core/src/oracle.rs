//! Brute-force verifiers for the solver.
//!
//! [`truncated_value`] evaluates the horizon-limited game, where the robber
//! wins by surviving `horizon_plies` plies, by depth-indexed minimax over
//! its own hash-indexed copy of the reachable positions.
//! [`history_tree_value`] searches the raw history tree with no merging of
//! transpositions at all, so it ranges over every history-dependent
//! strategy. Neither one shares the solver's attractor or its position ids.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::arena::{position_count, Arena, PosId, Position, Turn};
use crate::error::{Error, Result};
use crate::play::{replay_transcript, run_play, Play, RandomBehavior, Stationary};
use crate::solver::{extract_strategies, plies_to_rounds, CaptureTime, Rank, Strategy, ValueTable};

pub const DEFAULT_HISTORY_BUDGET: u64 = 10_000_000;

/// Value of the truncated game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TruncatedValue {
    /// Capture in this round under optimal play.
    Captured(u64),
    Survives,
}

impl TruncatedValue {
    fn from_plies(plies: Option<u64>) -> Self {
        plies.map_or(TruncatedValue::Survives, |m| TruncatedValue::Captured(plies_to_rounds(m)))
    }

    /// `Survives` corresponds to an infinite capture time.
    pub fn agrees_with(self, time: CaptureTime) -> bool {
        match (self, time) {
            (TruncatedValue::Captured(a), CaptureTime::Rounds(b)) => a == b,
            (TruncatedValue::Survives, CaptureTime::Infinite) => true,
            _ => false,
        }
    }
}

impl fmt::Display for TruncatedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruncatedValue::Captured(t) => write!(f, "{t}"),
            TruncatedValue::Survives => f.write_str("survives"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationParams {
    horizon_plies: u64,
}

impl TruncationParams {
    pub fn new(horizon_plies: u64) -> Result<Self> {
        if horizon_plies < 2 {
            return Err(Error::NotApplicable(format!(
                "horizon of {horizon_plies} plies cannot fit both placements"
            )));
        }
        Ok(Self { horizon_plies })
    }

    /// `2·M·n + 2` plies for `M` cop multisets: one ply per placed position
    /// plus the two placements. For one cop this is `2n² + 2`.
    pub fn default_for(n: usize, k: usize) -> Result<Self> {
        let count = position_count(n, k)? as u64;
        let multisets = (count - 1) / (2 * n as u64 + 1);
        Self::new(2 * multisets * n as u64 + 2)
    }

    pub fn horizon_plies(&self) -> u64 {
        self.horizon_plies
    }
}

struct Node {
    turn: Turn,
    capture: bool,
    succ: Vec<usize>,
}

/// Exact minimax value of the game cut off after `horizon_plies` plies.
pub fn truncated_value(arena: &Arena, trunc: TruncationParams) -> Result<TruncatedValue> {
    Ok(TruncatedValue::from_plies(truncated_plies(arena, trunc.horizon_plies)?))
}

fn truncated_plies(arena: &Arena, horizon: u64) -> Result<Option<u64>> {
    let mut index: HashMap<Position, usize> = HashMap::new();
    let mut nodes: Vec<Node> = Vec::new();
    let mut queue = VecDeque::new();
    let start = arena.initial_position();
    index.insert(start.clone(), 0);
    queue.push_back(start);
    while let Some(pos) = queue.pop_front() {
        let capture = pos.is_capture();
        let mut succ = Vec::new();
        if !capture {
            for s in arena.successors(&pos)? {
                let next = index.len();
                let id = *index.entry(s.clone()).or_insert_with(|| {
                    queue.push_back(s);
                    next
                });
                succ.push(id);
            }
        }
        nodes.push(Node {
            turn: pos.turn,
            capture,
            succ,
        });
    }

    // value[d][i]: plies to capture from node i with d plies left, None if
    // the robber lasts. Only two layers are kept; once a layer repeats, all
    // deeper layers are equal to it.
    let mut prev: Vec<Option<u64>> = nodes.iter().map(|n| n.capture.then_some(0)).collect();
    for _ in 0..horizon {
        let cur: Vec<Option<u64>> = nodes
            .iter()
            .map(|node| {
                if node.capture {
                    return Some(0);
                }
                let children = node.succ.iter().map(|&s| prev[s]);
                let best = match node.turn {
                    Turn::Cop => children.flatten().min(),
                    Turn::Robber => children.collect::<Option<Vec<_>>>().and_then(|v| v.into_iter().max()),
                };
                best.map(|m| m + 1)
            })
            .collect();
        if cur == prev {
            break;
        }
        prev = cur;
    }
    Ok(prev[0])
}

/// Minimax over the full history tree, without memoization. Fails once
/// more than `budget` tree nodes have been visited.
pub fn history_tree_value(arena: &Arena, trunc: TruncationParams, budget: u64) -> Result<TruncatedValue> {
    let mut history = vec![arena.initial_position()];
    let mut visited = 0;
    let plies = history_search(arena, &mut history, trunc.horizon_plies, &mut visited, budget)?;
    Ok(TruncatedValue::from_plies(plies))
}

fn history_search(
    arena: &Arena,
    history: &mut Vec<Position>,
    depth: u64,
    visited: &mut u64,
    budget: u64,
) -> Result<Option<u64>> {
    *visited += 1;
    if *visited > budget {
        return Err(Error::BudgetExceeded { budget });
    }
    let current = history.last().unwrap();
    if current.is_capture() {
        return Ok(Some(0));
    }
    if depth == 0 {
        return Ok(None);
    }
    let turn = current.turn;
    // Survival ranks above every capture for both players' comparisons.
    let key = |v: Option<u64>| v.unwrap_or(u64::MAX);
    let mut best: Option<Option<u64>> = None;
    for next in arena.successors(current)? {
        history.push(next);
        let v = history_search(arena, history, depth - 1, visited, budget)?;
        history.pop();
        best = Some(match best {
            None => v,
            Some(b) => match turn {
                Turn::Cop if key(v) < key(b) => v,
                Turn::Robber if key(v) > key(b) => v,
                _ => b,
            },
        });
    }
    Ok(best.flatten().map(|m| m + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Claim {
    #[serde(rename = "bound")]
    Bound,
    #[serde(rename = "norepeat")]
    NoRepetition,
    #[serde(rename = "memoryless")]
    MemorylessSufficiency,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Claim::Bound => "bound",
            Claim::NoRepetition => "norepeat",
            Claim::MemorylessSufficiency => "memoryless",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of one check on one instance. Failing reports carry a play that
/// [`replay_transcript`] accepts.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub claim: Claim,
    pub graph: String,
    pub k: usize,
    pub status: Status,
    pub pass: bool,
    pub detail: String,
    pub witness: Option<Play>,
    pub seeds: Vec<u64>,
}

impl VerificationReport {
    fn new(claim: Claim, graph: &str, k: usize, status: Status, detail: String) -> Self {
        Self {
            claim,
            graph: graph.to_owned(),
            k,
            status,
            pass: status == Status::Pass,
            detail,
            witness: None,
            seeds: Vec::new(),
        }
    }

    pub fn skipped(claim: Claim, graph: &str, k: usize, reason: impl Into<String>) -> Self {
        Self::new(claim, graph, k, Status::Skipped, reason.into())
    }
}

/// Optimal-vs-optimal play, used as the witness for value disagreements.
fn optimal_play(table: &ValueTable) -> Result<Play> {
    let (cop, robber) = extract_strategies(table);
    let rounds = match table.capture_time() {
        CaptureTime::Rounds(t) => t + 1,
        CaptureTime::Infinite => crate::play::default_max_rounds(table.arena().n()),
    };
    run_play(table.arena(), &cop, &robber, rounds)
}

/// Compares the solver's memoryless value with the truncated game's
/// minimax value at the default horizon (or `horizon` when given).
pub fn check_memoryless_sufficiency(
    name: &str,
    table: &ValueTable,
    horizon: Option<u64>,
) -> Result<VerificationReport> {
    let arena = table.arena();
    let trunc = match horizon {
        Some(h) => TruncationParams::new(h)?,
        None => TruncationParams::default_for(arena.n(), arena.k())?,
    };
    let oracle = truncated_value(arena, trunc)?;
    let solver = table.capture_time();
    let ok = oracle.agrees_with(solver);
    let mut report = VerificationReport::new(
        Claim::MemorylessSufficiency,
        name,
        arena.k(),
        if ok { Status::Pass } else { Status::Fail },
        format!(
            "solver capture time {solver}, truncated game value {oracle} at horizon {} plies",
            trunc.horizon_plies()
        ),
    );
    if !ok {
        report.witness = Some(optimal_play(table)?);
    }
    Ok(report)
}

/// Capture time is infinite or at most `n²` rounds.
pub fn check_bound(name: &str, table: &ValueTable) -> Result<VerificationReport> {
    let n = table.arena().n() as u64;
    let time = table.capture_time();
    let ok = time.rounds().is_none_or(|t| t <= n * n);
    let mut report = VerificationReport::new(
        Claim::Bound,
        name,
        table.arena().k(),
        if ok { Status::Pass } else { Status::Fail },
        format!("capture time {time}, bound n² = {}", n * n),
    );
    if !ok {
        report.witness = Some(optimal_play(table)?);
    }
    Ok(report)
}

/// Robbers replayed against the optimal cop strategy.
#[derive(Debug, Clone)]
pub struct RobberBattery {
    pub random_robbers: usize,
    /// Random robber `i` uses seed `seed + i`.
    pub seed: u64,
    /// Node budget for the exhaustive robber tree; skipped when exceeded.
    pub tree_budget: u64,
}

impl Default for RobberBattery {
    fn default() -> Self {
        Self {
            random_robbers: 1000,
            seed: 0,
            tree_budget: 1_000_000,
        }
    }
}

/// First pair `(i, j)`, `i < j`, with `moves[i] == moves[j]`.
pub fn find_repetition(moves: &[Position]) -> Option<(usize, usize)> {
    let mut seen = HashMap::new();
    for (j, pos) in moves.iter().enumerate() {
        if let Some(&i) = seen.get(pos) {
            return Some((i, j));
        }
        seen.insert(pos, j);
    }
    None
}

/// Checks every ply of a play in which the cop follows the solver's
/// strategy: ranks fall by exactly one on cop moves and on optimal robber
/// moves, and by at least one on any other robber move.
pub fn rank_descent_violation(table: &ValueTable, play: &Play, robber_optimal: bool) -> Result<Option<usize>> {
    for (i, pair) in play.moves.windows(2).enumerate() {
        let before = table.rank(&pair[0])?;
        let after = table.rank(&pair[1])?;
        let Rank::Finite(r) = before else {
            return Ok(Some(i));
        };
        if r == 0 {
            return Ok(Some(i));
        }
        let ok = match pair[0].turn {
            Turn::Cop => after == Rank::Finite(r - 1),
            Turn::Robber if robber_optimal => after == Rank::Finite(r - 1),
            Turn::Robber => after <= Rank::Finite(r - 1),
        };
        if !ok {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Replays the optimal cop strategy against the battery and reports the
/// first play that revisits a position or breaks rank descent.
pub fn check_no_repetition(name: &str, table: &ValueTable, battery: &RobberBattery) -> Result<VerificationReport> {
    let arena = table.arena();
    if !table.is_cop_win() {
        return Err(Error::NotApplicable(format!(
            "{name} with k={} is not cop-win",
            arena.k()
        )));
    }
    let (cop, robber) = extract_strategies(table);
    let initial = table.initial_rank().plies().unwrap() as u64;
    let max_rounds = plies_to_rounds(initial) + 1;
    let seeds = vec![battery.seed];

    let fail = |detail: String, witness: Play| {
        let mut report = VerificationReport::new(Claim::NoRepetition, name, arena.k(), Status::Fail, detail);
        report.witness = Some(witness);
        report.seeds = seeds.clone();
        report
    };
    let judge = |play: Play, label: &str, optimal: bool| -> Result<Option<VerificationReport>> {
        if let Some((i, j)) = find_repetition(&play.moves) {
            return Ok(Some(fail(format!("{label}: position at ply {i} repeats at ply {j}"), play)));
        }
        if !play.is_captured() {
            return Ok(Some(fail(format!("{label}: no capture within {max_rounds} rounds"), play)));
        }
        if let Some(i) = rank_descent_violation(table, &play, optimal)? {
            return Ok(Some(fail(format!("{label}: rank descent broken at ply {i}"), play)));
        }
        Ok(None)
    };

    let play = run_play(arena, &cop, &robber, max_rounds)?;
    let optimal_plies = play.plies();
    if let Some(report) = judge(play, "optimal robber", true)? {
        return Ok(report);
    }
    for i in 0..battery.random_robbers {
        let seed = battery.seed.wrapping_add(i as u64);
        let play = run_play(arena, &cop, RandomBehavior::new(seed), max_rounds)?;
        if let Some(report) = judge(play, &format!("random robber seed {seed}"), false)? {
            return Ok(report);
        }
    }

    let tree = match robber_tree(table, &cop, battery.tree_budget) {
        Ok(None) => "exhaustive robber tree clean".to_owned(),
        Ok(Some((path, why))) => {
            let witness = replay_transcript(arena, &path)?;
            return Ok(fail(format!("exhaustive robber tree: {why}"), witness));
        }
        Err(Error::BudgetExceeded { budget }) => format!("exhaustive robber tree skipped (budget {budget})"),
        Err(e) => return Err(e),
    };

    let mut report = VerificationReport::new(
        Claim::NoRepetition,
        name,
        arena.k(),
        Status::Pass,
        format!(
            "optimal robber captured at ply {optimal_plies}; {} random robbers from seed {}; {tree}",
            battery.random_robbers, battery.seed
        ),
    );
    report.seeds = seeds;
    Ok(report)
}

/// Every robber move sequence against the cop strategy; returns the first
/// path that repeats a position or fails to lose a rank per ply.
fn robber_tree(table: &ValueTable, cop: &Strategy, budget: u64) -> Result<Option<(Vec<Position>, String)>> {
    let arena = table.arena();
    let mut path = vec![arena.initial_id()];
    let mut visited = 0;
    let found = robber_tree_step(table, cop, &mut path, &mut visited, budget)?;
    Ok(found.map(|(path, why)| (path.into_iter().map(|id| arena.position(id)).collect(), why)))
}

fn robber_tree_step(
    table: &ValueTable,
    cop: &Strategy,
    path: &mut Vec<PosId>,
    visited: &mut u64,
    budget: u64,
) -> Result<Option<(Vec<PosId>, String)>> {
    *visited += 1;
    if *visited > budget {
        return Err(Error::BudgetExceeded { budget });
    }
    let arena = table.arena();
    let id = *path.last().unwrap();
    if path[..path.len() - 1].contains(&id) {
        return Ok(Some((path.clone(), "position repeated".into())));
    }
    if arena.is_capture_id(id) {
        return Ok(None);
    }
    let Rank::Finite(r) = table.rank_of(id) else {
        return Ok(Some((path.clone(), "left the cop-winning region".into())));
    };
    let moves = match arena.turn_of(id) {
        Turn::Cop => vec![cop.next_id(id).expect("cop strategy covers cop positions")],
        Turn::Robber => {
            let mut buf = Vec::new();
            arena.successor_ids(id, &mut buf);
            buf
        }
    };
    for next in moves {
        path.push(next);
        let ok = match table.rank_of(next) {
            Rank::Finite(s) if arena.turn_of(id) == Turn::Cop => s + 1 == r,
            Rank::Finite(s) => s < r,
            Rank::Infinite => false,
        };
        if !ok {
            return Ok(Some((path.clone(), "rank did not descend".into())));
        }
        if let Some(found) = robber_tree_step(table, cop, path, visited, budget)? {
            return Ok(Some(found));
        }
        path.pop();
    }
    Ok(None)
}

/// Expected-fail fixture for the repetition detector: a cop that never
/// moves, against the solver's robber. On a robber-win board the play must
/// revisit a position, so the report fails and carries the play.
pub fn stationary_cop_fixture(name: &str, table: &ValueTable, max_rounds: u64) -> Result<VerificationReport> {
    let (_, robber) = extract_strategies(table);
    let play = run_play(table.arena(), Stationary, &robber, max_rounds)?;
    let repeat = find_repetition(&play.moves);
    let (status, detail) = match repeat {
        Some((i, j)) => (
            Status::Fail,
            format!("expected-fail fixture (stationary cop): ply {i} repeats at ply {j}"),
        ),
        None => (Status::Pass, "expected-fail fixture (stationary cop) saw no repetition".to_owned()),
    };
    let mut report = VerificationReport::new(Claim::NoRepetition, name, table.arena().k(), status, detail);
    report.witness = Some(play);
    Ok(report)
}

/// Slowest capture, in plies, that any robber can force against `cop`,
/// over every robber move sequence; `None` if some sequence survives
/// `ply_limit` plies. Because `cop` is memoryless the answer depends only
/// on (position, plies left), which is what gets memoized.
pub fn worst_case_against_cop(arena: &Arena, cop: &Strategy, ply_limit: u64) -> Option<u64> {
    one_sided_search(arena, Turn::Cop, &|id| cop.next_id(id), ply_limit)
}

/// Fastest capture, in plies, that any cop can achieve against `robber`
/// within `ply_limit` plies, over every cop move sequence; `None` if none.
pub fn best_case_against_robber(arena: &Arena, robber: &Strategy, ply_limit: u64) -> Option<u64> {
    one_sided_search(arena, Turn::Robber, &|id| robber.next_id(id), ply_limit)
}

fn one_sided_search(arena: &Arena, fixed: Turn, choice: &dyn Fn(PosId) -> Option<PosId>, limit: u64) -> Option<u64> {
    fn go(
        arena: &Arena,
        fixed: Turn,
        choice: &dyn Fn(PosId) -> Option<PosId>,
        id: PosId,
        left: u64,
        memo: &mut HashMap<(PosId, u64), Option<u64>>,
    ) -> Option<u64> {
        if arena.is_capture_id(id) {
            return Some(0);
        }
        if left == 0 {
            return None;
        }
        if let Some(&v) = memo.get(&(id, left)) {
            return v;
        }
        let turn = arena.turn_of(id);
        let v = if turn == fixed {
            let next = choice(id).expect("strategy covers its positions");
            go(arena, fixed, choice, next, left - 1, memo).map(|m| m + 1)
        } else {
            let mut buf = Vec::new();
            arena.successor_ids(id, &mut buf);
            let vals = buf.into_iter().map(|s| go(arena, fixed, choice, s, left - 1, memo));
            let best = if fixed == Turn::Cop {
                // Free robber: the longest line, survival beating any capture.
                vals.max_by_key(|v| v.unwrap_or(u64::MAX)).flatten()
            } else {
                // Free cop: the quickest capture.
                vals.flatten().min()
            };
            best.map(|m| m + 1)
        };
        memo.insert((id, left), v);
        v
    }
    let mut memo = HashMap::new();
    go(arena, fixed, choice, arena.initial_id(), limit, &mut memo)
}
