//! Strategy-vs-strategy matches.
//!
//! A [`Behavior`] sees the whole history, so history-dependent strategies
//! can be expressed as well as the memoryless ones produced by the solver.
//! Capture is checked after every half-move.

use std::io::{BufRead, Write};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arena::{Arena, Position, Turn};
use crate::error::{Error, Result};
use crate::graph::Vertex;
use crate::solver::{plies_to_rounds, Strategy};

/// Chooses the next position for the side to move.
///
/// `history` starts at the initial position and ends at the current one;
/// `legal` holds the successors of the current position in lexicographic
/// order and is never empty.
pub trait Behavior {
    fn choose(&mut self, history: &[Position], legal: &[Position]) -> Result<Position>;
}

impl<B: Behavior + ?Sized> Behavior for &mut B {
    fn choose(&mut self, history: &[Position], legal: &[Position]) -> Result<Position> {
        (**self).choose(history, legal)
    }
}

impl<B: Behavior + ?Sized> Behavior for Box<B> {
    fn choose(&mut self, history: &[Position], legal: &[Position]) -> Result<Position> {
        (**self).choose(history, legal)
    }
}

impl Behavior for &Strategy {
    fn choose(&mut self, history: &[Position], _legal: &[Position]) -> Result<Position> {
        let current = history.last().expect("history is never empty");
        self.next(current)?
            .ok_or_else(|| Error::Behavior(format!("{} strategy has no entry at {current}", self.owner())))
    }
}

impl Behavior for Strategy {
    fn choose(&mut self, history: &[Position], legal: &[Position]) -> Result<Position> {
        (&*self).choose(history, legal)
    }
}

/// Wraps a closure as a behavior.
pub struct FnBehavior<F>(pub F);

impl<F> Behavior for FnBehavior<F>
where
    F: FnMut(&[Position], &[Position]) -> Result<Position>,
{
    fn choose(&mut self, history: &[Position], legal: &[Position]) -> Result<Position> {
        (self.0)(history, legal)
    }
}

/// Uniformly random legal moves from a seeded generator.
pub struct RandomBehavior {
    rng: ChaCha8Rng,
    seed: u64,
}

impl RandomBehavior {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

impl Behavior for RandomBehavior {
    fn choose(&mut self, _history: &[Position], legal: &[Position]) -> Result<Position> {
        Ok(legal.choose(&mut self.rng).expect("legal moves are never empty").clone())
    }
}

/// Places on the smallest legal vertex, then never moves.
#[derive(Debug, Default, Clone, Copy)]
pub struct Stationary;

impl Behavior for Stationary {
    fn choose(&mut self, history: &[Position], legal: &[Position]) -> Result<Position> {
        let current = history.last().expect("history is never empty");
        if !current.is_placed() {
            return Ok(legal[0].clone());
        }
        Ok(Position {
            turn: current.turn.other(),
            ..current.clone()
        })
    }
}

/// Plays a fixed list of destinations, one per own move. Each step lists
/// the cop vertices (any order) or the single robber vertex. Once the
/// script runs out the side stays put.
#[derive(Debug, Clone)]
pub struct Scripted {
    steps: Vec<Vec<Vertex>>,
    next: usize,
}

impl Scripted {
    pub fn new(steps: Vec<Vec<Vertex>>) -> Self {
        Self { steps, next: 0 }
    }
}

impl Behavior for Scripted {
    fn choose(&mut self, history: &[Position], legal: &[Position]) -> Result<Position> {
        let current = history.last().expect("history is never empty");
        let Some(step) = self.steps.get(self.next) else {
            return Stationary.choose(history, legal);
        };
        self.next += 1;
        let target = match current.turn {
            Turn::Cop => {
                let mut cops = step.clone();
                cops.sort_unstable();
                Position {
                    cops: Some(cops),
                    robber: current.robber,
                    turn: Turn::Robber,
                }
            }
            Turn::Robber => {
                let &[robber] = step.as_slice() else {
                    return Err(Error::Behavior(format!(
                        "robber script step {} must name exactly one vertex",
                        self.next - 1
                    )));
                };
                Position {
                    cops: current.cops.clone(),
                    robber: Some(robber),
                    turn: Turn::Cop,
                }
            }
        };
        Ok(target)
    }
}

/// Line-oriented human player: shows the legal moves as a numbered menu
/// and reads an index.
pub struct Interactive<R, W> {
    input: R,
    output: W,
}

impl<R: BufRead, W: Write> Interactive<R, W> {
    pub fn new(input: R, output: W) -> Self {
        Self { input, output }
    }
}

impl<R: BufRead, W: Write> Behavior for Interactive<R, W> {
    fn choose(&mut self, history: &[Position], legal: &[Position]) -> Result<Position> {
        let current = history.last().expect("history is never empty");
        let side = match current.turn {
            Turn::Cop => "cop",
            Turn::Robber => "robber",
        };
        writeln!(self.output, "ply {}: position {current}, {side} to move", history.len() - 1)?;
        for (i, pos) in legal.iter().enumerate() {
            writeln!(self.output, "  {i}: {pos}")?;
        }
        loop {
            write!(self.output, "choose [0-{}]> ", legal.len() - 1)?;
            self.output.flush()?;
            let mut line = String::new();
            if self.input.read_line(&mut line)? == 0 {
                return Err(Error::Behavior("interactive input closed".into()));
            }
            match line.trim().parse::<usize>() {
                Ok(i) if i < legal.len() => return Ok(legal[i].clone()),
                _ => writeln!(self.output, "not a menu index: {:?}", line.trim())?,
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Outcome {
    Captured { round: u64 },
    Ongoing { round: u64 },
}

/// A realized play: the trajectory through the arena from the start node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Play {
    pub k: usize,
    pub moves: Vec<Position>,
    pub outcome: Outcome,
    pub length: u64,
}

impl Play {
    pub fn plies(&self) -> usize {
        self.moves.len() - 1
    }

    pub fn is_captured(&self) -> bool {
        matches!(self.outcome, Outcome::Captured { .. })
    }

    fn finish(k: usize, moves: Vec<Position>) -> Self {
        let plies = (moves.len() - 1) as u64;
        let outcome = if moves.last().is_some_and(Position::is_capture) {
            Outcome::Captured {
                round: plies_to_rounds(plies),
            }
        } else {
            Outcome::Ongoing {
                round: plies.saturating_sub(2) / 2,
            }
        };
        let length = match outcome {
            Outcome::Captured { round } | Outcome::Ongoing { round } => round,
        };
        Play {
            k,
            moves,
            outcome,
            length,
        }
    }
}

/// Default truncation for plays: one round past the `n²` capture bound.
pub fn default_max_rounds(n: usize) -> u64 {
    (n as u64) * (n as u64) + 1
}

/// Plays `cop` against `robber` from the start node until capture or until
/// `max_rounds` complete rounds after the placements.
pub fn run_play(
    arena: &Arena,
    mut cop: impl Behavior,
    mut robber: impl Behavior,
    max_rounds: u64,
) -> Result<Play> {
    let ply_limit = max_rounds.saturating_mul(2).saturating_add(2);
    let mut moves = vec![arena.initial_position()];
    loop {
        let current = moves.last().unwrap();
        if current.is_capture() || (moves.len() - 1) as u64 >= ply_limit {
            return Ok(Play::finish(arena.k(), moves));
        }
        let legal = arena.successors(current)?;
        let (side, chosen) = match current.turn {
            Turn::Cop => ("cop", cop.choose(&moves, &legal)?),
            Turn::Robber => ("robber", robber.choose(&moves, &legal)?),
        };
        if legal.binary_search(&chosen).is_err() {
            return Err(Error::IllegalMove {
                side,
                at: current.clone(),
                chosen,
            });
        }
        moves.push(chosen);
    }
}

/// Rebuilds a play from its positions, checking every transition.
pub fn replay_transcript(arena: &Arena, transcript: &[Position]) -> Result<Play> {
    let illegal = |index: usize, reason: String| Error::IllegalTranscript { index, reason };
    let Some(first) = transcript.first() else {
        return Err(illegal(0, "empty transcript".into()));
    };
    if *first != arena.initial_position() {
        return Err(illegal(0, format!("play must start at {}, not {first}", arena.initial_position())));
    }
    for (i, pair) in transcript.windows(2).enumerate() {
        let (from, to) = (&pair[0], &pair[1]);
        if from.is_capture() {
            return Err(illegal(i + 1, format!("play continues after capture at {from}")));
        }
        let legal = arena.successors(from).map_err(|e| illegal(i, e.to_string()))?;
        if legal.binary_search(to).is_err() {
            return Err(illegal(i + 1, format!("{to} is not reachable from {from} in one move")));
        }
    }
    Ok(Play::finish(arena.k(), transcript.to_vec()))
}
