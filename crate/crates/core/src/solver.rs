//! Backward induction over the arena.
//!
//! Ranks count plies to capture under optimal play. Capture positions have
//! rank 0; a cop-turn position takes `1 + min` over its successors and a
//! robber-turn position `1 + max`, with [`Rank::Infinite`] above every
//! finite rank. Finite ranks form the cop's winning region, infinite ranks
//! the robber's.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arena::{Arena, ArenaParams, PosId, Position, Turn};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rank {
    Finite(u32),
    Infinite,
}

impl Rank {
    pub fn is_finite(self) -> bool {
        matches!(self, Rank::Finite(_))
    }

    pub fn plies(self) -> Option<u32> {
        match self {
            Rank::Finite(m) => Some(m),
            Rank::Infinite => None,
        }
    }

    /// Round in which a capture `m` plies after the start happens.
    pub fn to_capture_time(self) -> CaptureTime {
        match self {
            Rank::Finite(m) => CaptureTime::Rounds(plies_to_rounds(m as u64)),
            Rank::Infinite => CaptureTime::Infinite,
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Finite(m) => write!(f, "{m}"),
            Rank::Infinite => f.write_str("inf"),
        }
    }
}

/// Plies 1 and 2 are the placements (round 0); plies `2t+1` and `2t+2`
/// form round `t`.
pub fn plies_to_rounds(plies: u64) -> u64 {
    plies.saturating_sub(1) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaptureTime {
    Rounds(u64),
    Infinite,
}

impl CaptureTime {
    pub fn rounds(self) -> Option<u64> {
        match self {
            CaptureTime::Rounds(t) => Some(t),
            CaptureTime::Infinite => None,
        }
    }
}

impl fmt::Display for CaptureTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaptureTime::Rounds(t) => write!(f, "{t}"),
            CaptureTime::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntOrInf {
    Int(u64),
    Str(String),
}

fn ser_opt<S: Serializer>(value: Option<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match value {
        Some(v) => s.serialize_u64(v),
        None => s.serialize_str("inf"),
    }
}

fn de_opt<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<u64>, D::Error> {
    match IntOrInf::deserialize(d)? {
        IntOrInf::Int(v) => Ok(Some(v)),
        IntOrInf::Str(s) if s == "inf" => Ok(None),
        IntOrInf::Str(s) => Err(serde::de::Error::custom(format!("expected integer or \"inf\", got {s:?}"))),
    }
}

impl Serialize for CaptureTime {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ser_opt(self.rounds(), s)
    }
}

impl<'de> Deserialize<'de> for CaptureTime {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(de_opt(d)?.map_or(CaptureTime::Infinite, CaptureTime::Rounds))
    }
}

impl Serialize for Rank {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ser_opt(self.plies().map(u64::from), s)
    }
}

impl<'de> Deserialize<'de> for Rank {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match de_opt(d)? {
            None => Ok(Rank::Infinite),
            Some(v) => u32::try_from(v)
                .map(Rank::Finite)
                .map_err(|_| serde::de::Error::custom("rank out of range")),
        }
    }
}

/// Solved arena: one rank per position.
#[derive(Debug, Clone)]
pub struct ValueTable {
    arena: Arc<Arena>,
    ranks: Vec<Rank>,
}

pub fn compute_values(params: &ArenaParams) -> Result<ValueTable> {
    Ok(ValueTable::solve(Arc::new(Arena::new(params)?)))
}

impl ValueTable {
    pub fn solve(arena: Arc<Arena>) -> Self {
        let len = arena.len();
        let mut ranks = vec![Rank::Infinite; len];
        // Successors not yet assigned, tracked for robber-turn positions only.
        let mut pending = vec![0u32; len];
        let mut frontier = Vec::new();
        let mut buf = Vec::new();

        for id in 0..len {
            if arena.is_capture_id(id) {
                ranks[id] = Rank::Finite(0);
                frontier.push(id);
            } else if arena.turn_of(id) == Turn::Robber {
                arena.successor_ids(id, &mut buf);
                pending[id] = buf.len() as u32;
            }
        }

        let mut rank = 0u32;
        let mut next = Vec::new();
        while !frontier.is_empty() {
            let up = Rank::Finite(rank + 1);
            for &id in &frontier {
                arena.predecessor_ids(id, &mut buf);
                for &p in &buf {
                    if ranks[p] != Rank::Infinite {
                        continue;
                    }
                    match arena.turn_of(p) {
                        Turn::Cop => {
                            ranks[p] = up;
                            next.push(p);
                        }
                        Turn::Robber => {
                            pending[p] -= 1;
                            if pending[p] == 0 {
                                ranks[p] = up;
                                next.push(p);
                            }
                        }
                    }
                }
            }
            std::mem::swap(&mut frontier, &mut next);
            next.clear();
            rank += 1;
        }

        ValueTable { arena, ranks }
    }

    pub fn arena(&self) -> &Arena {
        &self.arena
    }

    pub fn shared_arena(&self) -> Arc<Arena> {
        self.arena.clone()
    }

    pub fn rank_of(&self, id: PosId) -> Rank {
        self.ranks[id]
    }

    pub fn rank(&self, pos: &Position) -> Result<Rank> {
        Ok(self.ranks[self.arena.id_of(pos)?])
    }

    pub fn ranks(&self) -> &[Rank] {
        &self.ranks
    }

    pub fn initial_rank(&self) -> Rank {
        self.ranks[self.arena.initial_id()]
    }

    pub fn is_cop_win(&self) -> bool {
        self.initial_rank().is_finite()
    }

    pub fn capture_time(&self) -> CaptureTime {
        self.initial_rank().to_capture_time()
    }

    /// Positions won by the cops (finite rank) or by the robber.
    pub fn winning_region(&self, cops: bool) -> Vec<PosId> {
        (0..self.ranks.len())
            .filter(|&id| self.ranks[id].is_finite() == cops)
            .collect()
    }

    /// Positions where the stored rank disagrees with the one-step
    /// optimality equation over the stored successor ranks.
    pub fn optimality_violations(&self) -> Vec<PosId> {
        let mut bad = Vec::new();
        let mut buf = Vec::new();
        for id in 0..self.ranks.len() {
            let expected = if self.arena.is_capture_id(id) {
                Rank::Finite(0)
            } else {
                self.arena.successor_ids(id, &mut buf);
                let succ = buf.iter().map(|&s| self.ranks[s]);
                let best = match self.arena.turn_of(id) {
                    Turn::Cop => succ.min(),
                    Turn::Robber => succ.max(),
                };
                match best.expect("non-capture positions have successors") {
                    Rank::Finite(r) => Rank::Finite(r + 1),
                    Rank::Infinite => Rank::Infinite,
                }
            };
            if self.ranks[id] != expected {
                bad.push(id);
            }
        }
        bad
    }

    pub fn summary(&self) -> SolveSummary {
        SolveSummary {
            n: self.arena.n(),
            k: self.arena.k(),
            cop_win: self.is_cop_win(),
            capture_time: self.capture_time(),
            initial_rank_plies: self.initial_rank(),
            positions: self.arena.len(),
        }
    }
}

/// The machine-readable result of solving one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveSummary {
    pub n: usize,
    pub k: usize,
    pub cop_win: bool,
    pub capture_time: CaptureTime,
    pub initial_rank_plies: Rank,
    pub positions: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CopNumber {
    Found(usize),
    /// No `k` up to the bound suffices.
    NotFound(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CopNumberReport {
    pub cop_number: Option<usize>,
    pub not_found: Option<usize>,
    pub per_k: Vec<SolveSummary>,
}

impl CopNumberReport {
    pub fn result(&self) -> CopNumber {
        match (self.cop_number, self.not_found) {
            (Some(k), _) => CopNumber::Found(k),
            (None, Some(bound)) => CopNumber::NotFound(bound),
            (None, None) => unreachable!("report always carries one outcome"),
        }
    }
}

/// Solves `k = 1, 2, …, max_k` until the cops win.
pub fn cop_number(graph: Arc<Graph>, max_k: usize, max_positions: usize) -> Result<CopNumberReport> {
    if max_k == 0 {
        return Err(Error::NoCops);
    }
    let mut per_k = Vec::new();
    for k in 1..=max_k {
        let params = ArenaParams::new(graph.clone(), k).with_max_positions(max_positions);
        let table = compute_values(&params).map_err(|e| Error::CopNumberLimit {
            k,
            source: Box::new(e),
        })?;
        per_k.push(table.summary());
        if table.is_cop_win() {
            return Ok(CopNumberReport {
                cop_number: Some(k),
                not_found: None,
                per_k,
            });
        }
    }
    Ok(CopNumberReport {
        cop_number: None,
        not_found: Some(max_k),
        per_k,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    Cop,
    Robber,
}

impl Player {
    pub fn turn(self) -> Turn {
        match self {
            Player::Cop => Turn::Cop,
            Player::Robber => Turn::Robber,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Cop => "cop",
            Player::Robber => "robber",
        })
    }
}

/// A memoryless strategy: one chosen successor per owned non-capture position.
#[derive(Debug, Clone)]
pub struct Strategy {
    owner: Player,
    arena: Arc<Arena>,
    moves: Vec<Option<u32>>,
}

impl Strategy {
    pub fn owner(&self) -> Player {
        self.owner
    }

    pub fn arena(&self) -> &Arena {
        &self.arena
    }

    pub fn next_id(&self, id: PosId) -> Option<PosId> {
        self.moves[id].map(|m| m as PosId)
    }

    pub fn next(&self, pos: &Position) -> Result<Option<Position>> {
        let id = self.arena.id_of(pos)?;
        Ok(self.next_id(id).map(|s| self.arena.position(s)))
    }

    /// Number of positions with an entry.
    pub fn len(&self) -> usize {
        self.moves.iter().filter(|m| m.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Entries in lexicographic order of their position.
    pub fn iter(&self) -> impl Iterator<Item = (Position, Position)> + '_ {
        self.moves
            .iter()
            .enumerate()
            .filter_map(|(id, m)| m.map(|s| (self.arena.position(id), self.arena.position(s as PosId))))
    }

    pub fn to_file(&self) -> StrategyFile {
        StrategyFile {
            k: self.arena.k(),
            owner: self.owner,
            entries: self
                .iter()
                .map(|(position, next)| StrategyEntry { position, next })
                .collect(),
        }
    }

    /// Loads a strategy file, rejecting entries that are not legal moves of
    /// the owner. Positions without an entry stay undefined.
    pub fn from_file(arena: Arc<Arena>, file: &StrategyFile) -> Result<Self> {
        if file.k != arena.k() {
            return Err(Error::Behavior(format!(
                "strategy is for k={}, arena has k={}",
                file.k,
                arena.k()
            )));
        }
        let mut moves = vec![None; arena.len()];
        let mut buf = Vec::new();
        for entry in &file.entries {
            let id = arena.id_of(&entry.position)?;
            let next = arena.id_of(&entry.next)?;
            if arena.turn_of(id) != file.owner.turn() || arena.is_capture_id(id) {
                return Err(Error::Behavior(format!(
                    "{} strategy has an entry at {} which it does not own",
                    file.owner, entry.position
                )));
            }
            arena.successor_ids(id, &mut buf);
            if buf.binary_search(&next).is_err() {
                return Err(Error::IllegalMove {
                    side: if file.owner == Player::Cop { "cop" } else { "robber" },
                    at: entry.position.clone(),
                    chosen: entry.next.clone(),
                });
            }
            moves[id] = Some(next as u32);
        }
        Ok(Strategy {
            owner: file.owner,
            arena,
            moves,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyFile {
    pub k: usize,
    pub owner: Player,
    pub entries: Vec<StrategyEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyEntry {
    #[serde(flatten)]
    pub position: Position,
    #[serde(rename = "move")]
    pub next: Position,
}

/// Memoryless optimal strategies read off the value table.
///
/// The cop picks a rank-minimizing successor, the robber a rank-maximizing
/// one (infinite beats any finite rank). Ties go to the lexicographically
/// smallest successor.
pub fn extract_strategies(table: &ValueTable) -> (Strategy, Strategy) {
    let arena = table.shared_arena();
    let mut cop = vec![None; arena.len()];
    let mut robber = vec![None; arena.len()];
    let mut buf = Vec::new();
    for id in 0..arena.len() {
        if arena.is_capture_id(id) {
            continue;
        }
        arena.successor_ids(id, &mut buf);
        let mut best = buf[0];
        match arena.turn_of(id) {
            Turn::Cop => {
                for &s in &buf[1..] {
                    if table.ranks[s] < table.ranks[best] {
                        best = s;
                    }
                }
                cop[id] = Some(best as u32);
            }
            Turn::Robber => {
                for &s in &buf[1..] {
                    if table.ranks[s] > table.ranks[best] {
                        best = s;
                    }
                }
                robber[id] = Some(best as u32);
            }
        }
    }
    (
        Strategy {
            owner: Player::Cop,
            arena: arena.clone(),
            moves: cop,
        },
        Strategy {
            owner: Player::Robber,
            arena,
            moves: robber,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(text: &str, k: usize) -> ValueTable {
        compute_values(&ArenaParams::new(Graph::parse(text).unwrap(), k)).unwrap()
    }

    const K1: &str = "1 0\n";
    const P3: &str = "3 2\n0 1\n1 2\n";
    const P4: &str = "4 3\n0 1\n1 2\n2 3\n";
    const C4: &str = "4 4\n0 1\n1 2\n2 3\n3 0\n";

    #[test]
    fn single_vertex_forced_line() {
        let t = solve(K1, 1);
        assert_eq!(t.rank(&Position::placed([0], 0, Turn::Cop)).unwrap(), Rank::Finite(0));
        assert_eq!(t.rank(&Position::cops_placed([0])).unwrap(), Rank::Finite(1));
        assert_eq!(t.initial_rank(), Rank::Finite(2));
        assert_eq!(t.capture_time(), CaptureTime::Rounds(0));
    }

    #[test]
    fn path_values() {
        let t = solve(P3, 1);
        assert_eq!(t.initial_rank(), Rank::Finite(3));
        assert_eq!(t.capture_time(), CaptureTime::Rounds(1));
        assert!(t.is_cop_win());
        assert_eq!(solve(P4, 1).capture_time(), CaptureTime::Rounds(2));
    }

    #[test]
    fn cycle_needs_two_cops() {
        let one = solve(C4, 1);
        assert_eq!(one.initial_rank(), Rank::Infinite);
        assert!(!one.is_cop_win());
        assert_eq!(one.capture_time(), CaptureTime::Infinite);
        assert!(solve(C4, 2).is_cop_win());
    }

    #[test]
    fn plies_convert_to_rounds() {
        assert_eq!(plies_to_rounds(2), 0);
        assert_eq!(plies_to_rounds(3), 1);
        assert_eq!(plies_to_rounds(4), 1);
        assert_eq!(plies_to_rounds(5), 2);
    }

    #[test]
    fn tables_satisfy_local_equations() {
        for (g, k) in [(K1, 1), (P3, 1), (P4, 2), (C4, 1), (C4, 2)] {
            assert!(solve(g, k).optimality_violations().is_empty());
        }
    }

    #[test]
    fn path_strategies() {
        let t = solve(P3, 1);
        let (cop, robber) = extract_strategies(&t);
        assert_eq!(cop.next(&Position::initial()).unwrap(), Some(Position::cops_placed([1])));
        assert_eq!(
            robber.next(&Position::cops_placed([1])).unwrap(),
            Some(Position::placed([1], 0, Turn::Cop))
        );
        assert_eq!(
            cop.next(&Position::placed([1], 0, Turn::Cop)).unwrap(),
            Some(Position::placed([0], 0, Turn::Robber))
        );
        // Strategies have no entries on captures or the other side's positions.
        assert_eq!(cop.next(&Position::cops_placed([1])).unwrap(), None);
        assert_eq!(robber.next(&Position::placed([1], 1, Turn::Robber)).unwrap(), None);
    }

    #[test]
    fn single_vertex_robber_forced() {
        let (_, robber) = extract_strategies(&solve(K1, 1));
        assert_eq!(
            robber.next(&Position::cops_placed([0])).unwrap(),
            Some(Position::placed([0], 0, Turn::Cop))
        );
    }

    #[test]
    fn robber_prefers_survival() {
        let (_, robber) = extract_strategies(&solve(C4, 1));
        // From (0,2,R) only staying keeps the robber out of the cop's reach.
        assert_eq!(
            robber.next(&Position::placed([0], 2, Turn::Robber)).unwrap(),
            Some(Position::placed([0], 2, Turn::Cop))
        );
    }

    #[test]
    fn strategy_file_round_trip() {
        let t = solve(P3, 1);
        let (cop, _) = extract_strategies(&t);
        let file = cop.to_file();
        let json = serde_json::to_string(&file).unwrap();
        assert!(json.starts_with(r#"{"k":1,"owner":"cop","entries":[{"cops":null,"robber":null,"turn":"C","move":{"cops":[1],"robber":null,"turn":"R"}}"#));
        let back: StrategyFile = serde_json::from_str(&json).unwrap();
        let loaded = Strategy::from_file(t.shared_arena(), &back).unwrap();
        assert_eq!(loaded.iter().collect::<Vec<_>>(), cop.iter().collect::<Vec<_>>());
    }

    #[test]
    fn strategy_file_rejects_illegal_moves() {
        let t = solve(P3, 1);
        let file = StrategyFile {
            k: 1,
            owner: Player::Cop,
            entries: vec![StrategyEntry {
                position: Position::placed([0], 2, Turn::Cop),
                next: Position::placed([2], 2, Turn::Robber),
            }],
        };
        assert!(matches!(
            Strategy::from_file(t.shared_arena(), &file),
            Err(Error::IllegalMove { .. })
        ));
    }

    #[test]
    fn summary_serializes_infinity_as_string() {
        let json = serde_json::to_string(&solve(C4, 1).summary()).unwrap();
        assert_eq!(
            json,
            r#"{"n":4,"k":1,"cop_win":false,"capture_time":"inf","initial_rank_plies":"inf","positions":37}"#
        );
        let back: SolveSummary = serde_json::from_str(&json).unwrap();
        assert_eq!(back.capture_time, CaptureTime::Infinite);
        assert!(serde_json::from_str::<CaptureTime>("\"forever\"").is_err());
    }

    #[test]
    fn cop_numbers() {
        let c4 = Arc::new(Graph::parse(C4).unwrap());
        let report = cop_number(c4.clone(), 4, 1_000_000).unwrap();
        assert_eq!(report.result(), CopNumber::Found(2));
        assert_eq!(report.per_k.len(), 2);
        assert_eq!(cop_number(c4.clone(), 1, 1_000_000).unwrap().result(), CopNumber::NotFound(1));
        assert!(matches!(
            cop_number(c4, 3, 40),
            Err(Error::CopNumberLimit { k: 2, .. })
        ));
    }
}
