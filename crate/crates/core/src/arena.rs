//! Position space of the Cops and Robbers reachability game.
//!
//! A position is `(cops, robber, turn)` where `turn` is the player about to
//! move. Besides fully placed positions the arena has the start node
//! `(-, -, C)` and one placement midpoint `(cops, -, R)` per cop multiset.
//! Cops are a sorted multiset of `k` vertices.
//!
//! Every position has a dense id. Ids follow the lexicographic order of
//! positions, so sorting ids sorts positions:
//!
//! ```text
//! 0                                   (-, -, C)
//! 1 + m(2n+1)                         (cops_m, -, R)
//! 1 + m(2n+1) + 1 + 2y + t            (cops_m, y, t)     t = 0 for C, 1 for R
//! ```
//!
//! Successors and predecessors are generated on demand; the digraph itself
//! is never stored.

use std::fmt;
use std::io::Write;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub type PosId = usize;

/// Default cap on the number of arena positions.
pub const DEFAULT_MAX_POSITIONS: usize = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Turn {
    #[serde(rename = "C")]
    Cop,
    #[serde(rename = "R")]
    Robber,
}

impl Turn {
    pub fn other(self) -> Turn {
        match self {
            Turn::Cop => Turn::Robber,
            Turn::Robber => Turn::Cop,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Turn::Cop => "C",
            Turn::Robber => "R",
        })
    }
}

/// A game position. `None` means "not yet placed".
///
/// The derived ordering is the lexicographic order used for tie-breaking
/// and for export ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Position {
    pub cops: Option<Vec<Vertex>>,
    pub robber: Option<Vertex>,
    pub turn: Turn,
}

impl Position {
    pub fn initial() -> Self {
        Position {
            cops: None,
            robber: None,
            turn: Turn::Cop,
        }
    }

    /// Fully placed position; the cop list is canonicalized.
    pub fn placed(cops: impl Into<Vec<Vertex>>, robber: Vertex, turn: Turn) -> Self {
        let mut cops = cops.into();
        cops.sort_unstable();
        Position {
            cops: Some(cops),
            robber: Some(robber),
            turn,
        }
    }

    /// Placement midpoint: cops are down, the robber places next.
    pub fn cops_placed(cops: impl Into<Vec<Vertex>>) -> Self {
        let mut cops = cops.into();
        cops.sort_unstable();
        Position {
            cops: Some(cops),
            robber: None,
            turn: Turn::Robber,
        }
    }

    /// True iff the robber is placed and shares a vertex with some cop.
    pub fn is_capture(&self) -> bool {
        match (&self.cops, self.robber) {
            (Some(cops), Some(r)) => cops.contains(&r),
            _ => false,
        }
    }

    pub fn is_placed(&self) -> bool {
        self.cops.is_some() && self.robber.is_some()
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        match &self.cops {
            None => f.write_str("-")?,
            Some(c) if c.len() == 1 => write!(f, "{}", c[0])?,
            Some(c) => {
                f.write_str("[")?;
                for (i, v) in c.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("]")?;
            }
        }
        match self.robber {
            None => write!(f, ",-,{})", self.turn),
            Some(r) => write!(f, ",{r},{})", self.turn),
        }
    }
}

/// Number of arena positions for `n` vertices and `k` cops:
/// `2·M·n + M + 1` with `M = C(n+k-1, k)` cop multisets.
pub fn position_count(n: usize, k: usize) -> Result<usize> {
    let overflow = || Error::CountOverflow { n, k };
    let m = multiset_count(n, k).ok_or_else(overflow)?;
    let total = m
        .checked_mul(2 * n as u128)
        .and_then(|x| x.checked_add(m))
        .and_then(|x| x.checked_add(1))
        .ok_or_else(overflow)?;
    usize::try_from(total).map_err(|_| overflow())
}

/// `C(n+k-1, k)`, or `None` on overflow.
fn multiset_count(n: usize, k: usize) -> Option<u128> {
    let top = (n + k).checked_sub(1)? as u128;
    let k = k as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (top - i) is divisible by (i + 1) at every step.
        acc = acc.checked_mul(top - i)? / (i + 1);
    }
    Some(acc)
}

#[derive(Debug, Clone)]
pub struct ArenaParams {
    pub graph: Arc<Graph>,
    pub k: usize,
    pub max_positions: usize,
}

impl ArenaParams {
    pub fn new(graph: impl Into<Arc<Graph>>, k: usize) -> Self {
        Self {
            graph: graph.into(),
            k,
            max_positions: DEFAULT_MAX_POSITIONS,
        }
    }

    pub fn with_max_positions(mut self, limit: usize) -> Self {
        self.max_positions = limit;
        self
    }
}

/// The expanded move digraph for `k` cops on a graph.
#[derive(Debug, Clone)]
pub struct Arena {
    graph: Arc<Graph>,
    k: usize,
    n: usize,
    multiset_total: usize,
    /// Cop multisets in lexicographic order, `k` vertices each.
    multisets: Vec<Vertex>,
    /// `rank_prefix[j][v]`: sum over `w < v` of the number of length-`j`
    /// multisets over `[w, n)`; ranks a multiset in O(k).
    rank_prefix: Vec<Vec<usize>>,
    /// Multiset indices reachable by one simultaneous team move, sorted.
    /// The relation is symmetric, so this also gives reverse moves.
    cop_moves: Vec<Vec<u32>>,
    len: usize,
}

impl Arena {
    pub fn new(params: &ArenaParams) -> Result<Self> {
        let graph = params.graph.clone();
        let n = graph.n();
        let k = params.k;
        if k == 0 {
            return Err(Error::NoCops);
        }
        let len = position_count(n, k)?;
        if len > params.max_positions {
            return Err(Error::TooManyPositions {
                n,
                k,
                count: len as u128,
                limit: params.max_positions,
            });
        }
        let multiset_total = (len - 1) / (2 * n + 1);

        let mut multisets = Vec::with_capacity(multiset_total * k);
        let mut current = vec![0 as Vertex; k];
        enumerate_multisets(n as Vertex, 0, 0, &mut current, &mut multisets);
        debug_assert_eq!(multisets.len(), multiset_total * k);

        // count[j][v] = number of non-decreasing length-j sequences over [v, n).
        let mut rank_prefix = Vec::with_capacity(k);
        for j in 0..k {
            let mut prefix = vec![0usize; n + 1];
            for v in 0..n {
                let count = multiset_count(n - v, j).expect("bounded by position count") as usize;
                prefix[v + 1] = prefix[v] + count;
            }
            rank_prefix.push(prefix);
        }

        let mut arena = Arena {
            graph,
            k,
            n,
            multiset_total,
            multisets,
            rank_prefix,
            cop_moves: Vec::new(),
            len,
        };
        arena.cop_moves = (0..multiset_total).map(|m| arena.team_moves(m)).collect();
        Ok(arena)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn shared_graph(&self) -> Arc<Graph> {
        self.graph.clone()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of positions.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn multiset_count(&self) -> usize {
        self.multiset_total
    }

    pub fn initial_position(&self) -> Position {
        Position::initial()
    }

    pub fn initial_id(&self) -> PosId {
        0
    }

    fn block(&self) -> usize {
        2 * self.n + 1
    }

    fn multiset(&self, m: usize) -> &[Vertex] {
        &self.multisets[m * self.k..(m + 1) * self.k]
    }

    fn midpoint_id(&self, m: usize) -> PosId {
        1 + m * self.block()
    }

    fn placed_id(&self, m: usize, robber: usize, turn: Turn) -> PosId {
        1 + m * self.block() + 1 + 2 * robber + turn.index()
    }

    fn decode(&self, id: PosId) -> Slot {
        if id == 0 {
            return Slot::Initial;
        }
        let r = id - 1;
        let m = r / self.block();
        match r % self.block() {
            0 => Slot::Midpoint(m),
            o => {
                let o = o - 1;
                let turn = if o % 2 == 0 { Turn::Cop } else { Turn::Robber };
                Slot::Placed(m, o / 2, turn)
            }
        }
    }

    /// Lexicographic rank of a sorted multiset of length `k`.
    fn rank_multiset(&self, cops: &[Vertex]) -> usize {
        let mut rank = 0;
        let mut low = 0usize;
        for (i, &c) in cops.iter().enumerate() {
            let rest = &self.rank_prefix[self.k - i - 1];
            rank += rest[c as usize] - rest[low];
            low = c as usize;
        }
        rank
    }

    fn team_moves(&self, m: usize) -> Vec<u32> {
        let options: Vec<Vec<Vertex>> = self
            .multiset(m)
            .iter()
            .map(|&c| self.graph.closed_neighborhood(c).expect("valid vertex"))
            .collect();
        let mut out = Vec::new();
        let mut pick = vec![0 as Vertex; self.k];
        let mut sorted = vec![0 as Vertex; self.k];
        let mut index = vec![0usize; self.k];
        loop {
            for (slot, (opts, &i)) in pick.iter_mut().zip(options.iter().zip(&index)) {
                *slot = opts[i];
            }
            sorted.copy_from_slice(&pick);
            sorted.sort_unstable();
            out.push(self.rank_multiset(&sorted) as u32);

            // Odometer increment.
            let mut d = self.k;
            loop {
                if d == 0 {
                    out.sort_unstable();
                    out.dedup();
                    return out;
                }
                d -= 1;
                index[d] += 1;
                if index[d] < options[d].len() {
                    break;
                }
                index[d] = 0;
            }
        }
    }

    fn multiset_contains(&self, m: usize, v: usize) -> bool {
        self.multiset(m).binary_search(&(v as Vertex)).is_ok()
    }

    pub fn position(&self, id: PosId) -> Position {
        match self.decode(id) {
            Slot::Initial => Position::initial(),
            Slot::Midpoint(m) => Position {
                cops: Some(self.multiset(m).to_vec()),
                robber: None,
                turn: Turn::Robber,
            },
            Slot::Placed(m, y, turn) => Position {
                cops: Some(self.multiset(m).to_vec()),
                robber: Some(y as Vertex),
                turn,
            },
        }
    }

    /// Checks `pos` against this arena and returns its id.
    pub fn id_of(&self, pos: &Position) -> Result<PosId> {
        let invalid = |reason: &str| Error::InvalidPosition {
            position: pos.clone(),
            reason: reason.to_owned(),
        };
        let m = match &pos.cops {
            None => None,
            Some(cops) => {
                if cops.len() != self.k {
                    return Err(invalid(&format!("expected {} cops, got {}", self.k, cops.len())));
                }
                if cops.iter().any(|&c| c as usize >= self.n) {
                    return Err(invalid("cop vertex out of range"));
                }
                if cops.windows(2).any(|w| w[0] > w[1]) {
                    return Err(invalid("cops must be sorted"));
                }
                Some(self.rank_multiset(cops))
            }
        };
        if let Some(r) = pos.robber {
            if r as usize >= self.n {
                return Err(invalid("robber vertex out of range"));
            }
        }
        match (m, pos.robber, pos.turn) {
            (None, None, Turn::Cop) => Ok(0),
            (Some(m), None, Turn::Robber) => Ok(self.midpoint_id(m)),
            (Some(m), Some(r), turn) => Ok(self.placed_id(m, r as usize, turn)),
            (None, None, Turn::Robber) => Err(invalid("the cops place first")),
            (Some(_), None, Turn::Cop) => Err(invalid("the robber places after the cops")),
            (None, Some(_), _) => Err(invalid("robber placed before the cops")),
        }
    }

    pub fn turn_of(&self, id: PosId) -> Turn {
        match self.decode(id) {
            Slot::Initial => Turn::Cop,
            Slot::Midpoint(_) => Turn::Robber,
            Slot::Placed(_, _, t) => t,
        }
    }

    pub fn is_capture_id(&self, id: PosId) -> bool {
        match self.decode(id) {
            Slot::Placed(m, y, _) => self.multiset_contains(m, y),
            _ => false,
        }
    }

    /// Successor ids in ascending (lexicographic) order. Empty for captures.
    pub fn successor_ids(&self, id: PosId, out: &mut Vec<PosId>) {
        out.clear();
        match self.decode(id) {
            Slot::Initial => out.extend((0..self.multiset_total).map(|m| self.midpoint_id(m))),
            Slot::Midpoint(m) => {
                out.extend((0..self.n).map(|y| self.placed_id(m, y, Turn::Cop)));
            }
            Slot::Placed(m, y, turn) => {
                if self.multiset_contains(m, y) {
                    return;
                }
                match turn {
                    Turn::Cop => out.extend(
                        self.cop_moves[m]
                            .iter()
                            .map(|&m2| self.placed_id(m2 as usize, y, Turn::Robber)),
                    ),
                    Turn::Robber => {
                        let y = y as Vertex;
                        let nbrs = self.graph.neighbors(y);
                        let split = nbrs.partition_point(|&w| w < y);
                        let ids = nbrs[..split]
                            .iter()
                            .chain(std::iter::once(&y))
                            .chain(&nbrs[split..])
                            .map(|&w| self.placed_id(m, w as usize, Turn::Cop));
                        out.extend(ids);
                    }
                }
            }
        }
    }

    /// Ids of non-capture positions that have `id` as a successor, ascending.
    pub fn predecessor_ids(&self, id: PosId, out: &mut Vec<PosId>) {
        out.clear();
        match self.decode(id) {
            Slot::Initial => {}
            Slot::Midpoint(_) => out.push(0),
            Slot::Placed(m, y, Turn::Cop) => {
                out.push(self.midpoint_id(m));
                let yv = y as Vertex;
                for w in std::iter::once(yv).chain(self.graph.neighbors(yv).iter().copied()) {
                    if !self.multiset_contains(m, w as usize) {
                        out.push(self.placed_id(m, w as usize, Turn::Robber));
                    }
                }
                out.sort_unstable();
            }
            Slot::Placed(m, y, Turn::Robber) => {
                for &m2 in &self.cop_moves[m] {
                    if !self.multiset_contains(m2 as usize, y) {
                        out.push(self.placed_id(m2 as usize, y, Turn::Cop));
                    }
                }
            }
        }
    }

    /// Lexicographically sorted, duplicate-free successors of `pos`.
    pub fn successors(&self, pos: &Position) -> Result<Vec<Position>> {
        let id = self.id_of(pos)?;
        if self.is_capture_id(id) {
            return Err(Error::CaptureIsTerminal(pos.clone()));
        }
        let mut ids = Vec::new();
        self.successor_ids(id, &mut ids);
        Ok(ids.into_iter().map(|s| self.position(s)).collect())
    }

    /// Writes every position and every move of the arena; returns the
    /// number of edge records.
    pub fn export_move_digraph<W: Write>(&self, mut sink: W) -> Result<usize> {
        for id in 0..self.len {
            let pos = self.position(id);
            let cops = match &pos.cops {
                None => "-".to_owned(),
                Some(c) => c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
            };
            let robber = pos.robber.map_or("-".to_owned(), |r| r.to_string());
            writeln!(
                sink,
                "N {id} cops={cops} robber={robber} turn={} capture={}",
                pos.turn,
                u8::from(self.is_capture_id(id))
            )?;
        }
        let mut edges = 0;
        let mut succ = Vec::new();
        for id in 0..self.len {
            self.successor_ids(id, &mut succ);
            for &s in &succ {
                writeln!(sink, "E {id} {s}")?;
            }
            edges += succ.len();
        }
        sink.flush()?;
        Ok(edges)
    }
}

#[derive(Debug, Clone, Copy)]
enum Slot {
    Initial,
    Midpoint(usize),
    Placed(usize, usize, Turn),
}

fn enumerate_multisets(n: Vertex, depth: usize, low: Vertex, current: &mut [Vertex], out: &mut Vec<Vertex>) {
    if depth == current.len() {
        out.extend_from_slice(current);
        return;
    }
    for v in low..n {
        current[depth] = v;
        enumerate_multisets(n, depth + 1, v, current, out);
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    fn arena(text: &str, k: usize) -> Arena {
        Arena::new(&ArenaParams::new(Graph::parse(text).unwrap(), k)).unwrap()
    }

    const P3: &str = "3 2\n0 1\n1 2\n";
    const C4: &str = "4 4\n0 1\n1 2\n2 3\n3 0\n";
    const K1: &str = "1 0\n";

    /// Straight transcription of the move rules over explicit positions.
    fn naive_successors(g: &Graph, k: usize, pos: &Position) -> BTreeSet<Position> {
        let n = g.n() as Vertex;
        let mut out = BTreeSet::new();
        match (&pos.cops, pos.robber, pos.turn) {
            (None, None, Turn::Cop) => {
                let mut all = vec![vec![]];
                for _ in 0..k {
                    all = all
                        .into_iter()
                        .flat_map(|p: Vec<Vertex>| {
                            (0..n).map(move |v| {
                                let mut q = p.clone();
                                q.push(v);
                                q
                            })
                        })
                        .collect();
                }
                for c in all {
                    out.insert(Position::cops_placed(c));
                }
            }
            (Some(c), None, Turn::Robber) => {
                for y in 0..n {
                    out.insert(Position::placed(c.clone(), y, Turn::Cop));
                }
            }
            (Some(c), Some(y), Turn::Cop) => {
                let mut all = vec![vec![]];
                for &x in c {
                    all = all
                        .into_iter()
                        .flat_map(|p: Vec<Vertex>| {
                            (0..n).filter(move |&w| g.in_closed_neighborhood(x, w)).map(move |w| {
                                let mut q = p.clone();
                                q.push(w);
                                q
                            })
                        })
                        .collect();
                }
                for c2 in all {
                    out.insert(Position::placed(c2, y, Turn::Robber));
                }
            }
            (Some(c), Some(y), Turn::Robber) => {
                for w in (0..n).filter(|&w| g.in_closed_neighborhood(y, w)) {
                    out.insert(Position::placed(c.clone(), w, Turn::Cop));
                }
            }
            _ => unreachable!(),
        }
        out
    }

    #[test]
    fn initial_position_shape() {
        let a = arena(P3, 3);
        assert_eq!(a.initial_position(), Position::initial());
        assert_eq!(a.id_of(&Position::initial()).unwrap(), 0);
    }

    #[test]
    fn path_successors() {
        let a = arena(P3, 1);
        let placements = a.successors(&Position::initial()).unwrap();
        assert_eq!(
            placements,
            (0..3).map(|v| Position::cops_placed([v])).collect::<Vec<_>>()
        );
        let from = Position::placed([1], 2, Turn::Cop);
        assert_eq!(
            a.successors(&from).unwrap(),
            (0..3).map(|v| Position::placed([v], 2, Turn::Robber)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn cycle_robber_successors() {
        let a = arena(C4, 1);
        let from = Position::placed([0], 2, Turn::Robber);
        assert_eq!(
            a.successors(&from).unwrap(),
            (1..4).map(|v| Position::placed([0], v, Turn::Cop)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn capture_detection() {
        assert!(Position::placed([2], 2, Turn::Robber).is_capture());
        assert!(!Position::placed([0], 2, Turn::Cop).is_capture());
        assert!(Position::placed([0, 3], 3, Turn::Cop).is_capture());
        assert!(!Position::cops_placed([1]).is_capture());
        let a = arena(C4, 2);
        let id = a.id_of(&Position::placed([0, 3], 3, Turn::Cop)).unwrap();
        assert!(a.is_capture_id(id));
        assert!(matches!(
            a.successors(&Position::placed([0, 3], 3, Turn::Cop)),
            Err(Error::CaptureIsTerminal(_))
        ));
    }

    #[test]
    fn invalid_positions_rejected() {
        let a = arena(P3, 2);
        for bad in [
            Position { cops: None, robber: None, turn: Turn::Robber },
            Position { cops: Some(vec![0, 1]), robber: None, turn: Turn::Cop },
            Position { cops: None, robber: Some(0), turn: Turn::Cop },
            Position { cops: Some(vec![1, 0]), robber: Some(2), turn: Turn::Cop },
            Position { cops: Some(vec![0]), robber: Some(2), turn: Turn::Cop },
            Position { cops: Some(vec![0, 3]), robber: Some(2), turn: Turn::Cop },
            Position { cops: Some(vec![0, 1]), robber: Some(3), turn: Turn::Cop },
        ] {
            assert!(matches!(a.id_of(&bad), Err(Error::InvalidPosition { .. })), "{bad}");
        }
    }

    #[test]
    fn position_counts() {
        assert_eq!(position_count(3, 1).unwrap(), 22);
        assert_eq!(position_count(1, 1).unwrap(), 4);
        assert_eq!(position_count(4, 2).unwrap(), 91);
        assert!(matches!(position_count(usize::MAX / 2, 8), Err(Error::CountOverflow { .. })));
    }

    #[test]
    fn position_limit_enforced() {
        let g = Graph::parse(C4).unwrap();
        let err = Arena::new(&ArenaParams::new(g, 2).with_max_positions(90)).unwrap_err();
        assert!(matches!(err, Error::TooManyPositions { count: 91, .. }));
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn ids_follow_lexicographic_order() {
        for (text, k) in [(P3, 1), (C4, 2), (K1, 3)] {
            let a = arena(text, k);
            let positions: Vec<_> = (0..a.len()).map(|id| a.position(id)).collect();
            assert!(positions.windows(2).all(|w| w[0] < w[1]));
            for (id, p) in positions.iter().enumerate() {
                assert_eq!(a.id_of(p).unwrap(), id);
            }
        }
    }

    #[test]
    fn exhaustive_generation_matches_count() {
        // Every valid position, built from the full cross product.
        let g = Graph::parse(C4).unwrap();
        let a = arena(C4, 2);
        let mut all = BTreeSet::new();
        all.insert(Position::initial());
        for c1 in 0..4 {
            for c2 in 0..4 {
                all.insert(Position::cops_placed([c1, c2]));
                for y in 0..4 {
                    for t in [Turn::Cop, Turn::Robber] {
                        all.insert(Position::placed([c1, c2], y, t));
                    }
                }
            }
        }
        assert_eq!(all.len(), 91);
        assert_eq!(all.len(), a.len());
        for p in &all {
            a.id_of(p).unwrap();
            if !p.is_capture() {
                let got: BTreeSet<_> = a.successors(p).unwrap().into_iter().collect();
                assert_eq!(got, naive_successors(&g, 2, p), "{p}");
            }
        }
    }

    #[test]
    fn predecessors_invert_successors() {
        for (text, k) in [(P3, 1), (C4, 2), ("5 4\n0 1\n0 2\n0 3\n3 4\n", 2)] {
            let a = arena(text, k);
            let mut forward = BTreeSet::new();
            let mut buf = Vec::new();
            for id in 0..a.len() {
                a.successor_ids(id, &mut buf);
                assert!(buf.windows(2).all(|w| w[0] < w[1]));
                forward.extend(buf.iter().map(|&s| (id, s)));
            }
            let mut backward = BTreeSet::new();
            for id in 0..a.len() {
                a.predecessor_ids(id, &mut buf);
                assert!(buf.windows(2).all(|w| w[0] < w[1]));
                backward.extend(buf.iter().map(|&p| (p, id)));
            }
            assert_eq!(forward, backward);
        }
    }

    #[test]
    fn export_single_vertex() {
        let a = arena(K1, 1);
        let mut out = Vec::new();
        let edges = a.export_move_digraph(&mut out).unwrap();
        assert_eq!(edges, 2);
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "N 0 cops=- robber=- turn=C capture=0\n\
             N 1 cops=0 robber=- turn=R capture=0\n\
             N 2 cops=0 robber=0 turn=C capture=1\n\
             N 3 cops=0 robber=0 turn=R capture=1\n\
             E 0 1\n\
             E 1 2\n"
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(Position::initial().to_string(), "(-,-,C)");
        assert_eq!(Position::cops_placed([1]).to_string(), "(1,-,R)");
        assert_eq!(Position::placed([3, 0], 2, Turn::Cop).to_string(), "([0,3],2,C)");
    }
}
