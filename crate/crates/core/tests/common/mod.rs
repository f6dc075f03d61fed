#![allow(dead_code)]

use std::collections::VecDeque;
use std::sync::Arc;

use cops_robbers::arena::{Arena, ArenaParams, Position, Turn};
use cops_robbers::play::{Behavior, FnBehavior};
use cops_robbers::{compute_values, corpus, Graph, Result, ValueTable, Vertex};

pub fn solve(graph: &Graph, k: usize) -> ValueTable {
    compute_values(&ArenaParams::new(Arc::new(graph.clone()), k)).unwrap()
}

pub fn arena(graph: &Graph, k: usize) -> Arena {
    Arena::new(&ArenaParams::new(graph.clone(), k)).unwrap()
}

pub fn named(name: &str) -> Graph {
    corpus::graph(&format!("named/{name}")).unwrap()
}

/// Named and small4 instances.
pub fn corpus_instances() -> Vec<(String, Graph)> {
    let mut all = corpus::load("named").unwrap();
    all.extend(corpus::load("small4").unwrap());
    all
}

/// All-pairs BFS distances; `usize::MAX` when unreachable.
pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|s| {
            let mut d = vec![usize::MAX; g.n()];
            d[s] = 0;
            let mut q = VecDeque::from([s as Vertex]);
            while let Some(v) = q.pop_front() {
                for &w in g.neighbors(v) {
                    if d[w as usize] == usize::MAX {
                        d[w as usize] = d[v as usize] + 1;
                        q.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

fn gap(dist: &[Vec<usize>], pos: &Position) -> usize {
    match (&pos.cops, pos.robber) {
        (Some(cops), Some(r)) => cops.iter().map(|&c| dist[c as usize][r as usize]).min().unwrap(),
        _ => 0,
    }
}

/// Robber moving to the successor farthest from the nearest cop
/// (lexicographically first among equals).
pub fn evasive_robber(g: &Graph) -> impl Behavior {
    let dist = distances(g);
    FnBehavior(move |_: &[Position], legal: &[Position]| -> Result<Position> {
        Ok(legal.iter().max_by_key(|p| (gap(&dist, p), std::cmp::Reverse((*p).clone()))).unwrap().clone())
    })
}

/// Cop team moving to the successor nearest the robber.
pub fn chasing_cop(g: &Graph) -> impl Behavior {
    let dist = distances(g);
    FnBehavior(move |_: &[Position], legal: &[Position]| -> Result<Position> {
        Ok(legal.iter().min_by_key(|p| gap(&dist, p)).unwrap().clone())
    })
}

/// History-dependent robber: alternates between the first and last legal
/// move according to the parity of the history length.
pub fn parity_robber() -> impl Behavior {
    FnBehavior(|history: &[Position], legal: &[Position]| -> Result<Position> {
        Ok(if history.len() % 4 == 1 { legal[0].clone() } else { legal[legal.len() - 1].clone() })
    })
}

/// History-dependent cop: repeats the index of the robber's last choice.
pub fn echo_cop() -> impl Behavior {
    FnBehavior(|history: &[Position], legal: &[Position]| -> Result<Position> {
        let i = history.iter().filter(|p| p.turn == Turn::Cop).count();
        Ok(legal[i % legal.len()].clone())
    })
}
