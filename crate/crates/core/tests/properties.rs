mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use cops_robbers::arena::{Position, Turn};
use cops_robbers::oracle::{truncated_value, TruncatedValue, TruncationParams};
use cops_robbers::play::RandomBehavior;
use cops_robbers::{extract_strategies, replay_transcript, run_play, CaptureTime, Graph, Rank, Vertex};

use common::{arena, solve};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(Vertex, Vertex)> = (0..n as Vertex)
            .flat_map(|u| (u + 1..n as Vertex).map(move |v| (u, v)))
            .collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |edges| Graph::from_edges(n, &edges).unwrap())
    })
}

fn relabeled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<Vertex>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let perm: Vec<Vertex> = g.vertices().collect();
        (Just(g), Just(perm).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_neighborhood_contains_self(g in graph_strategy(7)) {
        for v in g.vertices() {
            let nb = g.closed_neighborhood(v).unwrap();
            prop_assert!(nb.contains(&v));
            prop_assert_eq!(nb.len(), g.degree(v) + 1);
            for &w in g.neighbors(v) {
                prop_assert!(g.neighbors(w).contains(&v));
            }
        }
    }

    #[test]
    fn edge_list_round_trips(g in graph_strategy(8)) {
        prop_assert_eq!(Graph::parse(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn moves_stay_in_closed_neighborhoods(g in graph_strategy(5), k in 1usize..=2) {
        let a = arena(&g, k);
        for id in 0..a.len() {
            let pos = a.position(id);
            if pos.is_capture() || !pos.is_placed() {
                continue;
            }
            for next in a.successors(&pos).unwrap() {
                prop_assert_eq!(next.turn, pos.turn.other());
                let (from, to) = (pos.cops.as_ref().unwrap(), next.cops.as_ref().unwrap());
                match pos.turn {
                    Turn::Cop => {
                        prop_assert_eq!(next.robber, pos.robber);
                        // Some matching pairs every cop with a destination in N[cop].
                        let fits = from.len() == 1 && g.in_closed_neighborhood(from[0], to[0])
                            || from.len() == 2 && (
                                g.in_closed_neighborhood(from[0], to[0]) && g.in_closed_neighborhood(from[1], to[1])
                                || g.in_closed_neighborhood(from[0], to[1]) && g.in_closed_neighborhood(from[1], to[0]));
                        prop_assert!(fits, "{} -> {}", pos, next);
                    }
                    Turn::Robber => {
                        prop_assert_eq!(from, to);
                        prop_assert!(g.in_closed_neighborhood(pos.robber.unwrap(), next.robber.unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn cop_order_is_canonicalized(cops in proptest::collection::vec(0u32..5, 1..4), y in 0u32..5) {
        let mut sorted = cops.clone();
        sorted.sort_unstable();
        let mut reversed = cops.clone();
        reversed.reverse();
        let g = Graph::parse("5 4\n0 1\n1 2\n2 3\n3 4\n").unwrap();
        let a = arena(&g, cops.len());
        let p = Position::placed(cops, y, Turn::Cop);
        prop_assert_eq!(&p, &Position::placed(reversed, y, Turn::Cop));
        prop_assert_eq!(p.cops.as_deref(), Some(sorted.as_slice()));
        if !p.is_capture() {
            let succ: BTreeSet<_> = a.successors(&p).unwrap().into_iter().collect();
            prop_assert_eq!(succ.len(), a.successors(&p).unwrap().len());
        }
    }

    #[test]
    fn tables_are_locally_optimal(g in graph_strategy(5), k in 1usize..=2) {
        let table = solve(&g, k);
        prop_assert!(table.optimality_violations().is_empty());
        for id in 0..table.arena().len() {
            prop_assert_eq!(table.rank_of(id) == Rank::Finite(0), table.arena().is_capture_id(id));
        }
    }

    #[test]
    fn strategies_are_legal_and_descend(g in graph_strategy(5), k in 1usize..=2) {
        let table = solve(&g, k);
        let a = table.arena();
        let (cop, robber) = extract_strategies(&table);
        let mut buf = Vec::new();
        for id in 0..a.len() {
            if a.is_capture_id(id) {
                prop_assert!(cop.next_id(id).is_none() && robber.next_id(id).is_none());
                continue;
            }
            let (mine, other) = match a.turn_of(id) {
                Turn::Cop => (&cop, &robber),
                Turn::Robber => (&robber, &cop),
            };
            prop_assert!(other.next_id(id).is_none());
            let next = mine.next_id(id).unwrap();
            a.successor_ids(id, &mut buf);
            prop_assert!(buf.contains(&next));
            if let Rank::Finite(r) = table.rank_of(id) {
                prop_assert_eq!(table.rank_of(next), Rank::Finite(r - 1));
            }
        }
    }

    #[test]
    fn solver_matches_truncated_oracle(g in graph_strategy(5)) {
        let table = solve(&g, 1);
        let trunc = TruncationParams::default_for(g.n(), 1).unwrap();
        let oracle = truncated_value(table.arena(), trunc).unwrap();
        prop_assert!(oracle.agrees_with(table.capture_time()), "{} vs {}", oracle, table.capture_time());

        // Horizon stability once past the default horizon.
        let longer = TruncationParams::new(trunc.horizon_plies() + 2).unwrap();
        prop_assert_eq!(truncated_value(table.arena(), longer).unwrap(), oracle);

        if let CaptureTime::Rounds(t) = table.capture_time() {
            let n = g.n() as u64;
            prop_assert!(t <= n * n);
        } else {
            prop_assert_eq!(oracle, TruncatedValue::Survives);
        }
    }

    #[test]
    fn more_cops_never_hurt(g in graph_strategy(5)) {
        let one = solve(&g, 1);
        let two = solve(&g, 2);
        if one.is_cop_win() {
            prop_assert!(two.is_cop_win());
        }
        prop_assert!(two.capture_time() <= one.capture_time());
    }

    #[test]
    fn relabeling_preserves_values((g, perm) in relabeled(5), k in 1usize..=2) {
        let h = g.relabel(&perm).unwrap();
        let (tg, th) = (solve(&g, k), solve(&h, k));
        prop_assert_eq!(tg.capture_time(), th.capture_time());
        let mut rg = tg.ranks().to_vec();
        let mut rh = th.ranks().to_vec();
        rg.sort();
        rh.sort();
        prop_assert_eq!(rg, rh);
        if k == 1 {
            // Position by position: (x, y, t) on g is (perm x, perm y, t) on h.
            for id in 0..tg.arena().len() {
                let p = tg.arena().position(id);
                let q = Position {
                    cops: p.cops.as_ref().map(|c| {
                        let mut c: Vec<_> = c.iter().map(|&v| perm[v as usize]).collect();
                        c.sort_unstable();
                        c
                    }),
                    robber: p.robber.map(|v| perm[v as usize]),
                    turn: p.turn,
                };
                prop_assert_eq!(tg.rank_of(id), th.rank(&q).unwrap());
            }
        }
    }

    #[test]
    fn random_plays_replay(g in graph_strategy(6), k in 1usize..=2, seed in any::<u64>()) {
        let a = arena(&g, k);
        let play = run_play(&a, RandomBehavior::new(seed), RandomBehavior::new(seed ^ 1), 12).unwrap();
        prop_assert_eq!(replay_transcript(&a, &play.moves).unwrap(), play.clone());
        let captures = play.moves.iter().filter(|p| p.is_capture()).count();
        prop_assert_eq!(captures, usize::from(play.is_captured()));
        prop_assert!(play.is_captured() || play.plies() == 26);
    }
}
