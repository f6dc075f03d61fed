//! Write a history-dependent robber and check it cannot outlast the optimal cop.
//!
//! Run with `cargo run --example custom_behavior`.

use std::collections::HashSet;

use cops_robbers::play::FnBehavior;
use cops_robbers::{compute_values, corpus, extract_strategies, run_play, ArenaParams, Position};

fn main() -> cops_robbers::Result<()> {
    let table = compute_values(&ArenaParams::new(corpus::graph("named/p8")?, 1))?;
    let (cop, _) = extract_strategies(&table);

    // Prefers vertices it has not visited yet, and never steps onto a cop.
    let mut visited = HashSet::new();
    let wanderer = FnBehavior(|history: &[Position], legal: &[Position]| {
        if let Some(y) = history.last().and_then(|p| p.robber) {
            visited.insert(y);
        }
        let safe = |p: &&Position| !p.is_capture();
        let pick = legal
            .iter()
            .filter(safe)
            .find(|p| p.robber.is_some_and(|y| !visited.contains(&y)))
            .or_else(|| legal.iter().find(safe))
            .unwrap_or(&legal[0]);
        Ok(pick.clone())
    });

    let play = run_play(table.arena(), &cop, wanderer, 100)?;
    println!("outcome: {:?} (optimal bound {})", play.outcome, table.capture_time());
    assert!(play.is_captured());
    Ok(())
}
