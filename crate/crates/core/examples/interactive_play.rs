//! Play the robber from the terminal against the optimal cop.
//!
//! Run with `cargo run --example interactive_play` and pick moves by index.

use std::io;

use cops_robbers::play::Interactive;
use cops_robbers::{compute_values, corpus, extract_strategies, run_play, ArenaParams};

fn main() -> cops_robbers::Result<()> {
    let table = compute_values(&ArenaParams::new(corpus::graph("named/c5")?, 1))?;
    let (cop, _) = extract_strategies(&table);
    let human = Interactive::new(io::stdin().lock(), io::stdout());
    let play = run_play(table.arena(), &cop, human, 20)?;
    println!("\n{:?} after {} plies", play.outcome, play.plies());
    Ok(())
}
