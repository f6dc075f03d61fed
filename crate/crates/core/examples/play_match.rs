//! Play optimal and random sides against each other and replay the transcripts.
//!
//! Run with `cargo run --example play_match`.

use cops_robbers::play::{default_max_rounds, RandomBehavior, Stationary};
use cops_robbers::{compute_values, corpus, extract_strategies, replay_transcript, run_play, ArenaParams};

fn main() -> cops_robbers::Result<()> {
    let graph = corpus::graph("named/petersen")?;
    let max_rounds = default_max_rounds(graph.n());
    let table = compute_values(&ArenaParams::new(graph, 3))?;
    let arena = table.arena();
    let (cop, robber) = extract_strategies(&table);

    let optimal = run_play(arena, &cop, &robber, max_rounds)?;
    println!("optimal vs optimal: {:?}", optimal.outcome);
    let random = run_play(arena, &cop, RandomBehavior::new(11), max_rounds)?;
    println!("optimal vs random:  {:?}", random.outcome);
    let lazy = run_play(arena, Stationary, &robber, 10)?;
    println!("stationary vs optimal: {:?}", lazy.outcome);

    for play in [&optimal, &random, &lazy] {
        assert_eq!(&replay_transcript(arena, &play.moves)?, play);
    }
    println!("{}", serde_json::to_string(&optimal)?);
    Ok(())
}
