//! Compare the solver with depth-bounded minimax and the full history tree.
//!
//! Run with `cargo run --example truncated_oracle`.

use cops_robbers::oracle::DEFAULT_HISTORY_BUDGET;
use cops_robbers::{compute_values, corpus, history_tree_value, truncated_value, ArenaParams, TruncationParams};

fn main() -> cops_robbers::Result<()> {
    for name in ["named/p3", "named/c4", "named/k3"] {
        let graph = corpus::graph(name)?;
        let table = compute_values(&ArenaParams::new(graph, 1))?;
        let arena = table.arena();
        let trunc = TruncationParams::default_for(arena.n(), 1)?;
        let layered = truncated_value(arena, trunc)?;
        // The history tree is exponential; a short horizon keeps it small.
        let tree = history_tree_value(arena, TruncationParams::new(8)?, DEFAULT_HISTORY_BUDGET)?;
        println!("{name}: solver {}, layered {layered}, history tree (8 plies) {tree}", table.capture_time());
        assert!(layered.agrees_with(table.capture_time()));
    }
    Ok(())
}
