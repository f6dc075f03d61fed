//! Solve a graph for a fixed number of cops and inspect the value table.
//!
//! Run with `cargo run --example solve_graph`.

use cops_robbers::{compute_values, ArenaParams, Graph, Position, Turn};

fn main() -> cops_robbers::Result<()> {
    let p4: Graph = "4 3\n0 1\n1 2\n2 3\n".parse()?;
    let table = compute_values(&ArenaParams::new(p4, 1))?;

    println!("positions: {}", table.arena().len());
    println!("cop win: {}", table.is_cop_win());
    println!("capture time: {} rounds", table.capture_time());
    println!("initial rank: {} plies", table.initial_rank());

    // Ranks of a few hand-picked positions.
    for pos in [
        Position::cops_placed(vec![1]),
        Position::placed(vec![1], 3, Turn::Cop),
        Position::placed(vec![0], 3, Turn::Robber),
    ] {
        println!("  {pos}: rank {}", table.rank(&pos)?);
    }
    Ok(())
}
