//! Print the expanded move digraph of a small instance.
//!
//! Run with `cargo run --example export_digraph`.

use std::io;

use cops_robbers::{corpus, Arena, ArenaParams};

fn main() -> cops_robbers::Result<()> {
    let arena = Arena::new(&ArenaParams::new(corpus::graph("named/p3")?, 1))?;
    let edges = arena.export_move_digraph(io::stdout().lock())?;
    eprintln!("{} nodes, {edges} edges", arena.len());
    Ok(())
}
