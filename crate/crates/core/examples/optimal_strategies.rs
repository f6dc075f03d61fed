//! Extract memoryless optimal strategies and save them as JSON.
//!
//! Run with `cargo run --example optimal_strategies`.

use cops_robbers::{compute_values, corpus, extract_strategies, ArenaParams, Strategy};

fn main() -> cops_robbers::Result<()> {
    let table = compute_values(&ArenaParams::new(corpus::graph("named/tree7")?, 1))?;
    let (cop, robber) = extract_strategies(&table);

    println!("cop entries: {}, robber entries: {}", cop.len(), robber.len());
    for (from, to) in cop.iter().take(5) {
        println!("  cop at {from} -> {to}");
    }

    // Strategy files round-trip through JSON and are checked for legality on load.
    let json = serde_json::to_string(&cop.to_file())?;
    let restored = Strategy::from_file(table.shared_arena(), &serde_json::from_str(&json)?)?;
    assert_eq!(restored.len(), cop.len());
    println!("strategy file: {} bytes", json.len());
    Ok(())
}
