//! Find the cop number of the bundled named graphs.
//!
//! Run with `cargo run --example cop_number`.

use std::sync::Arc;

use cops_robbers::arena::DEFAULT_MAX_POSITIONS;
use cops_robbers::{corpus, cop_number, CopNumber};

fn main() -> cops_robbers::Result<()> {
    for (name, graph) in corpus::load("named")? {
        let report = cop_number(Arc::new(graph), 3, DEFAULT_MAX_POSITIONS)?;
        match report.result() {
            CopNumber::Found(c) => println!("{name:>16}: c = {c}"),
            CopNumber::NotFound(k) => println!("{name:>16}: c > {k}"),
        }
    }
    Ok(())
}
