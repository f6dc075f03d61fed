//! Check the solver against the brute-force oracles on the small corpus.
//!
//! Run with `cargo run --example verify_claims`.

use cops_robbers::oracle::{Claim, RobberBattery, Status};
use cops_robbers::{
    check_bound, check_memoryless_sufficiency, check_no_repetition, compute_values, corpus, ArenaParams, Error,
    VerificationReport,
};

fn main() -> cops_robbers::Result<()> {
    let battery = RobberBattery { random_robbers: 20, ..RobberBattery::default() };
    let (mut pass, mut fail, mut skipped) = (0, 0, 0);
    for (name, graph) in corpus::load("small4")? {
        let table = compute_values(&ArenaParams::new(graph, 1))?;
        for report in [
            check_bound(&name, &table)?,
            check_memoryless_sufficiency(&name, &table, None)?,
            // Repetition only matters where the cops win.
            match check_no_repetition(&name, &table, &battery) {
                Err(Error::NotApplicable(why)) => VerificationReport::skipped(Claim::NoRepetition, &name, 1, why),
                other => other?,
            },
        ] {
            match report.status {
                Status::Pass => pass += 1,
                Status::Skipped => skipped += 1,
                Status::Fail => {
                    fail += 1;
                    println!("{}", serde_json::to_string(&report)?);
                }
            }
        }
    }
    println!("pass {pass}, fail {fail}, skipped {skipped}");
    Ok(())
}
