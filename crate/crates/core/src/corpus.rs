//! Graph files bundled with the crate.
//!
//! * `named`: paths `p1`–`p8`, cycles `c3`–`c8`, cliques `k1`–`k6`,
//!   `tree7` and `petersen`.
//! * `small4`: every connected labeled graph on at most four vertices.
//! * `perf`: seeded random graphs used for timing.

use crate::error::{Error, Result};
use crate::graph::Graph;

static FILES: &[(&str, &str, &str)] = include!(concat!(env!("OUT_DIR"), "/corpus_files.rs"));

pub fn corpus_names() -> Vec<&'static str> {
    let mut names: Vec<_> = FILES.iter().map(|(c, _, _)| *c).collect();
    names.dedup();
    names
}

/// Resolves `corpus` (every graph in it) or `corpus/name` (one graph).
/// Instances are returned as `("corpus/name", graph)` in file-name order.
pub fn load(selector: &str) -> Result<Vec<(String, Graph)>> {
    let (corpus, name) = match selector.split_once('/') {
        Some((c, n)) => (c, Some(n)),
        None => (selector, None),
    };
    let out: Vec<_> = FILES
        .iter()
        .filter(|(c, n, _)| *c == corpus && name.is_none_or(|want| want == *n))
        .map(|(c, n, text)| {
            let graph = Graph::parse(text).expect("bundled corpus files are valid");
            (format!("{c}/{n}"), graph)
        })
        .collect();
    if out.is_empty() {
        return Err(Error::UnknownCorpus(selector.to_owned()));
    }
    Ok(out)
}

pub fn graph(selector: &str) -> Result<Graph> {
    let mut all = load(selector)?;
    if all.len() != 1 {
        return Err(Error::UnknownCorpus(format!("{selector} names {} graphs, expected one", all.len())));
    }
    Ok(all.pop().unwrap().1)
}
