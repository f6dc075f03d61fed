//! Cops and Robbers on finite undirected graphs, solved as a reachability
//! game.
//!
//! The crate builds the expanded move digraph for `k` cops ([`arena`]),
//! solves it by backward induction into plies-to-capture ranks
//! ([`solver`]), plays strategies against each other ([`play`]) and checks
//! the results against brute-force minimax oracles ([`oracle`]).
//!
//! ```
//! use cops_robbers::{compute_values, ArenaParams, CaptureTime, Graph};
//!
//! let p4: Graph = "4 3\n0 1\n1 2\n2 3\n".parse().unwrap();
//! let table = compute_values(&ArenaParams::new(p4, 1)).unwrap();
//! assert!(table.is_cop_win());
//! assert_eq!(table.capture_time(), CaptureTime::Rounds(2));
//! ```

pub mod arena;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod play;
pub mod solver;

pub use arena::{position_count, Arena, ArenaParams, PosId, Position, Turn};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use oracle::{
    check_bound, check_memoryless_sufficiency, check_no_repetition, history_tree_value, truncated_value,
    TruncatedValue, TruncationParams, VerificationReport,
};
pub use play::{replay_transcript, run_play, Behavior, Outcome, Play};
pub use solver::{
    compute_values, cop_number, extract_strategies, CaptureTime, CopNumber, Player, Rank, Strategy, ValueTable,
};
