//! Exact domination, covering, and independence numbers for small graphs,
//! and recognizers for the class of graphs in which domination and
//! covering numbers agree hereditarily.
//!
//! A connected graph `G` of order at least 2 is *perfect* in the sense of
//! this crate when `γ(H) = β(H)` for every connected induced subgraph `H`
//! of `G` of order at least 2, where `γ` is the domination number and `β`
//! the vertex covering number. A characterization theorem makes the class
//! easy to recognize, and this crate implements three independent
//! recognizers plus an exhaustive cross-check of their agreement:
//!
//! * [`classify_structural`] finds a positive witness: the graph is a tree
//!   of diameter at most 4, or embeds in a complete bipartite graph
//!   `K_{2,n}` (equivalently, has an independent vertex cover of size at
//!   most 2).
//! * [`classify_forbidden`] finds a negative witness: the graph is the
//!   5-cycle, or contains a triangle or a 6-vertex path as an ordinary
//!   subgraph.
//! * [`find_violating_induced_subgraph`] applies the definition directly,
//!   searching for a connected induced subgraph with `γ < β`.
//! * [`verify_theorem`] runs all three over every labeled connected graph
//!   up to a configurable order and reports any disagreement.
//!
//! # Quick start
//!
//! ```
//! use domperf::{classify_structural, domination_number, covering_number, Graph, Verdict};
//!
//! let c5 = Graph::cycle(5).unwrap();
//! assert_eq!(domination_number(&c5).unwrap().value, 2);
//! assert_eq!(covering_number(&c5).unwrap().value, 3);
//! assert_eq!(classify_structural(&c5).unwrap().verdict(), Verdict::NotPerfect);
//!
//! let p5 = Graph::path(5).unwrap();
//! assert_eq!(classify_structural(&p5).unwrap().verdict(), Verdict::Perfect);
//! ```
//!
//! # Runnable examples
//!
//! Each major capability has a self-contained example under `examples/`:
//!
//! * `classify` — classify a graph with all three recognizers.
//! * `exact_numbers` — compute `γ`, `β`, `α` with optimal witnesses.
//! * `graph6` — encode and decode graph6 records.
//! * `violation_witness` — exhibit an induced subgraph with `γ < β`.
//! * `census` — stream labeled connected graphs and tally the class.
//! * `verify_theorem` — run the exhaustive recognizer cross-check.
//!
//! Run one with `cargo run --release --example classify -- DQc`.

pub mod enumeration;
pub mod graph;
pub mod graph6;
pub mod input;
pub mod perfection;
pub mod solvers;
pub mod verify;

pub use enumeration::{
    count_connected_labeled, enumerate_connected_graphs, EnumerationError,
    MAX_COUNT_ORDER, MAX_ENUMERATION_ORDER,
};
pub use graph::{Graph, GraphError, VertexSet, MAX_ORDER};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use input::{parse_graph, Format, InputError};
pub use perfection::{
    classify_forbidden, classify_structural, find_violating_induced_subgraph, is_perfect_oracle,
    Certificate, NotPerfectReason, PerfectReason, PerfectionError, Verdict, ORACLE_CAP,
};
pub use solvers::{
    covering_number, domination_number, independence_number, is_dominating_set,
    is_independent_set, is_vertex_cover, SolverError, SolverResult,
};
pub use verify::{
    verify_theorem, Disagreement, OracleMode, OrderReport, SampleConfig, VerificationReport,
    VerifyConfig,
};
