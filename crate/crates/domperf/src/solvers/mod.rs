//! Exact domination, covering and independence numbers with witnesses.
//!
//! Every public entry point returns both the optimum value and one optimal
//! set. Two independent engines back them: [`brute`] enumerates vertex
//! subsets outright and [`bnb`] runs branch-and-bound searches. The
//! top-level functions dispatch on order — exhaustive enumeration below a
//! threshold, branch-and-bound above it — but both engines stay public so
//! they can be cross-checked against each other.
//!
//! Values are deterministic. Witnesses are deterministic per engine: the
//! exhaustive engine reports the lexicographically least optimum, the
//! branch-and-bound engine the first optimum its fixed search order visits.

pub mod bnb;
pub mod brute;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Largest order handled by exhaustive subset enumeration for the domination
/// number; beyond this the branch-and-bound engine takes over.
pub const BRUTE_FORCE_DOMINATION_LIMIT: usize = 16;

/// Largest order handled by exhaustive subset enumeration for the covering
/// and independence numbers.
pub const BRUTE_FORCE_COVERING_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("solver requires a graph with at least one vertex")]
    EmptyGraph,
}

/// An optimum value together with one optimal witness set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SolverResult {
    pub value: usize,
    pub witness: VertexSet,
}

/// Whether every vertex outside `d` has a neighbor in `d`.
///
/// Isolated vertices therefore must belong to `d`. Members of `d` outside
/// the graph are ignored.
pub fn is_dominating_set(g: &Graph, d: VertexSet) -> bool {
    let d = d.mask() & g.vertex_set().mask();
    g.vertices()
        .all(|v| d >> v & 1 == 1 || g.neighbors(v).mask() & d != 0)
}

/// Whether every edge has at least one endpoint in `c`.
pub fn is_vertex_cover(g: &Graph, c: VertexSet) -> bool {
    let outside = g.vertex_set().mask() & !c.mask();
    VertexSet::from_mask(outside)
        .vertices()
        .all(|v| g.neighbors(v).mask() & outside == 0)
}

/// Whether no two members of `s` are adjacent.
pub fn is_independent_set(g: &Graph, s: VertexSet) -> bool {
    s.vertices().all(|v| g.neighbors(v).mask() & s.mask() == 0)
}

/// Minimum size of a dominating set (the domination number), with witness.
pub fn domination_number(g: &Graph) -> Result<SolverResult, SolverError> {
    if g.order() <= BRUTE_FORCE_DOMINATION_LIMIT {
        brute::domination_number(g)
    } else {
        bnb::domination_number(g)
    }
}

/// Minimum size of a vertex cover (the covering number), with witness.
pub fn covering_number(g: &Graph) -> Result<SolverResult, SolverError> {
    if g.order() <= BRUTE_FORCE_COVERING_LIMIT {
        brute::covering_number(g)
    } else {
        bnb::covering_number(g)
    }
}

/// Maximum size of an independent set (the independence number), with
/// witness.
pub fn independence_number(g: &Graph) -> Result<SolverResult, SolverError> {
    if g.order() <= BRUTE_FORCE_COVERING_LIMIT {
        brute::independence_number(g)
    } else {
        bnb::independence_number(g)
    }
}
