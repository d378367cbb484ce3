//! Branch-and-bound engines for orders the exhaustive searches cannot reach.
//!
//! Domination: pick an undominated vertex of minimum degree and try each
//! member of its closed neighborhood as the next dominator; prune with the
//! packing bound `ceil(undominated / (max_degree + 1))`.
//!
//! Independence: branch a maximum-degree vertex in or out of the set, prune
//! with the trivial `current + remaining` upper bound, and seed the
//! incumbent with a greedy minimum-degree independent set.
//!
//! Covering rides on independence through the complement identity: the
//! complement of a maximum independent set is a minimum vertex cover.
//!
//! All tie-breaks are by lowest vertex index, so values and witnesses are
//! deterministic.

use crate::graph::{Graph, VertexSet};
use crate::solvers::{SolverError, SolverResult};

struct DominationSearch<'g> {
    g: &'g Graph,
    all: u64,
    /// Divisor of the packing bound: one new dominator covers at most
    /// `max_degree + 1` vertices.
    denom: usize,
    best_size: usize,
    best_set: u64,
}

impl DominationSearch<'_> {
    fn recurse(&mut self, chosen: u64, chosen_size: usize, dominated: u64) {
        if dominated == self.all {
            if chosen_size < self.best_size {
                self.best_size = chosen_size;
                self.best_set = chosen;
            }
            return;
        }
        let undominated = self.all & !dominated;
        let lower = (undominated.count_ones() as usize).div_ceil(self.denom);
        if chosen_size + lower >= self.best_size {
            return;
        }
        // Undominated vertex of minimum degree, lowest index on ties.
        let mut branch = usize::MAX;
        let mut branch_degree = usize::MAX;
        let mut bits = undominated;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let d = self.g.degree(v);
            if d < branch_degree {
                branch_degree = d;
                branch = v;
            }
        }
        let closed = self.g.neighbors(branch).mask() | 1 << branch;
        let mut candidates = closed;
        while candidates != 0 {
            let u = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let u_closed = self.g.neighbors(u).mask() | 1 << u;
            self.recurse(chosen | 1 << u, chosen_size + 1, dominated | u_closed);
        }
    }
}

/// Minimum dominating set by branch-and-bound.
pub fn domination_number(g: &Graph) -> Result<SolverResult, SolverError> {
    let n = g.order();
    if n == 0 {
        return Err(SolverError::EmptyGraph);
    }
    let all = g.vertex_set().mask();
    let max_degree = g.vertices().map(|v| g.degree(v)).max().unwrap();
    let mut search = DominationSearch {
        g,
        all,
        denom: max_degree + 1,
        // The full vertex set always dominates; the search improves on it.
        best_size: n,
        best_set: all,
    };
    search.recurse(0, 0, 0);
    Ok(SolverResult {
        value: search.best_size,
        witness: VertexSet::from_mask(search.best_set),
    })
}

struct IndependenceSearch<'g> {
    g: &'g Graph,
    best_size: usize,
    best_set: u64,
}

impl IndependenceSearch<'_> {
    fn recurse(&mut self, remaining: u64, current: u64, current_size: usize) {
        if remaining == 0 {
            if current_size > self.best_size {
                self.best_size = current_size;
                self.best_set = current;
            }
            return;
        }
        if current_size + remaining.count_ones() as usize <= self.best_size {
            return;
        }
        // Maximum degree within the remaining subgraph, lowest index on ties.
        let mut branch = 0;
        let mut branch_degree = 0;
        let mut first = true;
        let mut bits = remaining;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let d = (self.g.neighbors(v).mask() & remaining).count_ones() as usize;
            if first || d > branch_degree {
                first = false;
                branch_degree = d;
                branch = v;
            }
        }
        let closed = self.g.neighbors(branch).mask() | 1 << branch;
        self.recurse(remaining & !closed, current | 1 << branch, current_size + 1);
        self.recurse(remaining & !(1u64 << branch), current, current_size);
    }
}

/// Greedy independent set: repeatedly take a minimum-degree vertex of the
/// remaining subgraph and discard its closed neighborhood.
fn greedy_independent(g: &Graph) -> u64 {
    let mut remaining = g.vertex_set().mask();
    let mut set = 0u64;
    while remaining != 0 {
        let mut pick = 0;
        let mut pick_degree = usize::MAX;
        let mut bits = remaining;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let d = (g.neighbors(v).mask() & remaining).count_ones() as usize;
            if d < pick_degree {
                pick_degree = d;
                pick = v;
            }
        }
        set |= 1 << pick;
        remaining &= !(g.neighbors(pick).mask() | 1 << pick);
    }
    set
}

/// Maximum independent set by branch-and-bound.
pub fn independence_number(g: &Graph) -> Result<SolverResult, SolverError> {
    if g.order() == 0 {
        return Err(SolverError::EmptyGraph);
    }
    let seed = greedy_independent(g);
    let mut search = IndependenceSearch {
        g,
        best_size: seed.count_ones() as usize,
        best_set: seed,
    };
    search.recurse(g.vertex_set().mask(), 0, 0);
    Ok(SolverResult {
        value: search.best_size,
        witness: VertexSet::from_mask(search.best_set),
    })
}

/// Minimum vertex cover as the complement of a maximum independent set.
pub fn covering_number(g: &Graph) -> Result<SolverResult, SolverError> {
    let alpha = independence_number(g)?;
    Ok(SolverResult {
        value: g.order() - alpha.value,
        witness: g.vertex_set() - alpha.witness,
    })
}
