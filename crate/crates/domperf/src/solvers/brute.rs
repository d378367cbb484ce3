//! Exhaustive subset enumeration.
//!
//! Subsets are visited by ascending cardinality and lexicographically within
//! each cardinality, so the first feasible set found for a minimization
//! problem is the lexicographically least optimum (and symmetrically, the
//! search for a maximum independent set walks cardinalities downward). These
//! engines are deliberately simple: they double as the trusted oracle the
//! branch-and-bound engine is tested against.

use crate::graph::{subsets_of_size, Graph, VertexSet};
use crate::solvers::{
    is_dominating_set, is_independent_set, is_vertex_cover, SolverError, SolverResult,
};

fn smallest_feasible(
    g: &Graph,
    feasible: impl Fn(&Graph, VertexSet) -> bool,
) -> Result<SolverResult, SolverError> {
    let n = g.order();
    if n == 0 {
        return Err(SolverError::EmptyGraph);
    }
    for k in 0..=n {
        for mask in subsets_of_size(n, k) {
            let s = VertexSet::from_mask(mask);
            if feasible(g, s) {
                return Ok(SolverResult { value: k, witness: s });
            }
        }
    }
    unreachable!("the full vertex set is always feasible for these problems");
}

/// Minimum dominating set by exhaustive search.
pub fn domination_number(g: &Graph) -> Result<SolverResult, SolverError> {
    smallest_feasible(g, is_dominating_set)
}

/// Minimum vertex cover by exhaustive search.
pub fn covering_number(g: &Graph) -> Result<SolverResult, SolverError> {
    smallest_feasible(g, is_vertex_cover)
}

/// Maximum independent set by exhaustive search, walking cardinalities from
/// `n` downward.
pub fn independence_number(g: &Graph) -> Result<SolverResult, SolverError> {
    let n = g.order();
    if n == 0 {
        return Err(SolverError::EmptyGraph);
    }
    for k in (0..=n).rev() {
        for mask in subsets_of_size(n, k) {
            let s = VertexSet::from_mask(mask);
            if is_independent_set(g, s) {
                return Ok(SolverResult { value: k, witness: s });
            }
        }
    }
    unreachable!("the empty set is independent");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses_are_lexicographically_least() {
        let c5 = Graph::cycle(5).unwrap();
        let gamma = domination_number(&c5).unwrap();
        assert_eq!(gamma.value, 2);
        assert_eq!(gamma.witness, [0, 2].into_iter().collect());
        let beta = covering_number(&c5).unwrap();
        assert_eq!(beta.value, 3);
        assert_eq!(beta.witness, [0, 1, 3].into_iter().collect());
        let alpha = independence_number(&c5).unwrap();
        assert_eq!(alpha.value, 2);
        assert_eq!(alpha.witness, [0, 2].into_iter().collect());
    }

    #[test]
    fn p6_numbers() {
        let p6 = Graph::path(6).unwrap();
        assert_eq!(domination_number(&p6).unwrap().value, 2);
        assert_eq!(covering_number(&p6).unwrap().value, 3);
        assert_eq!(independence_number(&p6).unwrap().value, 3);
    }

    #[test]
    fn gallai_identity_on_tiny_graphs() {
        for g in [
            Graph::cycle(5).unwrap(),
            Graph::path(4).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::empty(3).unwrap(),
            Graph::star(3).unwrap(),
        ] {
            let beta = covering_number(&g).unwrap().value;
            let alpha = independence_number(&g).unwrap().value;
            assert_eq!(beta + alpha, g.order(), "{g:?}");
        }
    }
}
