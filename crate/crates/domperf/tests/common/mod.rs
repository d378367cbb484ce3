//! Helpers shared by the integration tests: independent graph generators
//! that deliberately avoid the library's own enumeration order.

#![allow(dead_code)]

use std::collections::BTreeSet;

use domperf::Graph;
use rand::Rng;

/// Decodes a Prüfer sequence into its labeled tree on `n` vertices. The
/// map from sequences in `{0..n}^(n-2)` to labeled trees is a bijection,
/// so looping over all sequences walks every labeled tree exactly once.
pub fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    assert!(n >= 2, "a tree needs at least 2 vertices");
    assert_eq!(seq.len(), n - 2, "sequence length must be n - 2");
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = *leaves.iter().next().expect("a leaf always remains");
        leaves.remove(&leaf);
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let mut rest = leaves.into_iter();
    let (u, v) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((u, v));
    Graph::from_edges(n, &edges).expect("decoded edges form a simple graph")
}

/// Every Prüfer sequence of length `n - 2`, i.e. every labeled tree.
pub fn all_prufer_sequences(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let len = n.checked_sub(2).expect("n >= 2");
    let total = (n as u64).pow(len as u32);
    (0..total).map(move |mut code| {
        let mut seq = vec![0usize; len];
        for slot in seq.iter_mut() {
            *slot = (code % n as u64) as usize;
            code /= n as u64;
        }
        seq
    })
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices, connected or not,
/// generated by a row-major pair walk independent of the library's stream.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::from_edges(n, &edges).expect("pairs are in range")
    })
}

/// A connected graph on `n` vertices: a uniform random labeled tree plus
/// each remaining pair independently with probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let tree = prufer_tree(n, &seq);
    let mut edges: Vec<(usize, usize)> = tree.edges().collect();
    for i in 0..n {
        for j in i + 1..n {
            if !tree.has_edge(i, j) && rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("tree plus extra pairs is simple")
}

/// Deletes up to `deletions` edges, never breaking connectivity, yielding
/// a connected spanning subgraph on the same vertex set.
pub fn random_connected_spanning_subgraph(
    rng: &mut impl Rng,
    g: &Graph,
    deletions: usize,
) -> Graph {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for _ in 0..deletions {
        let deletable: Vec<usize> = (0..edges.len())
            .filter(|&idx| {
                let mut rest = edges.clone();
                rest.swap_remove(idx);
                Graph::from_edges(g.order(), &rest).unwrap().is_connected()
            })
            .collect();
        if deletable.is_empty() {
            break;
        }
        let idx = deletable[rng.gen_range(0..deletable.len())];
        edges.swap_remove(idx);
    }
    Graph::from_edges(g.order(), &edges).expect("subset of a simple graph's edges")
}
