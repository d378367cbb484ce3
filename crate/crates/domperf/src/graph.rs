//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.
//!
//! Vertices are the dense labels `0..order`. Adjacency is stored as one `u64`
//! bit row per vertex, kept symmetric and free of self-loops by every
//! constructor. Subsets of vertices are [`VertexSet`] bitmasks, so the solver
//! and recognizer loops elsewhere in the crate stay branch-light word
//! operations.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest supported vertex count.
///
/// Chosen so every graph fits a single-byte graph6 header (orders 0..=62) and
/// every vertex set fits one `u64` mask with room to spare.
pub const MAX_ORDER: usize = 62;

/// Errors from graph construction and the basic structural queries.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("order {order} exceeds the maximum supported order {max}", max = MAX_ORDER)]
    OrderTooLarge { order: usize },
    #[error("{0}")]
    InvalidParameter(&'static str),
    #[error("graph is not connected")]
    Disconnected,
    #[error("operation requires a graph with at least one vertex")]
    Empty,
}

/// A subset of the vertices `0..order` of some graph, stored as a bitmask.
///
/// The set does not remember which graph it belongs to; operations that take
/// a `VertexSet` state how out-of-range members are treated.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < 64);
        VertexSet(1 << v)
    }

    /// Builds a set from raw mask bits (bit `i` = vertex `i`).
    pub fn from_mask(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// The raw mask bits (bit `i` = vertex `i`).
    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn lowest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Display for VertexSet {
    /// Compact ascending form, e.g. `{0,2,4}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet{self}")
    }
}

impl Serialize for VertexSet {
    /// Serializes as the ascending list of members, e.g. `[0,2,4]`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.vertices())
    }
}

/// An undirected simple graph with vertex labels `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are deduplicated; self-loops and out-of-range endpoints
    /// are rejected.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        debug_assert!(g.check_invariants());
        Ok(g)
    }

    /// The edgeless graph on `order` vertices (order 0 is allowed).
    pub fn empty(order: usize) -> Result<Graph, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { order });
        }
        Ok(Graph {
            order,
            rows: vec![0; order],
        })
    }

    /// Path on `n >= 1` vertices, edges `(i, i+1)`.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidParameter("path requires n >= 1 vertices"));
        }
        let mut g = Graph::empty(n)?;
        for i in 1..n {
            g.add_edge(i - 1, i)?;
        }
        Ok(g)
    }

    /// Cycle on `n >= 3` vertices, edges `(i, i+1)` plus `(n-1, 0)`.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParameter("cycle requires n >= 3 vertices"));
        }
        let mut g = Graph::path(n)?;
        g.add_edge(n - 1, 0)?;
        Ok(g)
    }

    /// Complete graph on `n >= 1` vertices.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidParameter("complete requires n >= 1 vertices"));
        }
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Star with center `0` and `leaves >= 1` leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Result<Graph, GraphError> {
        if leaves < 1 {
            return Err(GraphError::InvalidParameter("star requires at least 1 leaf"));
        }
        let mut g = Graph::empty(leaves + 1)?;
        for v in 1..=leaves {
            g.add_edge(0, v)?;
        }
        Ok(g)
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`, `a, b >= 1`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
        if a < 1 || b < 1 {
            return Err(GraphError::InvalidParameter(
                "complete_bipartite requires both sides non-empty",
            ));
        }
        let mut g = Graph::empty(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Internal constructor for callers that already hold valid symmetric
    /// rows (the exhaustive enumerator builds millions of graphs and skips
    /// re-validation).
    pub(crate) fn from_rows_unchecked(order: usize, rows: Vec<u64>) -> Graph {
        let g = Graph { order, rows };
        debug_assert!(g.check_invariants());
        g
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.order {
            return Err(GraphError::VertexOutOfRange {
                vertex: u,
                order: self.order,
            });
        }
        if v >= self.order {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    /// Symmetry, no self-loops, no bits at or above `order`.
    fn check_invariants(&self) -> bool {
        let all = self.vertex_set().mask();
        self.rows.iter().enumerate().all(|(v, &row)| {
            row & !all == 0
                && row >> v & 1 == 0
                && VertexSet::from_mask(row)
                    .vertices()
                    .all(|u| self.rows[u] >> v & 1 == 1)
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.rows[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_mask(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        if self.order == 0 {
            VertexSet::EMPTY
        } else {
            VertexSet::from_mask(u64::MAX >> (64 - self.order))
        }
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            (VertexSet::from_mask(self.rows[u]) - VertexSet::from_mask(u64::MAX >> (63 - u)))
                .vertices()
                .map(move |v| (u, v))
        })
    }

    /// Bit-parallel flood fill from the lowest member of `mask`, restricted
    /// to `mask`. Empty masks count as connected.
    pub(crate) fn is_connected_within(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let mut reached = mask & mask.wrapping_neg(); // lowest set bit
        loop {
            let mut next = reached;
            let mut fresh = reached;
            while fresh != 0 {
                let v = fresh.trailing_zeros() as usize;
                fresh &= fresh - 1;
                next |= self.rows[v] & mask;
            }
            if next == reached {
                return reached == mask;
            }
            reached = next;
        }
    }

    /// Whether the graph is connected. Orders 0 and 1 count as connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_set().mask())
    }

    /// Eccentricity of `start` by level-synchronous BFS, plus the set of
    /// reached vertices.
    fn eccentricity(&self, start: usize) -> (usize, u64) {
        let mut visited = 1u64 << start;
        let mut frontier = visited;
        let mut dist = 0;
        loop {
            let mut next = 0u64;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.rows[v];
            }
            next &= !visited;
            if next == 0 {
                return (dist, visited);
            }
            visited |= next;
            frontier = next;
            dist += 1;
        }
    }

    /// Longest shortest-path distance over all vertex pairs.
    ///
    /// Errors on the empty graph and on disconnected graphs.
    pub fn diameter(&self) -> Result<usize, GraphError> {
        if self.order == 0 {
            return Err(GraphError::Empty);
        }
        let all = self.vertex_set().mask();
        let mut diam = 0;
        for v in 0..self.order {
            let (ecc, visited) = self.eccentricity(v);
            if visited != all {
                return Err(GraphError::Disconnected);
            }
            diam = diam.max(ecc);
        }
        Ok(diam)
    }

    /// Connected and acyclic, i.e. connected with exactly `order - 1` edges.
    /// The one-vertex graph is a tree; the empty graph is not.
    pub fn is_tree(&self) -> bool {
        self.order >= 1 && self.edge_count() == self.order - 1 && self.is_connected()
    }

    /// The subgraph induced by `s`, together with the vertex relabeling.
    ///
    /// Labels are compacted in sorted order: the k-th smallest member of `s`
    /// becomes vertex `k`, and `vertex_map[k]` recovers the original label.
    /// Errors if `s` contains a vertex outside the graph.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if !s.is_subset_of(self.vertex_set()) {
            let vertex = (s - self.vertex_set()).lowest().unwrap();
            return Err(GraphError::VertexOutOfRange {
                vertex,
                order: self.order,
            });
        }
        let vertex_map: Vec<usize> = s.vertices().collect();
        let mut rows = vec![0u64; vertex_map.len()];
        for (new_u, &old_u) in vertex_map.iter().enumerate() {
            for (new_v, &old_v) in vertex_map.iter().enumerate() {
                if self.rows[old_u] >> old_v & 1 == 1 {
                    rows[new_u] |= 1 << new_v;
                }
            }
        }
        Ok((Graph::from_rows_unchecked(vertex_map.len(), rows), vertex_map))
    }

    /// All vertex subsets of size at least `min_size` that induce a connected
    /// subgraph, streamed by ascending cardinality and lexicographically
    /// within each cardinality (so the stream order is deterministic and
    /// small witnesses are discovered first).
    pub fn connected_induced_vertex_sets(
        &self,
        min_size: usize,
    ) -> impl Iterator<Item = VertexSet> + '_ {
        let n = self.order;
        (min_size..=n)
            .flat_map(move |k| subsets_of_size(n, k))
            .filter(move |&mask| self.is_connected_within(mask))
            .map(VertexSet::from_mask)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({u},{v})")?;
        }
        write!(f, "])")
    }
}

/// All `k`-subsets of `0..n` as masks, in lexicographic order of their
/// ascending member lists: `{0,1} < {0,2} < ... < {1,2} < ...`.
pub(crate) fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    debug_assert!(n <= MAX_ORDER);
    let mut indices: Vec<usize> = (0..k).collect();
    let mut exhausted = k > n;
    std::iter::from_fn(move || {
        if exhausted {
            return None;
        }
        let mask = indices.iter().fold(0u64, |m, &i| m | 1 << i);
        // Advance to the next combination: bump the rightmost index that has
        // room, then reset everything to its right.
        let mut i = k;
        loop {
            if i == 0 {
                exhausted = true;
                break;
            }
            i -= 1;
            if indices[i] < n - (k - i) {
                indices[i] += 1;
                for j in i + 1..k {
                    indices[j] = indices[j - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_builds_k2() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn from_edges_deduplicates() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(63, &[]),
            Err(GraphError::OrderTooLarge { order: 63 })
        );
    }

    #[test]
    fn order_zero_is_constructible() {
        let g = Graph::from_edges(0, &[]).unwrap();
        assert_eq!(g.order(), 0);
        assert!(g.is_connected());
        assert_eq!(g.diameter(), Err(GraphError::Empty));
    }

    #[test]
    fn named_graph_shapes() {
        let p6 = Graph::path(6).unwrap();
        assert_eq!((p6.order(), p6.edge_count()), (6, 5));
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!((c3.order(), c3.edge_count()), (3, 3));
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        let s4 = Graph::star(4).unwrap();
        assert_eq!((s4.order(), s4.degree(0)), (5, 4));
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        assert_eq!((k23.order(), k23.edge_count()), (5, 6));
        assert!(!k23.has_edge(0, 1));
        assert!(k23.has_edge(0, 2));
    }

    #[test]
    fn named_graph_rejects_bad_params() {
        assert!(Graph::path(0).is_err());
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::complete(0).is_err());
        assert!(Graph::star(0).is_err());
        assert!(Graph::complete_bipartite(0, 2).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::cycle(5).unwrap().is_connected());
        assert!(Graph::path(1).unwrap().is_connected());
        // Two disjoint edges.
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
    }

    #[test]
    fn diameters() {
        assert_eq!(Graph::path(5).unwrap().diameter(), Ok(4));
        assert_eq!(Graph::path(6).unwrap().diameter(), Ok(5));
        assert_eq!(Graph::complete_bipartite(2, 3).unwrap().diameter(), Ok(2));
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.diameter(), Err(GraphError::Disconnected));
    }

    /// Independent distance oracle: Floyd-Warshall over the full matrix.
    fn diameter_floyd_warshall(g: &Graph) -> Option<usize> {
        let n = g.order();
        const INF: usize = usize::MAX / 4;
        let mut d = vec![vec![INF; n]; n];
        for (v, row) in d.iter_mut().enumerate() {
            row[v] = 0;
            for u in g.neighbors(v).vertices() {
                row[u] = 1;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                }
            }
        }
        let diam = d.iter().flatten().copied().max()?;
        (diam < INF).then_some(diam)
    }

    #[test]
    fn diameter_matches_floyd_warshall() {
        let graphs = [
            Graph::path(7).unwrap(),
            Graph::cycle(6).unwrap(),
            Graph::complete_bipartite(2, 4).unwrap(),
            Graph::star(5).unwrap(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4)]).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(g.diameter().ok(), diameter_floyd_warshall(g), "{g:?}");
        }
    }

    #[test]
    fn path_diameter_is_order_minus_one() {
        for n in 1..=10 {
            assert_eq!(Graph::path(n).unwrap().diameter(), Ok(n - 1));
        }
    }

    #[test]
    fn tree_recognition() {
        assert!(Graph::path(6).unwrap().is_tree());
        assert!(Graph::path(1).unwrap().is_tree());
        assert!(Graph::star(7).unwrap().is_tree());
        assert!(!Graph::cycle(4).unwrap().is_tree());
        assert!(!Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap().is_tree());
        assert!(!Graph::empty(0).unwrap().is_tree());
    }

    #[test]
    fn induced_subgraph_relabels_in_sorted_order() {
        let c5 = Graph::cycle(5).unwrap();
        let (p3, map) = c5
            .induced_subgraph([1, 2, 3].into_iter().collect())
            .unwrap();
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(p3.order(), 3);
        assert_eq!(p3.edge_count(), 2);
        assert!(p3.has_edge(0, 1) && p3.has_edge(1, 2) && !p3.has_edge(0, 2));
    }

    #[test]
    fn induced_subgraph_of_k23_is_star() {
        // Keep one vertex of the 2-side and the whole 3-side.
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        let (h, map) = k23
            .induced_subgraph([0, 2, 3, 4].into_iter().collect())
            .unwrap();
        assert_eq!(map, vec![0, 2, 3, 4]);
        assert_eq!(h.degree(0), 3);
        assert_eq!(h.edge_count(), 3);
    }

    #[test]
    fn induced_subgraph_rejects_out_of_range() {
        let g = Graph::path(3).unwrap();
        assert_eq!(
            g.induced_subgraph(VertexSet::from_mask(0b1001)),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
    }

    #[test]
    fn subsets_stream_is_lexicographic() {
        let got: Vec<u64> = subsets_of_size(4, 2).collect();
        let want = vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100];
        assert_eq!(got, want);
        assert_eq!(subsets_of_size(3, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(subsets_of_size(2, 3).count(), 0);
    }

    #[test]
    fn connected_sets_of_p3() {
        let p3 = Graph::path(3).unwrap();
        let got: Vec<VertexSet> = p3.connected_induced_vertex_sets(2).collect();
        let want: Vec<VertexSet> = [0b011u64, 0b110, 0b111]
            .into_iter()
            .map(VertexSet::from_mask)
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn connected_sets_of_k2() {
        let k2 = Graph::path(2).unwrap();
        let got: Vec<VertexSet> = k2.connected_induced_vertex_sets(2).collect();
        assert_eq!(got, vec![VertexSet::from_mask(0b11)]);
    }

    #[test]
    fn connected_sets_match_brute_filter_on_small_graphs() {
        // Independent oracle: filter every subset mask by a from-scratch
        // connectivity test on the induced subgraph.
        for g in [
            Graph::cycle(5).unwrap(),
            Graph::path(6).unwrap(),
            Graph::complete_bipartite(2, 3).unwrap(),
            Graph::star(5).unwrap(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (4, 5), (3, 4)]).unwrap(),
        ] {
            let n = g.order();
            let mut expected: Vec<VertexSet> = (0u64..1 << n)
                .filter(|&mask| {
                    mask.count_ones() >= 2 && {
                        let (h, _) = g.induced_subgraph(VertexSet::from_mask(mask)).unwrap();
                        h.is_connected()
                    }
                })
                .map(VertexSet::from_mask)
                .collect();
            expected.sort_by_key(|s| (s.len(), s.vertices().collect::<Vec<_>>()));
            let got: Vec<VertexSet> = g.connected_induced_vertex_sets(2).collect();
            assert_eq!(got, expected, "{g:?}");
        }
    }

    #[test]
    fn connected_sets_of_c5_count() {
        // Arcs of length 2..4 (5 each) plus the full cycle.
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.connected_induced_vertex_sets(2).count(), 16);
    }

    #[test]
    fn vertex_set_display_and_ops() {
        let s: VertexSet = [4, 0, 2].into_iter().collect();
        assert_eq!(s.to_string(), "{0,2,4}");
        assert_eq!(s.len(), 3);
        assert!(s.contains(2) && !s.contains(1));
        let t = VertexSet::singleton(2);
        assert_eq!((s - t).to_string(), "{0,4}");
        assert_eq!((s & t).to_string(), "{2}");
        assert_eq!((s | VertexSet::singleton(1)).len(), 4);
        assert!(t.is_subset_of(s));
        assert_eq!(VertexSet::EMPTY.to_string(), "{}");
    }
}
