//! Exhaustive enumeration of labeled connected graphs, plus an independent
//! closed-form count to check the stream against.
//!
//! Enumeration is labeled, not isomorphism-reduced: for order `n` every one
//! of the `2^(n(n-1)/2)` edge masks is visited in increasing numeric order
//! and filtered by connectivity. Bit `k` of a mask is the `k`-th pair in
//! upper-triangle column order `(0,1), (0,2), (1,2), (0,3), ...` — the same
//! pair order the graph6 body uses.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order the exhaustive enumerator accepts. Order 8 would already
/// mean 2^28 masks.
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Largest order the counting recurrence accepts while staying inside
/// `u128` arithmetic (the leading term is `2^(n(n-1)/2) = 2^120` at 16).
pub const MAX_COUNT_ORDER: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("order {order} outside the supported enumeration range 1..={max}", max = MAX_ENUMERATION_ORDER)]
    OrderOutOfRange { order: usize },
    #[error("order {order} outside the supported counting range 1..={max}", max = MAX_COUNT_ORDER)]
    CountOrderOutOfRange { order: usize },
    #[error("arithmetic overflow while counting connected graphs")]
    Overflow,
    #[error("invalid verification parameters: {0}")]
    InvalidConfig(String),
    #[error("failed to build worker pool: {0}")]
    WorkerPool(String),
}

pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Materializes edge mask `mask` as a graph on `n` vertices.
pub(crate) fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_rows_unchecked(n, rows)
}

/// All labeled connected graphs on `n` vertices, in increasing edge-mask
/// order. `n` ranges over `1..=`[`MAX_ENUMERATION_ORDER`].
pub fn enumerate_connected_graphs(
    n: usize,
) -> Result<impl Iterator<Item = Graph>, EnumerationError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(EnumerationError::OrderOutOfRange { order: n });
    }
    let total = 1u64 << pair_count(n);
    Ok((0..total)
        .map(move |mask| graph_from_edge_mask(n, mask))
        .filter(|g| g.is_connected()))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut result: u128 = 1;
    for i in 0..k.min(n - k) {
        result = result * (n - i) as u128 / (i + 1) as u128;
    }
    result
}

/// Number of labeled connected graphs on `n` vertices, by the standard
/// subtraction recurrence: from all `2^(n(n-1)/2)` graphs remove those whose
/// component containing vertex 0 has `k < n` vertices —
/// `binom(n-1, k-1) * count(k) * 2^((n-k)(n-k-1)/2)` for each `k`.
///
/// This shares no code with [`enumerate_connected_graphs`], so the two can
/// check each other.
pub fn count_connected_labeled(n: usize) -> Result<u128, EnumerationError> {
    if !(1..=MAX_COUNT_ORDER).contains(&n) {
        return Err(EnumerationError::CountOrderOutOfRange { order: n });
    }
    let mut counts: Vec<u128> = Vec::with_capacity(n);
    for m in 1..=n {
        let mut total: u128 = 1u128 << pair_count(m);
        for k in 1..m {
            let term = binomial(m - 1, k - 1)
                .checked_mul(counts[k - 1])
                .and_then(|t| t.checked_mul(1u128 << pair_count(m - k)))
                .ok_or(EnumerationError::Overflow)?;
            total = total.checked_sub(term).ok_or(EnumerationError::Overflow)?;
        }
        counts.push(total);
    }
    Ok(counts[n - 1])
}
