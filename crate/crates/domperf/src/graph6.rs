//! The graph6 text format for undirected simple graphs, restricted to the
//! single-byte-header variant (orders 0..=62).
//!
//! A record is one header byte `order + 63` followed by the upper-triangle
//! adjacency bits read column by column — pair order `(0,1), (0,2), (1,2),
//! (0,3), ...` — packed big-endian six bits per byte, zero-padded, each body
//! byte offset by 63. See "Description of graph6 and sparse6 encodings" in
//! the nauty distribution (formats.txt).

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_ORDER};

const OFFSET: u8 = 63;
/// Header byte announcing a multi-byte order (orders >= 63), which this
/// implementation deliberately does not support.
const EXTENDED_HEADER: u8 = 126;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("invalid graph6 header byte {0:#04x}")]
    InvalidHeader(u8),
    #[error("multi-byte graph6 headers (order >= 63) are not supported")]
    ExtendedHeader,
    #[error("graph6 record truncated: expected {expected} body bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing bytes after graph6 record: expected {expected} body bytes, found {found}")]
    TrailingBytes { expected: usize, found: usize },
    #[error("invalid graph6 body byte {byte:#04x} at offset {offset}")]
    InvalidBodyByte { offset: usize, byte: u8 },
    #[error("order {order} exceeds the maximum supported order {max}", max = MAX_ORDER)]
    OrderTooLarge { order: usize },
}

fn body_len(order: usize) -> usize {
    (order * (order - 1) / 2).div_ceil(6)
}

/// Decodes a single graph6 record (no surrounding whitespace).
pub fn parse_graph6(record: &str) -> Result<Graph, Graph6Error> {
    let bytes = record.as_bytes();
    let (&header, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if header == EXTENDED_HEADER {
        return Err(Graph6Error::ExtendedHeader);
    }
    if !(OFFSET..EXTENDED_HEADER).contains(&header) {
        return Err(Graph6Error::InvalidHeader(header));
    }
    let order = usize::from(header - OFFSET);
    if order > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge { order });
    }
    let expected = if order == 0 { 0 } else { body_len(order) };
    match body.len() {
        found if found < expected => return Err(Graph6Error::Truncated { expected, found }),
        found if found > expected => return Err(Graph6Error::TrailingBytes { expected, found }),
        _ => {}
    }
    for (offset, &byte) in body.iter().enumerate() {
        if !(OFFSET..=OFFSET + 63).contains(&byte) {
            return Err(Graph6Error::InvalidBodyByte { offset, byte });
        }
    }
    let mut rows = vec![0u64; order];
    let mut pos = 0;
    for j in 1..order {
        for i in 0..j {
            let bit = (body[pos / 6] - OFFSET) >> (5 - pos % 6) & 1;
            if bit == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            pos += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(order, rows))
}

/// Encodes a graph as a canonical graph6 record (zero padding bits).
pub fn write_graph6(g: &Graph) -> Result<String, GraphError> {
    let order = g.order();
    if order > MAX_ORDER {
        return Err(GraphError::OrderTooLarge { order });
    }
    let mut out = vec![OFFSET + order as u8];
    if order > 0 {
        out.resize(1 + body_len(order), OFFSET);
        let mut pos = 0;
        for j in 1..order {
            for i in 0..j {
                if g.has_edge(i, j) {
                    out[1 + pos / 6] += 1 << (5 - pos % 6);
                }
                pos += 1;
            }
        }
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_known_two_vertex_records() {
        // Hand-packed: order 2, one adjacency bit. Bit set -> 0b100000 + 63 =
        // 95 = '_'; bit clear -> 63 = '?'.
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.order(), k2.edge_count()), (2, 1));
        let e2 = parse_graph6("A?").unwrap();
        assert_eq!((e2.order(), e2.edge_count()), (2, 0));
    }

    #[test]
    fn write_known_two_vertex_records() {
        assert_eq!(write_graph6(&Graph::path(2).unwrap()).unwrap(), "A_");
        assert_eq!(write_graph6(&Graph::empty(2).unwrap()).unwrap(), "A?");
    }

    #[test]
    fn five_vertex_record_dqc() {
        // 'D' = order 5; body "Qc" = 010010 100100 -> pairs (0,2), (1,3),
        // (0,4), (3,4) in column order.
        let g = parse_graph6("DQc").unwrap();
        assert_eq!(g.order(), 5);
        let edges: Vec<(usize, usize)> = g.edges().collect();
        assert_eq!(edges, vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(write_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn zero_and_one_vertex_records() {
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(parse_graph6("@").unwrap().order(), 1);
    }

    #[test]
    fn malformed_records() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("\n"), Err(Graph6Error::InvalidHeader(b'\n')));
        assert_eq!(
            parse_graph6("A"),
            Err(Graph6Error::Truncated { expected: 1, found: 0 })
        );
        assert_eq!(
            parse_graph6("A__"),
            Err(Graph6Error::TrailingBytes { expected: 1, found: 2 })
        );
        assert_eq!(parse_graph6("~??"), Err(Graph6Error::ExtendedHeader));
        assert_eq!(
            parse_graph6("A\t"),
            Err(Graph6Error::InvalidBodyByte { offset: 0, byte: b'\t' })
        );
    }

    #[test]
    fn round_trip_random_graphs() {
        // Deterministic xorshift so the test needs no RNG dependency here.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for trial in 0..500 {
            let order = (next() % 20 + 1) as usize;
            let mut edges = Vec::new();
            for u in 0..order {
                for v in u + 1..order {
                    if next() % 3 == 0 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(order, &edges).unwrap();
            let record = write_graph6(&g).unwrap();
            let back = parse_graph6(&record).unwrap();
            assert_eq!(g, back, "trial {trial}, record {record}");
            assert_eq!(write_graph6(&back).unwrap(), record);
        }
    }

    #[test]
    fn round_trip_max_order() {
        let g = Graph::complete(62).unwrap();
        let record = write_graph6(&g).unwrap();
        assert_eq!(record.as_bytes()[0], 63 + 62);
        assert_eq!(parse_graph6(&record).unwrap(), g);
    }

    #[test]
    fn nonzero_padding_is_tolerated_on_parse() {
        // Order 3 has 3 adjacency bits and 3 padding bits. 'f' - 63 =
        // 0b100111 carries the same adjacency as '_' (0b100000) plus set
        // padding; parsing ignores the padding and re-encoding is canonical.
        let g = parse_graph6("Bf").unwrap();
        let h = parse_graph6("B_").unwrap();
        assert_eq!(g, h);
        assert_eq!(write_graph6(&g).unwrap(), "B_");
    }
}
