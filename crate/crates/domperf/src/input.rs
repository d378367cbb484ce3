//! Reading graphs from text in either supported format.
//!
//! Two formats are accepted:
//!
//! * **graph6** — one record on a single line, e.g. `DQc`.
//! * **edge list** — a header line `n m` followed by `m` lines `u v` with
//!   0-based endpoints, e.g. `3 2\n0 1\n1 2\n`.
//!
//! [`Format::Auto`] keys off the first non-whitespace byte: an ASCII digit
//! means edge list (graph6 headers for nonempty graphs start at `@`),
//! anything else is treated as graph6.

use crate::graph::{Graph, GraphError};
use crate::graph6::{parse_graph6, Graph6Error};

/// Input format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Graph6,
    Edges,
    #[default]
    Auto,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum InputError {
    #[error("input is empty")]
    Empty,
    #[error("input holds {0} graph6 records; expected exactly one")]
    MultipleRecords(usize),
    #[error("edge list header must be `n m`, got {0:?}")]
    MalformedHeader(String),
    #[error("edge list line {line} must be `u v`, got {text:?}")]
    MalformedEdge { line: usize, text: String },
    #[error("edge list declares {declared} edges but provides {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses exactly one graph from `text` in the given format.
pub fn parse_graph(text: &str, format: Format) -> Result<Graph, InputError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(InputError::Empty);
    }
    let format = match format {
        Format::Auto => {
            if trimmed.as_bytes()[0].is_ascii_digit() {
                Format::Edges
            } else {
                Format::Graph6
            }
        }
        other => other,
    };
    match format {
        Format::Graph6 => parse_single_graph6(trimmed),
        Format::Edges => parse_edge_list(trimmed),
        Format::Auto => unreachable!("resolved above"),
    }
}

fn parse_single_graph6(text: &str) -> Result<Graph, InputError> {
    let records: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    match records.as_slice() {
        [] => Err(InputError::Empty),
        [one] => Ok(parse_graph6(one)?),
        many => Err(InputError::MultipleRecords(many.len())),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph, InputError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or(InputError::Empty)?;
    let (n, m) = parse_pair(header)
        .ok_or_else(|| InputError::MalformedHeader(header.to_owned()))?;
    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines.enumerate() {
        let (u, v) = parse_pair(line).ok_or_else(|| InputError::MalformedEdge {
            line: idx + 2,
            text: line.to_owned(),
        })?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(InputError::EdgeCountMismatch { declared: m, found: edges.len() });
    }
    Ok(Graph::from_edges(n, &edges)?)
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut parts = line.split_whitespace();
    let a = parts.next()?.parse().ok()?;
    let b = parts.next()?.parse().ok()?;
    if parts.next().is_some() {
        return None;
    }
    Some((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_record_parses() {
        let g = parse_graph("DQc", Format::Graph6).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn edge_list_parses() {
        let g = parse_graph("3 2\n0 1\n1 2\n", Format::Edges).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn auto_detects_both() {
        assert_eq!(parse_graph("A_", Format::Auto).unwrap().order(), 2);
        assert_eq!(parse_graph("2 1\n0 1", Format::Auto).unwrap().order(), 2);
        // Leading whitespace does not confuse detection.
        assert_eq!(parse_graph("  \n2 1\n0 1\n", Format::Auto).unwrap().order(), 2);
    }

    #[test]
    fn empty_input_is_rejected() {
        assert_eq!(parse_graph("", Format::Auto), Err(InputError::Empty));
        assert_eq!(parse_graph("  \n ", Format::Graph6), Err(InputError::Empty));
    }

    #[test]
    fn multiple_graph6_records_are_rejected() {
        assert_eq!(
            parse_graph("A_\nA_\nA_", Format::Graph6),
            Err(InputError::MultipleRecords(3))
        );
    }

    #[test]
    fn malformed_edge_lists_are_rejected() {
        assert!(matches!(
            parse_graph("three two", Format::Edges),
            Err(InputError::MalformedHeader(_))
        ));
        assert!(matches!(
            parse_graph("3 2\n0 1\n1 2 9", Format::Edges),
            Err(InputError::MalformedEdge { line: 3, .. })
        ));
        assert_eq!(
            parse_graph("3 2\n0 1", Format::Edges),
            Err(InputError::EdgeCountMismatch { declared: 2, found: 1 })
        );
    }

    #[test]
    fn edge_list_vertex_errors_surface() {
        assert!(matches!(
            parse_graph("3 1\n0 7", Format::Edges),
            Err(InputError::Graph(GraphError::VertexOutOfRange { .. }))
        ));
        assert!(matches!(
            parse_graph("3 1\n1 1", Format::Edges),
            Err(InputError::Graph(GraphError::SelfLoop(1)))
        ));
    }

    #[test]
    fn graph6_errors_surface() {
        assert!(matches!(
            parse_graph("~??", Format::Graph6),
            Err(InputError::Graph6(Graph6Error::ExtendedHeader))
        ));
    }
}
