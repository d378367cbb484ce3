//! Encode and decode graphs in graph6 format.
//!
//! Run with:
//!
//! ```text
//! cargo run --release --example graph6
//! cargo run --release --example graph6 -- DQc
//! ```
//!
//! With an argument, decodes the record and prints the edge list; without
//! one, encodes a handful of named graphs.

use domperf::{parse_graph6, write_graph6, Graph};

fn main() {
    if let Some(record) = std::env::args().nth(1) {
        let g = parse_graph6(&record).expect("argument must be a graph6 record");
        println!("{record}: order {}, {} edges", g.order(), g.edge_count());
        for (u, v) in g.edges() {
            println!("  {u} {v}");
        }
        let back = write_graph6(&g).expect("round-trip stays in range");
        assert_eq!(parse_graph6(&back).unwrap(), g);
        println!("canonical encoding: {back}");
        return;
    }

    let named = [
        ("K2", Graph::complete(2).unwrap()),
        ("P4", Graph::path(4).unwrap()),
        ("C5", Graph::cycle(5).unwrap()),
        ("K4", Graph::complete(4).unwrap()),
        ("K_{2,3}", Graph::complete_bipartite(2, 3).unwrap()),
    ];
    for (name, g) in &named {
        println!("{name:8} -> {}", write_graph6(g).unwrap());
    }
}
