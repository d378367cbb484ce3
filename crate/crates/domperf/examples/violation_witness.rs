//! Exhibit a smallest connected induced subgraph on which the domination
//! number drops strictly below the covering number.
//!
//! Run with:
//!
//! ```text
//! cargo run --release --example violation_witness
//! cargo run --release --example violation_witness -- EEh_
//! ```

use domperf::{find_violating_induced_subgraph, parse_graph6, solvers, Graph};

fn main() {
    let g = match std::env::args().nth(1) {
        Some(record) => parse_graph6(&record).expect("argument must be a graph6 record"),
        None => Graph::path(6).expect("P6 is constructible"),
    };
    println!("order {}, {} edges", g.order(), g.edge_count());

    match find_violating_induced_subgraph(&g).expect("connected, order 2..=12") {
        None => println!("perfect: gamma = beta on every connected induced subgraph"),
        Some(set) => {
            let (sub, labels) = g.induced_subgraph(set).unwrap();
            let gamma = solvers::brute::domination_number(&sub).unwrap();
            let beta = solvers::brute::covering_number(&sub).unwrap();
            println!("violating induced subgraph on {set}:");
            println!("  gamma = {} < beta = {}", gamma.value, beta.value);
            // Witnesses come back in the subgraph's labels; map them home.
            let dom: Vec<usize> = gamma.witness.vertices().map(|v| labels[v]).collect();
            let cover: Vec<usize> = beta.witness.vertices().map(|v| labels[v]).collect();
            println!("  minimum dominating set (original labels): {dom:?}");
            println!("  minimum vertex cover   (original labels): {cover:?}");
        }
    }
}
