//! Compute exact domination, covering, and independence numbers with
//! optimal witnesses, and check Gallai's identity along the way.
//!
//! Run with:
//!
//! ```text
//! cargo run --release --example exact_numbers
//! cargo run --release --example exact_numbers -- DQc
//! ```

use domperf::{
    covering_number, domination_number, independence_number, is_dominating_set,
    is_independent_set, is_vertex_cover, parse_graph6, Graph,
};

fn report(name: &str, g: &Graph) {
    let gamma = domination_number(g).expect("nonempty graph");
    let beta = covering_number(g).expect("nonempty graph");
    let alpha = independence_number(g).expect("nonempty graph");

    assert!(is_dominating_set(g, gamma.witness));
    assert!(is_vertex_cover(g, beta.witness));
    assert!(is_independent_set(g, alpha.witness));
    // Gallai: a minimum cover and a maximum independent set partition V.
    assert_eq!(beta.value + alpha.value, g.order());

    println!("{name} (order {}):", g.order());
    println!("  gamma = {}  witness {}", gamma.value, gamma.witness);
    println!("  beta  = {}  witness {}", beta.value, beta.witness);
    println!("  alpha = {}  witness {}", alpha.value, alpha.witness);
}

fn main() {
    if let Some(record) = std::env::args().nth(1) {
        let g = parse_graph6(&record).expect("argument must be a graph6 record");
        report(&record, &g);
        return;
    }
    report("P6", &Graph::path(6).unwrap());
    report("C5", &Graph::cycle(5).unwrap());
    report("K_{2,3}", &Graph::complete_bipartite(2, 3).unwrap());
    report("star with 6 leaves", &Graph::star(6).unwrap());
}
