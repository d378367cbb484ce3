//! Run the exhaustive three-recognizer cross-check and print its report.
//!
//! Run with:
//!
//! ```text
//! cargo run --release --example verify_theorem
//! cargo run --release --example verify_theorem -- 7
//! ```
//!
//! The optional argument raises the sweep ceiling (2..=7). Above order 6
//! the definitional oracle switches to a seeded 10000-graph sample per
//! order; the structural and forbidden-configuration recognizers still see
//! every graph.

use domperf::{verify_theorem, SampleConfig, VerifyConfig};

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("argument must be an integer"))
        .unwrap_or(6);
    let oracle_max_n = max_n.min(6);
    let sample = (max_n > oracle_max_n).then_some(SampleConfig { count: 10_000, seed: 42 });

    let config = VerifyConfig { max_n, oracle_max_n, sample, jobs: None };
    let report = verify_theorem(&config).expect("parameters are in range");
    print!("{}", report.to_text());
    std::process::exit(if report.ok { 0 } else { 1 });
}
