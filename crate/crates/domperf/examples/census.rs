//! Stream every labeled connected graph of small order and tally how many
//! are perfect, checking stream lengths against the closed-form count.
//!
//! Run with:
//!
//! ```text
//! cargo run --release --example census
//! ```

use domperf::{
    classify_structural, count_connected_labeled, enumerate_connected_graphs, Verdict,
};

fn main() {
    println!("{:>3} {:>10} {:>8}", "n", "connected", "perfect");
    for n in 2..=6 {
        let mut connected = 0u64;
        let mut perfect = 0u64;
        for g in enumerate_connected_graphs(n).expect("order is within enumeration range") {
            connected += 1;
            let cert = classify_structural(&g).expect("stream yields connected graphs");
            if cert.verdict() == Verdict::Perfect {
                perfect += 1;
            }
        }
        let expected = count_connected_labeled(n).expect("order is within counting range");
        assert_eq!(connected as u128, expected, "stream length vs closed form at n={n}");
        println!("{n:>3} {connected:>10} {perfect:>8}");
    }
}
