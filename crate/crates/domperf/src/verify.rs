//! Exhaustive verification that the three perfection recognizers agree.
//!
//! For every order up to `max_n` (at most 7), every labeled connected graph
//! is classified by the structural and forbidden-configuration recognizers.
//! The definitional oracle joins in — on every graph for orders up to
//! `oracle_max_n`, on a seeded random sample of the stream for larger
//! orders when a sample is configured. All emitted certificates are
//! re-validated, and per-order connected counts are checked against the
//! closed-form count.
//!
//! The work is partitioned into contiguous edge-mask ranges and fanned out
//! over a worker pool; results are merged in range order, so a report is
//! byte-for-byte reproducible for fixed parameters (timing comment lines
//! aside) no matter how many workers run.

use std::collections::HashSet;
use std::io;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::enumeration::{
    count_connected_labeled, graph_from_edge_mask, pair_count, EnumerationError,
    MAX_ENUMERATION_ORDER,
};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::perfection::{
    forbidden_defect, structural_perfect_reason, violating_search, Certificate, NotPerfectReason,
    Verdict,
};

/// Edge masks per work unit. Small enough to load many workers even at
/// order 6, irrelevant to the output (ranges are merged in order).
const CHUNK_MASKS: u64 = 1024;

/// Oracle sampling parameters: how many graphs per affected order, and the
/// seed the sample is drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SampleConfig {
    pub count: usize,
    pub seed: u64,
}

/// Parameters for [`verify_theorem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Verify orders `2..=max_n`; must lie in `2..=7`.
    pub max_n: usize,
    /// Run the definitional oracle on every graph of order up to this.
    pub oracle_max_n: usize,
    /// For orders above `oracle_max_n`, run the oracle on this many graphs
    /// drawn uniformly without replacement from the connected stream.
    pub sample: Option<SampleConfig>,
    /// Worker threads; `None` uses the process-wide default pool.
    pub jobs: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 6,
            oracle_max_n: 6,
            sample: None,
            jobs: None,
        }
    }
}

/// How the oracle participated at one order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", content = "count", rename_all = "snake_case")]
pub enum OracleMode {
    Full,
    Sample(usize),
    Off,
}

impl std::fmt::Display for OracleMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OracleMode::Full => f.write_str("full"),
            OracleMode::Sample(k) => write!(f, "sample:{k}"),
            OracleMode::Off => f.write_str("off"),
        }
    }
}

/// One graph on which the recognizers did not agree. The oracle verdict is
/// always filled in on a disagreement, even when the oracle was not part of
/// the sweep for that order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub graph6: String,
    pub structural: Verdict,
    pub forbidden: Verdict,
    pub oracle: Verdict,
}

/// Aggregates for one order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderReport {
    pub n: usize,
    /// Labeled graphs scanned, connected or not: `2^(n(n-1)/2)`.
    pub total_masks: u64,
    pub connected: u64,
    /// Independent closed-form count the `connected` field must match.
    pub expected_connected: u64,
    /// Graphs every participating recognizer judged perfect.
    pub perfect: u64,
    /// Graphs on which all participating recognizers agreed.
    pub agree: u64,
    pub oracle_mode: OracleMode,
    /// Graphs the oracle actually ran on.
    pub oracle_checked: u64,
    pub disagreements: Vec<Disagreement>,
    /// Certificates that failed independent re-validation (must be 0).
    pub certificate_failures: u64,
    pub wall_time_s: f64,
}

/// Outcome of a full verification sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub max_n: usize,
    pub oracle_max_n: usize,
    pub sample: Option<SampleConfig>,
    pub orders: Vec<OrderReport>,
    /// True iff every order has no disagreements, no certificate failures,
    /// and a connected count matching the closed form.
    pub ok: bool,
}

impl VerificationReport {
    /// The plain-text report: a `#` parameter header, one
    /// `n=.. connected=.. perfect=.. agree=.. oracle_mode=..` line per
    /// order, a `DISAGREE <graph6> structural=.. forbidden=.. oracle=..`
    /// line per disagreement, a `#` timing comment, and a final
    /// `RESULT OK|FAIL` line. Everything except the timing comment is
    /// deterministic for fixed parameters.
    pub fn write_text(&self, mut out: impl io::Write) -> io::Result<()> {
        let (sample, seed) = match self.sample {
            Some(s) => (s.count.to_string(), s.seed.to_string()),
            None => ("none".into(), "none".into()),
        };
        writeln!(
            out,
            "# domperf verify max_n={} oracle_max_n={} sample={} seed={}",
            self.max_n, self.oracle_max_n, sample, seed
        )?;
        for order in &self.orders {
            writeln!(
                out,
                "n={} connected={} perfect={} agree={} oracle_mode={}",
                order.n, order.connected, order.perfect, order.agree, order.oracle_mode
            )?;
            for d in &order.disagreements {
                writeln!(
                    out,
                    "DISAGREE {} structural={} forbidden={} oracle={}",
                    d.graph6, d.structural, d.forbidden, d.oracle
                )?;
            }
        }
        let timings: Vec<String> = self
            .orders
            .iter()
            .map(|o| format!("n={} {:.3}s", o.n, o.wall_time_s))
            .collect();
        writeln!(out, "# elapsed {}", timings.join("; "))?;
        writeln!(out, "RESULT {}", if self.ok { "OK" } else { "FAIL" })
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_text(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("report text is ASCII")
    }
}

#[derive(Default)]
struct Tally {
    connected: u64,
    perfect: u64,
    agree: u64,
    oracle_checked: u64,
    certificate_failures: u64,
    disagreements: Vec<Disagreement>,
}

impl Tally {
    fn absorb(&mut self, other: Tally) {
        self.connected += other.connected;
        self.perfect += other.perfect;
        self.agree += other.agree;
        self.oracle_checked += other.oracle_checked;
        self.certificate_failures += other.certificate_failures;
        self.disagreements.extend(other.disagreements);
    }
}

/// Runs the sweep described by `config`. A report is produced even when
/// disagreements are found; only invalid parameters are errors.
pub fn verify_theorem(config: &VerifyConfig) -> Result<VerificationReport, EnumerationError> {
    if !(2..=MAX_ENUMERATION_ORDER).contains(&config.max_n) {
        return Err(EnumerationError::InvalidConfig(format!(
            "max_n must lie in 2..={MAX_ENUMERATION_ORDER}, got {}",
            config.max_n
        )));
    }
    if config.oracle_max_n > config.max_n {
        return Err(EnumerationError::InvalidConfig(format!(
            "oracle_max_n ({}) must not exceed max_n ({})",
            config.oracle_max_n, config.max_n
        )));
    }
    match config.jobs {
        None => run_sweep(config),
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| EnumerationError::WorkerPool(e.to_string()))?;
            pool.install(|| run_sweep(config))
        }
    }
}

fn run_sweep(config: &VerifyConfig) -> Result<VerificationReport, EnumerationError> {
    let mut orders = Vec::new();
    for n in 2..=config.max_n {
        let start = Instant::now();
        let expected = count_connected_labeled(n)? as u64;
        let (mode, sampled_masks) = plan_oracle(config, n, expected);
        let tally = scan_order(n, mode, &sampled_masks);
        orders.push(OrderReport {
            n,
            total_masks: 1u64 << pair_count(n),
            connected: tally.connected,
            expected_connected: expected,
            perfect: tally.perfect,
            agree: tally.agree,
            oracle_mode: mode,
            oracle_checked: tally.oracle_checked,
            disagreements: tally.disagreements,
            certificate_failures: tally.certificate_failures,
            wall_time_s: start.elapsed().as_secs_f64(),
        });
    }
    let ok = orders.iter().all(|o| {
        o.disagreements.is_empty()
            && o.certificate_failures == 0
            && o.connected == o.expected_connected
    });
    Ok(VerificationReport {
        max_n: config.max_n,
        oracle_max_n: config.oracle_max_n,
        sample: config.sample,
        orders,
        ok,
    })
}

/// Decides the oracle mode for order `n` and, in sampling mode, draws the
/// sampled connected-stream positions and translates them to edge masks.
fn plan_oracle(config: &VerifyConfig, n: usize, connected_count: u64) -> (OracleMode, HashSet<u64>) {
    if n <= config.oracle_max_n {
        return (OracleMode::Full, HashSet::new());
    }
    let Some(sample) = config.sample else {
        return (OracleMode::Off, HashSet::new());
    };
    let mut rng = ChaCha8Rng::seed_from_u64(sample.seed);
    rng.set_stream(n as u64);
    let amount = sample.count.min(connected_count as usize);
    let mut picks = rand::seq::index::sample(&mut rng, connected_count as usize, amount).into_vec();
    picks.sort_unstable();
    // Walk the stream once, cheaply, translating stream positions to masks.
    let mut masks = HashSet::with_capacity(amount);
    let mut stream_pos = 0usize;
    let mut next_pick = 0usize;
    for mask in 0..1u64 << pair_count(n) {
        if next_pick == picks.len() {
            break;
        }
        if graph_from_edge_mask(n, mask).is_connected() {
            if picks[next_pick] == stream_pos {
                masks.insert(mask);
                next_pick += 1;
            }
            stream_pos += 1;
        }
    }
    (OracleMode::Sample(sample.count), masks)
}

fn scan_order(n: usize, mode: OracleMode, sampled_masks: &HashSet<u64>) -> Tally {
    use rayon::prelude::*;
    let total = 1u64 << pair_count(n);
    let ranges: Vec<(u64, u64)> = (0..total)
        .step_by(CHUNK_MASKS as usize)
        .map(|lo| (lo, total.min(lo + CHUNK_MASKS)))
        .collect();
    let tallies: Vec<Tally> = ranges
        .par_iter()
        .map(|&(lo, hi)| scan_range(n, lo..hi, mode, sampled_masks))
        .collect();
    let mut merged = Tally::default();
    for t in tallies {
        merged.absorb(t);
    }
    merged
}

fn scan_range(
    n: usize,
    masks: std::ops::Range<u64>,
    mode: OracleMode,
    sampled_masks: &HashSet<u64>,
) -> Tally {
    let mut tally = Tally::default();
    for mask in masks {
        let g = graph_from_edge_mask(n, mask);
        if !g.is_connected() {
            continue;
        }
        tally.connected += 1;

        let structural_reason = structural_perfect_reason(&g);
        let forbidden_reason = forbidden_defect(&g);
        let structural = verdict(structural_reason.is_some());
        let forbidden = verdict(forbidden_reason.is_none());
        if let Some(reason) = &structural_reason {
            if !Certificate::Perfect(reason.clone()).is_valid_for(&g) {
                tally.certificate_failures += 1;
            }
        }
        if let Some(defect) = &forbidden_reason {
            if !Certificate::NotPerfect(defect.clone()).is_valid_for(&g) {
                tally.certificate_failures += 1;
            }
        }

        let oracle_due = mode == OracleMode::Full || sampled_masks.contains(&mask);
        let mut oracle = None;
        if oracle_due {
            tally.oracle_checked += 1;
            oracle = Some(run_oracle(&g, &mut tally));
        }

        let all_agree =
            structural == forbidden && oracle.is_none_or(|o| o == structural);
        if all_agree {
            tally.agree += 1;
            if structural == Verdict::Perfect {
                tally.perfect += 1;
            }
        } else {
            let oracle = oracle.unwrap_or_else(|| run_oracle(&g, &mut tally));
            tally.disagreements.push(Disagreement {
                graph6: write_graph6(&g).expect("order is within graph6 range"),
                structural,
                forbidden,
                oracle,
            });
        }
    }
    tally
}

fn verdict(perfect: bool) -> Verdict {
    if perfect {
        Verdict::Perfect
    } else {
        Verdict::NotPerfect
    }
}

fn run_oracle(g: &Graph, tally: &mut Tally) -> Verdict {
    match violating_search(g) {
        Some(vertices) => {
            let cert =
                Certificate::NotPerfect(NotPerfectReason::ViolatingInducedSubgraph { vertices });
            if !cert.is_valid_for(g) {
                tally.certificate_failures += 1;
            }
            Verdict::NotPerfect
        }
        None => Verdict::Perfect,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_sweep_sees_only_the_one_edge() {
        let report = verify_theorem(&VerifyConfig {
            max_n: 2,
            oracle_max_n: 2,
            sample: None,
            jobs: Some(1),
        })
        .unwrap();
        assert!(report.ok);
        assert_eq!(report.orders.len(), 1);
        let o = &report.orders[0];
        assert_eq!((o.n, o.connected, o.perfect, o.agree), (2, 1, 1, 1));
        assert_eq!(o.oracle_checked, 1);
        assert_eq!(o.oracle_mode, OracleMode::Full);
    }

    #[test]
    fn sweep_through_order_5_is_clean() {
        let report = verify_theorem(&VerifyConfig {
            max_n: 5,
            oracle_max_n: 5,
            sample: None,
            jobs: None,
        })
        .unwrap();
        assert!(report.ok);
        let connected: Vec<u64> = report.orders.iter().map(|o| o.connected).collect();
        assert_eq!(connected, vec![1, 4, 38, 728]);
        for o in &report.orders {
            assert_eq!(o.connected, o.expected_connected);
            assert_eq!(o.agree, o.connected);
            assert!(o.disagreements.is_empty());
            assert_eq!(o.certificate_failures, 0);
        }
    }

    #[test]
    fn sampling_mode_draws_the_requested_amount() {
        let report = verify_theorem(&VerifyConfig {
            max_n: 5,
            oracle_max_n: 4,
            sample: Some(SampleConfig { count: 50, seed: 7 }),
            jobs: Some(2),
        })
        .unwrap();
        assert!(report.ok);
        let o5 = report.orders.last().unwrap();
        assert_eq!(o5.oracle_mode, OracleMode::Sample(50));
        assert_eq!(o5.oracle_checked, 50);
        // Orders below the full-oracle threshold are unaffected.
        assert_eq!(report.orders[1].oracle_mode, OracleMode::Full);
    }

    #[test]
    fn worker_count_does_not_change_the_report() {
        let base = VerifyConfig {
            max_n: 5,
            oracle_max_n: 3,
            sample: Some(SampleConfig { count: 20, seed: 99 }),
            jobs: Some(1),
        };
        let serial = verify_theorem(&base).unwrap();
        let parallel = verify_theorem(&VerifyConfig { jobs: Some(4), ..base.clone() }).unwrap();
        let strip = |r: &VerificationReport| {
            let mut text: Vec<String> = r
                .to_text()
                .lines()
                .filter(|l| !l.starts_with('#'))
                .map(str::to_owned)
                .collect();
            text.sort();
            text
        };
        assert_eq!(strip(&serial), strip(&parallel));
        assert_eq!(serial.orders.len(), parallel.orders.len());
        for (a, b) in serial.orders.iter().zip(&parallel.orders) {
            assert_eq!((a.connected, a.perfect, a.agree, a.oracle_checked),
                       (b.connected, b.perfect, b.agree, b.oracle_checked));
        }
    }

    #[test]
    fn repeated_runs_are_byte_identical_modulo_timing() {
        let config = VerifyConfig {
            max_n: 4,
            oracle_max_n: 3,
            sample: Some(SampleConfig { count: 10, seed: 42 }),
            jobs: None,
        };
        let a = verify_theorem(&config).unwrap().to_text();
        let b = verify_theorem(&config).unwrap().to_text();
        let filter = |s: &str| {
            s.lines()
                .filter(|l| !l.starts_with('#'))
                .collect::<Vec<_>>()
                .join("\n")
        };
        assert_eq!(filter(&a), filter(&b));
    }

    #[test]
    fn report_text_shape() {
        let report = verify_theorem(&VerifyConfig {
            max_n: 3,
            oracle_max_n: 3,
            sample: None,
            jobs: Some(1),
        })
        .unwrap();
        let text = report.to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "# domperf verify max_n=3 oracle_max_n=3 sample=none seed=none");
        assert_eq!(lines[1], "n=2 connected=1 perfect=1 agree=1 oracle_mode=full");
        assert_eq!(lines[2], "n=3 connected=4 perfect=3 agree=4 oracle_mode=full");
        assert!(lines[3].starts_with("# elapsed "));
        assert_eq!(lines[4], "RESULT OK");
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        let config = VerifyConfig { max_n: 8, ..VerifyConfig::default() };
        assert!(matches!(
            verify_theorem(&config),
            Err(EnumerationError::InvalidConfig(_))
        ));
        let config = VerifyConfig { max_n: 4, oracle_max_n: 5, ..VerifyConfig::default() };
        assert!(matches!(
            verify_theorem(&config),
            Err(EnumerationError::InvalidConfig(_))
        ));
    }
}
