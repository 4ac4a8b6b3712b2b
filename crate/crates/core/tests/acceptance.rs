//! Acceptance suite: one test per release criterion, each printing a
//! pass/fail line (visible with `--nocapture`). All comparisons are exact;
//! the only tolerances are the stated wall-clock ceilings.

use distpoly::verify::{
    suite_closed_forms, suite_complement, suite_cycles, suite_dist_number, suite_monicity,
    suite_multiplicity, suite_oracle_equivalence, suite_phi, suite_segments, SuiteReport,
    VerifyConfig,
};
use std::time::{Duration, Instant};

fn cfg(max_n: usize, max_k: u32) -> VerifyConfig {
    VerifyConfig {
        max_n,
        max_k,
        ..VerifyConfig::default()
    }
}

fn finish(criterion: usize, what: &str, suite: &SuiteReport) {
    let status = if suite.passed() { "PASS" } else { "FAIL" };
    println!(
        "criterion {criterion} ({what}): {status} [{} cases]",
        suite.cases
    );
    assert!(
        suite.passed(),
        "criterion {criterion} failures: {:#?}",
        suite.failures
    );
}

/// Published cycle and multipartite polynomials, coefficient for
/// coefficient, in under a second.
#[test]
fn criterion_1_closed_form_polynomials() {
    let start = Instant::now();
    let suite = suite_closed_forms(&cfg(8, 3));
    let elapsed = start.elapsed();
    finish(1, "published closed-form polynomials", &suite);
    assert!(
        elapsed < Duration::from_secs(1),
        "took {elapsed:?}, limit 1s"
    );
}

/// Enumeration oracle equals the closed forms: paths and cycles to eight
/// vertices, complete graphs and stars to six parameters, union spot cases.
#[test]
fn criterion_2_oracle_equivalence() {
    let start = Instant::now();
    let suite = suite_oracle_equivalence(&cfg(8, 3));
    let elapsed = start.elapsed();
    finish(2, "oracle/closed-form equivalence", &suite);
    assert!(
        elapsed < Duration::from_secs(600),
        "took {elapsed:?}, limit 10min"
    );
}

/// Every computed polynomial is monic of degree n: the whole bundled
/// corpus through the oracle, families through n = 12.
#[test]
fn criterion_3_monicity_and_degree() {
    finish(3, "monicity and degree", &suite_monicity(&cfg(6, 3)));
}

/// A graph and its complement get the same polynomial from pure
/// enumeration, across every graph on at most six vertices.
#[test]
fn criterion_4_complement_invariance() {
    finish(4, "complement invariance", &suite_complement(&cfg(6, 3)));
}

/// Brute-force (M, N) classification of non-distinguishing cycle colorings
/// matches the counting polynomials and tiles k^n, n = 3..8, k = 2..3.
#[test]
fn criterion_5_cycle_decomposition() {
    finish(5, "cycle M/N decomposition", &suite_cycles(&cfg(8, 3)));
}

/// Segment-generated colorings supporting one reflection are counted by
/// k^ceil((d+1)/2) and k^floor((d+1)/2), for n in {4,6,8} and every axis.
#[test]
fn criterion_6_segment_supported_counts() {
    finish(6, "segment-support counts", &suite_segments(&cfg(8, 3)));
}

/// Φ is integer-valued with φ non-negative and resubstitutable, composed
/// |Aut| matches the searched group order, and Φ of paths matches its
/// closed form symbolically to n = 8.
#[test]
fn criterion_7_phi_consistency() {
    finish(7, "phi consistency", &suite_phi(&cfg(8, 3)));
}

/// Zero multiplicity is at least the orbit count everywhere; C_9 shows
/// strict excess; similarity classes tile and are divisible by k^q.
#[test]
fn criterion_8_multiplicity_theorem() {
    finish(8, "multiplicity vs orbit count", &suite_multiplicity(&cfg(6, 3)));
}

/// Distinguishing numbers: published values and agreement between direct
/// search and polynomial evaluation on every graph up to six vertices.
#[test]
fn criterion_9_distinguishing_numbers() {
    finish(9, "distinguishing numbers", &suite_dist_number(&cfg(6, 3)));
}
