//! Acceptance suite: one test per criterion, exact arithmetic throughout.
//!
//! Every check is a zero-tolerance identity between exactly computed
//! objects; a criterion passes if and only if every instance in its family
//! holds on the nose.

use std::time::Instant;

use fusym::combinatorics::{Partition, SkewShape, StandardTableau};
use fusym::fusion::{fusion_oracle_family, restriction_family};
use fusym::mixed_tensor::{
    g_exchange_family, rank_family, rmatrix_family, symmetrizer_family,
};
use fusym::yangian::{
    exterior_family, g_series_family, intertwiner_family, rtt_family, skew_reduction_family,
    verify_module_equivalence,
};

/// Seed for every randomized sample grid in the suite.
const SUITE_SEED: u64 = 7;

fn partition(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn criterion_01_content_sequence_of_example_shape() {
    let start = Instant::now();
    let shape = SkewShape::new(partition(&[5, 3, 3, 3, 3]), partition(&[3, 3, 2])).unwrap();
    let tableau = StandardTableau::column_tableau(&shape);
    let contents = tableau.contents();
    let elapsed = start.elapsed();
    assert_eq!(contents, vec![-3, -4, -2, -3, 0, -1, -2, 3, 4]);
    assert!(
        elapsed.as_micros() < 1000,
        "content computation took {elapsed:?}, budget is 1 ms"
    );
}

#[test]
fn criterion_02_fusion_matches_oracle_and_squares() {
    let start = Instant::now();
    let report = fusion_oracle_family(5).unwrap();
    let elapsed = start.elapsed();
    assert!(report.instances() > 0);
    assert!(report.pass(), "failures: {:?}", report.failures());
    assert!(
        elapsed.as_secs() < 60,
        "fusion oracle family took {elapsed:?}, budget is 1 min"
    );
}

#[test]
fn criterion_03_restriction_identity_and_completion_independence() {
    let report = restriction_family(5).unwrap();
    assert!(report.instances() > 0);
    assert!(report.pass(), "failures: {:?}", report.failures());
}

#[test]
fn criterion_04_rank_equals_semistandard_count() {
    let report = rank_family(4, &[2, 3]).unwrap();
    assert!(report.instances() > 0);
    assert!(report.pass(), "failures: {:?}", report.failures());
}

#[test]
fn criterion_05_rmatrix_identity_suite() {
    let report = rmatrix_family(3, 4, SUITE_SEED).unwrap();
    assert!(report.instances() > 0);
    assert!(report.pass(), "failures: {:?}", report.failures());
}

#[test]
fn criterion_06_symmetrizer_suite() {
    let report = symmetrizer_family(4, 3).unwrap();
    assert!(report.instances() > 0);
    assert!(report.pass(), "failures: {:?}", report.failures());
}

#[test]
fn criterion_07_contraction_product_exchange() {
    let report = g_exchange_family(4, 4).unwrap();
    assert!(report.instances() > 0);
    assert!(report.pass(), "failures: {:?}", report.failures());
}

#[test]
fn criterion_08_exchange_relation_for_all_series() {
    let report = rtt_family(SUITE_SEED, true).unwrap();
    assert!(report.instances() > 0);
    assert!(report.pass(), "failures: {:?}", report.failures());
}

#[test]
fn criterion_09_symmetrizer_intertwines_the_two_orderings() {
    let report = intertwiner_family(3, 3, 1).unwrap();
    assert!(report.instances() > 0);
    assert!(report.pass(), "failures: {:?}", report.failures());
}

#[test]
fn criterion_10_equivalence_certificates() {
    let instances = [
        (2, 0, vec![1], vec![1], vec![], vec![]),
        (2, 1, vec![2], vec![], vec![1], vec![]),
        (2, 1, vec![1, 1], vec![1], vec![1], vec![]),
    ];
    for (big_n, big_m, l, lt, m, mt) in instances {
        let start = Instant::now();
        let (certificate, _) = verify_module_equivalence(
            big_n,
            big_m,
            &partition(&l),
            &partition(&lt),
            &partition(&m),
            &partition(&mt),
        )
        .unwrap();
        let elapsed = start.elapsed();
        assert!(
            certificate.pass(),
            "instance N={big_n} M={big_m} {l:?}|{lt:?} over {m:?}|{mt:?}: {certificate:?}"
        );
        assert!(
            elapsed.as_secs() < 600,
            "instance N={big_n} M={big_m} took {elapsed:?}, budget is 10 min"
        );
    }
}

#[test]
fn criterion_11_antisymmetrizer_suite() {
    let report = exterior_family(3).unwrap();
    assert!(report.instances() > 0);
    assert!(report.pass(), "failures: {:?}", report.failures());
}

#[test]
fn criterion_12_multiplicative_series_factorization() {
    let report = g_series_family(5).unwrap();
    assert!(report.instances() > 0);
    assert!(report.pass(), "failures: {:?}", report.failures());
}

#[test]
fn criterion_13_skew_reduction_certificate() {
    let report = skew_reduction_family().unwrap();
    assert!(report.instances() > 0);
    assert!(report.pass(), "failures: {:?}", report.failures());
}

#[test]
fn criterion_14_repeated_runs_are_byte_identical() {
    let run = || {
        std::process::Command::new(env!("CARGO_BIN_EXE_fusym"))
            .args(["suite", "all", "--bounds", "tiny", "--seed", "7"])
            .output()
            .unwrap()
    };
    let first = run();
    let second = run();
    assert!(first.status.success(), "suite run failed: {first:?}");
    assert!(second.status.success());
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout, "suite output is not deterministic");
}
