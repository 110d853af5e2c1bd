//! Acceptance suite: runs every verification suite at full strength and
//! prints one pass/fail line per criterion. All checks are exact.

use rotamap::exec::Mode;
use rotamap::verify::{run_suite, SuiteReport, SUITES};

fn run_criterion(index: usize) -> SuiteReport {
    let report = run_suite(SUITES[index - 1], Mode::Parallel).expect("criterion exists");
    let status = if report.passed() { "PASS" } else { "FAIL" };
    println!("criterion {index} [{}]: {status}", report.suite);
    if !report.passed() {
        print!("{}", report.render());
    }
    report
}

#[test]
fn criterion_1_petersen() {
    let report = run_criterion(1);
    assert!(report.passed(), "\n{}", report.render());
}

#[test]
fn criterion_2_coset_graph_theorems() {
    let report = run_criterion(2);
    assert!(report.passed(), "\n{}", report.render());
}

#[test]
fn criterion_3_canonical_cycles() {
    let report = run_criterion(3);
    assert!(report.passed(), "\n{}", report.render());
}

#[test]
fn criterion_4_hypercube_identity() {
    let report = run_criterion(4);
    assert!(report.passed(), "\n{}", report.render());
}

#[test]
fn criterion_5_hypercube_rotary() {
    let report = run_criterion(5);
    assert!(report.passed(), "\n{}", report.render());
}

#[test]
fn criterion_6_complete_bipartite() {
    let report = run_criterion(6);
    assert!(report.passed(), "\n{}", report.render());
}

#[test]
fn criterion_7_triple_cover() {
    let report = run_criterion(7);
    assert!(report.passed(), "\n{}", report.render());
}

#[test]
fn criterion_8_classification() {
    let report = run_criterion(8);
    assert!(report.passed(), "\n{}", report.render());
}

#[test]
fn criterion_9_surface_certificates() {
    let report = run_criterion(9);
    assert!(report.passed(), "\n{}", report.render());
}
