//! Acceptance suite: one test per bundled experiment, each printing its
//! pass/fail line (visible with `--nocapture`).
//!
//! Run with `cargo test --test acceptance -- --nocapture`.

use structural_ramsey::experiments::run_experiment;

fn run(name: &str) {
    let reports = run_experiment(name, 0).expect("experiment runs");
    for r in &reports {
        println!("{}", r.line());
        assert!(r.pass, "{}", r.line());
    }
}

#[test]
fn criterion_01_expansion_count_formula_s3() {
    run("t-formula-s3");
}

#[test]
fn criterion_02_expansion_count_formula_s2() {
    run("t-formula-s2");
}

#[test]
fn criterion_03_degree_of_the_s2_point() {
    run("degree-s2-point");
}

#[test]
fn criterion_04_classical_order_ramsey() {
    run("order-ramsey");
}

#[test]
fn criterion_05_transform_bijection() {
    run("transform-bijection");
}

#[test]
fn criterion_06_expansion_property_positive() {
    run("ep-positive-s2");
}

#[test]
fn criterion_07_expansion_property_negative_and_repaired() {
    run("ep-negative-q2");
}

#[test]
fn criterion_08_joint_embedding_and_amalgamation() {
    run("fraisse-shadows");
}

#[test]
fn criterion_09_flow_coding() {
    run("flow-coding");
}

#[test]
fn criterion_10_oracle_equivalence() {
    run("oracle-equivalence");
}
