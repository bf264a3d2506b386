//! Randomized property suites for the gluing and realization lemmas.

use std::time::Instant;

use cyclic_bar::checks::{gluing_suite, realization_suite};

#[test]
fn gluing_suite_has_no_violations() {
    let t = Instant::now();
    let s = gluing_suite(7, 60).unwrap();
    eprintln!("gluing: {s:?} in {:?}", t.elapsed());
    assert_eq!(s.instances, 60);
    assert_eq!(s.violations, 0, "{:?}", s.first_violation);
    assert!(s.tight > 0, "no instance reaches its bound");
}

#[test]
fn realization_suite_has_no_violations() {
    let t = Instant::now();
    let s = realization_suite(7, 60).unwrap();
    eprintln!("realization: {s:?} in {:?}", t.elapsed());
    assert_eq!(s.instances, 60);
    assert_eq!(s.violations, 0, "{:?}", s.first_violation);
    assert!(s.tight > 0, "no instance reaches its bound");
}
