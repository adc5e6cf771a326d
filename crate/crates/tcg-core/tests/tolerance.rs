//! The comparison tolerance is process-global state, so this test lives in
//! its own integration-test binary: mutating it next to the parallel unit
//! tests would change their comparison semantics mid-run.

use tcg_core::geom::{pair_coverable, set_tolerance, tolerance, Point, DEFAULT_TOLERANCE};

#[test]
fn tolerance_is_settable_and_gates_predicates() {
    assert_eq!(tolerance(), DEFAULT_TOLERANCE);

    let p = Point::new(0.0, 0.0);
    let q = Point::new(2.0 + 1e-6, 0.0);
    assert!(!pair_coverable(p, q, 1.0));

    set_tolerance(1e-4);
    assert_eq!(tolerance(), 1e-4);
    assert!(pair_coverable(p, q, 1.0));

    // Non-finite and non-positive requests reset to the default.
    set_tolerance(f64::NAN);
    assert_eq!(tolerance(), DEFAULT_TOLERANCE);
    set_tolerance(-1.0);
    assert_eq!(tolerance(), DEFAULT_TOLERANCE);
}
