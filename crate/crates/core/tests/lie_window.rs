//! Lie-axiom checks over the wider |index| <= 5 window, plus centrality.

use avw_core::liealg::{basis_bracket, basis_window, check_antisymmetry, check_jacobi, Gen};

#[test]
fn antisymmetry_window_five() {
    let r = check_antisymmetry(5);
    assert!(r.passed(), "{}", r);
    assert_eq!(r.checks, 45 * 45);
}

#[test]
fn jacobi_window_five() {
    let r = check_jacobi(5);
    assert!(r.passed(), "{}", r);
    assert_eq!(r.checks, 45 * 45 * 45);
}

#[test]
fn central_element_commutes() {
    for x in basis_window(5) {
        assert!(basis_bracket(Gen::C, x).is_zero());
        assert!(basis_bracket(x, Gen::C).is_zero());
    }
}
