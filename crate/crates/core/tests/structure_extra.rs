//! Structure-level behavior beyond the acceptance minimums: symbolic-β
//! Theta witnesses, witness determinism, and search-bound behavior.

use avw_core::polymod::{Family, ModuleSpec, SPoly};
use avw_core::scalars::rat::rat;
use avw_core::scalars::Scalar;
use avw_core::structure::{
    check_invariance, generate_one, is_simple, proper_submodule, SubmoduleShape,
};
use avw_core::scalars::UniPoly;

#[test]
fn theta_symbolic_beta_witnesses() {
    // With symbolic β the factors t/2+β-n are coprime to every shifted
    // polynomial, so generation succeeds without instantiating β.
    let spec = ModuleSpec::symbolic(Family::Theta);
    assert!(is_simple(&spec));
    for w in [
        SPoly::var_t(),
        SPoly::monomial(1, 1, Scalar::one()),
        SPoly::monomial(0, 2, Scalar::from_rat(rat(3, 4)))
            .add(&SPoly::constant(Scalar::from_int(1))),
    ] {
        let witness = generate_one(&spec, &w).unwrap();
        assert!(witness.validate(), "w = {}", w);
    }
}

#[test]
fn witnesses_are_deterministic() {
    let spec = ModuleSpec::symbolic(Family::Delta);
    let w = SPoly::monomial(2, 2, Scalar::one()).add(&SPoly::monomial(0, 1, Scalar::from_int(-3)));
    let u1 = generate_one(&spec, &w).unwrap();
    let u2 = generate_one(&spec, &w).unwrap();
    assert_eq!(u1.u(), u2.u());
}

#[test]
fn high_degree_seed_needs_larger_shift() {
    // A seed with clustered roots forces the search past k = 1:
    // w = t(t-2)(t-4) shares roots with its shift by 2.
    let spec = ModuleSpec::symbolic(Family::Omega);
    let t = SPoly::var_t();
    let w = t
        .mul(&t.sub(&SPoly::constant(Scalar::from_int(2))))
        .mul(&t.sub(&SPoly::constant(Scalar::from_int(4))));
    let witness = generate_one(&spec, &w).unwrap();
    assert!(witness.validate());
}

#[test]
fn submodule_shape_membership_boundaries() {
    let beta = Scalar::from_rat(rat(3, 2));
    let spec = ModuleSpec::symbolic(Family::Theta).with_beta(beta);
    let shape = proper_submodule(&spec).unwrap();
    // Degree 2β+1 = 4 generator; multiples belong, 1 and t do not.
    assert_eq!(shape.g.degree(), 4);
    let g = SPoly::from_t_poly(&shape.g);
    assert!(shape.contains(&g));
    assert!(shape.contains(&g.mul(&SPoly::var_s())));
    assert!(!shape.contains(&SPoly::one()));
    assert!(!shape.contains(&SPoly::var_t()));
}

#[test]
fn two_generator_shape_membership() {
    // W = C[s,t]*s*(t-2) + C[s,t]*t*(t-2): membership needs divisibility by
    // t-2 and a quotient without constant term.
    let g = UniPoly::x().sub(&UniPoly::constant(Scalar::from_int(2)));
    let shape = SubmoduleShape::two_gen(g.clone());
    let g_poly = SPoly::from_t_poly(&g);
    assert!(shape.contains(&g_poly.mul(&SPoly::var_s())));
    assert!(shape.contains(&g_poly.mul(&SPoly::var_t())));
    assert!(shape.contains(
        &g_poly.mul(&SPoly::var_s().mul(&SPoly::var_s()).add(&SPoly::monomial(1, 1, Scalar::one())))
    ));
    assert!(!shape.contains(&g_poly));
    assert!(!shape.contains(&SPoly::monomial(1, 1, Scalar::one())));
}

#[test]
fn two_generator_shape_not_invariant_under_e() {
    // e_0 moves t*(t-2) to α(t-2)(t-4), which is not in the ideal.
    let spec = ModuleSpec::symbolic(Family::Omega);
    let g = UniPoly::x().sub(&UniPoly::constant(Scalar::from_int(2)));
    let shape = SubmoduleShape::two_gen(g);
    assert!(check_invariance(&spec, &shape, 1, 1).is_err());
}
