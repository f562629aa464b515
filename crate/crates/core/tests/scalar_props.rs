//! Property suites for the exact arithmetic layer: field laws on randomized
//! scalars, canonical-form stability, and Bézout witness laws.

use avw_core::scalars::parampoly::{Param, ParamPoly};
use avw_core::scalars::rat::rat;
use avw_core::scalars::{Scalar, UniPoly};
use proptest::prelude::*;

fn arb_rat() -> impl Strategy<Value = avw_core::scalars::Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn arb_parampoly() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec(((0u16..=1, 0u16..=1, 0u16..=1, 0u16..=1), arb_rat()), 0..3).prop_map(
        |terms| {
            let mut p = ParamPoly::zero();
            for ((dl, da, db, dg), c) in terms {
                let mono = ParamPoly::symbol(Param::Lambda)
                    .pow(dl as u32)
                    .mul(&ParamPoly::symbol(Param::Alpha).pow(da as u32))
                    .mul(&ParamPoly::symbol(Param::Beta).pow(db as u32))
                    .mul(&ParamPoly::symbol(Param::Gamma).pow(dg as u32));
                p = p.add(&mono.mul_rat(&c));
            }
            p
        },
    )
}

fn arb_nonzero_parampoly() -> impl Strategy<Value = ParamPoly> {
    arb_parampoly().prop_filter("nonzero", |p| !p.is_zero())
}

/// Denominators drawn from the shapes the workbench actually produces:
/// monomials in L, A and small polynomials in one parameter.
fn arb_denominator() -> impl Strategy<Value = ParamPoly> {
    prop_oneof![
        Just(ParamPoly::one()),
        Just(ParamPoly::symbol(Param::Lambda)),
        Just(ParamPoly::symbol(Param::Alpha)),
        Just(ParamPoly::symbol(Param::Lambda).mul(&ParamPoly::symbol(Param::Alpha))),
        Just(ParamPoly::symbol(Param::Beta).add(&ParamPoly::one())),
        (1i64..=4).prop_map(|k| {
            ParamPoly::symbol(Param::Beta)
                .mul_rat(&rat(2, 1))
                .add(&ParamPoly::constant(rat(-k, 1)))
        }),
    ]
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (arb_parampoly(), arb_denominator())
        .prop_map(|(num, den)| Scalar::new(num, den).unwrap())
}

fn arb_nonzero_scalar() -> impl Strategy<Value = Scalar> {
    arb_scalar().prop_filter("nonzero", |s| !s.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalization_is_idempotent(x in arb_scalar()) {
        let renorm = Scalar::new(x.num().clone(), x.den().clone()).unwrap();
        prop_assert_eq!(&renorm, &x);
    }

    #[test]
    fn canonical_form_ignores_common_factors(x in arb_scalar(), m in arb_nonzero_parampoly()) {
        let scaled = Scalar::new(x.num().mul(&m), x.den().mul(&m)).unwrap();
        prop_assert_eq!(&scaled, &x);
    }

    #[test]
    fn addition_associative(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_associative(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn distributivity(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn multiplicative_inverse(a in arb_nonzero_scalar()) {
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn additive_inverse(a in arb_scalar()) {
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn gcd_divides_both(a in arb_parampoly(), b in arb_parampoly()) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let g = ParamPoly::gcd(&a, &b);
        if !a.is_zero() {
            prop_assert!(a.div_exact(&g).is_some());
        }
        if !b.is_zero() {
            prop_assert!(b.div_exact(&g).is_some());
        }
    }

    #[test]
    fn gcd_absorbs_common_factor(a in arb_nonzero_parampoly(), b in arb_nonzero_parampoly(), m in arb_nonzero_parampoly()) {
        let g = ParamPoly::gcd(&a.mul(&m), &b.mul(&m));
        // m (made primitive) divides the gcd of (am, bm).
        let m_prim = m.content_primitive().1;
        prop_assert!(g.div_exact(&m_prim).is_some());
    }
}

fn arb_unipoly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(
        prop_oneof![
            arb_rat().prop_map(Scalar::from_rat),
            (arb_rat(), arb_rat()).prop_map(|(a, b)| {
                &Scalar::from_rat(a) + &(&Scalar::beta() * &Scalar::from_rat(b))
            }),
        ],
        0..4,
    )
    .prop_map(UniPoly::from_coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn unipoly_gcd_divides(p in arb_unipoly(), q in arb_unipoly()) {
        prop_assume!(!p.is_zero() || !q.is_zero());
        let g = UniPoly::gcd(&p, &q);
        if !p.is_zero() {
            prop_assert!(p.div_exact(&g).is_some());
        }
        if !q.is_zero() {
            prop_assert!(q.div_exact(&g).is_some());
        }
    }

    #[test]
    fn ext_euclid_witness_reproduces_one(p in arb_unipoly(), q in arb_unipoly()) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let g = UniPoly::gcd(&p, &q);
        // Force coprimality by dividing out the gcd.
        let p = p.div_exact(&g).unwrap();
        let q = q.div_exact(&g).unwrap();
        let g2 = UniPoly::gcd(&p, &q);
        prop_assume!(g2.is_one());
        let (a, b) = UniPoly::ext_euclid(&p, &q).unwrap();
        prop_assert!(a.mul(&p).add(&b.mul(&q)).is_one());
        if p.degree() > 0 && q.degree() > 0 {
            prop_assert!(a.is_zero() || a.degree() < q.degree());
            prop_assert!(b.is_zero() || b.degree() < p.degree());
        }
    }
}
