//! Algorithmic structure theory for the three module families: the
//! simplicity decision, the proper submodule and intertwiner for Theta at
//! half-integer β, a constructive "generate 1 from any nonzero vector"
//! procedure with validated enveloping-algebra witnesses, and the
//! isomorphism classifier.

use std::fmt;

use num_traits::Signed;
use thiserror::Error;

use crate::liealg::{basis_window, EnvelopingElement, Gen, Word};
use crate::polymod::{Family, ModuleSpec, SPoly};
use crate::report::CheckReport;
use crate::scalars::rat::{is_nonneg_integer, Rat};
use crate::scalars::{Scalar, UniPoly, UniPolyError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("starting vector is zero")]
    ZeroVector,
    #[error("module is not simple: 2*beta = {two_beta} is a nonnegative integer")]
    NotSimple { two_beta: Rat },
    #[error("coprime-shift search exhausted after k = {bound}")]
    SearchExhausted { bound: usize },
    #[error("not invariant: {gen} maps {vector} outside the submodule")]
    NotInvariant { gen: Gen, vector: String },
    #[error("2*beta = {two_beta} is not a nonnegative integer")]
    ParameterNotHalfInteger { two_beta: String },
    #[error("witness does not reproduce 1: got {got}")]
    WitnessInvalid { got: String },
}

/// If 2β is a nonnegative integer (decidable only for constant β), return it.
pub fn two_beta_in_z_plus(beta: &Scalar) -> Option<Rat> {
    let r = beta.as_rational()?;
    let two_beta = &r + &r;
    if is_nonneg_integer(&two_beta) {
        Some(two_beta)
    } else {
        None
    }
}

/// Shape of an h/d-stable subspace of C[s,t]: either C[s,t]·g(t) or
/// C[s,t]·s·g(t) + C[s,t]·t·g(t) for a nonzero g(t).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ShapeKind {
    Principal,
    TwoGen,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubmoduleShape {
    pub kind: ShapeKind,
    pub g: UniPoly,
}

impl SubmoduleShape {
    pub fn principal(g: UniPoly) -> Self {
        assert!(!g.is_zero(), "submodule generator must be nonzero");
        SubmoduleShape {
            kind: ShapeKind::Principal,
            g,
        }
    }

    pub fn two_gen(g: UniPoly) -> Self {
        assert!(!g.is_zero(), "submodule generator must be nonzero");
        SubmoduleShape {
            kind: ShapeKind::TwoGen,
            g,
        }
    }

    /// Exact membership test. For the principal shape, every s-slice must be
    /// divisible by g(t); for the two-generator shape the quotient must in
    /// addition have no constant term (membership in the ideal (s, t)).
    pub fn contains(&self, p: &SPoly) -> bool {
        if p.is_zero() {
            return true;
        }
        let mut quotient = SPoly::zero();
        for (s_deg, slice) in p.t_slices() {
            match slice.div_exact(&self.g) {
                None => return false,
                Some(q) => {
                    for (k, c) in q.coeffs().iter().enumerate() {
                        quotient.add_term((s_deg, k as u32), c.clone());
                    }
                }
            }
        }
        match self.kind {
            ShapeKind::Principal => true,
            ShapeKind::TwoGen => quotient.coeff(0, 0).is_zero(),
        }
    }

    /// Spanning vectors s^j t^k · m · g(t) (m = 1, or m ∈ {s, t} for the
    /// two-generator shape) with j, k <= degree.
    pub fn basis_vectors(&self, degree: u32) -> Vec<SPoly> {
        let g = SPoly::from_t_poly(&self.g);
        let heads: Vec<SPoly> = match self.kind {
            ShapeKind::Principal => vec![SPoly::one()],
            ShapeKind::TwoGen => vec![SPoly::var_s(), SPoly::var_t()],
        };
        let mut out = Vec::new();
        for j in 0..=degree {
            for k in 0..=degree {
                let mono = SPoly::monomial(j, k, Scalar::one());
                for head in &heads {
                    out.push(mono.mul(head).mul(&g));
                }
            }
        }
        out
    }
}

impl fmt::Display for SubmoduleShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ShapeKind::Principal => write!(f, "C[s,t]*({})", self.g),
            ShapeKind::TwoGen => write!(f, "C[s,t]*s*({0}) + C[s,t]*t*({0})", self.g),
        }
    }
}

/// Simplicity: Omega and Delta are always simple; Theta is simple iff 2β is
/// not a nonnegative integer (symbolic β counts as not in Z+).
pub fn is_simple(spec: &ModuleSpec) -> bool {
    match spec.family() {
        Family::Omega | Family::Delta => true,
        Family::Theta => two_beta_in_z_plus(spec.beta()).is_none(),
    }
}

/// The product ∏_{n=0}^{2β} (t/2 + β - n) generating the proper submodule of
/// Theta when 2β ∈ Z+.
fn theta_submodule_generator(beta: &Scalar, two_beta: &Rat) -> UniPoly {
    let n_factors: usize = usize::try_from(two_beta.to_integer())
        .expect("2*beta fits in a machine word")
        + 1;
    let half = Scalar::from_rat(crate::scalars::rat::rat(1, 2));
    let mut g = UniPoly::one();
    for n in 0..n_factors {
        let factor = UniPoly::from_coeffs(vec![beta - &Scalar::from_int(n as i64), half.clone()]);
        g = g.mul(&factor);
    }
    g
}

/// The proper submodule, when one exists: none for simple specs, the
/// principal shape C[s,t]·∏_{n=0}^{2β}(t/2+β-n) for Theta with 2β ∈ Z+.
pub fn proper_submodule(spec: &ModuleSpec) -> Option<SubmoduleShape> {
    match spec.family() {
        Family::Omega | Family::Delta => None,
        Family::Theta => two_beta_in_z_plus(spec.beta())
            .map(|tb| SubmoduleShape::principal(theta_submodule_generator(spec.beta(), &tb))),
    }
}

/// Assert x·v stays inside the shape for every basis generator with
/// |index| <= window and every spanning vector of the shape up to `degree`.
pub fn check_invariance(
    spec: &ModuleSpec,
    shape: &SubmoduleShape,
    window: i64,
    degree: u32,
) -> Result<CheckReport, StructureError> {
    let mut report = CheckReport::default();
    let vectors = shape.basis_vectors(degree);
    for x in basis_window(window) {
        for v in &vectors {
            report.record();
            let image = spec.act_gen(x, v);
            if !shape.contains(&image) {
                return Err(StructureError::NotInvariant {
                    gen: x,
                    vector: format!("{}", v),
                });
            }
        }
    }
    Ok(report)
}

/// Check that multiplication by ∏_{n=0}^{2β}(t/2+β-n) intertwines the
/// Theta(λ,α,-β-1,γ) action with the restricted Theta(λ,α,β,γ) action, for
/// all generators with |index| <= 2 and monomials up to `degree`.
pub fn tau_check(
    lambda: &Scalar,
    alpha: &Scalar,
    beta: &Scalar,
    gamma: &Scalar,
    degree: u32,
) -> Result<CheckReport, StructureError> {
    let two_beta = two_beta_in_z_plus(beta).ok_or_else(|| StructureError::ParameterNotHalfInteger {
        two_beta: format!("{}", (beta + beta)),
    })?;
    let dst = ModuleSpec::new(
        Family::Theta,
        lambda.clone(),
        alpha.clone(),
        beta.clone(),
        gamma.clone(),
    )
    .expect("lambda, alpha validated by caller");
    let src = dst.with_beta(-&(beta + &Scalar::one()));
    let product = SPoly::from_t_poly(&theta_submodule_generator(beta, &two_beta));

    let mut report = CheckReport::default();
    for x in basis_window(2) {
        for j in 0..=degree {
            for k in 0..=degree {
                let g = SPoly::monomial(j, k, Scalar::one());
                report.record();
                let lhs = src.act_gen(x, &g).mul(&product);
                let rhs = dst.act_gen(x, &g.mul(&product));
                let diff = lhs.sub(&rhs);
                if !diff.is_zero() {
                    report.fail(
                        "tau-intertwiner",
                        format!("x={}, g=s^{}*t^{}", x, j, k),
                        format!("{}", diff),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// A validated witness that `u` maps the starting vector to 1.
#[derive(Clone, Debug)]
pub struct GenWitness {
    spec: ModuleSpec,
    u: EnvelopingElement,
    target: SPoly,
}

impl GenWitness {
    pub fn new(
        spec: ModuleSpec,
        u: EnvelopingElement,
        target: SPoly,
    ) -> Result<GenWitness, StructureError> {
        let got = spec.act_word(&u, &target);
        if got.is_one() {
            Ok(GenWitness { spec, u, target })
        } else {
            Err(StructureError::WitnessInvalid {
                got: format!("{}", got),
            })
        }
    }

    pub fn u(&self) -> &EnvelopingElement {
        &self.u
    }

    pub fn target(&self) -> &SPoly {
        &self.target
    }

    pub fn spec(&self) -> &ModuleSpec {
        &self.spec
    }

    /// Re-run the defining identity.
    pub fn validate(&self) -> bool {
        self.spec.act_word(&self.u, &self.target).is_one()
    }
}

/// A polynomial in h_0 as an enveloping element (h_0 acts as multiplication
/// by t in every family).
fn h0_polynomial(p: &UniPoly) -> EnvelopingElement {
    let mut out = EnvelopingElement::zero();
    for (r, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out.add_term(Word(vec![Gen::H(0); r]), c.clone());
        }
    }
    out
}

/// Construct an enveloping element that maps the nonzero vector `w` to 1.
///
/// Stage 1 strips the s-degree: one application of λ·x_0 - x_1 (x = e for
/// Omega/Theta, x = f for Delta) lowers the s-degree by exactly one while
/// multiplying by known units. Stage 2 produces two polynomials in t alone
/// whose root sets are separated by a shift 2k (plus, for Theta, the
/// accumulating linear factors), searching k = 1, 2, ... up to a conservative
/// bound. Stage 3 turns their Bézout cofactors into polynomials in h_0 and
/// assembles the witness, which is validated by construction.
pub fn generate_one(spec: &ModuleSpec, w: &SPoly) -> Result<GenWitness, StructureError> {
    if w.is_zero() {
        return Err(StructureError::ZeroVector);
    }
    if spec.family() == Family::Theta {
        if let Some(two_beta) = two_beta_in_z_plus(spec.beta()) {
            return Err(StructureError::NotSimple { two_beta });
        }
    }

    // Stage 1: strip s, highest power first; each round lowers it by one.
    let (x0, x1) = match spec.family() {
        Family::Omega | Family::Theta => (Gen::E(0), Gen::E(1)),
        Family::Delta => (Gen::F(0), Gen::F(1)),
    };
    let strip = EnvelopingElement::from_gen(x0)
        .scale(spec.lambda())
        .sub(&EnvelopingElement::from_gen(x1));
    let mut u = EnvelopingElement::one();
    for _ in 0..w.deg_s() {
        u = strip.word_mul(&u);
    }
    let seed_poly = spec.act_word(&u, w);
    let seed = seed_poly
        .as_t_poly()
        .expect("s-stripping leaves a polynomial in t only");
    assert!(!seed.is_zero(), "s-stripping preserves nonzeroness");

    // Constant seed: scale and finish.
    if seed.degree() == 0 {
        let witness = u.scale(&seed.coeff(0).inv().unwrap());
        return GenWitness::new(spec.clone(), witness, w.clone());
    }

    // Stage 2/3: find k with a coprime pair, then assemble Bézout cofactors.
    let beta_bound = spec
        .beta()
        .as_rational()
        .map(|r| {
            let tb = (&r + &r).abs().ceil();
            tb.to_integer().try_into().unwrap_or(0u64) as usize
        })
        .unwrap_or(0);
    let bound = 2 * seed.degree() + beta_bound + 2;

    let (first_ops, second_ops): (Option<Gen>, Gen) = match spec.family() {
        Family::Omega => (None, Gen::E(0)),
        Family::Delta => (None, Gen::F(0)),
        Family::Theta => (Some(Gen::E(0)), Gen::F(0)),
    };

    for k in 1..=bound {
        // First element: the seed itself (Omega/Delta) or e_0^k · seed (Theta).
        let (p1, u1_prefix) = match first_ops {
            None => (seed.clone(), EnvelopingElement::one()),
            Some(gen) => {
                let prefix = EnvelopingElement::from_gen(gen).pow(k as u32);
                let p = spec
                    .act_word(&prefix, &seed_poly)
                    .as_t_poly()
                    .expect("t-only input stays t-only");
                (p, prefix)
            }
        };
        let u2_prefix = EnvelopingElement::from_gen(second_ops).pow(k as u32);
        let p2 = spec
            .act_word(&u2_prefix, &seed_poly)
            .as_t_poly()
            .expect("t-only input stays t-only");

        match UniPoly::ext_euclid(&p1, &p2) {
            Err(UniPolyError::NotCoprime { .. }) => continue,
            Ok((a, b)) => {
                let witness = h0_polynomial(&a)
                    .word_mul(&u1_prefix)
                    .word_mul(&u)
                    .add(&h0_polynomial(&b).word_mul(&u2_prefix).word_mul(&u));
                return GenWitness::new(spec.clone(), witness, w.clone());
            }
        }
    }
    Err(StructureError::SearchExhausted { bound })
}

/// Why two specs are (or are not) isomorphic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IsoReason {
    IdenticalParameters,
    BetaReflection,
    ParameterMismatch { detail: String },
    CrossFamily,
}

impl fmt::Display for IsoReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoReason::IdenticalParameters => write!(f, "parameters are identical"),
            IsoReason::BetaReflection => {
                write!(f, "parameters agree up to beta -> -beta-1 (identical actions)")
            }
            IsoReason::ParameterMismatch { detail } => write!(f, "parameter mismatch: {}", detail),
            IsoReason::CrossFamily => write!(
                f,
                "cross-family comparison (extension beyond the in-family relations): \
                 distinguishing invariant: in Omega every e_i acts bijectively, in Delta \
                 every f_i does, and in Theta neither family of generators does"
            ),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsoDecision {
    pub isomorphic: bool,
    pub reason: IsoReason,
}

/// Decide isomorphism. Within Omega or Delta the parameters must agree
/// exactly or up to β -> -β-1; within Theta they must agree exactly. Across
/// families the answer is always no, justified by a computable invariant
/// (which generators act bijectively) rather than by parameter comparison.
pub fn iso_check(a: &ModuleSpec, b: &ModuleSpec) -> IsoDecision {
    if a.family() != b.family() {
        return IsoDecision {
            isomorphic: false,
            reason: IsoReason::CrossFamily,
        };
    }
    let base_equal =
        a.lambda() == b.lambda() && a.alpha() == b.alpha() && a.gamma() == b.gamma();
    if base_equal && a.beta() == b.beta() {
        return IsoDecision {
            isomorphic: true,
            reason: IsoReason::IdenticalParameters,
        };
    }
    match a.family() {
        Family::Omega | Family::Delta => {
            let reflected = -&(b.beta() + &Scalar::one());
            if base_equal && *a.beta() == reflected {
                return IsoDecision {
                    isomorphic: true,
                    reason: IsoReason::BetaReflection,
                };
            }
        }
        Family::Theta => {}
    }
    let detail = if !base_equal {
        "lambda, alpha or gamma differ".to_string()
    } else if a.family() == Family::Theta {
        format!(
            "beta {} != {} (Theta admits no beta reflection)",
            a.beta(),
            b.beta()
        )
    } else {
        format!("beta {} is neither {} nor its reflection", a.beta(), b.beta())
    };
    IsoDecision {
        isomorphic: false,
        reason: IsoReason::ParameterMismatch { detail },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat::rat;

    fn theta_with_beta(beta: Scalar) -> ModuleSpec {
        ModuleSpec::symbolic(Family::Theta).with_beta(beta)
    }

    #[test]
    fn simplicity_table() {
        assert!(is_simple(&ModuleSpec::symbolic(Family::Omega)));
        assert!(is_simple(&ModuleSpec::symbolic(Family::Delta)));
        assert!(is_simple(&ModuleSpec::symbolic(Family::Theta))); // symbolic beta
        assert!(!is_simple(&theta_with_beta(Scalar::from_rat(rat(1, 2)))));
        assert!(is_simple(&theta_with_beta(Scalar::from_rat(rat(1, 3)))));
        assert!(is_simple(&theta_with_beta(Scalar::from_int(-1))));
    }

    #[test]
    fn submodule_generator_beta_zero() {
        // β = 0: single factor t/2.
        let shape = proper_submodule(&theta_with_beta(Scalar::zero())).unwrap();
        assert_eq!(shape.kind, ShapeKind::Principal);
        assert_eq!(shape.g.display_with("t"), "(1/2)*t");
    }

    #[test]
    fn submodule_generator_beta_half() {
        // β = 1/2: (t/2+1/2)(t/2-1/2) = (t^2-1)/4.
        let shape = proper_submodule(&theta_with_beta(Scalar::from_rat(rat(1, 2)))).unwrap();
        assert_eq!(shape.g.display_with("t"), "(1/4)*t^2 - 1/4");
    }

    #[test]
    fn no_submodule_for_simple_specs() {
        assert!(proper_submodule(&ModuleSpec::symbolic(Family::Omega)).is_none());
        assert!(proper_submodule(&theta_with_beta(Scalar::from_rat(rat(1, 3)))).is_none());
    }

    #[test]
    fn invariance_of_theta_submodule() {
        let spec = theta_with_beta(Scalar::from_rat(rat(1, 2)));
        let shape = proper_submodule(&spec).unwrap();
        let report = check_invariance(&spec, &shape, 2, 2).unwrap();
        assert!(report.passed());
        // 1 is not in the submodule.
        assert!(!shape.contains(&SPoly::one()));
    }

    #[test]
    fn omega_principal_t_not_invariant() {
        // e_0 · t = α(t-2) is not divisible by t.
        let spec = ModuleSpec::symbolic(Family::Omega);
        let shape = SubmoduleShape::principal(UniPoly::x());
        let err = check_invariance(&spec, &shape, 1, 1).unwrap_err();
        match err {
            StructureError::NotInvariant { gen, .. } => {
                assert!(matches!(gen, Gen::E(_)));
            }
            other => panic!("expected NotInvariant, got {:?}", other),
        }
    }

    #[test]
    fn tau_intertwines_small_betas() {
        for beta in [Scalar::zero(), Scalar::from_rat(rat(1, 2))] {
            let report = tau_check(
                &Scalar::lambda(),
                &Scalar::alpha(),
                &beta,
                &Scalar::gamma(),
                2,
            )
            .unwrap();
            assert!(report.passed(), "beta = {}", beta);
        }
    }

    #[test]
    fn tau_rejects_generic_beta() {
        let err = tau_check(
            &Scalar::lambda(),
            &Scalar::alpha(),
            &Scalar::from_rat(rat(1, 3)),
            &Scalar::gamma(),
            1,
        )
        .unwrap_err();
        assert!(matches!(err, StructureError::ParameterNotHalfInteger { .. }));
    }

    #[test]
    fn tau_injective_on_monomials() {
        // Multiplication by the product polynomial maps distinct monomials to
        // distinct polynomials.
        let beta = Scalar::from_rat(rat(1, 2));
        let tb = two_beta_in_z_plus(&beta).unwrap();
        let product = SPoly::from_t_poly(&theta_submodule_generator(&beta, &tb));
        let mut images = Vec::new();
        for j in 0..=2u32 {
            for k in 0..=2u32 {
                let img = SPoly::monomial(j, k, Scalar::one()).mul(&product);
                assert!(!images.contains(&img));
                images.push(img);
            }
        }
    }

    #[test]
    fn generate_one_omega_t_exact_witness() {
        // Ω, w = t: witness (1/2)·1 - (1/(2α))·e_0.
        let spec = ModuleSpec::symbolic(Family::Omega);
        let witness = generate_one(&spec, &SPoly::var_t()).unwrap();
        let mut expected = EnvelopingElement::zero();
        expected.add_term(Word::unit(), Scalar::from_rat(rat(1, 2)));
        expected.add_term(
            Word(vec![Gen::E(0)]),
            -&(&Scalar::one() / &(&Scalar::from_int(2) * &Scalar::alpha())),
        );
        assert_eq!(witness.u(), &expected);
        assert!(witness.validate());
    }

    #[test]
    fn generate_one_trivial_vector() {
        let spec = ModuleSpec::symbolic(Family::Omega);
        let witness = generate_one(&spec, &SPoly::one()).unwrap();
        assert_eq!(witness.u(), &EnvelopingElement::one());
    }

    #[test]
    fn generate_one_theta_instantiated() {
        // Θ with β = 1/3: the e/f Bézout route on w = t, and the constant
        // shortcut on w = 1. The two-generator form (3/(2α))e_0 + (3α/2)f_0
        // is itself a valid witness for w = 1.
        let spec = theta_with_beta(Scalar::from_rat(rat(1, 3)));
        let witness = generate_one(&spec, &SPoly::var_t()).unwrap();
        assert!(witness.validate());

        let witness_one = generate_one(&spec, &SPoly::one()).unwrap();
        assert_eq!(witness_one.u(), &EnvelopingElement::one());

        let alpha = Scalar::alpha();
        let mut literal = EnvelopingElement::zero();
        literal.add_term(
            Word(vec![Gen::E(0)]),
            &Scalar::from_rat(rat(3, 2)) / &alpha,
        );
        literal.add_term(
            Word(vec![Gen::F(0)]),
            &Scalar::from_rat(rat(3, 2)) * &alpha,
        );
        assert!(spec.act_word(&literal, &SPoly::one()).is_one());
    }

    #[test]
    fn generate_one_strips_s() {
        // Mixed vector with s-degree 2 for each family.
        let w = SPoly::monomial(2, 1, Scalar::one())
            .add(&SPoly::monomial(1, 0, Scalar::from_int(3)))
            .sub(&SPoly::constant(Scalar::from_rat(rat(1, 2))));
        for family in Family::ALL {
            let spec = if family == Family::Theta {
                theta_with_beta(Scalar::from_rat(rat(1, 3)))
            } else {
                ModuleSpec::symbolic(family)
            };
            let witness = generate_one(&spec, &w).unwrap();
            assert!(witness.validate(), "family {}", family);
        }
    }

    #[test]
    fn generate_one_rejects_zero_and_nonsimple() {
        let spec = ModuleSpec::symbolic(Family::Omega);
        assert_eq!(
            generate_one(&spec, &SPoly::zero()).unwrap_err(),
            StructureError::ZeroVector
        );
        let bad = theta_with_beta(Scalar::from_rat(rat(1, 2)));
        assert_eq!(
            generate_one(&bad, &SPoly::var_t()).unwrap_err(),
            StructureError::NotSimple {
                two_beta: rat(1, 1)
            }
        );
    }

    fn num_spec(family: Family, l: i64, a: i64, b: Rat, g: i64) -> ModuleSpec {
        ModuleSpec::new(
            family,
            Scalar::from_int(l),
            Scalar::from_int(a),
            Scalar::from_rat(b),
            Scalar::from_int(g),
        )
        .unwrap()
    }

    #[test]
    fn iso_beta_reflection() {
        // Ω(2,3,1,0) ≅ Ω(2,3,-2,0); Θ(2,3,1,0) ≇ Θ(2,3,-2,0).
        let a = num_spec(Family::Omega, 2, 3, rat(1, 1), 0);
        let b = num_spec(Family::Omega, 2, 3, rat(-2, 1), 0);
        let d = iso_check(&a, &b);
        assert!(d.isomorphic);
        assert_eq!(d.reason, IsoReason::BetaReflection);

        let a = num_spec(Family::Theta, 2, 3, rat(1, 1), 0);
        let b = num_spec(Family::Theta, 2, 3, rat(-2, 1), 0);
        assert!(!iso_check(&a, &b).isomorphic);
    }

    #[test]
    fn iso_cross_family_reports_invariant() {
        let a = ModuleSpec::symbolic(Family::Omega);
        let b = ModuleSpec::symbolic(Family::Delta);
        let d = iso_check(&a, &b);
        assert!(!d.isomorphic);
        assert_eq!(d.reason, IsoReason::CrossFamily);
    }

    #[test]
    fn omega_actions_identical_under_beta_reflection() {
        // Literal polynomial-level identity, stronger than abstract
        // isomorphism: the f-coefficient depends on β only through β(β+1).
        let a = ModuleSpec::symbolic(Family::Omega);
        let reflected = -&(&Scalar::beta() + &Scalar::one());
        let b = a.with_beta(reflected);
        for x in basis_window(2) {
            for j in 0..=2u32 {
                for k in 0..=2u32 {
                    let g = SPoly::monomial(j, k, Scalar::one());
                    assert_eq!(a.act_gen(x, &g), b.act_gen(x, &g));
                }
            }
        }
    }
}
