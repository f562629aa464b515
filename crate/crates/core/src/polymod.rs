//! The polynomial space C[s,t] carrying the three families of module
//! structures Omega, Delta, Theta, all free of rank one over the enveloping
//! algebra of span{d_0, h_0} (d_0 acts as multiplication by s, h_0 by t).
//!
//! With parameters λ, α invertible and β, γ arbitrary, the generator actions
//! are (writing g = g(s,t), and all with C·g = 0):
//!
//! ```text
//! Omega:  e_i·g =  λ^i α g(s-i, t-2)
//!         f_i·g = -(λ^i/α)(t/2-β)(t/2+β+1) g(s-i, t+2)
//! Delta:  e_i·g = -(λ^i/α)(t/2+β)(t/2-β-1) g(s-i, t-2)
//!         f_i·g =  λ^i α g(s-i, t+2)
//! Theta:  e_i·g =  λ^i α (t/2+β) g(s-i, t-2)
//!         f_i·g = -(λ^i/α)(t/2-β) g(s-i, t+2)
//! all:    h_i·g =  λ^i t g(s-i, t)
//!         d_i·g =  λ^i (s+iγ) g(s-i, t)
//! ```

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::liealg::{basis_bracket, basis_window, AlgebraElement, EnvelopingElement, Gen};
use crate::report::CheckReport;
use crate::scalars::rat::Rat;
use crate::scalars::{Scalar, UniPoly};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("parameter {name} must be nonzero")]
    InvalidParameter { name: &'static str },
}

/// Sparse bivariate polynomial in s, t with scalar coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SPoly {
    terms: BTreeMap<(u32, u32), Scalar>,
}

/// Binomial coefficients C(n, k) for the substitution expansion, cached up
/// front; degrees beyond the table do not occur at workbench scale.
fn binomial(n: u32, k: u32) -> Rat {
    const N: usize = 65;
    static TABLE: OnceLock<Vec<Vec<u64>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut t = vec![vec![0u64; N]; N];
        for n in 0..N {
            t[n][0] = 1;
            for k in 1..=n {
                t[n][k] = t[n - 1][k - 1] + if k < n { t[n - 1][k] } else { 0 };
            }
        }
        t
    });
    let (n, k) = (n as usize, k as usize);
    if n < N {
        return Rat::from_integer(table[n][k].into());
    }
    let mut acc = num_bigint::BigInt::from(1);
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    Rat::from_integer(acc)
}

impl SPoly {
    pub fn zero() -> Self {
        SPoly::default()
    }

    pub fn one() -> Self {
        SPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        SPoly { terms }
    }

    pub fn var_s() -> Self {
        SPoly::monomial(1, 0, Scalar::one())
    }

    pub fn var_t() -> Self {
        SPoly::monomial(0, 1, Scalar::one())
    }

    pub fn monomial(deg_s: u32, deg_t: u32, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_s, deg_t), c);
        }
        SPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, deg_s: u32, deg_t: u32) -> Scalar {
        self.terms
            .get(&(deg_s, deg_t))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn deg_s(&self) -> u32 {
        self.terms.keys().map(|&(a, _)| a).max().unwrap_or(0)
    }

    pub fn deg_t(&self) -> u32 {
        self.terms.keys().map(|&(_, b)| b).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, key: (u32, u32), c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Scalar::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        SPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return SPoly::zero();
        }
        SPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = SPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }

    /// Substitute s -> s + ds, t -> t + dt by exact binomial expansion.
    pub fn compose_shift(&self, ds: i64, dt: i64) -> Self {
        if ds == 0 && dt == 0 {
            return self.clone();
        }
        let zero = Rat::from_integer(0.into());
        let mut out = SPoly::zero();
        for (&(a, b), c) in &self.terms {
            let mut s_parts: Vec<(u32, Rat)> = Vec::with_capacity(a as usize + 1);
            if ds == 0 {
                s_parts.push((a, Rat::from_integer(1.into())));
            } else {
                let mut pw = Rat::from_integer(1.into());
                for p in (0..=a).rev() {
                    s_parts.push((p, &binomial(a, p) * &pw));
                    pw *= Rat::from_integer(ds.into());
                }
            }
            let mut t_parts: Vec<(u32, Rat)> = Vec::with_capacity(b as usize + 1);
            if dt == 0 {
                t_parts.push((b, Rat::from_integer(1.into())));
            } else {
                let mut pw = Rat::from_integer(1.into());
                for q in (0..=b).rev() {
                    t_parts.push((q, &binomial(b, q) * &pw));
                    pw *= Rat::from_integer(dt.into());
                }
            }
            for (p, cs) in &s_parts {
                for (q, ct) in &t_parts {
                    let k = cs * ct;
                    if k == zero {
                        continue;
                    }
                    out.add_term((*p, *q), c * &Scalar::from_rat(k));
                }
            }
        }
        out
    }

    /// The value as a scalar, when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.terms.len() == 1 {
            self.terms.get(&(0, 0)).cloned()
        } else {
            None
        }
    }

    /// Coefficient of t^k as a polynomial in s alone.
    pub fn t_coefficient(&self, k: u32) -> SPoly {
        let mut out = SPoly::zero();
        for (&(a, b), c) in &self.terms {
            if b == k {
                out.add_term((a, 0), c.clone());
            }
        }
        out
    }

    /// The polynomial as univariate in t, if no s occurs.
    pub fn as_t_poly(&self) -> Option<UniPoly> {
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        if self.deg_s() > 0 {
            return None;
        }
        let mut coeffs = vec![Scalar::zero(); self.deg_t() as usize + 1];
        for (&(_, b), c) in &self.terms {
            coeffs[b as usize] = c.clone();
        }
        Some(UniPoly::from_coeffs(coeffs))
    }

    /// Slices c_j(t) of `self = sum_j s^j c_j(t)`, indexed by s-degree.
    pub fn t_slices(&self) -> BTreeMap<u32, UniPoly> {
        let mut map: BTreeMap<u32, Vec<Scalar>> = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            let v = map.entry(a).or_default();
            if v.len() <= b as usize {
                v.resize(b as usize + 1, Scalar::zero());
            }
            v[b as usize] = c.clone();
        }
        map.into_iter()
            .map(|(a, v)| (a, UniPoly::from_coeffs(v)))
            .collect()
    }

    pub fn from_t_poly(p: &UniPoly) -> Self {
        let mut out = SPoly::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term((0, k as u32), c.clone());
        }
        out
    }

    /// Render with the given variable names (the classification side reads
    /// the same polynomials in d0, h0).
    pub fn display_with(&self, var_s: &str, var_t: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        // Descending graded-lex with s before t.
        let mut keys: Vec<(u32, u32)> = self.terms.keys().cloned().collect();
        keys.sort_by_key(|&(a, b)| std::cmp::Reverse((a + b, a, b)));
        let mut out = String::new();
        for (pos, key) in keys.iter().enumerate() {
            let c = &self.terms[key];
            let text = format!("{}", c);
            let neg = text.starts_with('-');
            let mag = if neg { -c } else { c.clone() };
            if pos == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if *key == (0, 0) {
                factors.push(format!("{}", mag));
            } else if !mag.is_one() {
                factors.push(crate::scalars::scalar::factor_string(&mag));
            }
            let (a, b) = *key;
            if a == 1 {
                factors.push(var_s.to_string());
            } else if a > 1 {
                factors.push(format!("{}^{}", var_s, a));
            }
            if b == 1 {
                factors.push(var_t.to_string());
            } else if b > 1 {
                factors.push(format!("{}^{}", var_t, b));
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("s", "t"))
    }
}

/// Module family tag.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    Omega,
    Delta,
    Theta,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Omega, Family::Delta, Family::Theta];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Omega => write!(f, "Omega"),
            Family::Delta => write!(f, "Delta"),
            Family::Theta => write!(f, "Theta"),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "omega" => Ok(Family::Omega),
            "delta" => Ok(Family::Delta),
            "theta" => Ok(Family::Theta),
            other => Err(format!(
                "unknown family `{}` (expected Omega, Delta or Theta)",
                other
            )),
        }
    }
}

/// The decomposed action of one generator: multiply by `coeff` after the
/// substitution (s, t) -> (s + s_shift, t + t_shift).
#[derive(Clone, Debug)]
pub struct GenAction {
    pub coeff: SPoly,
    pub s_shift: i64,
    pub t_shift: i64,
}

impl GenAction {
    pub fn apply(&self, g: &SPoly) -> SPoly {
        if self.coeff.is_zero() {
            return SPoly::zero();
        }
        self.coeff.mul(&g.compose_shift(self.s_shift, self.t_shift))
    }
}

/// Family tag plus the four parameters; fixes the action of every generator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleSpec {
    family: Family,
    lambda: Scalar,
    alpha: Scalar,
    beta: Scalar,
    gamma: Scalar,
}

impl ModuleSpec {
    pub fn new(
        family: Family,
        lambda: Scalar,
        alpha: Scalar,
        beta: Scalar,
        gamma: Scalar,
    ) -> Result<ModuleSpec, ModuleError> {
        if lambda.is_zero() {
            return Err(ModuleError::InvalidParameter { name: "lambda" });
        }
        if alpha.is_zero() {
            return Err(ModuleError::InvalidParameter { name: "alpha" });
        }
        Ok(ModuleSpec {
            family,
            lambda,
            alpha,
            beta,
            gamma,
        })
    }

    /// Fully symbolic parameters (L, A, B, G).
    pub fn symbolic(family: Family) -> ModuleSpec {
        ModuleSpec {
            family,
            lambda: Scalar::lambda(),
            alpha: Scalar::alpha(),
            beta: Scalar::beta(),
            gamma: Scalar::gamma(),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn beta(&self) -> &Scalar {
        &self.beta
    }

    pub fn gamma(&self) -> &Scalar {
        &self.gamma
    }

    pub fn with_beta(&self, beta: Scalar) -> ModuleSpec {
        ModuleSpec {
            beta,
            ..self.clone()
        }
    }

    /// t/2 + c as an SPoly.
    pub(crate) fn half_t_plus(c: &Scalar) -> SPoly {
        let mut p = SPoly::monomial(0, 1, Scalar::from_rat(crate::scalars::rat::rat(1, 2)));
        p.add_term((0, 0), c.clone());
        p
    }

    /// The decomposed action of a generator under this spec.
    pub fn gen_action(&self, x: Gen) -> GenAction {
        let one = Scalar::one();
        match x {
            Gen::C => GenAction {
                coeff: SPoly::zero(),
                s_shift: 0,
                t_shift: 0,
            },
            Gen::H(i) => GenAction {
                coeff: SPoly::monomial(0, 1, self.lambda.pow(i)),
                s_shift: -i,
                t_shift: 0,
            },
            Gen::D(i) => {
                let li = self.lambda.pow(i);
                let mut coeff = SPoly::monomial(1, 0, li.clone());
                coeff.add_term((0, 0), &(&Scalar::from_int(i) * &self.gamma) * &li);
                GenAction {
                    coeff,
                    s_shift: -i,
                    t_shift: 0,
                }
            }
            Gen::E(i) => {
                let li_a = &self.lambda.pow(i) * &self.alpha;
                let coeff = match self.family {
                    Family::Omega => SPoly::constant(li_a),
                    Family::Delta => {
                        let scale = -&(&self.lambda.pow(i) / &self.alpha);
                        let p1 = Self::half_t_plus(&self.beta);
                        let p2 = Self::half_t_plus(&-&(&self.beta + &one));
                        p1.mul(&p2).scale(&scale)
                    }
                    Family::Theta => Self::half_t_plus(&self.beta).scale(&li_a),
                };
                GenAction {
                    coeff,
                    s_shift: -i,
                    t_shift: -2,
                }
            }
            Gen::F(i) => {
                let coeff = match self.family {
                    Family::Omega => {
                        let scale = -&(&self.lambda.pow(i) / &self.alpha);
                        let p1 = Self::half_t_plus(&-&self.beta);
                        let p2 = Self::half_t_plus(&(&self.beta + &one));
                        p1.mul(&p2).scale(&scale)
                    }
                    Family::Delta => SPoly::constant(&self.lambda.pow(i) * &self.alpha),
                    Family::Theta => {
                        let scale = -&(&self.lambda.pow(i) / &self.alpha);
                        Self::half_t_plus(&-&self.beta).scale(&scale)
                    }
                };
                GenAction {
                    coeff,
                    s_shift: -i,
                    t_shift: 2,
                }
            }
        }
    }

    /// Action of one basis symbol.
    pub fn act_gen(&self, x: Gen, g: &SPoly) -> SPoly {
        self.gen_action(x).apply(g)
    }

    /// Scalar-linear extension to algebra elements.
    pub fn act_elem(&self, x: &AlgebraElement, g: &SPoly) -> SPoly {
        let mut out = SPoly::zero();
        for (gen, c) in x.terms() {
            out = out.add(&self.act_gen(*gen, g).scale(c));
        }
        out
    }

    /// Action of an enveloping element: each word composes right-to-left,
    /// so `[x1, ..., xn]` acts as x1·(x2·(...(xn·g))). Results for shared
    /// word suffixes are computed once per call.
    pub fn act_word(&self, u: &EnvelopingElement, g: &SPoly) -> SPoly {
        let mut cache: HashMap<Vec<Gen>, SPoly> = HashMap::new();
        let mut out = SPoly::zero();
        for (word, c) in u.terms() {
            let w = &word.0;
            // Longest already-computed suffix.
            let mut idx = 0;
            while idx < w.len() && !cache.contains_key(&w[idx..]) {
                idx += 1;
            }
            let mut acc = if idx >= w.len() {
                g.clone()
            } else {
                cache[&w[idx..]].clone()
            };
            while idx > 0 {
                idx -= 1;
                acc = self.act_gen(w[idx], &acc);
                cache.insert(w[idx..].to_vec(), acc.clone());
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    /// Exhaustive module-axiom suite: x·(y·g) - y·(x·g) = [x,y]·g for all
    /// unordered basis pairs with |index| <= window and all monomials
    /// s^j t^k with j, k <= degree. Failures record the pair, the monomial,
    /// and the nonzero difference polynomial.
    pub fn check_module_axiom(&self, window: i64, degree: u32) -> CheckReport {
        let basis = basis_window(window);
        let mut report = CheckReport::default();
        for (i, &x) in basis.iter().enumerate() {
            for &y in basis.iter().skip(i) {
                let bracket = basis_bracket(x, y);
                for j in 0..=degree {
                    for k in 0..=degree {
                        let g = SPoly::monomial(j, k, Scalar::one());
                        report.record();
                        let lhs = self
                            .act_gen(x, &self.act_gen(y, &g))
                            .sub(&self.act_gen(y, &self.act_gen(x, &g)));
                        let rhs = self.act_elem(&bracket, &g);
                        let diff = lhs.sub(&rhs);
                        if !diff.is_zero() {
                            report.fail(
                                "module-axiom",
                                format!(
                                    "family={}, x={}, y={}, g=s^{}*t^{}",
                                    self.family, x, y, j, k
                                ),
                                format!("{}", diff),
                            );
                        }
                    }
                }
            }
        }
        report
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}, {}, {}, {})",
            self.family, self.lambda, self.alpha, self.beta, self.gamma
        )
    }
}
