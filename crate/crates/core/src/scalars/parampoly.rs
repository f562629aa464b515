//! Sparse polynomials in the four parameter symbols λ, α, β, γ over the
//! rationals, written `L A B G` in the text grammar.
//!
//! Terms are kept sorted in graded-lexicographic order (total degree first,
//! then L > A > B > G), with no zero coefficients stored. That fixed order is
//! what makes content/primitive-part normalization — and hence structural
//! equality of `Scalar`s — canonical.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rat::{int_gcd, int_lcm, rat_sqrt, Rat};

/// One of the four parameter symbols.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Param {
    Lambda,
    Alpha,
    Beta,
    Gamma,
}

impl Param {
    pub const ALL: [Param; 4] = [Param::Lambda, Param::Alpha, Param::Beta, Param::Gamma];

    pub fn index(self) -> usize {
        match self {
            Param::Lambda => 0,
            Param::Alpha => 1,
            Param::Beta => 2,
            Param::Gamma => 3,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Param::Lambda => "L",
            Param::Alpha => "A",
            Param::Beta => "B",
            Param::Gamma => "G",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Param> {
        match s {
            "L" => Some(Param::Lambda),
            "A" => Some(Param::Alpha),
            "B" => Some(Param::Beta),
            "G" => Some(Param::Gamma),
            _ => None,
        }
    }
}

/// Exponent tuple (deg_L, deg_A, deg_B, deg_G).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ParamExp(pub [u16; 4]);

impl ParamExp {
    pub const ZERO: ParamExp = ParamExp([0; 4]);

    fn total(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    fn add(&self, other: &ParamExp) -> ParamExp {
        let mut e = [0u16; 4];
        for i in 0..4 {
            e[i] = self.0[i] + other.0[i];
        }
        ParamExp(e)
    }

    fn divides(&self, other: &ParamExp) -> bool {
        (0..4).all(|i| self.0[i] <= other.0[i])
    }

    fn sub(&self, other: &ParamExp) -> ParamExp {
        let mut e = [0u16; 4];
        for i in 0..4 {
            e[i] = self.0[i] - other.0[i];
        }
        ParamExp(e)
    }

    fn meet(&self, other: &ParamExp) -> ParamExp {
        let mut e = [0u16; 4];
        for i in 0..4 {
            e[i] = self.0[i].min(other.0[i]);
        }
        ParamExp(e)
    }
}

impl Ord for ParamExp {
    fn cmp(&self, other: &Self) -> Ordering {
        // Graded lex: total degree first, ties broken with L heaviest.
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ParamExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial in the parameters over `Rat`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ParamPoly {
    // Strictly ascending by ParamExp, no zero coefficients.
    terms: Vec<(ParamExp, Rat)>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        ParamPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            ParamPoly::zero()
        } else {
            ParamPoly {
                terms: vec![(ParamExp::ZERO, c)],
            }
        }
    }

    pub fn symbol(p: Param) -> Self {
        let mut e = [0u16; 4];
        e[p.index()] = 1;
        ParamPoly {
            terms: vec![(ParamExp(e), Rat::one())],
        }
    }

    pub fn monomial(exp: ParamExp, c: Rat) -> Self {
        if c.is_zero() {
            ParamPoly::zero()
        } else {
            ParamPoly {
                terms: vec![(exp, c)],
            }
        }
    }

    fn from_map(map: BTreeMap<ParamExp, Rat>) -> Self {
        ParamPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_zero() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(e, _)| e.is_zero())
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParamExp, &Rat)> {
        self.terms.iter().map(|(e, c)| (e, c))
    }

    pub fn leading(&self) -> Option<(&ParamExp, &Rat)> {
        self.terms.last().map(|(e, c)| (e, c))
    }

    pub fn degree_in(&self, p: Param) -> u16 {
        let i = p.index();
        self.terms.iter().map(|(e, _)| e.0[i]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.total()).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Self {
        ParamPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out: Vec<(ParamExp, Rat)> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        ParamPoly { terms: out }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ParamPoly::zero();
        }
        // Fast path: monomial times polynomial.
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return ParamPoly {
                terms: other.terms.iter().map(|(e2, c2)| (e.add(e2), c * c2)).collect(),
            };
        }
        if other.terms.len() == 1 {
            return other.mul(self);
        }
        let mut map: BTreeMap<ParamExp, Rat> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.add(e2);
                let entry = map.entry(e).or_insert_with(Rat::zero);
                *entry += c1 * c2;
            }
        }
        ParamPoly::from_map(map)
    }

    pub fn mul_rat(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = ParamPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Substitute a rational value for one parameter.
    pub fn substitute(&self, p: Param, value: &Rat) -> Self {
        let i = p.index();
        let mut map: BTreeMap<ParamExp, Rat> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let k = e2.0[i];
            e2.0[i] = 0;
            let mut pw = Rat::one();
            for _ in 0..k {
                pw *= value;
            }
            let entry = map.entry(e2).or_insert_with(Rat::zero);
            *entry += c * &pw;
        }
        ParamPoly::from_map(map)
    }

    /// Split into (rational content, primitive part). The primitive part has
    /// integer coefficients with gcd 1 and positive leading coefficient; the
    /// content carries the sign, so `self = content * primitive`.
    /// Zero splits as (0, 0).
    pub fn content_primitive(&self) -> (Rat, ParamPoly) {
        if self.is_zero() {
            return (Rat::zero(), ParamPoly::zero());
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = int_gcd(&num_gcd, c.numer());
            den_lcm = int_lcm(&den_lcm, c.denom());
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        if self.terms.last().unwrap().1.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        let prim = ParamPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * &inv)).collect(),
        };
        (content, prim)
    }

    /// Exact multivariate division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &ParamPoly) -> Option<ParamPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(ParamPoly::zero());
        }
        if let Some(c) = d.as_constant() {
            let inv = c.recip();
            return Some(self.mul_rat(&inv));
        }
        let (de, dc) = d.leading().unwrap();
        let (de, dc) = (*de, dc.clone());
        let mut rem = self.clone();
        let mut quo: Vec<(ParamExp, Rat)> = Vec::new();
        while !rem.is_zero() {
            let (re, rc) = rem.leading().unwrap();
            if !de.divides(re) {
                return None;
            }
            let qe = re.sub(&de);
            let qc = rc / &dc;
            quo.push((qe, qc.clone()));
            rem = rem.sub(&d.mul(&ParamPoly::monomial(qe, qc)));
        }
        quo.reverse();
        // Leading terms were produced in descending order; after reversing
        // they are ascending and distinct.
        Some(ParamPoly { terms: quo })
    }

    /// Greatest common divisor, returned integer-primitive with positive
    /// leading coefficient (`gcd(0,0) = 0`). Primitive polynomial remainder
    /// sequences keep intermediate coefficients from exploding.
    pub fn gcd(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
        if a.is_zero() {
            return b.content_primitive().1;
        }
        if b.is_zero() {
            return a.content_primitive().1;
        }
        let ap = a.content_primitive().1;
        let bp = b.content_primitive().1;
        if ap.is_constant() || bp.is_constant() {
            return ParamPoly::one();
        }
        // Monomial fast path: gcd is the shared monomial part.
        if ap.terms.len() == 1 || bp.terms.len() == 1 {
            let (mono, other) = if ap.terms.len() == 1 { (&ap, &bp) } else { (&bp, &ap) };
            let mut e = mono.terms[0].0;
            for (oe, _) in &other.terms {
                e = e.meet(oe);
            }
            return ParamPoly::monomial(e, Rat::one());
        }
        let var = (0..4)
            .find(|&i| {
                ap.terms.iter().any(|(e, _)| e.0[i] > 0) || bp.terms.iter().any(|(e, _)| e.0[i] > 0)
            })
            .expect("non-constant polynomials have a variable");
        let ua = ap.uni_coeffs(var);
        let ub = bp.uni_coeffs(var);
        let cont_a = uni_content(&ua);
        let cont_b = uni_content(&ub);
        let cont_gcd = ParamPoly::gcd(&cont_a, &cont_b);
        let pa: Vec<ParamPoly> = ua.iter().map(|c| c.div_exact(&cont_a).unwrap()).collect();
        let pb: Vec<ParamPoly> = ub.iter().map(|c| c.div_exact(&cont_b).unwrap()).collect();

        let (mut f, mut g) = if uni_deg(&pa) >= uni_deg(&pb) { (pa, pb) } else { (pb, pa) };
        loop {
            let r = uni_prem(&f, &g);
            if uni_is_zero(&r) {
                break;
            }
            let c = uni_content(&r);
            let r: Vec<ParamPoly> = r.iter().map(|x| x.div_exact(&c).unwrap()).collect();
            f = g;
            g = r;
        }
        let g_poly = ParamPoly::from_uni(var, &g);
        let (_, prim) = g_poly.content_primitive();
        // Strip the content in the coefficient ring as well.
        let inner = uni_content(&prim.uni_coeffs(var));
        let prim = prim.div_exact(&inner).unwrap();
        cont_gcd.mul(&prim).content_primitive().1
    }

    /// Exact square root, if `self` is a perfect square.
    pub fn sqrt(&self) -> Option<ParamPoly> {
        if self.is_zero() {
            return Some(ParamPoly::zero());
        }
        let (content, prim) = self.content_primitive();
        let c_sqrt = rat_sqrt(&content)?;
        let p_sqrt = prim.sqrt_primitive()?;
        let candidate = p_sqrt.mul_rat(&c_sqrt);
        if candidate.mul(&candidate) == *self {
            Some(candidate)
        } else {
            None
        }
    }

    fn sqrt_primitive(&self) -> Option<ParamPoly> {
        if let Some(c) = self.as_constant() {
            return rat_sqrt(&c).map(ParamPoly::constant);
        }
        let var = (0..4)
            .find(|&i| self.terms.iter().any(|(e, _)| e.0[i] > 0))
            .unwrap();
        let u = self.uni_coeffs(var);
        let d = uni_deg(&u);
        if !d.is_multiple_of(2) {
            return None;
        }
        let m = d / 2;
        let lead_sqrt = u[d].sqrt()?;
        let mut q: Vec<ParamPoly> = vec![ParamPoly::zero(); m + 1];
        q[m] = lead_sqrt.clone();
        let two_lead = lead_sqrt.mul_rat(&Rat::from_integer(2.into()));
        for r in (0..m).rev() {
            // Coefficient of x^(m+r) in q^2 must match u[m+r]; the only pairs
            // involving the unknown q_r are (r, m) and (m, r).
            let mut acc = u.get(m + r).cloned().unwrap_or_else(ParamPoly::zero);
            let mut a = r + 1;
            while 2 * a <= m + r {
                let b = m + r - a;
                if b <= m {
                    let prod = q[a].mul(&q[b]);
                    if a == b {
                        acc = acc.sub(&prod);
                    } else {
                        acc = acc.sub(&prod).sub(&prod);
                    }
                }
                a += 1;
            }
            q[r] = acc.div_exact(&two_lead)?;
        }
        let candidate = ParamPoly::from_uni(var, &q);
        if candidate.mul(&candidate) == *self {
            Some(candidate)
        } else {
            None
        }
    }

    /// Coefficients of `self` viewed as univariate in variable `var`;
    /// index = exponent, entries are polynomials without `var`.
    fn uni_coeffs(&self, var: usize) -> Vec<ParamPoly> {
        let deg = self.terms.iter().map(|(e, _)| e.0[var]).max().unwrap_or(0) as usize;
        let mut out = vec![ParamPoly::zero(); deg + 1];
        for (e, c) in &self.terms {
            let k = e.0[var] as usize;
            let mut e2 = *e;
            e2.0[var] = 0;
            out[k] = out[k].add(&ParamPoly::monomial(e2, c.clone()));
        }
        out
    }

    fn from_uni(var: usize, coeffs: &[ParamPoly]) -> ParamPoly {
        let mut acc = ParamPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut e = [0u16; 4];
            e[var] = k as u16;
            acc = acc.add(&c.mul(&ParamPoly::monomial(ParamExp(e), Rat::one())));
        }
        acc
    }
}

fn uni_deg(u: &[ParamPoly]) -> usize {
    u.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn uni_is_zero(u: &[ParamPoly]) -> bool {
    u.iter().all(|c| c.is_zero())
}

fn uni_content(u: &[ParamPoly]) -> ParamPoly {
    let mut g = ParamPoly::zero();
    for c in u {
        if !c.is_zero() {
            g = ParamPoly::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
    }
    g
}

/// Pseudo-remainder of `f` by `g` in the distinguished variable, computed by
/// repeated leading-term elimination (each step scales by the leading
/// coefficient of `g`; contents are stripped by the caller).
fn uni_prem(f: &[ParamPoly], g: &[ParamPoly]) -> Vec<ParamPoly> {
    let dg = uni_deg(g);
    let lg = g[dg].clone();
    let mut r: Vec<ParamPoly> = f.to_vec();
    loop {
        if uni_is_zero(&r) {
            return r;
        }
        let dr = uni_deg(&r);
        if dr < dg {
            return r;
        }
        let lr = r[dr].clone();
        // r := lg * r - lr * x^(dr-dg) * g
        let mut out = vec![ParamPoly::zero(); dr.max(dg + dr - dg) + 1];
        for (k, c) in r.iter().enumerate() {
            out[k] = c.mul(&lg);
        }
        for (k, c) in g.iter().enumerate() {
            let idx = k + dr - dg;
            out[idx] = out[idx].sub(&c.mul(&lr));
        }
        while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        r = out;
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parampoly(f, self)
    }
}

// Rendering shared with the scalar layer: descending graded-lex term order,
// `+`/`-` joins with spaces, rational coefficients as `p/q`.
pub(crate) fn write_parampoly(f: &mut fmt::Formatter<'_>, p: &ParamPoly) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (pos, (e, c)) in p.terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        let mag = if neg { -c } else { c.clone() };
        if pos == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        write_mono(f, e, &mag)?;
    }
    Ok(())
}

fn write_mono(f: &mut fmt::Formatter<'_>, e: &ParamExp, mag: &Rat) -> fmt::Result {
    let mut factors: Vec<String> = Vec::new();
    if !mag.is_one() || e.is_zero() {
        if e.is_zero() || num_traits::One::is_one(mag.denom()) {
            factors.push(format!("{}", mag));
        } else {
            factors.push(format!("({})", mag));
        }
    }
    for p in Param::ALL {
        let k = e.0[p.index()];
        if k == 1 {
            factors.push(p.symbol().to_string());
        } else if k > 1 {
            factors.push(format!("{}^{}", p.symbol(), k));
        }
    }
    write!(f, "{}", factors.join("*"))
}
