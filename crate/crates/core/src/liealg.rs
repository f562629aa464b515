//! The affine-Virasoro algebra of type A1: basis symbols e_i, f_i, h_i, d_i
//! and the central element C, the bracket table, finite linear combinations,
//! and free enveloping words.
//!
//! Bracket table (bilinear extension):
//!
//! ```text
//! [e_i, f_j] = h_{i+j} + i δ_{i+j,0} C        [h_i, e_j] =  2 e_{i+j}
//! [h_i, f_j] = -2 f_{i+j}                     [d_i, h_j] =  j h_{i+j}
//! [d_i, d_j] = (j-i) d_{i+j} + δ_{i+j,0} (i^3-i)/12 C
//! [h_i, h_j] = 2 i δ_{i+j,0} C                [d_i, e_j] =  j e_{i+j}
//! [d_i, f_j] = j f_{i+j}                      [e_i, e_j] = [f_i, f_j] = [C, .] = 0
//! ```

use std::collections::BTreeMap;
use std::fmt;

use crate::report::CheckReport;
use crate::scalars::rat::rat;
use crate::scalars::{Scalar};

/// Basis symbol. `C` carries no index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Gen {
    E(i64),
    F(i64),
    H(i64),
    D(i64),
    C,
}

impl Gen {
    pub fn index(&self) -> Option<i64> {
        match self {
            Gen::E(i) | Gen::F(i) | Gen::H(i) | Gen::D(i) => Some(*i),
            Gen::C => None,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::E(i) => write!(f, "e[{}]", i),
            Gen::F(i) => write!(f, "f[{}]", i),
            Gen::H(i) => write!(f, "h[{}]", i),
            Gen::D(i) => write!(f, "d[{}]", i),
            Gen::C => write!(f, "c"),
        }
    }
}

/// Finite scalar-linear combination of basis symbols.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Gen, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn from_gen(g: Gen) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(g, Scalar::one());
        AlgebraElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Gen, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, g: Gen, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(g).or_insert_with(Scalar::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            terms: self.terms.iter().map(|(g, c)| (*g, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(g, k)| (*g, k * c)).collect(),
        }
    }

    /// Bilinear extension of the bracket table.
    pub fn bracket(&self, other: &Self) -> Self {
        let mut out = AlgebraElement::zero();
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                let coeff = cx * cy;
                for (g, c) in basis_bracket(*x, *y).terms {
                    out.add_term(g, &c * &coeff);
                }
            }
        }
        out
    }
}

/// Bracket of two basis symbols.
pub fn basis_bracket(x: Gen, y: Gen) -> AlgebraElement {
    use Gen::*;
    let mut out = AlgebraElement::zero();
    match (x, y) {
        (C, _) | (_, C) => {}
        (E(_), E(_)) | (F(_), F(_)) => {}
        (E(i), F(j)) => {
            out.add_term(H(i + j), Scalar::one());
            if i + j == 0 {
                out.add_term(C, Scalar::from_int(i));
            }
        }
        (F(j), E(i)) => return basis_bracket(E(i), F(j)).neg(),
        (H(i), E(j)) => out.add_term(E(i + j), Scalar::from_int(2)),
        (E(j), H(i)) => return basis_bracket(H(i), E(j)).neg(),
        (H(i), F(j)) => out.add_term(F(i + j), Scalar::from_int(-2)),
        (F(j), H(i)) => return basis_bracket(H(i), F(j)).neg(),
        (H(i), H(j)) => {
            if i + j == 0 {
                // Sign fixed by the Jacobi identity together with
                // [e_i, f_j] = h_{i+j} + i d(i+j) C: the invariant form has
                // (h, h) = ([e, f], h) = (e, [f, h]) = 2.
                out.add_term(C, Scalar::from_int(2 * i));
            }
        }
        (D(i), D(j)) => {
            out.add_term(D(i + j), Scalar::from_int(j - i));
            if i + j == 0 {
                out.add_term(C, Scalar::from_rat(rat(i * i * i - i, 12)));
            }
        }
        (D(i), H(j)) => out.add_term(H(i + j), Scalar::from_int(j)),
        (H(j), D(i)) => return basis_bracket(D(i), H(j)).neg(),
        (D(i), E(j)) => out.add_term(E(i + j), Scalar::from_int(j)),
        (E(j), D(i)) => return basis_bracket(D(i), E(j)).neg(),
        (D(i), F(j)) => out.add_term(F(i + j), Scalar::from_int(j)),
        (F(j), D(i)) => return basis_bracket(D(i), F(j)).neg(),
    }
    out
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(g, c)| (g.to_string(), c)))
    }
}

/// A finite product of basis symbols; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn single(g: Gen) -> Self {
        Word(vec![g])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Scalar-linear combination of enveloping words. Words are kept free (no
/// reordering); a word acts on a module by right-to-left composition, so
/// `[x1, ..., xn]` acts as x1·(x2·(...(xn·g))).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EnvelopingElement {
    terms: BTreeMap<Word, Scalar>,
}

impl EnvelopingElement {
    pub fn zero() -> Self {
        EnvelopingElement::default()
    }

    /// The unit (empty word).
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Word::unit(), Scalar::one());
        EnvelopingElement { terms }
    }

    pub fn from_gen(g: Gen) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Word::single(g), Scalar::one());
        EnvelopingElement { terms }
    }

    pub fn from_algebra(x: &AlgebraElement) -> Self {
        let mut out = EnvelopingElement::zero();
        for (g, c) in x.terms() {
            out.add_term(Word::single(*g), c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert_with(Scalar::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return EnvelopingElement::zero();
        }
        EnvelopingElement {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    /// Bilinear concatenation product.
    pub fn word_mul(&self, other: &Self) -> Self {
        let mut out = EnvelopingElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = EnvelopingElement::one();
        for _ in 0..n {
            out = out.word_mul(self);
        }
        out
    }
}

impl fmt::Display for EnvelopingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(w, c)| (w.to_string(), c)))
    }
}

/// Shared term-list rendering: `coeff*symbol` joined by signed `+`/`-`.
fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (String, &'a Scalar)>,
{
    let mut first = true;
    let mut empty = true;
    for (sym, c) in terms {
        empty = false;
        let text = format!("{}", c);
        let neg = text.starts_with('-');
        let mag = if neg { -c } else { c.clone() };
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if mag.is_one() {
            write!(f, "{}", sym)?;
        } else {
            write!(f, "{}*{}", crate::scalars::scalar::factor_string(&mag), sym)?;
        }
    }
    if empty {
        write!(f, "0")?;
    }
    Ok(())
}

/// All basis symbols with |index| <= window, plus C.
pub fn basis_window(window: i64) -> Vec<Gen> {
    let mut out = Vec::new();
    for i in -window..=window {
        out.push(Gen::E(i));
        out.push(Gen::F(i));
        out.push(Gen::H(i));
        out.push(Gen::D(i));
    }
    out.push(Gen::C);
    out
}

/// Exhaustively assert [x,y] + [y,x] = 0 over the basis window.
pub fn check_antisymmetry(window: i64) -> CheckReport {
    let basis = basis_window(window);
    let mut report = CheckReport::default();
    for &x in &basis {
        for &y in &basis {
            report.record();
            let lhs = basis_bracket(x, y).add(&basis_bracket(y, x));
            if !lhs.is_zero() {
                report.fail("antisymmetry", format!("x={}, y={}", x, y), format!("{}", lhs));
            }
        }
    }
    report
}

/// Exhaustively assert [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 over the window.
pub fn check_jacobi(window: i64) -> CheckReport {
    let basis = basis_window(window);
    let mut report = CheckReport::default();
    for &x in &basis {
        let ex = AlgebraElement::from_gen(x);
        for &y in &basis {
            let ey = AlgebraElement::from_gen(y);
            let xy = ex.bracket(&ey);
            for &z in &basis {
                let ez = AlgebraElement::from_gen(z);
                report.record();
                let sum = xy
                    .bracket(&ez)
                    .add(&ey.bracket(&ez).bracket(&ex))
                    .add(&ez.bracket(&ex).bracket(&ey));
                if !sum.is_zero() {
                    report.fail(
                        "jacobi",
                        format!("x={}, y={}, z={}", x, y, z),
                        format!("{}", sum),
                    );
                }
            }
        }
    }
    report
}
