//! Univariate polynomials over the scalar field, used for polynomials in a
//! single distinguished variable (t, or h0/d0 on the classification side).
//!
//! The gcd clears denominators first and runs a primitive polynomial
//! remainder sequence over `ParamPoly` coefficients, which keeps coefficient
//! growth under control; the extended Euclid runs over the fraction field and
//! produces the minimal-degree Bézout cofactors.

use std::fmt;

use thiserror::Error;

use super::parampoly::ParamPoly;
use super::scalar::{factor_string, Scalar};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum UniPolyError {
    #[error("polynomials are not coprime (gcd has degree {gcd_degree})")]
    NotCoprime { gcd_degree: usize },
}

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of x^k, with a
/// nonzero leading coefficient unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        if c.is_zero() {
            UniPoly::zero()
        } else {
            UniPoly { coeffs: vec![c] }
        }
    }

    /// The variable itself.
    pub fn x() -> Self {
        UniPoly {
            coeffs: vec![Scalar::zero(), Scalar::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) + &other.coeff(k));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|k| k * c).collect(),
        }
    }

    /// Substitute x -> x + shift.
    pub fn compose_shift(&self, shift: &Scalar) -> Self {
        let mut acc = UniPoly::zero();
        let arg = UniPoly::from_coeffs(vec![shift.clone(), Scalar::one()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&arg).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    pub fn eval(&self, at: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    /// Euclidean division over the field; panics if `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.degree() < d.degree() || self.is_zero() {
            return (UniPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let lead_inv = d.leading().unwrap().inv().expect("nonzero leading coefficient");
        let mut quo = vec![Scalar::zero(); rem.len() - dd];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let q = &rem[k] * &lead_inv;
            if !q.is_zero() {
                quo[k - dd] = q.clone();
                for (j, c) in d.coeffs.iter().enumerate() {
                    let idx = k - dd + j;
                    rem[idx] = &rem[idx] - &(&q * c);
                }
            }
            rem.pop();
        }
        (UniPoly::from_coeffs(quo), UniPoly::from_coeffs(rem))
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    /// Divides exactly, `None` when there is a nonzero remainder.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Clear denominators: returns coefficients in `ParamPoly` equal to
    /// `self` times some nonzero scalar.
    fn cleared(&self) -> Vec<ParamPoly> {
        let mut lcm = ParamPoly::one();
        for c in &self.coeffs {
            let g = ParamPoly::gcd(&lcm, c.den());
            lcm = lcm.mul(&c.den().div_exact(&g).unwrap());
        }
        self.coeffs
            .iter()
            .map(|c| c.num().mul(&lcm.div_exact(c.den()).unwrap()))
            .collect()
    }

    /// Monic gcd; panics if both inputs are zero.
    pub fn gcd(p: &Self, q: &Self) -> Self {
        assert!(
            !(p.is_zero() && q.is_zero()),
            "gcd of two zero polynomials is undefined"
        );
        if p.is_zero() {
            return q.make_monic();
        }
        if q.is_zero() {
            return p.make_monic();
        }
        let mut f = p.cleared();
        let mut g = q.cleared();
        if uni_deg(&f) < uni_deg(&g) {
            std::mem::swap(&mut f, &mut g);
        }
        loop {
            let r = prem(&f, &g);
            if r.iter().all(|c| c.is_zero()) {
                break;
            }
            let c = content(&r);
            let r: Vec<ParamPoly> = r.iter().map(|x| x.div_exact(&c).unwrap()).collect();
            f = g;
            g = r;
        }
        UniPoly::from_coeffs(g.into_iter().map(Scalar::from_poly).collect()).make_monic()
    }

    /// Bézout cofactors (a, b) with `a*p + b*q = 1` for coprime inputs, with
    /// deg a < deg q and deg b < deg p when both degrees are positive.
    pub fn ext_euclid(p: &Self, q: &Self) -> Result<(Self, Self), UniPolyError> {
        let mut r0 = p.clone();
        let mut r1 = q.clone();
        let mut s0 = UniPoly::one();
        let mut s1 = UniPoly::zero();
        let mut t0 = UniPoly::zero();
        let mut t1 = UniPoly::one();
        while !r1.is_zero() {
            let (quo, rem) = r0.div_rem(&r1);
            let s2 = s0.sub(&quo.mul(&s1));
            let t2 = t0.sub(&quo.mul(&t1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.degree() > 0 || r0.is_zero() {
            return Err(UniPolyError::NotCoprime {
                gcd_degree: r0.degree(),
            });
        }
        let inv = r0.coeff(0).inv().unwrap();
        Ok((s0.scale(&inv), t0.scale(&inv)))
    }

    /// Render with an explicit variable name.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (pos, k) in (0..self.coeffs.len()).rev().enumerate() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg_first = format!("{}", c).starts_with('-');
            let mag = if neg_first { -c } else { c.clone() };
            if pos == 0 {
                if neg_first {
                    out.push('-');
                }
            } else if neg_first {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let var_part = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{}^{}", var, k),
            };
            if var_part.is_empty() {
                out.push_str(&format!("{}", mag));
            } else if mag.is_one() {
                out.push_str(&var_part);
            } else {
                out.push_str(&format!("{}*{}", factor_string(&mag), var_part));
            }
        }
        out
    }
}

fn uni_deg(u: &[ParamPoly]) -> usize {
    u.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn content(u: &[ParamPoly]) -> ParamPoly {
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

fn prem(f: &[ParamPoly], g: &[ParamPoly]) -> Vec<ParamPoly> {
    let dg = uni_deg(g);
    let lg = g[dg].clone();
    let mut r: Vec<ParamPoly> = f.to_vec();
    loop {
        while r.len() > 1 && r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        if r.iter().all(|c| c.is_zero()) {
            return r;
        }
        let dr = uni_deg(&r);
        if dr < dg {
            return r;
        }
        let lr = r[dr].clone();
        let mut out = vec![ParamPoly::zero(); dr + 1];
        for (k, c) in r.iter().enumerate() {
            out[k] = c.mul(&lg);
        }
        for (k, c) in g.iter().enumerate() {
            let idx = k + dr - dg;
            out[idx] = out[idx].sub(&c.mul(&lr));
        }
        r = out;
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat::rat;

    fn t() -> UniPoly {
        UniPoly::x()
    }

    fn ti(n: i64) -> UniPoly {
        // t + n
        t().add(&UniPoly::constant(Scalar::from_int(n)))
    }

    #[test]
    fn gcd_shifted_linears_coprime() {
        // One Euclid step: t = 1*(t-2) + 2.
        assert!(UniPoly::gcd(&t(), &ti(-2)).is_one());
    }

    #[test]
    fn gcd_with_shared_factor() {
        // t^2 - 1 = (t+1)(t-1)
        let p = ti(1).mul(&ti(-1));
        assert_eq!(UniPoly::gcd(&p, &ti(-1)), ti(-1));
    }

    #[test]
    fn gcd_with_zero() {
        assert_eq!(UniPoly::gcd(&UniPoly::zero(), &t()), t());
    }

    #[test]
    fn ext_euclid_golden_pairs() {
        // (t, t-2): (1/2)t - (1/2)(t-2) = 1.
        let (a, b) = UniPoly::ext_euclid(&t(), &ti(-2)).unwrap();
        assert_eq!(a, UniPoly::constant(Scalar::from_rat(rat(1, 2))));
        assert_eq!(b, UniPoly::constant(Scalar::from_rat(rat(-1, 2))));
        assert!(a.mul(&t()).add(&b.mul(&ti(-2))).is_one());

        // (t-3, 1) -> (0, 1).
        let (a, b) = UniPoly::ext_euclid(&ti(-3), &UniPoly::one()).unwrap();
        assert!(a.is_zero());
        assert!(b.is_one());

        // (t^2-1, t) -> (-1, t).
        let p = ti(1).mul(&ti(-1));
        let (a, b) = UniPoly::ext_euclid(&p, &t()).unwrap();
        assert_eq!(a, UniPoly::constant(Scalar::from_int(-1)));
        assert_eq!(b, t());
        assert!(a.mul(&p).add(&b.mul(&t())).is_one());
    }

    #[test]
    fn ext_euclid_rejects_common_factor() {
        let p = ti(1).mul(&ti(-1));
        assert_eq!(
            UniPoly::ext_euclid(&p, &ti(1)),
            Err(UniPolyError::NotCoprime { gcd_degree: 1 })
        );
    }

    #[test]
    fn division_and_composition() {
        let p = ti(1).mul(&ti(-1)); // t^2 - 1
        let (q, r) = p.div_rem(&ti(-1));
        assert_eq!(q, ti(1));
        assert!(r.is_zero());
        let shifted = p.compose_shift(&Scalar::from_int(-2)); // (t-2)^2 - 1
        assert_eq!(shifted, ti(-1).mul(&ti(-3)));
    }

    #[test]
    fn symbolic_coefficients_in_gcd() {
        // gcd(A*(t - B), t - B) = t - B (monic).
        let t_minus_b = t().sub(&UniPoly::constant(Scalar::beta()));
        let scaled = t_minus_b.scale(&Scalar::alpha());
        assert_eq!(UniPoly::gcd(&scaled, &t_minus_b), t_minus_b);
    }

    #[test]
    fn display_examples() {
        let p = UniPoly::from_coeffs(vec![
            Scalar::from_rat(rat(-1, 4)),
            Scalar::zero(),
            Scalar::from_rat(rat(1, 4)),
        ]);
        assert_eq!(format!("{}", p), "(1/4)*t^2 - 1/4");
    }
}
