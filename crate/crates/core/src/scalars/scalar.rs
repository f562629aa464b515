//! The exact coefficient field: quotients of `ParamPoly` in canonical form.
//!
//! Canonical form means gcd(num, den) = 1 and the denominator is
//! integer-primitive with positive leading coefficient under the fixed
//! graded-lex order, so equality is structural. Instantiated parameters are
//! just constant polynomials; arithmetic falls back to plain rationals on a
//! fast path in that case.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Signed;
use thiserror::Error;

use super::parampoly::{write_parampoly, Param, ParamPoly};
use super::rat::{rat_sqrt, Rat};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by the zero scalar")]
    DivisionByZero,
    #[error("zero scalar raised to a negative power")]
    ZeroToNegativePower,
}

/// Element of Q(L, A, B, G) in canonical normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scalar {
    num: ParamPoly,
    den: ParamPoly,
}

impl Scalar {
    fn normalized(num: ParamPoly, den: ParamPoly) -> Scalar {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Scalar {
                num: ParamPoly::zero(),
                den: ParamPoly::one(),
            };
        }
        if den.is_one() {
            return Scalar { num, den };
        }
        if let Some(c) = den.as_constant() {
            return Scalar {
                num: num.mul_rat(&c.recip()),
                den: ParamPoly::one(),
            };
        }
        let g = ParamPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        if let Some(c) = den.as_constant() {
            return Scalar {
                num: num.mul_rat(&c.recip()),
                den: ParamPoly::one(),
            };
        }
        let (c, den_prim) = den.content_primitive();
        Scalar {
            num: num.mul_rat(&c.recip()),
            den: den_prim,
        }
    }

    pub fn new(num: ParamPoly, den: ParamPoly) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::normalized(num, den))
    }

    pub fn zero() -> Scalar {
        Scalar {
            num: ParamPoly::zero(),
            den: ParamPoly::one(),
        }
    }

    pub fn one() -> Scalar {
        Scalar {
            num: ParamPoly::one(),
            den: ParamPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_rat(Rat::from_integer(n.into()))
    }

    pub fn from_rat(r: Rat) -> Scalar {
        Scalar {
            num: ParamPoly::constant(r),
            den: ParamPoly::one(),
        }
    }

    pub fn from_poly(p: ParamPoly) -> Scalar {
        Scalar {
            num: p,
            den: ParamPoly::one(),
        }
    }

    pub fn symbol(p: Param) -> Scalar {
        Scalar::from_poly(ParamPoly::symbol(p))
    }

    pub fn lambda() -> Scalar {
        Scalar::symbol(Param::Lambda)
    }

    pub fn alpha() -> Scalar {
        Scalar::symbol(Param::Alpha)
    }

    pub fn beta() -> Scalar {
        Scalar::symbol(Param::Beta)
    }

    pub fn gamma() -> Scalar {
        Scalar::symbol(Param::Gamma)
    }

    pub fn num(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den(&self) -> &ParamPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a plain rational, when no parameter symbol occurs.
    pub fn as_rational(&self) -> Option<Rat> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn try_pow(&self, e: i64) -> Result<Scalar, ScalarError> {
        let k = u32::try_from(e.unsigned_abs()).expect("exponent magnitude fits in u32");
        if e >= 0 {
            Ok(Scalar::normalized(self.num.pow(k), self.den.pow(k)))
        } else {
            if self.is_zero() {
                return Err(ScalarError::ZeroToNegativePower);
            }
            Ok(Scalar::normalized(self.den.pow(k), self.num.pow(k)))
        }
    }

    /// Integer power; panics on `0^negative`.
    pub fn pow(&self, e: i64) -> Scalar {
        self.try_pow(e).expect("zero scalar raised to negative power")
    }

    /// Exact square root in the field, if one exists.
    pub fn sqrt(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if let Some(r) = self.as_rational() {
            return rat_sqrt(&r).map(Scalar::from_rat);
        }
        // a/b with gcd(a,b)=1 is a square iff a*b is a polynomial square.
        let s = self.num.mul(&self.den).sqrt()?;
        Some(Scalar::normalized(s, self.den.clone()))
    }

    /// Substitute a rational value for one parameter symbol. Errors if the
    /// substitution annihilates the denominator.
    pub fn bind(&self, p: Param, value: &Rat) -> Result<Scalar, ScalarError> {
        let den = self.den.substitute(p, value);
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::normalized(self.num.substitute(p, value), den))
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Scalar::normalized(self.num.add(&rhs.num), self.den.clone());
        }
        // a/b + c/d with g = gcd(b, d): (a·(d/g) + c·(b/g)) / (b·(d/g)),
        // which keeps the normalization gcd small.
        let g = ParamPoly::gcd(&self.den, &rhs.den);
        if g.is_one() {
            return Scalar::normalized(
                self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
                self.den.mul(&rhs.den),
            );
        }
        let d_red = rhs.den.div_exact(&g).unwrap();
        let b_red = self.den.div_exact(&g).unwrap();
        Scalar::normalized(
            self.num.mul(&d_red).add(&rhs.num.mul(&b_red)),
            self.den.mul(&d_red),
        )
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar {
                num: self.num.mul(&rhs.num),
                den: ParamPoly::one(),
            };
        }
        // Cross-cancel: with a/b and c/d both reduced and g1 = gcd(a, d),
        // g2 = gcd(c, b), the product (a/g1)(c/g2) / ((b/g2)(d/g1)) is
        // already in lowest terms; only the denominator normalization runs.
        let g1 = ParamPoly::gcd(&self.num, &rhs.den);
        let g2 = ParamPoly::gcd(&rhs.num, &self.den);
        let num = self
            .num
            .div_exact(&g1)
            .unwrap()
            .mul(&rhs.num.div_exact(&g2).unwrap());
        let den = self
            .den
            .div_exact(&g2)
            .unwrap()
            .mul(&rhs.den.div_exact(&g1).unwrap());
        if num.is_zero() {
            return Scalar::zero();
        }
        if let Some(c) = den.as_constant() {
            return Scalar {
                num: num.mul_rat(&c.recip()),
                den: ParamPoly::one(),
            };
        }
        let (c, den_prim) = den.content_primitive();
        Scalar {
            num: num.mul_rat(&c.recip()),
            den: den_prim,
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.try_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident::$method:ident),*) => {$(
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $trait::$method(&self, rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write_parampoly(f, &self.num);
        }
        // Render with integer numerator and denominator polynomials:
        // pull the rational content of num into the fraction.
        let (c, num_prim) = self.num.content_primitive();
        if c.is_negative() {
            write!(f, "-")?;
        }
        let c_abs = c.abs();
        let top = num_prim.mul_rat(&Rat::from_integer(c_abs.numer().clone()));
        let bottom = self.den.mul_rat(&Rat::from_integer(c_abs.denom().clone()));
        write_factor(f, &top)?;
        write!(f, "/")?;
        write_factor(f, &bottom)
    }
}

fn write_factor(f: &mut fmt::Formatter<'_>, p: &ParamPoly) -> fmt::Result {
    let s = format!("{}", p);
    if needs_parens(&s) {
        write!(f, "({})", s)
    } else {
        write!(f, "{}", s)
    }
}

/// A factor needs parentheses if it is a sum, a difference, a product, or
/// itself a fraction.
fn needs_parens(s: &str) -> bool {
    s.contains(' ') || s.contains('*') || s.contains('/') || s.starts_with('-')
}

/// Render a scalar for use as a multiplicative factor (e.g. a polynomial
/// coefficient): wrapped in parentheses whenever the bare form would be
/// ambiguous next to `*`.
pub fn factor_string(s: &Scalar) -> String {
    let text = format!("{}", s);
    if text.contains(' ') || text.contains('/') {
        format!("({})", text)
    } else {
        text
    }
}
