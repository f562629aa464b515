//! Arbitrary-precision rationals, the coefficient substrate for everything else.
//!
//! `Rat` keeps the canonical invariants we rely on for structural equality:
//! reduced fraction, positive denominator, zero stored as 0/1.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics on `d = 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// gcd of the absolute values, used for extracting integer content.
pub fn int_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// lcm of the absolute values.
pub fn int_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

/// Exact square root of a rational, if it is a perfect square.
pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rat::zero());
    }
    let n = x.numer();
    let d = x.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

/// True when `x` is an integer.
pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// True when `x` is a nonnegative integer.
pub fn is_nonneg_integer(x: &Rat) -> bool {
    is_integer(x) && !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_perfect_squares() {
        assert_eq!(rat_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt(&rat_int(0)), Some(rat_int(0)));
        assert_eq!(rat_sqrt(&rat(2, 1)), None);
        assert_eq!(rat_sqrt(&rat(-1, 1)), None);
    }

    #[test]
    fn integer_predicates() {
        assert!(is_nonneg_integer(&rat_int(3)));
        assert!(!is_nonneg_integer(&rat_int(-3)));
        assert!(!is_nonneg_integer(&rat(1, 2)));
    }
}
