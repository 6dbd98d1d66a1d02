use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use thiserror::Error;

/// An exact rational number, the ground field for the whole crate.
///
/// Stored in canonical reduced form: positive denominator and
/// `gcd(|numerator|, denominator) = 1`. Equality is structural equality of
/// canonical forms, so two values compare equal iff they are the same
/// rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

/// Error produced when a rational literal does not match `-?digits(/digits)?`
/// or has a zero denominator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {text:?}: {reason}")]
pub struct ParseRationalError {
    pub text: String,
    pub reason: String,
}

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numerator / denominator`, canonicalized. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational denominator must be nonzero");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Parses a literal in the grammar `-?digits(/digits)?`.
    pub fn parse(text: &str) -> Result<Self, ParseRationalError> {
        let err = |reason: &str| ParseRationalError {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let (num_part, den_part) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let numer = parse_integer(num_part).ok_or_else(|| err("numerator is not an integer"))?;
        let denom = match den_part {
            Some(d) => {
                let d = parse_unsigned(d).ok_or_else(|| {
                    err("denominator is not an unsigned integer")
                })?;
                if d.is_zero() {
                    return Err(err("denominator is zero"));
                }
                d
            }
            None => BigInt::one(),
        };
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "cannot invert zero");
        Rational(self.0.recip())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn from_big(r: BigRational) -> Self {
        Rational(r)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    /// Multiplies by an integer exponent count, used for formal derivatives.
    pub fn mul_usize(&self, k: usize) -> Self {
        Rational(&self.0 * BigRational::from_integer(BigInt::from(k)))
    }
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

fn parse_unsigned(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

impl fmt::Display for Rational {
    /// Canonical form: `"5"` for integers, `"p/q"` with `q > 1` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rational::parse(s)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }

        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }

        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }

        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_canonicalizes() {
        assert_eq!(Rational::parse("3/6").unwrap(), Rational::new(1, 2));
        assert_eq!(Rational::parse("-2/4").unwrap(), Rational::new(-1, 2));
        assert_eq!(Rational::parse("5").unwrap(), Rational::from_int(5));
        assert_eq!(Rational::parse("0").unwrap(), Rational::zero());
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(Rational::parse("").is_err());
        assert!(Rational::parse("1/0").unwrap_err().reason.contains("zero"));
        assert!(Rational::parse("1/-2").is_err());
        assert!(Rational::parse("a/2").is_err());
        assert!(Rational::parse("1.5").is_err());
        assert!(Rational::parse("+3").is_err());
        assert!(Rational::parse("1/").is_err());
        assert!(Rational::parse("/2").is_err());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(Rational::new(2, 4).to_string(), "1/2");
        assert_eq!(Rational::new(-10, 4).to_string(), "-5/2");
        assert_eq!(Rational::from_int(5).to_string(), "5");
        assert_eq!(Rational::from_int(-7).to_string(), "-7");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = Rational::new(1, 3);
        let sum = &third + &third + third.clone();
        assert_eq!(sum, Rational::one());
        assert_eq!(Rational::new(3, 4) * Rational::new(4, 3), Rational::one());
        assert_eq!(
            Rational::new(1, 2) - Rational::new(3, 2),
            Rational::from_int(-1)
        );
        assert_eq!(
            Rational::new(7, 2) / Rational::new(7, 4),
            Rational::from_int(2)
        );
    }

    #[test]
    fn parse_format_round_trip() {
        for s in ["0", "5", "-7", "1/2", "-5/2", "123456789/987654321"] {
            let r = Rational::parse(s).unwrap();
            assert_eq!(Rational::parse(&r.to_string()).unwrap(), r);
        }
    }
}
