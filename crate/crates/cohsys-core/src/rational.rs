//! Arbitrary-precision exact rationals, the coefficient field.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number.
///
/// Always kept in canonical form: the denominator is positive, numerator and
/// denominator are coprime, and zero is `0/1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(num_rational::BigRational);

impl Rational {
    /// Build `num/den`, reducing to canonical form.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(num_rational::BigRational::new(num, den)))
    }

    /// Build `num/den` from machine integers.
    ///
    /// Panics when `den == 0`; intended for literal fractions in formulas
    /// and tests. Use [`Rational::new`] for fallible construction.
    pub fn from_frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "literal denominator must be nonzero");
        Rational(num_rational::BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        ))
    }

    pub fn zero() -> Self {
        Rational(num_rational::BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(num_rational::BigRational::one())
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

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse; errors on zero.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }

    /// Nonnegative integer power by repeated squaring; `r^0 = 1`.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut result = Rational::one();
        if e == 0 {
            return result;
        }
        let mut base = self.clone();
        loop {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e == 0 {
                return result;
            }
            base = &base * &base;
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(num_rational::BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational(num_rational::BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(num_rational::BigRational::from_integer(n))
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
        impl<'a> $trait<&'a Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    /// Panics on division by zero; use [`Rational::recip`] to handle it.
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
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

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl core::str::FromStr for Rational {
    type Err = Error;

    /// Parse `"p"` or `"p/q"` with decimal integers.
    fn from_str(s: &str) -> Result<Self> {
        let parse_int = |t: &str| -> Result<BigInt> {
            t.parse::<BigInt>().map_err(|_| Error::InvalidRange {
                reason: alloc::format!("invalid integer `{t}`"),
            })
        };
        match s.split_once('/') {
            Some((num, den)) => Rational::new(parse_int(num)?, parse_int(den)?),
            None => Ok(Rational::from(parse_int(s)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = Rational::from_frac(6, -8);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(4));
        assert_eq!(Rational::from_frac(0, 7), Rational::zero());
        assert_eq!(Rational::zero().denom(), &BigInt::from(1));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            Rational::new(BigInt::from(1), BigInt::from(0)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn field_ops() {
        let a = Rational::from_frac(1, 2);
        let b = Rational::from_frac(1, 3);
        assert_eq!(&a + &b, Rational::from_frac(5, 6));
        assert_eq!(&a - &b, Rational::from_frac(1, 6));
        assert_eq!(&a * &b, Rational::from_frac(1, 6));
        assert_eq!(&a / &b, Rational::from_frac(3, 2));
        assert_eq!(a.recip().unwrap(), Rational::from(2i64));
        assert!(Rational::zero().recip().is_err());
    }

    #[test]
    fn ordering() {
        let a = Rational::from_frac(1, 4);
        let b = Rational::from_frac(3, 5);
        assert!(a < b);
        assert!(Rational::from(-1i64) < Rational::zero());
    }

    #[test]
    fn pow_by_squaring() {
        let a = Rational::from_frac(-2, 3);
        assert_eq!(a.pow(0), Rational::one());
        assert_eq!(a.pow(1), a);
        assert_eq!(a.pow(3), Rational::from_frac(-8, 27));
        assert_eq!(Rational::zero().pow(5), Rational::zero());
    }

    #[test]
    fn display_and_parse() {
        let r = Rational::from_frac(-3, 4);
        assert_eq!(alloc::format!("{r}"), "-3/4");
        assert_eq!("  -3 / 4".parse::<Rational>().is_err(), true);
        assert_eq!("-3/4".parse::<Rational>().unwrap(), r);
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::from(7i64));
    }
}
