//! Quotients of bivariate polynomials.
//!
//! The fraction-shaped moduli formulas are assembled as `RatExpr` values and
//! reduced to a genuine `BiPoly` at the very end via [`RatExpr::to_poly`].
//! No simplification happens along the way: equality is cross-multiplication,
//! and a reduction failure means the expression is not a polynomial, which
//! callers treat as a transcription error in the formula being encoded.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::BiPoly;

/// A formal quotient `num / den` of bivariate polynomials, `den != 0`.
#[derive(Debug, Clone)]
pub struct RatExpr {
    num: BiPoly,
    den: BiPoly,
}

impl RatExpr {
    /// Builds `num / den`; errors when `den` is the zero polynomial.
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatExpr { num, den })
    }

    /// Embeds a polynomial as `p / 1`.
    pub fn from_poly(num: BiPoly) -> Self {
        RatExpr {
            num,
            den: BiPoly::one(),
        }
    }

    pub fn zero() -> Self {
        RatExpr::from_poly(BiPoly::zero())
    }

    pub fn one() -> Self {
        RatExpr::from_poly(BiPoly::one())
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Reduces the quotient to a polynomial by exact division.
    ///
    /// Errors with `NotDivisible` when the fraction is not a polynomial.
    pub fn to_poly(&self) -> Result<BiPoly> {
        self.num.exact_div(&self.den)
    }

    /// The reciprocal `den / num`; errors when the numerator is zero.
    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatExpr {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    /// Quotient of quotients; errors when `rhs` is zero.
    pub fn checked_div(&self, rhs: &RatExpr) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    fn add_impl(&self, rhs: &RatExpr) -> RatExpr {
        if self.den == rhs.den {
            return RatExpr {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RatExpr {
            num: &self.num * &rhs.den + &rhs.num * &self.den,
            den: &self.den * &rhs.den,
        }
    }

    fn sub_impl(&self, rhs: &RatExpr) -> RatExpr {
        if self.den == rhs.den {
            return RatExpr {
                num: &self.num - &rhs.num,
                den: self.den.clone(),
            };
        }
        RatExpr {
            num: &self.num * &rhs.den - &rhs.num * &self.den,
            den: &self.den * &rhs.den,
        }
    }

    fn mul_impl(&self, rhs: &RatExpr) -> RatExpr {
        RatExpr {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

/// Equality by cross-multiplication: `a/b = c/d` iff `a*d = c*b`.
impl PartialEq for RatExpr {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatExpr {}

macro_rules! forward_ratexpr_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait for RatExpr {
            type Output = RatExpr;
            fn $method(self, rhs: RatExpr) -> RatExpr {
                self.$impl_fn(&rhs)
            }
        }
        impl $trait<&RatExpr> for RatExpr {
            type Output = RatExpr;
            fn $method(self, rhs: &RatExpr) -> RatExpr {
                self.$impl_fn(rhs)
            }
        }
        impl $trait<RatExpr> for &RatExpr {
            type Output = RatExpr;
            fn $method(self, rhs: RatExpr) -> RatExpr {
                self.$impl_fn(&rhs)
            }
        }
        impl $trait<&RatExpr> for &RatExpr {
            type Output = RatExpr;
            fn $method(self, rhs: &RatExpr) -> RatExpr {
                self.$impl_fn(rhs)
            }
        }
    };
}

forward_ratexpr_binop!(Add, add, add_impl);
forward_ratexpr_binop!(Sub, sub, sub_impl);
forward_ratexpr_binop!(Mul, mul, mul_impl);

impl Neg for RatExpr {
    type Output = RatExpr;
    fn neg(self) -> RatExpr {
        RatExpr {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &RatExpr {
    type Output = RatExpr;
    fn neg(self) -> RatExpr {
        -self.clone()
    }
}

impl From<BiPoly> for RatExpr {
    fn from(p: BiPoly) -> Self {
        RatExpr::from_poly(p)
    }
}

impl fmt::Display for RatExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
