//! Sparse exact bivariate polynomials over the rationals.
//!
//! `BiPoly` is the value type every Hodge polynomial in this crate ends up
//! in. Terms are keyed by exponent pairs in graded order (total degree
//! first, then the `u` exponent), so iteration order, equality, and
//! serialization are all canonical: two polynomials are equal exactly when
//! their term maps coincide.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Exponent pair of a single monomial `u^i v^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exponents {
    /// Exponent of `u`.
    pub u: u64,
    /// Exponent of `v`.
    pub v: u64,
}

impl Exponents {
    /// Builds the exponent pair for `u^i v^j`.
    pub const fn new(u: u64, v: u64) -> Self {
        Exponents { u, v }
    }

    fn total(&self) -> u128 {
        self.u as u128 + self.v as u128
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then(self.u.cmp(&other.u))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `u` and `v` with rational coefficients.
///
/// Invariants: no stored coefficient is zero, and the zero polynomial is the
/// empty map. All arithmetic preserves this canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl BiPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        BiPoly::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        BiPoly::constant(Rational::one())
    }

    /// A constant polynomial.
    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exponents::new(0, 0), c);
        }
        BiPoly { terms }
    }

    /// An integer constant polynomial.
    pub fn from_int(n: i64) -> Self {
        BiPoly::constant(Rational::from(n))
    }

    /// The variable `u`.
    pub fn u() -> Self {
        BiPoly::monomial(Rational::one(), 1, 0)
    }

    /// The variable `v`.
    pub fn v() -> Self {
        BiPoly::monomial(Rational::one(), 0, 1)
    }

    /// The monomial `(uv)^k`.
    pub fn uv_pow(k: u64) -> Self {
        BiPoly::monomial(Rational::one(), k, k)
    }

    /// The single term `c * u^i v^j`.
    pub fn monomial(c: Rational, i: u64, j: u64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exponents::new(i, j), c);
        }
        BiPoly { terms }
    }

    /// Builds a polynomial from `(i, j, coefficient)` triples, summing
    /// duplicates and dropping zero totals.
    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (u64, u64, Rational)>,
    {
        let mut terms: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (i, j, c) in iter {
            if c.is_zero() {
                continue;
            }
            let e = Exponents::new(i, j);
            let total = match terms.remove(&e) {
                Some(prev) => prev + c,
                None => c,
            };
            if !total.is_zero() {
                terms.insert(e, total);
            }
        }
        BiPoly { terms }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.term_count() == 1 && self.coeff(0, 0).is_one()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `u^i v^j`; zero when the term is absent.
    pub fn coeff(&self, i: u64, j: u64) -> Rational {
        self.terms
            .get(&Exponents::new(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical graded order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Total degree (max of `i + j` over stored terms); `None` for zero.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms
            .keys()
            .next_back()
            .map(|e| e.u.checked_add(e.v).expect("degree overflow"))
    }

    /// Highest degree in `u` alone; `None` for zero.
    pub fn degree_u(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.u).max()
    }

    /// Highest degree in `v` alone; `None` for zero.
    pub fn degree_v(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.v).max()
    }

    /// The term that is maximal in the canonical graded order.
    pub fn leading_term(&self) -> Option<(Exponents, Rational)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c.clone()))
    }

    /// Coefficient of the canonically maximal term.
    pub fn leading_coefficient(&self) -> Option<Rational> {
        self.leading_term().map(|(_, c)| c)
    }

    fn add_impl(&self, rhs: &BiPoly) -> BiPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let total = match terms.remove(e) {
                Some(prev) => prev + c.clone(),
                None => c.clone(),
            };
            if !total.is_zero() {
                terms.insert(*e, total);
            }
        }
        BiPoly { terms }
    }

    fn sub_impl(&self, rhs: &BiPoly) -> BiPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let total = match terms.remove(e) {
                Some(prev) => prev - c.clone(),
                None => -c.clone(),
            };
            if !total.is_zero() {
                terms.insert(*e, total);
            }
        }
        BiPoly { terms }
    }

    fn mul_impl(&self, rhs: &BiPoly) -> BiPoly {
        let mut terms: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = Exponents::new(
                    ea.u.checked_add(eb.u).expect("exponent overflow"),
                    ea.v.checked_add(eb.v).expect("exponent overflow"),
                );
                let prod = ca.clone() * cb.clone();
                let total = match terms.remove(&e) {
                    Some(prev) => prev + prod,
                    None => prod,
                };
                if !total.is_zero() {
                    terms.insert(e, total);
                }
            }
        }
        BiPoly { terms }
    }

    /// Nonnegative integer power by repeated squaring; `f^0 = 1`.
    pub fn pow(&self, mut e: u64) -> BiPoly {
        let mut result = BiPoly::one();
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

    /// The substitution `f(u, v) -> f(-u^2, -v^2)`: each term `c u^i v^j`
    /// becomes `c (-1)^(i+j) u^(2i) v^(2j)`.
    pub fn parity_substitute(&self) -> BiPoly {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let doubled = Exponents::new(
                e.u.checked_mul(2).expect("exponent overflow"),
                e.v.checked_mul(2).expect("exponent overflow"),
            );
            let c = if (e.u + e.v) % 2 == 1 {
                -c.clone()
            } else {
                c.clone()
            };
            terms.insert(doubled, c);
        }
        BiPoly { terms }
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, u0: &Rational, v0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc = acc + c.clone() * u0.pow(e.u) * v0.pow(e.v);
        }
        acc
    }

    /// The specialization `v := u`, returned as a polynomial in `u` alone.
    pub fn poincare(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| (e.u.checked_add(e.v).expect("degree overflow"), 0, c.clone())),
        )
    }

    /// The polynomial with `u` and `v` swapped.
    pub fn swap_vars(&self) -> BiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (Exponents::new(e.v, e.u), c.clone()))
            .collect();
        BiPoly { terms }
    }

    /// True when `f(u, v) = f(v, u)`.
    pub fn is_symmetric(&self) -> bool {
        *self == self.swap_vars()
    }

    /// Exact polynomial division: returns `q` with `self = divisor * q`, or
    /// `NotDivisible` carrying a nonzero remainder witness.
    ///
    /// The dividend is treated as a polynomial in `u` whose coefficients are
    /// univariate polynomials in `v`. Each quotient coefficient comes from an
    /// exact division in `Q[v]`; the first coefficient that fails to divide
    /// proves there is no polynomial quotient, and the remainder accumulated
    /// so far is returned as the witness.
    pub fn exact_div(&self, divisor: &BiPoly) -> Result<BiPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(BiPoly::zero());
        }
        if let (Some(a), Some(b)) = (self.diagonal_coeffs(), divisor.diagonal_coeffs()) {
            return diagonal_exact_div(a, b);
        }
        let b = UPoly::from_bipoly(divisor);
        let (b_deg, b_lead) = b.leading().expect("nonzero divisor");
        let b_lead = b_lead.clone();
        let mut rem = UPoly::from_bipoly(self);
        let mut quot = UPoly::new();
        while let Some((r_deg, r_lead)) = rem.leading() {
            if r_deg < b_deg {
                break;
            }
            let (qc, v_rem) = r_lead.divrem(&b_lead);
            if !v_rem.is_zero() {
                return Err(Error::NotDivisible {
                    remainder: rem.into_bipoly(),
                });
            }
            let shift = r_deg - b_deg;
            rem.sub_mul(&b, &qc, shift);
            quot.add_at(qc, shift);
        }
        if rem.is_zero() {
            Ok(quot.into_bipoly())
        } else {
            Err(Error::NotDivisible {
                remainder: rem.into_bipoly(),
            })
        }
    }

    /// Dense coefficients by power of `uv` when every term lies on the
    /// diagonal `u = v`, `None` otherwise. Must not be called on zero.
    fn diagonal_coeffs(&self) -> Option<Vec<Rational>> {
        let mut deg = 0u64;
        for e in self.terms.keys() {
            if e.u != e.v {
                return None;
            }
            deg = deg.max(e.u);
        }
        let mut out = alloc::vec![Rational::zero(); (deg + 1) as usize];
        for (e, c) in &self.terms {
            out[e.u as usize] = c.clone();
        }
        Some(out)
    }

    fn from_diagonal(coeffs: Vec<Rational>) -> BiPoly {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (Exponents::new(k as u64, k as u64), c))
            .collect();
        BiPoly { terms }
    }
}

/// Long division along the diagonal: both operands are polynomials in
/// `x = uv`, where any bivariate quotient would itself be a polynomial in
/// `x`, so univariate division decides divisibility. This is the shape of
/// every Gaussian-binomial denominator and most closed-form reductions, and
/// it avoids the dense coefficient grids of the general routine.
fn diagonal_exact_div(mut rem: Vec<Rational>, div: Vec<Rational>) -> Result<BiPoly> {
    let dd = div.len() - 1;
    let rd = rem.len() - 1;
    if rd < dd {
        return Err(Error::NotDivisible {
            remainder: BiPoly::from_diagonal(rem),
        });
    }
    if div[dd].abs().is_one() && rem.iter().chain(div.iter()).all(Rational::is_integer) {
        return diagonal_exact_div_int(
            rem.iter().map(|c| c.numer().clone()).collect(),
            div.iter().map(|c| c.numer().clone()).collect(),
        );
    }
    let mut quot = alloc::vec![Rational::zero(); rd - dd + 1];
    for k in (dd..=rd).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let q = &rem[k] / &div[dd];
        let shift = k - dd;
        for (j, b) in div.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            rem[shift + j] = &rem[shift + j] - &(&q * b);
        }
        quot[shift] = q;
    }
    if rem.iter().all(Rational::is_zero) {
        Ok(BiPoly::from_diagonal(quot))
    } else {
        Err(Error::NotDivisible {
            remainder: BiPoly::from_diagonal(rem),
        })
    }
}

/// The integer lane of [`diagonal_exact_div`], for a divisor with leading
/// coefficient `1` or `-1`: every quotient coefficient is then an integer,
/// so the whole division runs without fraction normalisation.
fn diagonal_exact_div_int(mut rem: Vec<BigInt>, div: Vec<BigInt>) -> Result<BiPoly> {
    use num_traits::Zero;
    let dd = div.len() - 1;
    let rd = rem.len() - 1;
    let negative_lead = div[dd].sign() == num_bigint::Sign::Minus;
    let mut quot = alloc::vec![BigInt::zero(); rd - dd + 1];
    for k in (dd..=rd).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let q = if negative_lead {
            -rem[k].clone()
        } else {
            rem[k].clone()
        };
        let shift = k - dd;
        for (j, b) in div.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            rem[shift + j] = &rem[shift + j] - &q * b;
        }
        quot[shift] = q;
    }
    let lift = |coeffs: Vec<BigInt>| {
        BiPoly::from_diagonal(coeffs.into_iter().map(Rational::from).collect())
    };
    if rem.iter().all(Zero::is_zero) {
        Ok(lift(quot))
    } else {
        Err(Error::NotDivisible { remainder: lift(rem) })
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                self.$impl_fn(&rhs)
            }
        }
        impl $trait<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: &BiPoly) -> BiPoly {
                self.$impl_fn(rhs)
            }
        }
        impl $trait<BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                self.$impl_fn(&rhs)
            }
        }
        impl $trait<&BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: &BiPoly) -> BiPoly {
                self.$impl_fn(rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add, add_impl);
forward_poly_binop!(Sub, sub, sub_impl);
forward_poly_binop!(Mul, mul, mul_impl);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        let terms = self.terms.into_iter().map(|(e, c)| (e, -c)).collect();
        BiPoly { terms }
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -self.clone()
    }
}

impl From<i64> for BiPoly {
    fn from(n: i64) -> Self {
        BiPoly::from_int(n)
    }
}

impl From<Rational> for BiPoly {
    fn from(c: Rational) -> Self {
        BiPoly::constant(c)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let negative = c.is_negative();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let has_vars = e.u > 0 || e.v > 0;
            if !has_vars {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    if a.is_integer() {
                        write!(f, "{a}")?;
                    } else {
                        write!(f, "({a})")?;
                    }
                }
                match e.u {
                    0 => {}
                    1 => write!(f, "u")?,
                    n => write!(f, "u^{n}")?,
                }
                match e.v {
                    0 => {}
                    1 => write!(f, "v")?,
                    n => write!(f, "v^{n}")?,
                }
            }
        }
        Ok(())
    }
}

/// Dense univariate polynomial in `v`, used only inside exact division.
/// Invariant: the last stored coefficient is nonzero (zero is the empty vec).
#[derive(Debug, Clone, PartialEq, Eq)]
struct VPoly {
    coeffs: Vec<Rational>,
}

impl VPoly {
    fn zero() -> Self {
        VPoly { coeffs: Vec::new() }
    }

    fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        VPoly { coeffs }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    fn lead(&self) -> &Rational {
        self.coeffs.last().expect("nonzero polynomial")
    }

    fn mul(&self, rhs: &VPoly) -> VPoly {
        if self.is_zero() || rhs.is_zero() {
            return VPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        VPoly::from_coeffs(coeffs)
    }

    fn sub(&self, rhs: &VPoly) -> VPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for k in 0..len {
            let a = self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero);
            let b = rhs.coeffs.get(k).cloned().unwrap_or_else(Rational::zero);
            coeffs.push(a - b);
        }
        VPoly::from_coeffs(coeffs)
    }

    /// Euclidean division in `Q[v]`: returns `(quotient, remainder)` with
    /// `self = rhs * quotient + remainder` and `deg(remainder) < deg(rhs)`.
    fn divrem(&self, rhs: &VPoly) -> (VPoly, VPoly) {
        debug_assert!(!rhs.is_zero());
        if self.is_zero() || self.degree() < rhs.degree() {
            return (VPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.degree() - rhs.degree() + 1];
        let d = rhs.degree();
        let mut top = rem.len();
        while top > d {
            let lead = rem[top - 1].clone();
            if !lead.is_zero() {
                let shift = top - 1 - d;
                let q = lead / rhs.lead().clone();
                for (k, b) in rhs.coeffs.iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    rem[shift + k] = rem[shift + k].clone() - q.clone() * b.clone();
                }
                quot[shift] = q;
            }
            top -= 1;
        }
        rem.truncate(d);
        (VPoly::from_coeffs(quot), VPoly::from_coeffs(rem))
    }
}

/// A `BiPoly` viewed as a polynomial in `u` with `VPoly` coefficients.
/// Invariant: no stored coefficient is the zero `VPoly`.
#[derive(Debug)]
struct UPoly {
    coeffs: BTreeMap<u64, VPoly>,
}

impl UPoly {
    fn new() -> Self {
        UPoly {
            coeffs: BTreeMap::new(),
        }
    }

    fn from_bipoly(p: &BiPoly) -> Self {
        let mut buckets: BTreeMap<u64, Vec<(u64, Rational)>> = BTreeMap::new();
        for (e, c) in &p.terms {
            buckets.entry(e.u).or_default().push((e.v, c.clone()));
        }
        let coeffs = buckets
            .into_iter()
            .map(|(ue, terms)| {
                let len = terms.iter().map(|(ve, _)| *ve).max().unwrap_or(0) as usize + 1;
                let mut dense = vec![Rational::zero(); len];
                for (ve, c) in terms {
                    dense[ve as usize] = c;
                }
                (ue, VPoly::from_coeffs(dense))
            })
            .collect();
        UPoly { coeffs }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn leading(&self) -> Option<(u64, &VPoly)> {
        self.coeffs.iter().next_back().map(|(d, p)| (*d, p))
    }

    /// Adds `p * u^shift`, assuming no prior value at that `u` degree.
    fn add_at(&mut self, p: VPoly, shift: u64) {
        if !p.is_zero() {
            let prev = self.coeffs.insert(shift, p);
            debug_assert!(prev.is_none());
        }
    }

    /// Subtracts `b * qc * u^shift` in place.
    fn sub_mul(&mut self, b: &UPoly, qc: &VPoly, shift: u64) {
        for (ud, vp) in &b.coeffs {
            let target = ud + shift;
            let prod = vp.mul(qc);
            let updated = match self.coeffs.remove(&target) {
                Some(prev) => prev.sub(&prod),
                None => VPoly::zero().sub(&prod),
            };
            if !updated.is_zero() {
                self.coeffs.insert(target, updated);
            }
        }
    }

    fn into_bipoly(self) -> BiPoly {
        BiPoly::from_terms(self.coeffs.into_iter().flat_map(|(ue, vp)| {
            vp.coeffs
                .into_iter()
                .enumerate()
                .map(move |(ve, c)| (ue, ve as u64, c))
        }))
    }
}
