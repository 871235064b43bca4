//! Hodge polynomials of the atomic varieties and the combinators built on
//! the motivic properties of the E-polynomial.
//!
//! The three properties in play: additivity over finite disjoint unions,
//! multiplicativity over Zariski-locally-trivial fibrations, and the Z2
//! symmetrization rule for quotients of a square by the factor swap. Every
//! moduli formula in this crate is assembled from these blocks.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::BiPoly;
use crate::rational::Rational;

/// A Hodge polynomial tagged with a description of the variety it came from.
///
/// The label is documentation only: equality compares the polynomial values
/// and nothing else.
#[derive(Debug, Clone)]
pub struct HodgeClass {
    value: BiPoly,
    label: String,
}

impl HodgeClass {
    /// Wraps a polynomial with a provenance label.
    pub fn new(value: BiPoly, label: impl Into<String>) -> Self {
        HodgeClass {
            value,
            label: label.into(),
        }
    }

    pub fn value(&self) -> &BiPoly {
        &self.value
    }

    pub fn into_value(self) -> BiPoly {
        self.value
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

impl PartialEq for HodgeClass {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Eq for HodgeClass {}

impl core::fmt::Display for HodgeClass {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A point: the constant 1.
pub fn e_point() -> HodgeClass {
    HodgeClass::new(BiPoly::one(), "point")
}

/// An elliptic curve: `(1+u)(1+v)`.
pub fn e_curve() -> HodgeClass {
    let value = (BiPoly::one() + BiPoly::u()) * (BiPoly::one() + BiPoly::v());
    HodgeClass::new(value, "elliptic curve")
}

/// Affine space of dimension `n`: `(uv)^n`.
pub fn e_affine(n: u64) -> HodgeClass {
    HodgeClass::new(BiPoly::uv_pow(n), alloc::format!("affine space A^{n}"))
}

/// Projective space of dimension `n`: `1 + uv + ... + (uv)^n`, written out
/// directly rather than through division.
pub fn e_proj(n: u64) -> HodgeClass {
    let value = BiPoly::from_terms((0..=n).map(|k| (k, k, Rational::one())));
    HodgeClass::new(value, alloc::format!("projective space P^{n}"))
}

/// The Grassmannian of `r`-dimensional subspaces of an `N`-dimensional
/// space: the Gaussian binomial `[N r]` in `x = uv`, computed from the
/// product formula by iterated exact division.
pub fn e_grassmannian(r: i64, n: i64) -> Result<HodgeClass> {
    if r < 0 || n < 0 || r > n {
        return Err(Error::InvalidRange {
            reason: alloc::format!("Grassmannian parameters need 0 <= r <= N, got r={r}, N={n}"),
        });
    }
    let (r, n) = (r as u64, n as u64);
    let mut value = BiPoly::one();
    for m in 1..=r {
        value = value * (BiPoly::one() - BiPoly::uv_pow(n - r + m));
    }
    for m in 1..=r {
        value = value.exact_div(&(BiPoly::one() - BiPoly::uv_pow(m)))?;
    }
    Ok(HodgeClass::new(
        value,
        alloc::format!("Grassmannian Gr({r}, {n})"),
    ))
}

/// Disjoint union: the sum of the pieces.
pub fn stratification_sum(parts: &[HodgeClass]) -> HodgeClass {
    let mut value = BiPoly::zero();
    let mut labels: Vec<&str> = Vec::with_capacity(parts.len());
    for part in parts {
        value = value + part.value();
        labels.push(part.label());
    }
    HodgeClass::new(
        value,
        alloc::format!("disjoint union of [{}]", labels.join("; ")),
    )
}

/// Zariski-locally-trivial fibration: the product of base and fibre.
pub fn fibration_product(base: &HodgeClass, fibre: &HodgeClass) -> HodgeClass {
    HodgeClass::new(
        base.value() * fibre.value(),
        alloc::format!("{}-bundle over {}", fibre.label(), base.label()),
    )
}

fn half() -> BiPoly {
    BiPoly::constant(Rational::from_frac(1, 2))
}

/// The invariant part of `f x f` under the factor swap:
/// `(f(u,v)^2 + f(-u^2,-v^2)) / 2`.
pub fn z2_plus(f: &HodgeClass) -> HodgeClass {
    let square = f.value() * f.value();
    let twisted = f.value().parity_substitute();
    HodgeClass::new(
        (square + twisted) * half(),
        alloc::format!("Z2-invariant part of ({})^2", f.label()),
    )
}

/// The anti-invariant part of `f x f` under the factor swap:
/// `(f(u,v)^2 - f(-u^2,-v^2)) / 2`.
pub fn z2_minus(f: &HodgeClass) -> HodgeClass {
    let square = f.value() * f.value();
    let twisted = f.value().parity_substitute();
    HodgeClass::new(
        (square - twisted) * half(),
        alloc::format!("Z2-anti-invariant part of ({})^2", f.label()),
    )
}
