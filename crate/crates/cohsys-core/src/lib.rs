//! Exact computation of Hodge (E-) polynomials for moduli spaces of
//! coherent systems on an elliptic curve.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! every identity is checked by polynomial equality, never numerically.
//! The crate is organised in layers:
//!
//! - [`rational`] and [`poly`]: the arithmetic kernel, exact fractions and
//!   sparse bivariate polynomials in `u`, `v`, including exact division.
//! - [`ratexpr`]: quotients of two polynomials, for fraction-shaped formulas
//!   that reduce to polynomials at the end.
//! - [`hodge`]: Hodge polynomials of the atomic varieties (point, affine and
//!   projective space, Grassmannian, elliptic curve) and the combinators for
//!   stratifications, fibrations and Z2 quotients.
//! - [`moduli`], [`strata`], [`walls`], [`chambers`], [`classify`]: the
//!   moduli-space computations themselves: small-alpha spaces, the gcd-2
//!   stratification, critical values, flip loci, the chamber recursion and
//!   its closed form, and the isomorphism/birational classifiers.
//! - [`verify`]: the identity families cross-checking all of the above
//!   against independent routes (used by the CLI `verify` command and the
//!   acceptance suite).
//!
//! The core is `no_std` (with `alloc`); IO, serialization and the command
//! line live in the companion `cohsys-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod chambers;
pub mod classify;
pub mod error;
pub mod hodge;
pub mod moduli;
pub mod poly;
pub mod ratexpr;
pub mod rational;
pub mod strata;
pub mod verify;
pub mod walls;

pub use chambers::{hodge_flip, hodge_gi_closed, hodge_gi_recursive, hodge_gl, FlipSide};
pub use classify::{
    birational_type, birational_type_count_bound, classify_isomorphism, BirationalType,
    Classification, Verdict,
};
pub use error::{Error, Result};
pub use hodge::HodgeClass;
pub use moduli::{beta, hodge_for_query, hodge_g0_coprime, Chamber, ModuliQuery};
pub use poly::BiPoly;
pub use ratexpr::RatExpr;
pub use rational::Rational;
pub use strata::{hodge_g0_gcd2, hodge_stratum, StratumId};
pub use walls::{critical_values, critical_values_bruteforce, CriticalValue};

/// Greatest common divisor of two unsigned integers; `gcd(0, n) = n`.
pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::gcd;

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(6, 9), 3);
        assert_eq!(gcd(2, 3), 1);
        assert_eq!(gcd(0, 5), 5);
        assert_eq!(gcd(5, 0), 5);
        assert_eq!(gcd(12, 12), 12);
    }
}
