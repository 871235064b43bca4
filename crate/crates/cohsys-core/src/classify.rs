//! Isomorphism and birational classification of the small-alpha moduli
//! spaces, as far as the numerical invariants decide them.

use alloc::string::String;
use core::fmt;

use crate::error::{Error, Result};
use crate::gcd;

/// Outcome of an isomorphism comparison between `G_0(n, d, k)` and
/// `G_0(n2, d, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Isomorphic,
    NotIsomorphic,
    /// Neither criterion applies; equality of Hodge polynomials alone cannot
    /// separate the spaces.
    Undetermined,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Verdict::Isomorphic => "isomorphic",
            Verdict::NotIsomorphic => "not isomorphic",
            Verdict::Undetermined => "undetermined",
        };
        write!(f, "{name}")
    }
}

/// A verdict together with the criterion that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub reason: String,
}

/// Compares `G_0(n, d, k)` with `G_0(n2, d, k)` for ranks coprime to the
/// degree.
///
/// Ranks congruent mod the degree give isomorphic spaces. Incongruent ranks
/// are decided for `k = 1` and `k = d - 1`, where the spaces are projective
/// bundles over the curve whose twisting classes differ; the remaining cases
/// stay undetermined.
pub fn classify_isomorphism(n: u64, n2: u64, d: u64, k: u64) -> Result<Classification> {
    if n < 1 || n2 < 1 || d < 1 {
        return Err(Error::precondition("ranks and degree must be positive"));
    }
    if gcd(n, d) != 1 || gcd(n2, d) != 1 {
        return Err(Error::precondition(alloc::format!(
            "both ranks must be coprime to the degree, got gcd({n}, {d}) = {} and gcd({n2}, {d}) = {}",
            gcd(n, d),
            gcd(n2, d)
        )));
    }
    if k < 1 || k > d {
        return Err(Error::precondition(alloc::format!(
            "section count must satisfy 1 <= k <= d, got k = {k}"
        )));
    }
    let c = if n % d == n2 % d {
        Classification {
            verdict: Verdict::Isomorphic,
            reason: String::from(
                "ranks congruent mod the degree: both spaces are the same Grassmannian fibration over the curve",
            ),
        }
    } else if k == 1 || k == d - 1 {
        Classification {
            verdict: Verdict::NotIsomorphic,
            reason: String::from(
                "ranks incongruent mod the degree: the projective bundles over the curve have different twisting classes",
            ),
        }
    } else {
        Classification {
            verdict: Verdict::Undetermined,
            reason: String::from(
                "ranks incongruent mod the degree and 1 < k < d - 1: no deciding criterion",
            ),
        }
    };
    Ok(c)
}

/// Birational type of the small-alpha moduli space, full family or fixed
/// determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BirationalType {
    /// Birational to projective space.
    Rational,
    /// Birational to `P^dim x C`.
    ProjBundleTimesCurve { dim: u64 },
    /// Fibred over the symmetric product `S^h C`.
    FibredOverSymProd { h: u64 },
    /// Fibred over `P^(h-1)`.
    FibredOverProjSpace { h: u64 },
}

impl fmt::Display for BirationalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BirationalType::Rational => write!(f, "rational"),
            BirationalType::ProjBundleTimesCurve { dim } => {
                write!(f, "birational to P^{dim} x C")
            }
            BirationalType::FibredOverSymProd { h } => {
                write!(f, "fibred over S^{h}C")
            }
            BirationalType::FibredOverProjSpace { h } => {
                write!(f, "fibred over P^{}", h - 1)
            }
        }
    }
}

/// Determines the birational type of `G_0(n, d, k)` from the first numerical
/// criterion that applies, in order: degree coprime to the rank; gcd 2 with
/// one section; degree coprime to `n - k`; general common factor `h`.
pub fn birational_type(n: u64, d: u64, k: u64, fixed_det: bool) -> Result<BirationalType> {
    if n < 1 || d < 1 || k < 1 {
        return Err(Error::precondition(
            "rank, degree and section count must be positive",
        ));
    }
    let h = gcd(n, d);
    if h == 1 && k <= d {
        return Ok(proj_bundle_or_rational(k * (d - k), fixed_det));
    }
    if h == 2 && k == 1 {
        return Ok(proj_bundle_or_rational(d - 1, fixed_det));
    }
    if k < n && k < d && gcd(n - k, d) == 1 {
        return Ok(proj_bundle_or_rational(k * (d - k), fixed_det));
    }
    if h > 1 && k < d {
        return Ok(if fixed_det {
            BirationalType::FibredOverProjSpace { h }
        } else {
            BirationalType::FibredOverSymProd { h }
        });
    }
    Err(Error::out_of_scope(alloc::format!(
        "no birational criterion covers (n, d, k) = ({n}, {d}, {k})"
    )))
}

fn proj_bundle_or_rational(dim: u64, fixed_det: bool) -> BirationalType {
    if fixed_det {
        BirationalType::Rational
    } else {
        BirationalType::ProjBundleTimesCurve { dim }
    }
}

/// Upper bound for the number of birational types among the chambers of
/// degree `d`: the number of divisors of `d`.
pub fn birational_type_count_bound(d: u64) -> u64 {
    assert!(d >= 1, "degree must be positive");
    (1..=d).filter(|t| d % t == 0).count() as u64
}
