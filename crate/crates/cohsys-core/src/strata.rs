//! The three-part stratification of the small-alpha moduli space when
//! `gcd(n, d) = 2`.
//!
//! With no stable bundles of type `(n, d)`, the bundle underlying a coherent
//! system is one of: a direct sum of two distinct stable bundles (the generic
//! open stratum, a Z2 quotient), a nontrivial self-extension of a stable
//! bundle, or a direct sum of two copies of one stable bundle. The generic
//! stratum is computed twice, from the closed formula and by assembling the
//! Z2-equivariant pieces, and the two routes are required to agree.

use core::fmt;

use crate::error::{Error, Result};
use crate::gcd;
use crate::hodge::{e_curve, e_proj, fibration_product, z2_minus, z2_plus};
use crate::moduli::ModuliQuery;
use crate::poly::BiPoly;
use crate::ratexpr::RatExpr;

/// The three bundle types underlying a gcd-2 coherent system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StratumId {
    /// Direct sum of two non-isomorphic stable bundles.
    Generic,
    /// Nontrivial self-extension of a stable bundle.
    Extension,
    /// Direct sum of two copies of one stable bundle.
    Split,
}

impl StratumId {
    /// All strata, in stratification order (open to closed).
    pub const ALL: [StratumId; 3] = [StratumId::Generic, StratumId::Extension, StratumId::Split];
}

impl fmt::Display for StratumId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            StratumId::Generic => "generic",
            StratumId::Extension => "extension",
            StratumId::Split => "split",
        };
        write!(f, "{name}")
    }
}

fn x(k: u64) -> BiPoly {
    BiPoly::uv_pow(k)
}

fn one() -> BiPoly {
    BiPoly::one()
}

fn curve() -> BiPoly {
    e_curve().into_value()
}

fn u_plus_v() -> BiPoly {
    BiPoly::u() + BiPoly::v()
}

/// The common denominator `(1-x)^2 (1+x)` of the quotient formulas.
fn z2_denominator() -> BiPoly {
    (one() - x(1)).pow(2) * (one() + x(1))
}

/// Validates `k = 1` and `gcd(n, d) = 2`, returning `m = d/2`.
fn require_gcd2(q: &ModuliQuery) -> Result<u64> {
    if q.k != 1 {
        return Err(Error::precondition(alloc::format!(
            "the gcd-2 stratification is computed for k = 1 only, got k = {}",
            q.k
        )));
    }
    let h = gcd(q.n, q.d);
    if h != 2 {
        return Err(Error::precondition(alloc::format!(
            "the stratification needs gcd(n, d) = 2, got gcd({}, {}) = {h}",
            q.n,
            q.d
        )));
    }
    Ok(q.d / 2)
}

/// Hodge polynomial of one stratum, full family or fixed determinant.
pub fn hodge_stratum(q: &ModuliQuery, s: StratumId) -> Result<BiPoly> {
    let m = require_gcd2(q)?;
    match s {
        StratumId::Generic => generic_stratum(m, q.fixed_det),
        StratumId::Extension => extension_stratum(m, q.fixed_det),
        StratumId::Split => split_stratum(m, q.fixed_det),
    }
}

/// The generic stratum: the complement of the diagonal in a square of
/// projective bundles, divided by the factor swap.
///
/// Computed from the closed formula and, independently, from the
/// Z2-equivariant pieces of the proof; the two routes must agree.
fn generic_stratum(m: u64, fixed_det: bool) -> Result<BiPoly> {
    let formula = if fixed_det {
        let bracket =
            (one() - x(m + 1)) * (x(1) - BiPoly::from_int(3)) + (x(1) - x(m)) * u_plus_v();
        RatExpr::new((one() - x(m)) * bracket, z2_denominator())?.to_poly()?
    } else {
        let bracket = u_plus_v() * (x(1) - x(m)) + x(1) * (one() - x(m + 1));
        RatExpr::new(curve() * (one() - x(m)) * bracket, z2_denominator())?.to_poly()?
    };

    let pm = e_proj(m - 1);
    let constructive = if fixed_det {
        (x(1) - BiPoly::from_int(3)) * z2_plus(&pm).value() + u_plus_v() * z2_minus(&pm).value()
    } else {
        let bundle = fibration_product(&e_curve(), &pm);
        z2_plus(&bundle).into_value() - curve() * z2_plus(&pm).value()
    };

    assert_eq!(
        formula, constructive,
        "generic stratum (m = {m}, fixed_det = {fixed_det}): closed formula and equivariant assembly disagree"
    );
    Ok(formula)
}

/// The self-extension stratum: an affine-space fibration over a projective
/// bundle (over the curve for the full family; four copies for fixed
/// determinant, one per square root of the determinant).
fn extension_stratum(m: u64, fixed_det: bool) -> Result<BiPoly> {
    let core = x(m - 1) * (one() - x(m));
    let num = if fixed_det {
        BiPoly::from_int(4) * core
    } else {
        curve() * core
    };
    RatExpr::new(num, one() - x(1))?.to_poly()
}

/// The split stratum: a `Gr(2, m)`-fibration over the curve (four
/// Grassmannians for fixed determinant). Empty when `m < 2`, which the
/// vanishing factor `1 - x^(m-1)` encodes.
fn split_stratum(m: u64, fixed_det: bool) -> Result<BiPoly> {
    let core = (one() - x(m)) * (one() - x(m - 1));
    let num = if fixed_det {
        BiPoly::from_int(4) * core
    } else {
        curve() * core
    };
    RatExpr::new(num, z2_denominator())?.to_poly()
}

/// The closed form for the whole gcd-2 small-alpha space.
pub fn hodge_g0_gcd2(q: &ModuliQuery) -> Result<BiPoly> {
    let m = require_gcd2(q)?;
    let bracket = u_plus_v() * (x(1) - x(m)) + (one() + x(1)) * (one() - x(m + 1));
    let num = if q.fixed_det {
        (one() - x(m)) * bracket
    } else {
        curve() * (one() - x(m)) * bracket
    };
    RatExpr::new(num, z2_denominator())?.to_poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::{e_affine, e_grassmannian, stratification_sum, HodgeClass};
    use crate::rational::Rational;

    fn q(d: u64, fixed_det: bool) -> ModuliQuery {
        ModuliQuery::small_alpha(2, d, 1, fixed_det).unwrap()
    }

    fn p(terms: &[(u64, u64, i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(i, j, c)| (i, j, Rational::from(c))))
    }

    #[test]
    fn degree_two_strata_full() {
        let generic = hodge_stratum(&q(2, false), StratumId::Generic).unwrap();
        assert_eq!(generic, x(1) * curve());
        let extension = hodge_stratum(&q(2, false), StratumId::Extension).unwrap();
        assert_eq!(extension, curve());
        let split = hodge_stratum(&q(2, false), StratumId::Split).unwrap();
        assert!(split.is_zero());
    }

    #[test]
    fn degree_two_strata_fixed() {
        let generic = hodge_stratum(&q(2, true), StratumId::Generic).unwrap();
        assert_eq!(generic, x(1) - BiPoly::from_int(3));
        let extension = hodge_stratum(&q(2, true), StratumId::Extension).unwrap();
        assert_eq!(extension, BiPoly::from_int(4));
        let split = hodge_stratum(&q(2, true), StratumId::Split).unwrap();
        assert!(split.is_zero());
    }

    #[test]
    fn degree_four_split_fixed_is_four_points() {
        let split = hodge_stratum(&q(4, true), StratumId::Split).unwrap();
        assert_eq!(split, BiPoly::from_int(4));
    }

    #[test]
    fn closed_form_small_degrees() {
        assert_eq!(
            hodge_g0_gcd2(&q(2, false)).unwrap(),
            curve() * (one() + x(1))
        );
        assert_eq!(hodge_g0_gcd2(&q(2, true)).unwrap(), one() + x(1));
    }

    #[test]
    fn strata_sum_to_closed_form() {
        for d in [2u64, 4, 6, 8, 10] {
            for fixed_det in [false, true] {
                let query = q(d, fixed_det);
                let parts: alloc::vec::Vec<HodgeClass> = StratumId::ALL
                    .iter()
                    .map(|&s| {
                        HodgeClass::new(
                            hodge_stratum(&query, s).unwrap(),
                            alloc::format!("{s}"),
                        )
                    })
                    .collect();
                let total = stratification_sum(&parts);
                assert_eq!(
                    total.value(),
                    &hodge_g0_gcd2(&query).unwrap(),
                    "strata sum mismatch at d = {d}, fixed_det = {fixed_det}"
                );
            }
        }
    }

    #[test]
    fn extension_and_split_match_block_products() {
        for d in [4u64, 6, 8] {
            let m = d / 2;
            let extension = hodge_stratum(&q(d, false), StratumId::Extension).unwrap();
            assert_eq!(
                extension,
                curve() * e_affine(m - 1).value() * e_proj(m - 1).value()
            );
            let split = hodge_stratum(&q(d, false), StratumId::Split).unwrap();
            assert_eq!(
                split,
                curve() * e_grassmannian(2, m as i64).unwrap().value()
            );
        }
    }

    #[test]
    fn generic_stratum_does_not_factor_through_the_curve() {
        let full = hodge_stratum(&q(4, false), StratumId::Generic).unwrap();
        let fixed = hodge_stratum(&q(4, true), StratumId::Generic).unwrap();
        assert_ne!(full, curve() * fixed);
    }

    #[test]
    fn whole_space_factors_through_the_curve() {
        for d in [2u64, 4, 6, 8] {
            let full = hodge_g0_gcd2(&q(d, false)).unwrap();
            let fixed = hodge_g0_gcd2(&q(d, true)).unwrap();
            assert_eq!(full, curve() * fixed);
        }
    }

    #[test]
    fn preconditions_are_enforced() {
        let coprime = ModuliQuery::small_alpha(2, 3, 1, false).unwrap();
        assert!(matches!(
            hodge_g0_gcd2(&coprime),
            Err(Error::PreconditionViolation { .. })
        ));
        assert!(matches!(
            hodge_stratum(&coprime, StratumId::Generic),
            Err(Error::PreconditionViolation { .. })
        ));
        let k2 = ModuliQuery::small_alpha(2, 4, 2, false).unwrap();
        assert!(matches!(
            hodge_g0_gcd2(&k2),
            Err(Error::PreconditionViolation { .. })
        ));
    }

    #[test]
    fn degree_two_values_in_expanded_form() {
        assert_eq!(
            hodge_stratum(&q(2, false), StratumId::Generic).unwrap(),
            p(&[(1, 1, 1), (2, 1, 1), (1, 2, 1), (2, 2, 1)])
        );
        assert_eq!(
            hodge_g0_gcd2(&q(2, false)).unwrap(),
            p(&[
                (0, 0, 1),
                (1, 0, 1),
                (0, 1, 1),
                (1, 1, 2),
                (2, 1, 1),
                (1, 2, 1),
                (2, 2, 1)
            ])
        );
    }
}
