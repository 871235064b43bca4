//! Hodge polynomials of the moduli spaces in each chamber between critical
//! values, for coherent systems of type `(n, d, 1)` with `n = 2 + a*d`.
//!
//! The terminal chamber (alpha large) is a projective bundle over the curve
//! and serves as the anchor. Crossing the `i`th critical value downward
//! replaces one projective-bundle flip locus by another; summing the
//! corrections gives every intermediate chamber. A closed form obtained by
//! telescoping the same sum is computed independently and tested against the
//! recursion.

use crate::error::{Error, Result};
use crate::hodge::{e_curve, e_proj};
use crate::poly::BiPoly;
use crate::ratexpr::RatExpr;

/// Which side of a critical value a flip locus sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlipSide {
    /// The locus removed when alpha decreases through the wall.
    Plus,
    /// The locus glued in when alpha decreases through the wall.
    Minus,
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

/// Parity constant: 1 for odd degree, 2 for even.
fn gamma(d: u64) -> u64 {
    if d % 2 == 1 {
        1
    } else {
        2
    }
}

/// Hodge polynomial of the terminal chamber, a `P^(d-1)`-bundle over the
/// curve (the projective space itself for fixed determinant).
pub fn hodge_gl(d: u64, fixed_det: bool) -> BiPoly {
    assert!(d >= 1, "degree must be positive");
    let proj = e_proj(d - 1).into_value();
    if fixed_det {
        proj
    } else {
        proj * curve()
    }
}

/// Hodge polynomial of one flip locus at the wall indexed by `d1`.
///
/// Both loci are projective bundles over `C x B` where `B` is the moduli
/// space of the destabilising subsystem, itself a `P^(d1-1)`-bundle over the
/// curve. The fibre dimension is `d1 - 1` on the plus side and
/// `d - 2*d1 - 1` on the minus side. Fixing the determinant removes one
/// curve factor.
pub fn hodge_flip(d: u64, d1: u64, side: FlipSide, fixed_det: bool) -> Result<BiPoly> {
    let g = gamma(d);
    if d1 < 1 || 2 * d1 + g > d {
        return Err(Error::precondition(alloc::format!(
            "flip locus parameter d1 must satisfy 1 <= d1 <= (d - {g})/2, got d1 = {d1}, d = {d}"
        )));
    }
    let sub_moduli = e_proj(d1 - 1).into_value() * curve();
    let fibre_dim = match side {
        FlipSide::Plus => d1 - 1,
        FlipSide::Minus => d - 2 * d1 - 1,
    };
    let over_base = e_proj(fibre_dim).into_value() * sub_moduli;
    Ok(if fixed_det { over_base } else { over_base * curve() })
}

/// Hodge polynomial of the `i`th chamber by downward wall-crossing from the
/// terminal chamber. Chamber `L = (d - gamma)/2` is terminal; chamber 0 is
/// the small-alpha end.
pub fn hodge_gi_recursive(d: u64, i: u64, fixed_det: bool) -> Result<BiPoly> {
    let ell = chamber_count_check(d, i)?;
    let mut acc = hodge_gl(d, fixed_det);
    for d1 in 1..=(ell - i) {
        acc = acc + hodge_flip(d, d1, FlipSide::Minus, fixed_det)?
            - hodge_flip(d, d1, FlipSide::Plus, fixed_det)?;
    }
    Ok(acc)
}

/// Hodge polynomial of the `i`th chamber from the telescoped closed form.
pub fn hodge_gi_closed(d: u64, i: u64, fixed_det: bool) -> Result<BiPoly> {
    let ell = chamber_count_check(d, i)?;
    let g = gamma(d);
    let s = ell - i;

    let first = RatExpr::from_poly(hodge_gl(d, fixed_det));
    let curve_factor = if fixed_det { curve() } else { curve().pow(2) };
    let num = curve_factor * (one() - x(s)) * (x(1) - x(g + 2 * i)) * (one() - x(s + 1));
    let den = (one() - x(1)).pow(2) * (one() - x(2));
    let second = RatExpr::new(num, den)?;
    (first + second).to_poly()
}

/// Validates `i <= L` and returns `L = (d - gamma)/2 = floor((d-1)/2)`.
fn chamber_count_check(d: u64, i: u64) -> Result<u64> {
    if d < 1 {
        return Err(Error::precondition("degree must be positive"));
    }
    let ell = (d - 1) / 2;
    if i > ell {
        return Err(Error::precondition(alloc::format!(
            "chamber index must satisfy 0 <= i <= {ell} for degree {d}, got {i}"
        )));
    }
    Ok(ell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moduli::{hodge_g0_coprime, ModuliQuery};
    use crate::strata::hodge_g0_gcd2;

    #[test]
    fn terminal_chamber_small_degrees() {
        assert_eq!(hodge_gl(1, false), curve());
        assert_eq!(hodge_gl(1, true), one());
        assert_eq!(hodge_gl(2, false), (one() + x(1)) * curve());
        assert_eq!(hodge_gl(3, true), one() + x(1) + x(2));
    }

    #[test]
    fn flip_loci_at_degree_five() {
        let plus = hodge_flip(5, 1, FlipSide::Plus, false).unwrap();
        assert_eq!(plus, curve() * curve());
        let minus = hodge_flip(5, 1, FlipSide::Minus, false).unwrap();
        assert_eq!(minus, e_proj(2).into_value() * curve() * curve());
        let diff = hodge_flip(5, 2, FlipSide::Minus, false).unwrap()
            - hodge_flip(5, 2, FlipSide::Plus, false).unwrap();
        assert_eq!(diff, -(curve() * curve() * (one() + x(1)) * x(1)));
    }

    #[test]
    fn flip_difference_matches_correction_term() {
        for (d, d1) in [(5u64, 1u64), (5, 2), (7, 2), (8, 3), (9, 1)] {
            let diff = hodge_flip(d, d1, FlipSide::Minus, false).unwrap()
                - hodge_flip(d, d1, FlipSide::Plus, false).unwrap();
            let closed = RatExpr::new(
                curve().pow(2) * (one() - x(d1)) * (x(d1) - x(d - 2 * d1)),
                (one() - x(1)).pow(2),
            )
            .unwrap()
            .to_poly()
            .unwrap();
            assert_eq!(diff, closed, "correction mismatch at d = {d}, d1 = {d1}");
        }
    }

    #[test]
    fn terminal_chamber_is_fixed_point_of_recursion() {
        for d in 1..=12u64 {
            let ell = (d - 1) / 2;
            for fixed_det in [false, true] {
                assert_eq!(
                    hodge_gi_recursive(d, ell, fixed_det).unwrap(),
                    hodge_gl(d, fixed_det)
                );
                assert_eq!(
                    hodge_gi_closed(d, ell, fixed_det).unwrap(),
                    hodge_gl(d, fixed_det)
                );
            }
        }
    }

    #[test]
    fn closed_matches_recursive_small_degrees() {
        for d in 1..=10u64 {
            let ell = (d - 1) / 2;
            for i in 0..=ell {
                for fixed_det in [false, true] {
                    assert_eq!(
                        hodge_gi_closed(d, i, fixed_det).unwrap(),
                        hodge_gi_recursive(d, i, fixed_det).unwrap(),
                        "mismatch at d = {d}, i = {i}, fixed_det = {fixed_det}"
                    );
                }
            }
        }
    }

    #[test]
    fn smallest_chamber_odd_degree_matches_coprime_formula() {
        for (n, d) in [(7u64, 5u64), (2, 5), (9, 7), (5, 3)] {
            let q = ModuliQuery::small_alpha(n, d, 1, false).unwrap();
            assert_eq!(
                hodge_gi_recursive(d, 0, false).unwrap(),
                hodge_g0_coprime(&q).unwrap()
            );
        }
    }

    #[test]
    fn smallest_chamber_even_degree_matches_stratified_space() {
        for d in [2u64, 4, 6, 8] {
            for fixed_det in [false, true] {
                let q = ModuliQuery::small_alpha(2, d, 1, fixed_det).unwrap();
                assert_eq!(
                    hodge_gi_closed(d, 0, fixed_det).unwrap(),
                    hodge_g0_gcd2(&q).unwrap(),
                    "mismatch at d = {d}, fixed_det = {fixed_det}"
                );
            }
        }
    }

    #[test]
    fn determinant_factorisation_in_every_chamber() {
        for d in 2..=9u64 {
            let ell = (d - 1) / 2;
            for i in 0..=ell {
                let full = hodge_gi_closed(d, i, false).unwrap();
                let fixed = hodge_gi_closed(d, i, true).unwrap();
                assert_eq!(full, curve() * fixed, "no factorisation at d = {d}, i = {i}");
            }
        }
    }

    #[test]
    fn out_of_range_inputs_are_rejected() {
        assert!(matches!(
            hodge_gi_closed(5, 3, false),
            Err(Error::PreconditionViolation { .. })
        ));
        assert!(matches!(
            hodge_gi_recursive(4, 2, false),
            Err(Error::PreconditionViolation { .. })
        ));
        assert!(matches!(
            hodge_flip(5, 3, FlipSide::Plus, false),
            Err(Error::PreconditionViolation { .. })
        ));
        assert!(matches!(
            hodge_flip(6, 0, FlipSide::Plus, false),
            Err(Error::PreconditionViolation { .. })
        ));
    }
}
