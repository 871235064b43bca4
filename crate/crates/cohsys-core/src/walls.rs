//! Critical values of the stability parameter for coherent systems of type
//! `(2 + a*d, d, 1)`.
//!
//! The moduli space changes only when alpha crosses one of finitely many
//! rational walls. The closed-form list enumerates them directly; a
//! brute-force search over all numerically possible destabilising subsystem
//! types provides an independent oracle.

use alloc::vec::Vec;

use crate::rational::Rational;

/// One wall, with the numerical type of the destabilising subsystem.
///
/// The subsystem carries the section, so its type is `(n1, d1, 1)` and the
/// quotient has type `(n2, d2, 0)` with `n1 + n2 = n` and `d1 + d2 = d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalValue {
    /// Wall number, counting upward from the smallest positive wall.
    pub index: u64,
    /// Degree of the destabilising subsystem.
    pub d1: u64,
    /// Degree of the quotient.
    pub d2: u64,
    /// Rank of the destabilising subsystem.
    pub n1: u64,
    /// Rank of the quotient.
    pub n2: u64,
    /// The wall, an exact rational.
    pub alpha: Rational,
}

/// All critical values for type `(2 + a*d, d, 1)`, ascending in alpha.
///
/// There are `floor((d-1)/2)` walls; the `i`th has subsystem degree
/// `d1 = floor((d-1)/2) - i + 1`, subsystem rank `n1 = d1*a + 1` and
/// `alpha = (d - 2*d1) / (1 + a*(d - d1))`.
pub fn critical_values(d: u64, a: u64) -> Vec<CriticalValue> {
    assert!(d >= 1, "degree must be positive");
    let n = 2 + a * d;
    let ell = (d - 1) / 2;
    let mut out = Vec::with_capacity(ell as usize);
    for i in 1..=ell {
        let d1 = ell - i + 1;
        let d2 = d - d1;
        let n1 = d1 * a + 1;
        let n2 = n - n1;
        let alpha = Rational::from_frac((d - 2 * d1) as i64, (1 + a * d2) as i64);
        out.push(CriticalValue {
            index: i,
            d1,
            d2,
            n1,
            n2,
            alpha,
        });
    }
    out
}

/// Brute-force wall search for coherent systems of type `(n, d, 1)`.
///
/// Enumerates every subsystem type `(n1, d1, 1)` with `0 < n1 < n` and
/// `0 < d1 < d` whose slope lies below the quotient slope, and keeps the
/// alpha at which the two alpha-slopes coincide whenever it falls strictly
/// inside `(0, d/(n-1))`, the interval on which the moduli space can be
/// nonempty. Returns the walls sorted and deduplicated.
pub fn critical_values_bruteforce(n: u64, d: u64) -> Vec<Rational> {
    assert!(d >= 1, "degree must be positive");
    let mut walls = Vec::new();
    if n < 2 {
        return walls;
    }
    let upper = Rational::from_frac(d as i64, (n - 1) as i64);
    for n1 in 1..n {
        let n2 = n - n1;
        for d1 in 1..d {
            let d2 = d - d1;
            if d1 * n2 >= d2 * n1 {
                continue;
            }
            let alpha =
                Rational::from_frac((n1 * d2 - n2 * d1) as i64, n2 as i64);
            if alpha.cmp_value(&upper) == core::cmp::Ordering::Less {
                walls.push(alpha);
            }
        }
    }
    walls.sort_by(|a, b| a.cmp_value(b));
    walls.dedup();
    walls
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn degree_five_walls() {
        let walls = critical_values(5, 1);
        assert_eq!(walls.len(), 2);
        assert_eq!(
            walls[0],
            CriticalValue {
                index: 1,
                d1: 2,
                d2: 3,
                n1: 3,
                n2: 4,
                alpha: Rational::from_frac(1, 4),
            }
        );
        assert_eq!(
            walls[1],
            CriticalValue {
                index: 2,
                d1: 1,
                d2: 4,
                n1: 2,
                n2: 5,
                alpha: Rational::from_frac(3, 5),
            }
        );
    }

    #[test]
    fn low_degrees_have_no_walls() {
        assert!(critical_values(1, 0).is_empty());
        assert!(critical_values(2, 3).is_empty());
    }

    #[test]
    fn walls_sit_inside_the_stability_interval() {
        for d in 1..=20u64 {
            for a in 0..=4u64 {
                let n = 2 + a * d;
                let upper = Rational::from_frac(d as i64, (n - 1) as i64);
                let walls = critical_values(d, a);
                assert_eq!(walls.len() as u64, (d - 1) / 2);
                let mut prev: Option<Rational> = None;
                for (pos, w) in walls.iter().enumerate() {
                    assert_eq!(w.index, pos as u64 + 1);
                    assert_eq!(w.d1 + w.d2, d);
                    assert_eq!(w.n1 + w.n2, n);
                    assert_eq!(w.n1, w.d1 * a + 1);
                    assert!(!w.alpha.is_negative() && !w.alpha.is_zero());
                    assert_eq!(w.alpha.cmp_value(&upper), core::cmp::Ordering::Less);
                    if let Some(p) = &prev {
                        assert_eq!(p.cmp_value(&w.alpha), core::cmp::Ordering::Less);
                    }
                    prev = Some(w.alpha.clone());
                }
            }
        }
    }

    #[test]
    fn bruteforce_agrees_with_closed_form() {
        assert_eq!(
            critical_values_bruteforce(7, 5),
            vec![Rational::from_frac(1, 4), Rational::from_frac(3, 5)]
        );
        for d in 1..=14u64 {
            for a in 0..=3u64 {
                let closed: Vec<Rational> = critical_values(d, a)
                    .into_iter()
                    .map(|w| w.alpha)
                    .collect();
                assert_eq!(
                    critical_values_bruteforce(2 + a * d, d),
                    closed,
                    "wall sets differ at d = {d}, a = {a}"
                );
            }
        }
    }

    #[test]
    fn subsystem_types_have_no_walls() {
        assert!(critical_values_bruteforce(3, 2).is_empty());
        assert!(critical_values_bruteforce(2, 2).is_empty());
        for d1 in 1..=10u64 {
            for a in 0..=3u64 {
                assert!(
                    critical_values_bruteforce(1 + a * d1, d1).is_empty(),
                    "unexpected wall for type ({}, {d1}, 1)",
                    1 + a * d1
                );
            }
        }
    }
}
