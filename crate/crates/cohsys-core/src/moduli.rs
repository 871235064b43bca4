//! Moduli-space queries and the top-level Hodge polynomial dispatch.
//!
//! A coherent system on the curve has a type `(n, d, k)`: rank, degree, and
//! number of sections. The moduli spaces depend on a stability parameter
//! `alpha`; a query names either the small-alpha space `G_0` or the chamber
//! `G_i` between consecutive critical values. Which formula applies is
//! decided by `gcd(n, d)` and the chamber.

use crate::chambers::hodge_gi_closed;
use crate::error::{Error, Result};
use crate::gcd;
use crate::hodge::{e_curve, e_grassmannian};
use crate::poly::BiPoly;
use crate::strata::hodge_g0_gcd2;

/// Which alpha-chamber a query targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chamber {
    /// The moduli space for alpha just above zero (`G_0`).
    SmallAlpha,
    /// The chamber `G_i` between the i-th and (i+1)-th critical values;
    /// index 0 is the small-alpha chamber, `L = floor((d-1)/2)` the last.
    Index(u64),
}

/// A moduli-space query: type `(n, d, k)`, full family or fixed determinant,
/// and the chamber.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModuliQuery {
    pub n: u64,
    pub d: u64,
    pub k: u64,
    pub fixed_det: bool,
    pub chamber: Chamber,
}

impl ModuliQuery {
    /// Validates the basic ranges: `n`, `d`, `k` all at least 1.
    pub fn new(n: u64, d: u64, k: u64, fixed_det: bool, chamber: Chamber) -> Result<Self> {
        if n < 1 || d < 1 || k < 1 {
            return Err(Error::precondition(alloc::format!(
                "rank, degree and section count must be positive, got (n, d, k) = ({n}, {d}, {k})"
            )));
        }
        Ok(ModuliQuery {
            n,
            d,
            k,
            fixed_det,
            chamber,
        })
    }

    /// Convenience constructor for the small-alpha space.
    pub fn small_alpha(n: u64, d: u64, k: u64, fixed_det: bool) -> Result<Self> {
        ModuliQuery::new(n, d, k, fixed_det, Chamber::SmallAlpha)
    }
}

/// The expected dimension `beta(d, k) = k(d-k) + 1` of the moduli space.
pub fn beta(d: i64, k: i64) -> i64 {
    k * (d - k) + 1
}

/// Hodge polynomial of the small-alpha moduli space when `gcd(n, d) = 1`:
/// the fixed-determinant space is the Grassmannian `Gr(k, d)`, and the full
/// family is a `Gr(k, d)`-bundle over the curve.
pub fn hodge_g0_coprime(q: &ModuliQuery) -> Result<BiPoly> {
    if gcd(q.n, q.d) != 1 {
        return Err(Error::precondition(alloc::format!(
            "coprime formula needs gcd(n, d) = 1, got gcd({}, {}) = {}",
            q.n,
            q.d,
            gcd(q.n, q.d)
        )));
    }
    if q.k < 1 || q.k > q.d {
        return Err(Error::precondition(alloc::format!(
            "coprime formula needs 1 <= k <= d, got k = {}, d = {}",
            q.k,
            q.d
        )));
    }
    let gr = e_grassmannian(q.k as i64, q.d as i64)?;
    if q.fixed_det {
        Ok(gr.into_value())
    } else {
        Ok(gr.value() * e_curve().value())
    }
}

/// Top-level dispatch: picks the formula for a query, or reports that the
/// requested space has no computed Hodge polynomial.
pub fn hodge_for_query(q: &ModuliQuery) -> Result<BiPoly> {
    match q.chamber {
        Chamber::SmallAlpha => match gcd(q.n, q.d) {
            1 => hodge_g0_coprime(q),
            2 => hodge_g0_gcd2(q),
            h => Err(Error::out_of_scope(alloc::format!(
                "no closed form for gcd(n, d) = {h} at small alpha (only gcd 1 and 2 are computed)"
            ))),
        },
        Chamber::Index(i) => {
            if q.k != 1 {
                return Err(Error::precondition(alloc::format!(
                    "chamber polynomials are computed for k = 1 only, got k = {}",
                    q.k
                )));
            }
            if q.n < 2 || (q.n - 2) % q.d != 0 {
                return Err(Error::out_of_scope(alloc::format!(
                    "chamber decomposition is computed for rank 2 + a*d; rank {} does not have this form for degree {}",
                    q.n,
                    q.d
                )));
            }
            hodge_gi_closed(q.d, i, q.fixed_det)
        }
    }
}
