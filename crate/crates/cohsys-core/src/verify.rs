//! The identity suite: every relation the formulas are claimed to satisfy,
//! checked by exact polynomial equality over a configurable range.
//!
//! Each family of identities is one check producing a pass/fail result with
//! a counterexample witness on failure. The CLI `verify` command and the
//! acceptance tests both drive [`run_all`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::chambers::{hodge_flip, hodge_gi_closed, hodge_gi_recursive, hodge_gl, FlipSide};
use crate::error::Result;
use crate::hodge::e_grassmannian;
use crate::moduli::{hodge_g0_coprime, ModuliQuery};
use crate::poly::BiPoly;
use crate::ratexpr::RatExpr;
use crate::rational::Rational;
use crate::strata::{hodge_g0_gcd2, hodge_stratum, StratumId};
use crate::walls::{critical_values, critical_values_bruteforce};

/// Size of the sweep: maximal degree and maximal value of the rank
/// parameter `a` in `n = 2 + a*d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyBounds {
    pub max_d: u64,
    pub max_a: u64,
}

impl VerifyBounds {
    /// Seconds-scale sweep.
    pub fn standard() -> Self {
        VerifyBounds { max_d: 20, max_a: 3 }
    }

    /// The full acceptance range.
    pub fn deep() -> Self {
        VerifyBounds { max_d: 40, max_a: 5 }
    }
}

impl Default for VerifyBounds {
    fn default() -> Self {
        VerifyBounds::standard()
    }
}

/// Outcome of one identity family.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// Case count on pass, first counterexample on failure.
    pub detail: String,
}

/// Accumulates cases, keeping the first counterexample.
struct Tally {
    cases: u64,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, failure: None }
    }

    fn case(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    /// One case asserting that two computations yield the same polynomial.
    fn eq_case(
        &mut self,
        lhs: Result<BiPoly>,
        rhs: Result<BiPoly>,
        ctx: impl FnOnce() -> String,
    ) {
        match (lhs, rhs) {
            (Ok(a), Ok(b)) => self.case(a == b, || format!("{}: values differ", ctx())),
            (Err(e), _) | (_, Err(e)) => {
                self.case(false, || format!("{}: error: {e}", ctx()))
            }
        }
    }

    fn finish(self, name: &'static str) -> CheckResult {
        match self.failure {
            None => CheckResult {
                name,
                passed: true,
                detail: format!("{} cases", self.cases),
            },
            Some(witness) => CheckResult {
                name,
                passed: false,
                detail: witness,
            },
        }
    }
}

fn x(k: u64) -> BiPoly {
    BiPoly::uv_pow(k)
}

fn one() -> BiPoly {
    BiPoly::one()
}

fn curve() -> BiPoly {
    crate::hodge::e_curve().into_value()
}

fn gcd2_query(d: u64, fixed_det: bool) -> Result<ModuliQuery> {
    ModuliQuery::small_alpha(2, d, 1, fixed_det)
}

/// The three strata sum to the closed form, for every even degree.
pub fn check_stratification(bounds: &VerifyBounds) -> CheckResult {
    check_stratification_with(bounds, |d, fixed_det| {
        hodge_g0_gcd2(&gcd2_query(d, fixed_det)?)
    })
}

/// Same check against a caller-supplied closed form, so tests can inject a
/// corrupted formula and watch the check fail.
fn check_stratification_with(
    bounds: &VerifyBounds,
    closed_form: impl Fn(u64, bool) -> Result<BiPoly>,
) -> CheckResult {
    let mut t = Tally::new();
    for d in (2..=bounds.max_d).step_by(2) {
        for fixed_det in [false, true] {
            let sum = gcd2_query(d, fixed_det).and_then(|q| {
                let mut acc = BiPoly::zero();
                for s in StratumId::ALL {
                    acc = acc + hodge_stratum(&q, s)?;
                }
                Ok(acc)
            });
            t.eq_case(sum, closed_form(d, fixed_det), || {
                format!("d = {d}, fixed_det = {fixed_det}")
            });
        }
    }
    t.finish("stratification-sum")
}

/// Downward wall-crossing recursion equals the closed form in every chamber.
///
/// The recursion is accumulated once per degree (each wall adds one flip
/// difference), and the public recursive entry point is checked at the far
/// end of the walk.
pub fn check_recursion(bounds: &VerifyBounds) -> CheckResult {
    let mut t = Tally::new();
    for d in 2..=bounds.max_d {
        let ell = (d - 1) / 2;
        for fixed_det in [false, true] {
            let mut acc = hodge_gl(d, fixed_det);
            let mut i = ell;
            loop {
                t.eq_case(Ok(acc.clone()), hodge_gi_closed(d, i, fixed_det), || {
                    format!("d = {d}, i = {i}, fixed_det = {fixed_det}")
                });
                if i == 0 {
                    break;
                }
                let d1 = ell - i + 1;
                let step = hodge_flip(d, d1, FlipSide::Minus, fixed_det).and_then(|minus| {
                    Ok(minus - hodge_flip(d, d1, FlipSide::Plus, fixed_det)?)
                });
                match step {
                    Ok(diff) => acc = acc + diff,
                    Err(e) => {
                        t.case(false, || format!("d = {d}, d1 = {d1}: error: {e}"));
                        break;
                    }
                }
                i -= 1;
            }
            t.eq_case(
                hodge_gi_recursive(d, 0, fixed_det),
                hodge_gi_closed(d, 0, fixed_det),
                || format!("d = {d}, i = 0, fixed_det = {fixed_det} (recursive entry point)"),
            );
        }
    }
    t.finish("recursion-vs-closed")
}

/// Chamber boundaries: the small-alpha end matches the gcd-specific closed
/// forms, the terminal chamber matches the projective bundle.
pub fn check_boundaries(bounds: &VerifyBounds) -> CheckResult {
    let mut t = Tally::new();
    for d in 1..=bounds.max_d {
        for fixed_det in [false, true] {
            if d % 2 == 1 {
                let geometric = if fixed_det { one() } else { curve() } * (one() - x(d));
                t.eq_case(
                    hodge_gi_closed(d, 0, fixed_det),
                    RatExpr::new(geometric, one() - x(1)).and_then(|r| r.to_poly()),
                    || format!("d = {d}, fixed_det = {fixed_det} (geometric series)"),
                );
                t.eq_case(
                    hodge_gi_closed(d, 0, fixed_det),
                    ModuliQuery::small_alpha(2, d, 1, fixed_det)
                        .and_then(|q| hodge_g0_coprime(&q)),
                    || format!("d = {d}, fixed_det = {fixed_det} (coprime form)"),
                );
            } else {
                t.eq_case(
                    hodge_gi_closed(d, 0, fixed_det),
                    gcd2_query(d, fixed_det).and_then(|q| hodge_g0_gcd2(&q)),
                    || format!("d = {d}, fixed_det = {fixed_det} (gcd-2 form)"),
                );
            }
            let ell = (d - 1) / 2;
            t.eq_case(
                hodge_gi_closed(d, ell, fixed_det),
                Ok(hodge_gl(d, fixed_det)),
                || format!("d = {d}, fixed_det = {fixed_det} (terminal chamber)"),
            );
        }
    }
    t.finish("boundary-chambers")
}

/// Fixing the determinant divides out exactly one curve factor from every
/// whole moduli space, while the generic stratum alone does not factor.
pub fn check_determinant(bounds: &VerifyBounds) -> CheckResult {
    let mut t = Tally::new();
    for d in 1..=bounds.max_d {
        for i in 0..=(d - 1) / 2 {
            t.eq_case(
                hodge_gi_closed(d, i, false),
                hodge_gi_closed(d, i, true).map(|p| p * curve()),
                || format!("d = {d}, i = {i}"),
            );
        }
        if d % 2 == 0 {
            t.eq_case(
                gcd2_query(d, false).and_then(|q| hodge_g0_gcd2(&q)),
                gcd2_query(d, true)
                    .and_then(|q| hodge_g0_gcd2(&q))
                    .map(|p| p * curve()),
                || format!("d = {d} (gcd-2 form)"),
            );
        }
    }
    let generic = |fixed_det| {
        gcd2_query(4, fixed_det).and_then(|q| hodge_stratum(&q, StratumId::Generic))
    };
    match (generic(false), generic(true)) {
        (Ok(full), Ok(fixed)) => t.case(full != fixed * curve(), || {
            String::from("d = 4: generic stratum unexpectedly factors through the curve")
        }),
        _ => t.case(false, || String::from("d = 4: generic stratum errored")),
    }
    t.finish("determinant-factorisation")
}

/// Closed-form critical values match the brute-force wall search, walls obey
/// their structural invariants, and subsystem types have no walls at all.
pub fn check_critical_values(bounds: &VerifyBounds) -> CheckResult {
    let mut t = Tally::new();
    let max_d = bounds.max_d.min(30);
    for d in 1..=max_d {
        let ell = (d - 1) / 2;
        for a in 0..=bounds.max_a {
            let n = 2 + a * d;
            let walls = critical_values(d, a);
            t.case(walls.len() as u64 == ell, || {
                format!("d = {d}, a = {a}: expected {ell} walls, got {}", walls.len())
            });
            let upper = Rational::from_frac(d as i64, (n - 1) as i64);
            for (pos, w) in walls.iter().enumerate() {
                let alpha_ok = {
                    let from_type = Rational::from_frac(
                        (w.n1 * w.d2) as i64 - (w.n2 * w.d1) as i64,
                        w.n2 as i64,
                    );
                    from_type == w.alpha
                };
                let ok = w.index == pos as u64 + 1
                    && w.d1 + w.d2 == d
                    && w.n1 + w.n2 == n
                    && w.n1 == w.d1 * a + 1
                    && alpha_ok
                    && !w.alpha.is_zero()
                    && !w.alpha.is_negative()
                    && w.alpha.cmp_value(&upper) == core::cmp::Ordering::Less
                    && (pos == 0
                        || walls[pos - 1].alpha.cmp_value(&w.alpha)
                            == core::cmp::Ordering::Less);
                t.case(ok, || {
                    format!("d = {d}, a = {a}, wall {}: invariant broken", w.index)
                });
            }
            let closed: Vec<Rational> = walls.into_iter().map(|w| w.alpha).collect();
            t.case(closed == critical_values_bruteforce(n, d), || {
                format!("d = {d}, a = {a}: wall sets differ")
            });
        }
    }
    for a in 0..=bounds.max_a {
        for d1 in 1..=15u64 {
            t.case(critical_values_bruteforce(1 + a * d1, d1).is_empty(), || {
                format!("subsystem type ({}, {d1}, 1) has a wall", 1 + a * d1)
            });
        }
    }
    t.finish("critical-values")
}

/// Degree, leading coefficient, u-v symmetry and coefficient nonnegativity
/// of the chamber and coprime polynomials; symmetry of the strata.
pub fn check_structural_laws(bounds: &VerifyBounds) -> CheckResult {
    let mut t = Tally::new();
    let mut laws = |p: Result<BiPoly>, degree: u64, ctx: &dyn Fn() -> String| match p {
        Ok(p) => {
            let nonneg = p
                .terms()
                .all(|(_, c)| c.is_integer() && !c.is_negative());
            let ok = p.total_degree() == Some(degree)
                && p.leading_coefficient() == Some(Rational::one())
                && p.is_symmetric()
                && nonneg;
            t.case(ok, || format!("{}: structural law broken", ctx()));
        }
        Err(e) => t.case(false, || format!("{}: error: {e}", ctx())),
    };
    for d in 1..=bounds.max_d {
        for i in 0..=(d - 1) / 2 {
            laws(hodge_gi_closed(d, i, false), 2 * d, &|| {
                format!("chamber d = {d}, i = {i}, full")
            });
            laws(hodge_gi_closed(d, i, true), 2 * d - 2, &|| {
                format!("chamber d = {d}, i = {i}, fixed")
            });
        }
        for k in 1..=d {
            let full = ModuliQuery::small_alpha(d + 1, d, k, false)
                .and_then(|q| hodge_g0_coprime(&q));
            laws(full, 2 * (k * (d - k) + 1), &|| {
                format!("coprime d = {d}, k = {k}, full")
            });
            let fixed = ModuliQuery::small_alpha(d + 1, d, k, true)
                .and_then(|q| hodge_g0_coprime(&q));
            laws(fixed, 2 * k * (d - k), &|| {
                format!("coprime d = {d}, k = {k}, fixed")
            });
        }
    }
    for d in (2..=bounds.max_d).step_by(2) {
        for fixed_det in [false, true] {
            for s in StratumId::ALL {
                let p = gcd2_query(d, fixed_det).and_then(|q| hodge_stratum(&q, s));
                match p {
                    Ok(p) => t.case(p.is_symmetric(), || {
                        format!("stratum {s}, d = {d}, fixed_det = {fixed_det}: asymmetric")
                    }),
                    Err(e) => t.case(false, || {
                        format!("stratum {s}, d = {d}, fixed_det = {fixed_det}: error: {e}")
                    }),
                }
            }
        }
    }
    t.finish("structural-laws")
}

/// Euler characteristics: zero for the full family, `d` for fixed
/// determinant, independent of the chamber.
pub fn check_euler(bounds: &VerifyBounds) -> CheckResult {
    let mut t = Tally::new();
    let minus_one = Rational::from(-1i64);
    for d in 1..=bounds.max_d {
        for i in 0..=(d - 1) / 2 {
            match hodge_gi_closed(d, i, false) {
                Ok(p) => t.case(p.eval(&minus_one, &minus_one).is_zero(), || {
                    format!("d = {d}, i = {i}, full: nonzero Euler characteristic")
                }),
                Err(e) => t.case(false, || format!("d = {d}, i = {i}: error: {e}")),
            }
            match hodge_gi_closed(d, i, true) {
                Ok(p) => t.case(
                    p.eval(&minus_one, &minus_one) == Rational::from(d as i64),
                    || format!("d = {d}, i = {i}, fixed: Euler characteristic is not {d}"),
                ),
                Err(e) => t.case(false, || format!("d = {d}, i = {i}: error: {e}")),
            }
        }
    }
    t.finish("euler-characteristics")
}

/// The Grassmannian product formula against the Gaussian-binomial
/// recurrence, with the classical binomial as point count and duality.
pub fn check_grassmannian(_bounds: &VerifyBounds) -> CheckResult {
    const MAX_N: usize = 25;
    let mut t = Tally::new();
    let one_r = Rational::one();

    let mut gauss: Vec<Vec<BiPoly>> = Vec::with_capacity(MAX_N + 1);
    let mut binom: Vec<Vec<BigInt>> = Vec::with_capacity(MAX_N + 1);
    for n in 0..=MAX_N {
        let mut grow = Vec::with_capacity(n + 1);
        let mut brow = Vec::with_capacity(n + 1);
        for r in 0..=n {
            if r == 0 || r == n {
                grow.push(one());
                brow.push(BigInt::from(1));
            } else {
                let prev: &Vec<BiPoly> = &gauss[n - 1];
                grow.push(&prev[r] + x((n - r) as u64) * &prev[r - 1]);
                brow.push(&binom[n - 1][r] + &binom[n - 1][r - 1]);
            }
        }
        gauss.push(grow);
        binom.push(brow);
    }

    for n in 0..=MAX_N {
        for r in 0..=n {
            let product = e_grassmannian(r as i64, n as i64).map(|h| h.into_value());
            t.eq_case(product, Ok(gauss[n][r].clone()), || {
                format!("Gr({r}, {n}): product formula differs from recurrence")
            });
            let points = gauss[n][r].eval(&one_r, &one_r);
            t.case(
                points.is_integer() && points.numer() == &binom[n][r],
                || format!("Gr({r}, {n}): point count is not binomial({n}, {r})"),
            );
            t.case(gauss[n][r] == gauss[n][n - r], || {
                format!("Gr({r}, {n}): duality broken")
            });
        }
    }
    t.finish("grassmannian-recurrence")
}

/// Runs every check.
pub fn run_all(bounds: &VerifyBounds) -> Vec<CheckResult> {
    alloc::vec![
        check_stratification(bounds),
        check_recursion(bounds),
        check_boundaries(bounds),
        check_determinant(bounds),
        check_critical_values(bounds),
        check_structural_laws(bounds),
        check_euler(bounds),
        check_grassmannian(bounds),
    ]
}
