//! Output encodings for polynomials: plain text, LaTeX, and a canonical
//! JSON form that parses back losslessly.

use std::str::FromStr;

use cohsys_core::poly::Exponents;
use cohsys_core::{BiPoly, Rational};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// How the textual commands render polynomials and tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Plain,
    Latex,
    Json,
}

/// One monomial in the JSON encoding. Numerator and denominator are decimal
/// strings so that arbitrary-precision coefficients survive any JSON reader.
#[derive(Debug, Serialize, Deserialize)]
pub struct JsonTerm {
    pub u: u64,
    pub v: u64,
    pub num: String,
    pub den: String,
}

/// The JSON encoding of a polynomial, terms in canonical order.
#[derive(Debug, Serialize, Deserialize)]
pub struct JsonPoly {
    pub terms: Vec<JsonTerm>,
}

impl From<&BiPoly> for JsonPoly {
    fn from(p: &BiPoly) -> JsonPoly {
        let terms = p
            .terms()
            .map(|(e, c)| JsonTerm {
                u: e.u,
                v: e.v,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        JsonPoly { terms }
    }
}

impl TryFrom<&JsonPoly> for BiPoly {
    type Error = String;

    fn try_from(p: &JsonPoly) -> Result<BiPoly, String> {
        let mut terms = Vec::with_capacity(p.terms.len());
        for t in &p.terms {
            let num = BigInt::from_str(&t.num)
                .map_err(|e| format!("bad numerator {:?}: {e}", t.num))?;
            let den = BigInt::from_str(&t.den)
                .map_err(|e| format!("bad denominator {:?}: {e}", t.den))?;
            let coeff = Rational::new(num, den).map_err(|e| e.to_string())?;
            terms.push((t.u, t.v, coeff));
        }
        Ok(BiPoly::from_terms(terms))
    }
}

pub fn poly_plain(p: &BiPoly) -> String {
    p.to_string()
}

pub fn poly_json(p: &BiPoly) -> String {
    serde_json::to_string(&JsonPoly::from(p)).expect("polynomial serialization cannot fail")
}

/// Rendering of one variable power for LaTeX: `u`, `u^{2}`, or nothing.
fn latex_power(out: &mut String, var: char, exp: u64) {
    match exp {
        0 => {}
        1 => out.push(var),
        _ => {
            out.push(var);
            out.push_str("^{");
            out.push_str(&exp.to_string());
            out.push('}');
        }
    }
}

fn latex_coefficient(out: &mut String, c: &Rational, constant_term: bool) {
    let abs = c.abs();
    if abs.is_one() && !constant_term {
        return;
    }
    if abs.is_integer() {
        out.push_str(&abs.numer().to_string());
    } else {
        out.push_str("\\frac{");
        out.push_str(&abs.numer().to_string());
        out.push_str("}{");
        out.push_str(&abs.denom().to_string());
        out.push('}');
    }
}

/// LaTeX form with the same term count and order as the plain form.
pub fn poly_latex(p: &BiPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        latex_coefficient(&mut out, c, e == Exponents::new(0, 0));
        latex_power(&mut out, 'u', e.u);
        latex_power(&mut out, 'v', e.v);
    }
    out
}

pub fn poly(p: &BiPoly, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Plain => poly_plain(p),
        OutputFormat::Latex => poly_latex(p),
        OutputFormat::Json => poly_json(p),
    }
}

/// Exact fraction rendering shared by the table emitters.
pub fn rational_plain(r: &Rational) -> String {
    r.to_string()
}

pub fn rational_latex(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        let abs = r.abs();
        format!("{sign}\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
    }
}
