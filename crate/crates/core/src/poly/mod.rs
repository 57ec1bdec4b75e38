//! Exact sparse polynomial arithmetic over the integers.
//!
//! [`BiPoly`] is a sparse bivariate polynomial in `s` and `t`; [`UniPoly`] is
//! a univariate polynomial in `x`. Both serialize to a canonical text form
//! (graded-lexicographic term order, unit coefficients and exponents omitted)
//! and parse back from it. Division never leaves the integers: an inexact
//! quotient is reported as [`DivisionFailure`], including quotients that
//! would exist over the rationals only.

mod bipoly;
mod parse;
mod unipoly;

pub use bipoly::BiPoly;
pub use unipoly::UniPoly;

use num_bigint::BigInt;
use num_traits::Signed;
use std::fmt;

/// No exact quotient exists in the integer polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("no exact quotient exists over the integers")]
pub struct DivisionFailure;

/// Writes `coeff * monomial` terms as canonical text: `s^3 + 2*s*t - 1`.
/// An empty monomial string denotes the constant term.
fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a BigInt, String)>,
) -> fmt::Result {
    let mut first = true;
    for (coeff, monomial) in terms {
        let mag = coeff.abs();
        if first {
            if coeff.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if coeff.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if monomial.is_empty() {
            write!(f, "{mag}")?;
        } else if mag == BigInt::from(1) {
            write!(f, "{monomial}")?;
        } else {
            write!(f, "{mag}*{monomial}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

fn var_power(var: char, exp: u32) -> Option<String> {
    match exp {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{exp}")),
    }
}
