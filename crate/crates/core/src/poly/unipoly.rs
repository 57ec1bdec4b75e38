//! Dense univariate polynomials over the integers.

use num_bigint::BigInt;
use num_integer::Integer as IntegerOps;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::{parse, var_power, write_terms, DivisionFailure};
use crate::error::{Error, Result};

/// Univariate polynomial in `x` with integer coefficients, stored densely
/// with trailing zeros trimmed. The zero polynomial has no coefficients.
///
/// The same type doubles internally as the coefficient ring Z[t] when
/// [`BiPoly`](super::BiPoly) is viewed as a polynomial in `s`; only the
/// display variable differs, and display is irrelevant there.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial `c * x^exp`.
    pub fn monomial(exp: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        UniPoly { coeffs }
    }

    /// The variable `x`.
    pub fn x() -> Self {
        UniPoly::monomial(1, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficient list reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    pub fn eval(&self, x0: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0 + c;
        }
        acc
    }

    pub fn pow(&self, mut exp: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn mul_scalar(&self, c: &BigInt) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact division in Z[x]. Fails when the quotient does not exist over
    /// the integers, including quotients that exist over the rationals only:
    /// the quotient coefficients are forced top-down, so any inexact integer
    /// step is a proof of non-divisibility.
    pub fn exact_div(&self, divisor: &UniPoly) -> std::result::Result<UniPoly, DivisionFailure> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(UniPoly::zero());
        }
        let dd = divisor.degree().expect("nonzero");
        let dn = self.degree().expect("nonzero");
        if dn < dd {
            return Err(DivisionFailure);
        }
        let lead = divisor.leading().expect("nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for i in (dd..=dn).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (q, r) = rem[i].div_rem(lead);
            if !r.is_zero() {
                return Err(DivisionFailure);
            }
            for (k, c) in divisor.coeffs.iter().enumerate() {
                let delta = &q * c;
                rem[i - dd + k] -= delta;
            }
            quot[i - dd] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(DivisionFailure);
        }
        Ok(UniPoly::new(quot))
    }

    /// Pseudo-remainder: the remainder of `lead(d)^(deg a - deg d + 1) * a`
    /// divided by `d`. Both inputs nonzero, `deg a >= deg d`.
    pub(super) fn pseudo_rem(&self, divisor: &UniPoly) -> UniPoly {
        let dd = divisor.degree().expect("nonzero divisor");
        let lead = divisor.leading().expect("nonzero divisor").clone();
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let top = rem.leading().expect("nonzero").clone();
            // rem = rem*lead - top * x^(dr-dd) * divisor
            let mut scaled: Vec<BigInt> = rem.coeffs.iter().map(|c| c * &lead).collect();
            for (k, c) in divisor.coeffs.iter().enumerate() {
                scaled[dr - dd + k] -= &top * c;
            }
            rem = UniPoly::new(scaled);
        }
        rem
    }

    /// Nonnegative gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content`, with sign normalized so the leading coefficient is
    /// positive. Zero stays zero.
    pub fn primitive_part(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut content = self.content();
        if self.leading().expect("nonzero").is_negative() {
            content = -content;
        }
        UniPoly::new(self.coeffs.iter().map(|c| c / &content).collect())
    }

    /// Gcd in Z[x] via the primitive pseudo-remainder sequence, normalized to
    /// a positive leading coefficient.
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        if a.is_zero() {
            return b.primitive_part().mul_scalar(&b.content().abs());
        }
        if b.is_zero() {
            return a.primitive_part().mul_scalar(&a.content().abs());
        }
        let content_gcd = a.content().gcd(&b.content());
        let mut f = a.primitive_part();
        let mut g = b.primitive_part();
        if f.degree() < g.degree() {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            let r = f.pseudo_rem(&g).primitive_part();
            f = g;
            g = r;
        }
        f.mul_scalar(&content_gcd)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::new(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::new(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                (
                    c,
                    var_power('x', i as u32).unwrap_or_default(),
                )
            });
        write_terms(f, terms)
    }
}

impl FromStr for UniPoly {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let terms = parse::parse_terms(input, &['x'])?;
        let mut acc: Vec<BigInt> = Vec::new();
        for term in terms {
            let exp = term
                .exponents
                .first()
                .map(|&(_, e)| e as usize)
                .unwrap_or(0);
            if acc.len() <= exp {
                acc.resize(exp + 1, BigInt::zero());
            }
            acc[exp] += term.coeff;
        }
        Ok(UniPoly::new(acc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> UniPoly {
        s.parse().unwrap()
    }

    #[test]
    fn display_and_parse_round_trip() {
        for text in ["0", "1", "x", "x^3 + 5*x^2 + 5*x + 1", "-2*x + 3", "x^2 - 1"] {
            let poly = p(text);
            assert_eq!(poly.to_string(), text);
        }
    }

    #[test]
    fn parse_flexible_syntax() {
        assert_eq!(p(" 2x^2+x "), p("2*x^2 + x"));
        assert_eq!(p("x*x"), p("x^2"));
        assert_eq!(p("- x"), p("-1*x"));
    }

    #[test]
    fn parse_rejects_garbage_with_position() {
        let err = "x^".parse::<UniPoly>().unwrap_err();
        match err {
            Error::Parse { position, .. } => assert_eq!(position, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!("x + y".parse::<UniPoly>().is_err());
        assert!("".parse::<UniPoly>().is_err());
    }

    #[test]
    fn exact_division() {
        // (x+1)(x^2+4x+1) = x^3+5x^2+5x+1
        let quotient = p("x^3 + 5*x^2 + 5*x + 1").exact_div(&p("x + 1")).unwrap();
        assert_eq!(quotient, p("x^2 + 4*x + 1"));
        // not divisible over Z
        assert!(p("x^2 + 1").exact_div(&p("x + 1")).is_err());
        // divisible over Q only
        assert!(p("x").exact_div(&p("2")).is_err());
        assert_eq!(p("2*x").exact_div(&p("2")).unwrap(), p("x"));
    }

    #[test]
    fn gcd_basics() {
        let g = UniPoly::gcd(&p("x^2 - 1"), &p("x^2 + 2*x + 1"));
        assert_eq!(g, p("x + 1"));
        let g = UniPoly::gcd(&p("6*x"), &p("4"));
        assert_eq!(g, p("2"));
        // sign normalization
        let g = UniPoly::gcd(&p("-x - 1"), &p("-x^2 - x"));
        assert_eq!(g, p("x + 1"));
    }

    #[test]
    fn palindromes() {
        assert!(p("x^3 + 5*x^2 + 5*x + 1").is_palindromic());
        assert!(!p("x^2 + 2").is_palindromic());
        assert!(p("0").is_palindromic());
    }

    #[test]
    fn eval_horner() {
        assert_eq!(p("x^3 + 5*x^2 + 5*x + 1").eval(&BigInt::from(1)), BigInt::from(12));
        assert_eq!(p("x^2 - 3").eval(&BigInt::from(-2)), BigInt::from(1));
    }
}
