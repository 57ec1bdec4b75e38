//! Sparse bivariate polynomials over the integers in the variables `s`, `t`.
//!
//! Division-flavored operations view the ring as (Z[t])[s]. Exact division
//! runs pseudo-division and then scales the pseudo-quotient back, so that
//! "divisible over Q[s,t] only" is reported as a failure, exactly like
//! "not divisible at all". Gcd uses the primitive pseudo-remainder sequence
//! with content extraction in Z[t]; every gcd claim exercised here involves
//! polynomials monic in `s`, which keeps coefficient growth tame.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::{parse, var_power, write_terms, DivisionFailure, UniPoly};
use crate::error::{Error, Result};

/// Sparse bivariate polynomial: exponent pair `(s_deg, t_deg)` to nonzero
/// coefficient. The zero polynomial stores no terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        BiPoly::monomial(0, 0, c)
    }

    /// The monomial `c * s^i * t^j`.
    pub fn monomial(i: u32, j: u32, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn var_s() -> Self {
        BiPoly::monomial(1, 0, BigInt::one())
    }

    pub fn var_t() -> Self {
        BiPoly::monomial(0, 1, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(One::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Degree in `s`, or `None` for the zero polynomial.
    pub fn deg_s(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    /// Degree in `t`, or `None` for the zero polynomial.
    pub fn deg_t(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Terms in canonical order: total degree descending, then s-degree
    /// descending. This is the serialization order.
    pub fn canonical_terms(&self) -> Vec<(&(u32, u32), &BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0))
        });
        terms
    }

    /// Structured record form: `(s_deg, t_deg, coefficient)` triples in
    /// canonical order, coefficients as decimal strings.
    pub fn to_records(&self) -> Vec<(u32, u32, String)> {
        self.canonical_terms()
            .into_iter()
            .map(|(&(i, j), c)| (i, j, c.to_string()))
            .collect()
    }

    /// Coefficient of the leading term under the canonical order.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.canonical_terms().first().map(|&(_, c)| c)
    }

    fn insert_term(terms: &mut BTreeMap<(u32, u32), BigInt>, key: (u32, u32), delta: BigInt) {
        if delta.is_zero() {
            return;
        }
        let entry = terms.entry(key).or_insert_with(BigInt::zero);
        *entry += delta;
        if entry.is_zero() {
            terms.remove(&key);
        }
    }

    pub fn eval(&self, s0: &BigInt, t0: &BigInt) -> BigInt {
        let mut s_pows = vec![BigInt::one()];
        let mut t_pows = vec![BigInt::one()];
        let ds = self.deg_s().unwrap_or(0) as usize;
        let dt = self.deg_t().unwrap_or(0) as usize;
        for _ in 0..ds {
            let next = s_pows.last().expect("nonempty") * s0;
            s_pows.push(next);
        }
        for _ in 0..dt {
            let next = t_pows.last().expect("nonempty") * t0;
            t_pows.push(next);
        }
        let mut acc = BigInt::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * &s_pows[i as usize] * &t_pows[j as usize];
        }
        acc
    }

    /// Substitute `s -> fs(x)`, `t -> ft(x)` and expand exactly.
    pub fn substitute(&self, fs: &UniPoly, ft: &UniPoly) -> UniPoly {
        let mut fs_pows = vec![UniPoly::one()];
        let mut ft_pows = vec![UniPoly::one()];
        for _ in 0..self.deg_s().unwrap_or(0) {
            let next = fs_pows.last().expect("nonempty") * fs;
            fs_pows.push(next);
        }
        for _ in 0..self.deg_t().unwrap_or(0) {
            let next = ft_pows.last().expect("nonempty") * ft;
            ft_pows.push(next);
        }
        let mut acc = UniPoly::zero();
        for (&(i, j), c) in &self.terms {
            let product = &fs_pows[i as usize] * &ft_pows[j as usize];
            acc = &acc + &product.mul_scalar(c);
        }
        acc
    }

    /// Exchange the two variables.
    pub fn swap_vars(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> BiPoly {
        let mut base = self.clone();
        let mut acc = BiPoly::one();
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

    // ---- the (Z[t])[s] view ----

    /// Coefficients of `s^0, s^1, ...` as polynomials in `t`.
    pub fn coeffs_in_s(&self) -> Vec<UniPoly> {
        let ds = match self.deg_s() {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut raw: Vec<Vec<BigInt>> = vec![Vec::new(); ds + 1];
        for (&(i, j), c) in &self.terms {
            let row = &mut raw[i as usize];
            if row.len() <= j as usize {
                row.resize(j as usize + 1, BigInt::zero());
            }
            row[j as usize] = c.clone();
        }
        raw.into_iter().map(UniPoly::new).collect()
    }

    pub fn from_coeffs_in_s(coeffs: Vec<UniPoly>) -> BiPoly {
        let mut terms = BTreeMap::new();
        for (i, poly) in coeffs.into_iter().enumerate() {
            for (j, c) in poly.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    terms.insert((i as u32, j as u32), c.clone());
                }
            }
        }
        BiPoly { terms }
    }

    /// Leading coefficient as a polynomial in `s` (an element of Z[t]).
    pub fn leading_coeff_in_s(&self) -> UniPoly {
        self.coeffs_in_s().pop().unwrap_or_else(UniPoly::zero)
    }

    /// Monic as a polynomial in `s`: leading s-coefficient is the constant 1.
    pub fn is_monic_in_s(&self) -> bool {
        self.leading_coeff_in_s().is_one()
    }

    /// Pseudo-division in (Z[t])[s]: returns `(q, r, k)` with
    /// `lead^k * self = q * divisor + r` and `deg_s r < deg_s divisor`,
    /// where `lead` is the divisor's leading s-coefficient. Monic divisors
    /// (the common case throughout this crate) take a sparse path with
    /// `k = 0`.
    pub fn pseudo_div_rem(&self, divisor: &BiPoly) -> (BiPoly, BiPoly, u32) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if divisor.is_monic_in_s() {
            let (q, r) = self.div_rem_monic(divisor);
            return (q, r, 0);
        }
        let div_coeffs = divisor.coeffs_in_s();
        let dd = div_coeffs.len() - 1;
        let lead = div_coeffs.last().expect("nonzero").clone();
        let mut rem = self.coeffs_in_s();
        let mut quot: Vec<UniPoly> = Vec::new();
        let mut steps = 0u32;
        loop {
            while rem.last().is_some_and(UniPoly::is_zero) {
                rem.pop();
            }
            let dr = match rem.len().checked_sub(1) {
                Some(d) if d >= dd => d,
                _ => break,
            };
            let top = rem.pop().expect("nonzero leading coefficient");
            // quot = quot*lead + top * s^(dr-dd)
            for c in quot.iter_mut() {
                *c = &*c * &lead;
            }
            if quot.len() <= dr - dd {
                quot.resize(dr - dd + 1, UniPoly::zero());
            }
            quot[dr - dd] = &quot[dr - dd] + &top;
            // rem = rem*lead - top * s^(dr-dd) * divisor (leading term cancels)
            for c in rem.iter_mut() {
                *c = &*c * &lead;
            }
            for (k, dc) in div_coeffs.iter().enumerate().take(dd) {
                let delta = &top * dc;
                let slot = dr - dd + k;
                if rem.len() <= slot {
                    rem.resize(slot + 1, UniPoly::zero());
                }
                rem[slot] = &rem[slot] - &delta;
            }
            steps += 1;
        }
        (
            BiPoly::from_coeffs_in_s(quot),
            BiPoly::from_coeffs_in_s(rem),
            steps,
        )
    }

    /// Division by a divisor monic in `s`, working on the sparse terms: each
    /// round the whole leading s-degree group of the remainder cancels.
    fn div_rem_monic(&self, divisor: &BiPoly) -> (BiPoly, BiPoly) {
        let db = divisor.deg_s().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        loop {
            let dr = match rem.deg_s() {
                Some(d) if d >= db => d,
                _ => break,
            };
            // the s^dr slice of the remainder, shifted down to s^(dr-db)
            let mut top = BTreeMap::new();
            for (&(i, j), c) in rem.terms.range((dr, 0)..=(dr, u32::MAX)) {
                top.insert((i - db, j), c.clone());
            }
            let top = BiPoly { terms: top };
            rem = &rem - &(&top * divisor);
            quot = &quot + &top;
            debug_assert!(rem.deg_s().is_none_or(|d| d < dr));
        }
        (quot, rem)
    }

    /// Exact division in Z[s,t]. `DivisionFailure` when no exact quotient
    /// exists in Z[s,t] — in particular when one exists over the rationals
    /// only. Panics on a zero divisor.
    pub fn exact_div(&self, divisor: &BiPoly) -> std::result::Result<BiPoly, DivisionFailure> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(BiPoly::zero());
        }
        let (q, r, k) = self.pseudo_div_rem(divisor);
        if !r.is_zero() {
            return Err(DivisionFailure);
        }
        let lead = divisor.leading_coeff_in_s();
        if lead.is_one() || k == 0 {
            return Ok(q);
        }
        // scale back: the true quotient is q / lead^k, if that stays in Z[t]
        let scale = lead.pow(k);
        let mut coeffs = Vec::new();
        for c in q.coeffs_in_s() {
            if c.is_zero() {
                coeffs.push(c);
            } else {
                coeffs.push(c.exact_div(&scale)?);
            }
        }
        Ok(BiPoly::from_coeffs_in_s(coeffs))
    }

    /// True when `divisor` divides `self` exactly in Z[s,t].
    pub fn is_divisible_by(&self, divisor: &BiPoly) -> bool {
        self.exact_div(divisor).is_ok()
    }

    /// Remainder of division by a polynomial monic in `s`: the unique `r`
    /// with `self = q*m + r` and `deg_s r < deg_s m`.
    pub fn reduce_mod_monic_s(&self, modulus: &BiPoly) -> Result<BiPoly> {
        if !modulus.is_monic_in_s() {
            return Err(Error::input(format!(
                "modulus is not monic in s: {modulus}"
            )));
        }
        let (_, r, _) = self.pseudo_div_rem(modulus);
        Ok(r)
    }

    /// Content in Z[t]: the UniPoly gcd of all s-coefficients.
    fn content_in_t(&self) -> UniPoly {
        let mut g = UniPoly::zero();
        for c in self.coeffs_in_s() {
            g = UniPoly::gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_content_in_t(&self, content: &UniPoly) -> BiPoly {
        let coeffs = self
            .coeffs_in_s()
            .into_iter()
            .map(|c| {
                if c.is_zero() {
                    c
                } else {
                    c.exact_div(content).expect("content divides coefficients")
                }
            })
            .collect();
        BiPoly::from_coeffs_in_s(coeffs)
    }

    /// Negate if the leading coefficient under the canonical order is
    /// negative, making gcd results comparable.
    pub fn normalize_sign(&self) -> BiPoly {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Greatest common divisor in Z[s,t] via the primitive pseudo-remainder
    /// sequence over (Z[t])[s], with contents handled in Z[t]. Normalized so
    /// the leading coefficient under the canonical order is positive.
    pub fn gcd(a: &BiPoly, b: &BiPoly) -> Result<BiPoly> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::input("gcd(0, 0) is undefined"));
        }
        if a.is_zero() {
            return Ok(b.normalize_sign());
        }
        if b.is_zero() {
            return Ok(a.normalize_sign());
        }
        let content_a = a.content_in_t();
        let content_b = b.content_in_t();
        let content_gcd = UniPoly::gcd(&content_a, &content_b);
        let mut f = a.div_content_in_t(&content_a);
        let mut g = b.div_content_in_t(&content_b);
        if f.deg_s() < g.deg_s() {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            let (_, r, _) = f.pseudo_div_rem(&g);
            f = g;
            g = if r.is_zero() {
                BiPoly::zero()
            } else {
                let c = r.content_in_t();
                r.div_content_in_t(&c)
            };
        }
        let content_poly = BiPoly::from_coeffs_in_s(vec![content_gcd]);
        Ok((&f * &content_poly).normalize_sign())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut terms = self.terms.clone();
        for (&key, c) in &rhs.terms {
            BiPoly::insert_term(&mut terms, key, c.clone());
        }
        BiPoly { terms }
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut terms = self.terms.clone();
        for (&key, c) in &rhs.terms {
            BiPoly::insert_term(&mut terms, key, -c.clone());
        }
        BiPoly { terms }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut terms = BTreeMap::new();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                BiPoly::insert_term(&mut terms, (i1 + i2, j1 + j2), c1 * c2);
            }
        }
        BiPoly { terms }
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let canonical = self.canonical_terms();
        let terms = canonical.iter().map(|&(&(i, j), c)| {
            let monomial = [var_power('s', i), var_power('t', j)]
                .into_iter()
                .flatten()
                .collect::<Vec<_>>()
                .join("*");
            (c, monomial)
        });
        write_terms(f, terms)
    }
}

impl FromStr for BiPoly {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let raw = parse::parse_terms(input, &['s', 't'])?;
        let mut terms = BTreeMap::new();
        for term in raw {
            let mut i = 0;
            let mut j = 0;
            for (var, exp) in term.exponents {
                match var {
                    's' => i += exp,
                    't' => j += exp,
                    _ => unreachable!("parser only admits s and t"),
                }
            }
            BiPoly::insert_term(&mut terms, (i, j), term.coeff);
        }
        Ok(BiPoly { terms })
    }
}
