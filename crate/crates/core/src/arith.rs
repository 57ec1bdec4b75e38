//! Exact integer and rational arithmetic: factorization, primality, and
//! p-adic valuations.
//!
//! Scalars are arbitrary-precision ([`Integer`], [`Rational`]); every
//! operation here is exact and pure. Factorization is deterministic trial
//! division with a 2/3 wheel, primality is deterministic Miller–Rabin with a
//! fixed witness set, and valuations are defined only on nonzero inputs.

use num_bigint::BigInt;
use num_integer::Integer as IntegerOps;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Arbitrary-precision rational, kept reduced with positive denominator.
pub type Rational = BigRational;

/// Largest input accepted by [`is_prime`]: the deterministic Miller–Rabin
/// witness set {2,3,5,7,11,13,17} is proven correct below 3.3e14.
const MILLER_RABIN_BOUND: u64 = 330_000_000_000_000;

const MILLER_RABIN_WITNESSES: [u32; 7] = [2, 3, 5, 7, 11, 13, 17];

/// Prime factorization of a positive integer as strictly increasing
/// (prime, exponent) pairs. `factor(1)` has an empty factor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(Integer, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(Integer, u32)] {
        &self.factors
    }

    /// The distinct primes, in increasing order.
    pub fn distinct_primes(&self) -> impl Iterator<Item = &Integer> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn num_distinct_primes(&self) -> usize {
        self.factors.len()
    }

    /// Expands the factorization back into the factored integer.
    pub fn value(&self) -> Integer {
        let mut acc = Integer::one();
        for (p, e) in &self.factors {
            acc *= p.pow(*e);
        }
        acc
    }
}

/// Deterministic primality test for `0 <= n < 3.3e14`.
///
/// Rejects inputs at or beyond the bound instead of degrading to a
/// probabilistic answer.
pub fn is_prime(n: &Integer) -> Result<bool> {
    if n.is_negative() {
        return Ok(false);
    }
    let n64 = u64::try_from(n.magnitude().clone())
        .ok()
        .filter(|&v| v < MILLER_RABIN_BOUND)
        .ok_or_else(|| {
            Error::input(format!(
                "primality check supports n < {MILLER_RABIN_BOUND} only, got {n}"
            ))
        })?;
    Ok(is_prime_u64(n64))
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &w in &MILLER_RABIN_WITNESSES {
        let w = u64::from(w);
        if n == w {
            return true;
        }
        if n.is_multiple_of(w) {
            return false;
        }
    }
    // n - 1 = d * 2^s with d odd
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &w in &MILLER_RABIN_WITNESSES {
        let mut x = mod_pow_u64(u64::from(w), d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mod_mul_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mod_mul_u64(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

fn mod_pow_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul_u64(acc, base, m);
        }
        base = mod_mul_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Factors `n >= 1` by trial division with a 2/3 wheel (candidates 2, 3,
/// then 6k±1 up to √n). Inputs are capped at 64-bit magnitude; everything in
/// scope is far smaller.
pub fn factor(n: &Integer) -> Result<Factorization> {
    if !n.is_positive() {
        return Err(Error::input(format!("factor requires n >= 1, got {n}")));
    }
    let mut rest = u64::try_from(n.magnitude().clone())
        .map_err(|_| Error::input(format!("factor supports 64-bit magnitudes only, got {n}")))?;
    let mut factors: Vec<(Integer, u32)> = Vec::new();
    let mut push = |p: u64, e: u32| {
        if e > 0 {
            factors.push((Integer::from(p), e));
        }
    };
    for p in [2u64, 3] {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        push(p, e);
    }
    let mut candidate = 5u64;
    let mut step = 2u64; // alternates 2, 4 to hit 6k-1 and 6k+1
    while candidate.saturating_mul(candidate) <= rest {
        let mut e = 0;
        while rest % candidate == 0 {
            rest /= candidate;
            e += 1;
        }
        push(candidate, e);
        candidate += step;
        step = 6 - step;
    }
    if rest > 1 {
        push(rest, 1);
    }
    let result = Factorization { factors };
    debug_assert_eq!(result.value(), *n);
    debug_assert!(result
        .factors
        .iter()
        .all(|(p, _)| is_prime(p).unwrap_or(false)));
    Ok(result)
}

/// Nonnegative gcd; `int_gcd(0, 0) = 0`.
pub fn int_gcd(a: &Integer, b: &Integer) -> Integer {
    a.gcd(b)
}

/// Valuation of a nonzero integer: the exponent of `p` in `n`.
pub fn nu_p_integer(n: &Integer, p: &Integer) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::input("p-adic valuation of zero is undefined"));
    }
    if !is_prime(p)? {
        return Err(Error::input(format!("{p} is not prime")));
    }
    let mut v = 0u64;
    let mut rest = n.abs();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return Ok(v);
        }
        v += 1;
        rest = q;
    }
}

/// p-adic valuation of a nonzero rational; negative when `p` divides the
/// denominator. `q * p^(-nu_p(q))` has numerator and denominator coprime
/// to `p`.
pub fn nu_p(q: &Rational, p: &Integer) -> Result<i64> {
    if q.is_zero() {
        return Err(Error::input("p-adic valuation of zero is undefined"));
    }
    let num = nu_p_integer(q.numer(), p)? as i64;
    let den = nu_p_integer(q.denom(), p)? as i64;
    Ok(num - den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Integer {
        Integer::from(n)
    }

    #[test]
    fn factor_small() {
        let f = factor(&int(12)).unwrap();
        assert_eq!(f.factors(), &[(int(2), 2), (int(3), 1)]);
        assert_eq!(f.value(), int(12));
    }

    #[test]
    fn factor_one_is_empty() {
        assert!(factor(&int(1)).unwrap().factors().is_empty());
    }

    #[test]
    fn factor_prime() {
        // trial-division oracle: 97 has no divisor in 2..=9
        assert!((2..=9).all(|d| 97 % d != 0));
        let f = factor(&int(97)).unwrap();
        assert_eq!(f.factors(), &[(int(97), 1)]);
    }

    #[test]
    fn factor_rejects_nonpositive() {
        assert!(factor(&int(0)).is_err());
        assert!(factor(&int(-4)).is_err());
    }

    #[test]
    fn factor_round_trips() {
        for n in (1..=1000).chain([999_983, 1_000_000, 654_321]) {
            assert_eq!(factor(&int(n)).unwrap().value(), int(n));
        }
    }

    #[test]
    fn primality_matches_trial_division() {
        for n in 0..2000i64 {
            let naive = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime(&int(n)).unwrap(), naive, "n={n}");
        }
    }

    #[test]
    fn primality_rejects_out_of_range() {
        let huge = Integer::from(MILLER_RABIN_BOUND) * 10;
        assert!(is_prime(&huge).is_err());
    }

    #[test]
    fn valuation_examples() {
        // 12 = 3 * 4
        let q = Rational::from_integer(int(12));
        assert_eq!(nu_p(&q, &int(3)).unwrap(), 1);
        // 5/9
        let q = Rational::new(int(5), int(9));
        assert_eq!(nu_p(&q, &int(3)).unwrap(), -2);
        // P_8 = 408 = 2^3 * 3 * 17, so nu_3 = 1 (= nu_3(3k) at k=2)
        let q = Rational::from_integer(int(408));
        assert_eq!(nu_p(&q, &int(3)).unwrap(), 1);
    }

    #[test]
    fn valuation_rejects_zero_and_composite_p() {
        assert!(nu_p(&Rational::zero(), &int(3)).is_err());
        assert!(nu_p(&Rational::one(), &int(6)).is_err());
    }

    #[test]
    fn valuation_is_additive() {
        let p = int(7);
        let a = Rational::new(int(49 * 5), int(3));
        let b = Rational::new(int(2), int(7 * 7 * 7));
        let lhs = nu_p(&(a.clone() * b.clone()), &p).unwrap();
        assert_eq!(lhs, nu_p(&a, &p).unwrap() + nu_p(&b, &p).unwrap());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(int_gcd(&int(12), &int(18)), int(6));
        assert_eq!(int_gcd(&int(0), &int(7)), int(7));
        assert_eq!(int_gcd(&int(0), &int(0)), int(0));
        // gcd(f_9, f_6) = gcd(34, 8) = 2 = f_3
        assert_eq!(int_gcd(&int(34), &int(8)), int(2));
    }
}
