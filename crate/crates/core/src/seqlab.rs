//! Integer specializations of the polynomial families: residue periods,
//! valuation profiles, the Pell checks, and the empirical theta scan.
//!
//! A [`SpecSeq`] fixes integers `(s0, t0)` and materializes one family —
//! Lucas, circular, flat, sharp, or the Delannoy specialization — as exact
//! integers via the defining recurrence, never through floating point.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer as IntegerOps;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{factor, is_prime, nu_p_integer, Integer};
use crate::error::{Error, Result};

/// Which specialized sequence to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `L_n(s0, t0)`.
    Lucas,
    /// `K_n(s0, t0)`.
    Circular,
    /// Product of `L_p(s0, t0)` over distinct primes `p | n`; starts at n=1.
    Flat,
    /// `L_n(s0, t0)` divided by the flat value; starts at n=1.
    Sharp,
    /// `D_n(x)` at `x = s0` (the Lucas recurrence with coefficients
    /// `(x+1, x)`); `t0` is ignored.
    DelannoyAtX,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Lucas => "lucas",
            Family::Circular => "circular",
            Family::Flat => "flat",
            Family::Sharp => "sharp",
            Family::DelannoyAtX => "delannoy-at-x",
        }
    }

    /// Families generated by a two-term recurrence on consecutive values.
    pub fn is_recurrent(&self) -> bool {
        !matches!(self, Family::Flat | Family::Sharp)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match text {
            "lucas" => Ok(Family::Lucas),
            "circular" => Ok(Family::Circular),
            "flat" => Ok(Family::Flat),
            "sharp" => Ok(Family::Sharp),
            "delannoy-at-x" => Ok(Family::DelannoyAtX),
            other => Err(Error::input(format!("unknown sequence family {other:?}"))),
        }
    }
}

/// A specialized integer sequence `x_first, ..., x_max`.
#[derive(Debug, Clone)]
pub struct SpecSeq {
    pub family: Family,
    pub s0: Integer,
    pub t0: Integer,
    first: usize,
    values: Vec<Integer>,
}

impl SpecSeq {
    /// Index of the first defined entry (1 for flat/sharp, 0 otherwise).
    pub fn first_index(&self) -> usize {
        self.first
    }

    pub fn max_index(&self) -> usize {
        self.first + self.values.len() - 1
    }

    pub fn value(&self, n: usize) -> Result<&Integer> {
        if n < self.first || n > self.max_index() {
            return Err(Error::input(format!(
                "index {n} outside computed range {}..={}",
                self.first,
                self.max_index()
            )));
        }
        Ok(&self.values[n - self.first])
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Integer)> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, v)| (i + self.first, v))
    }
}

/// Builds the specialized sequence by the defining integer recurrence;
/// flat/sharp are assembled from the Lucas values and prime factorizations.
pub fn specialize_sequence(
    family: Family,
    s0: &Integer,
    t0: &Integer,
    max_n: usize,
) -> Result<SpecSeq> {
    let values = match family {
        Family::Lucas => recurrence_values(&Integer::zero(), &Integer::one(), s0, t0, max_n),
        Family::Circular => recurrence_values(&Integer::from(2), s0, s0, t0, max_n),
        Family::DelannoyAtX => recurrence_values(
            &Integer::zero(),
            &Integer::one(),
            &(s0 + Integer::one()),
            s0,
            max_n,
        ),
        Family::Flat => flat_values(s0, t0, max_n)?,
        Family::Sharp => {
            let lucas = recurrence_values(&Integer::zero(), &Integer::one(), s0, t0, max_n);
            let flat = flat_values(s0, t0, max_n)?;
            let mut sharp = Vec::with_capacity(flat.len());
            for (i, f) in flat.iter().enumerate() {
                let n = i + 1;
                if f.is_zero() {
                    return Err(Error::input(format!(
                        "sharp sequence undefined at n={n}: flat value is zero"
                    )));
                }
                let (q, r) = lucas[n].div_rem(f);
                if !r.is_zero() {
                    return Err(Error::theorem(
                        "flat values divide the specialized Lucas values",
                        format!("  n = {n}\n  L_n = {}\n  flat = {f}", lucas[n]),
                    ));
                }
                sharp.push(q);
            }
            sharp
        }
    };
    let first = match family {
        Family::Flat | Family::Sharp => 1,
        _ => 0,
    };
    Ok(SpecSeq {
        family,
        s0: s0.clone(),
        t0: t0.clone(),
        first,
        values,
    })
}

fn recurrence_values(
    x0: &Integer,
    x1: &Integer,
    a: &Integer,
    b: &Integer,
    max_n: usize,
) -> Vec<Integer> {
    let mut values = vec![x0.clone(), x1.clone()];
    values.truncate(max_n + 1);
    for n in values.len()..=max_n {
        let next = a * &values[n - 1] + b * &values[n - 2];
        values.push(next);
    }
    values
}

/// `ev(flat_n)` for `n = 1..=max_n`.
fn flat_values(s0: &Integer, t0: &Integer, max_n: usize) -> Result<Vec<Integer>> {
    let lucas = recurrence_values(&Integer::zero(), &Integer::one(), s0, t0, max_n);
    let mut out = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let mut value = Integer::one();
        for p in factor(&Integer::from(n))?.distinct_primes() {
            let p = p.to_usize().expect("prime index fits usize");
            value *= &lucas[p];
        }
        out.push(value);
    }
    Ok(out)
}

/// Eventual period of a specialized sequence modulo `m`, detected through
/// the pair state `(x_n mod m, x_{n+1} mod m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodReport {
    pub modulus: u64,
    pub preperiod: usize,
    pub period: usize,
    pub cycle: Vec<u64>,
}

impl fmt::Display for PeriodReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycle = self
            .cycle
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",");
        write!(
            f,
            "preperiod={} period={} cycle={}",
            self.preperiod, self.period, cycle
        )
    }
}

/// Exhaustive pair-state cycle detection: at most `m^2` states exist, so the
/// first repeated pair pins both the preperiod and the exact period. Only
/// recurrence-driven families are admitted — flat/sharp values are not a
/// function of the previous pair.
pub fn detect_period(family: Family, s0: &Integer, t0: &Integer, modulus: u64) -> Result<PeriodReport> {
    if modulus < 2 {
        return Err(Error::input("period detection requires modulus >= 2"));
    }
    if !family.is_recurrent() {
        return Err(Error::input(format!(
            "period detection needs a recurrent family, not {}",
            family.as_str()
        )));
    }
    let m = Integer::from(modulus);
    let reduce = |v: &Integer| -> u64 {
        v.mod_floor(&m).to_u64().expect("residue fits u64")
    };
    let (mut x, mut y, a, b) = match family {
        Family::Lucas => (0u64, 1 % modulus, reduce(s0), reduce(t0)),
        Family::Circular => (2 % modulus, reduce(s0), reduce(s0), reduce(t0)),
        Family::DelannoyAtX => (
            0,
            1 % modulus,
            reduce(&(s0 + Integer::one())),
            reduce(s0),
        ),
        Family::Flat | Family::Sharp => unreachable!("rejected above"),
    };
    let mut residues = vec![x];
    let mut seen: HashMap<(u64, u64), usize> = HashMap::new();
    let mut index = 0usize;
    loop {
        if let Some(&start) = seen.get(&(x, y)) {
            let period = index - start;
            let cycle = residues[start..start + period].to_vec();
            return Ok(PeriodReport {
                modulus,
                preperiod: start,
                period,
                cycle,
            });
        }
        seen.insert((x, y), index);
        let next = (a * y + b * x) % modulus;
        x = y;
        y = next;
        residues.push(x);
        index += 1;
    }
}

/// Checks the closed form for the 3-adic valuation of the Pell numbers:
/// `nu_3(P_n) = nu_3(3k)` when `n = 4k`, and 0 otherwise, for all
/// `1 <= n <= max_n`.
pub fn pell_valuation_check(max_n: usize) -> Result<bool> {
    let seq = specialize_sequence(Family::Lucas, &Integer::from(2), &Integer::one(), max_n)?;
    let three = Integer::from(3);
    for n in 1..=max_n {
        let actual = nu_p_integer(seq.value(n)?, &three)?;
        let expected = if n % 4 == 0 {
            1 + nu_p_integer(&Integer::from(n / 4), &three)?
        } else {
            0
        };
        if actual != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The addition identity specialized at `(s0, t0)`:
/// `x_{m+n} = x_m x_{n+1} + t0 x_{m-1} x_n`, for a Lucas-family sequence.
pub fn addition_identity_at(seq: &SpecSeq, m: usize, n: usize) -> Result<bool> {
    if m < 1 {
        return Err(Error::input("addition identity requires m >= 1"));
    }
    let lhs = seq.value(m + n)?;
    let rhs = seq.value(m)? * seq.value(n + 1)? + &seq.t0 * seq.value(m - 1)? * seq.value(n)?;
    Ok(*lhs == rhs)
}

/// Verifies `P_{m+n} = P_m P_{n+1} + P_{m-1} P_n` for all
/// `1 <= m <= max_m`, `0 <= n <= max_n`.
pub fn pell_addition_check(max_m: usize, max_n: usize) -> Result<bool> {
    let seq = specialize_sequence(
        Family::Lucas,
        &Integer::from(2),
        &Integer::one(),
        max_m + max_n + 1,
    )?;
    for m in 1..=max_m {
        for n in 0..=max_n {
            if !addition_identity_at(&seq, m, n)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For `n = 4k`, `k <= k_max`: `nu_3(P_{n^2}) = 1 + 2 nu_3(k)` stays below
/// `nu_3(P_n^2) = 2 + 2 nu_3(k)`, and `P_n^2` does not divide `P_{n^2}` by
/// direct big-integer division.
pub fn motivating_corollary_check(k_max: usize) -> Result<bool> {
    if k_max < 1 {
        return Err(Error::input("corollary check requires k_max >= 1"));
    }
    let top = (4 * k_max) * (4 * k_max);
    let seq = specialize_sequence(Family::Lucas, &Integer::from(2), &Integer::one(), top)?;
    let three = Integer::from(3);
    for k in 1..=k_max {
        let n = 4 * k;
        let nu_k = nu_p_integer(&Integer::from(k), &three)?;
        let big = seq.value(n * n)?;
        if nu_p_integer(big, &three)? != 1 + 2 * nu_k {
            return Ok(false);
        }
        let small = seq.value(n)?;
        if nu_p_integer(&(small * small), &three)? != 2 + 2 * nu_k {
            return Ok(false);
        }
        // the divisibility itself, not just the valuation bound
        if big.mod_floor(&(small * small)).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verdict of a theta scan over the cumulative valuation profile
/// `V(n) = sum_{k<=n} nu_p(ev(flat_k))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThetaVerdict {
    /// Exactly one theta satisfies `V(n) = floor(n/theta)` for all scanned n.
    Consistent { theta: usize },
    /// No single theta fits; the best candidate and its first violation are
    /// reported, or the profile was all zeros (every theta > N fits).
    Inconsistent { detail: String },
    /// Some flat value vanished, so its valuation is undefined.
    Undefined { first_zero: usize },
}

#[derive(Debug, Clone)]
pub struct ThetaReport {
    pub s0: Integer,
    pub t0: Integer,
    pub prime: Integer,
    pub scan_bound: usize,
    pub verdict: ThetaVerdict,
}

impl fmt::Display for ThetaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "s={} t={} p={} max-n={} ",
            self.s0, self.t0, self.prime, self.scan_bound
        )?;
        match &self.verdict {
            ThetaVerdict::Consistent { theta } => write!(f, "verdict=consistent theta={theta}"),
            ThetaVerdict::Inconsistent { detail } => {
                write!(f, "verdict=inconsistent detail={detail}")
            }
            ThetaVerdict::Undefined { first_zero } => {
                write!(f, "verdict=undefined first-zero-index={first_zero}")
            }
        }
    }
}

/// Scans `V(n) = nu_p(ev(flat_n)!)` for `n <= max_n` and reports the unique
/// `theta` with `V(n) = floor(n/theta)` everywhere, if there is one.
///
/// The first index where V reaches 1 pins the only possible theta, so
/// uniqueness fails only when V is identically zero; that case is reported
/// as inconsistent with an explanatory detail rather than a guessed theta.
pub fn theta_search(
    s0: &Integer,
    t0: &Integer,
    p: &Integer,
    max_n: usize,
) -> Result<ThetaReport> {
    if !is_prime(p)? {
        return Err(Error::input(format!("theta scan requires a prime, got {p}")));
    }
    let p_usize = p.to_usize().unwrap_or(usize::MAX);
    if max_n < p_usize {
        return Err(Error::input(format!(
            "theta scan requires max_n >= p, got max_n={max_n} p={p}"
        )));
    }
    let report = |verdict| ThetaReport {
        s0: s0.clone(),
        t0: t0.clone(),
        prime: p.clone(),
        scan_bound: max_n,
        verdict,
    };
    let flat = specialize_sequence(Family::Flat, s0, t0, max_n)?;
    let mut cumulative = vec![0u64; max_n + 1];
    for n in 1..=max_n {
        let value = flat.value(n)?;
        if value.is_zero() {
            return Ok(report(ThetaVerdict::Undefined { first_zero: n }));
        }
        cumulative[n] = cumulative[n - 1] + nu_p_integer(value, p)?;
    }
    if cumulative[max_n] == 0 {
        return Ok(report(ThetaVerdict::Inconsistent {
            detail: format!("no p-divisibility up to {max_n}; every theta > {max_n} fits"),
        }));
    }
    let theta = (1..=max_n)
        .find(|&n| cumulative[n] >= 1)
        .expect("profile is not identically zero");
    for (n, &cumulative_n) in cumulative.iter().enumerate().skip(1) {
        if cumulative_n != (n / theta) as u64 {
            return Ok(report(ThetaVerdict::Inconsistent {
                detail: format!(
                    "best candidate theta={theta} fails first at n={n}: V={cumulative_n} vs floor={}",
                    n / theta
                ),
            }));
        }
    }
    Ok(report(ThetaVerdict::Consistent { theta }))
}
