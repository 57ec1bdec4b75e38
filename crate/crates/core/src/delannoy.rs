//! Delannoy numbers, Delannoy polynomials, delannomials, and the
//! symmetry/unimodality verdicts.
//!
//! `D(a,b)` counts east/north/diagonal lattice paths and satisfies
//! `D(a,b) = D(a-1,b) + D(a,b-1) + D(a-1,b-1)` with ones on the axes.
//! The Delannoy polynomial `D_n(x)` is the Lucas polynomial specialized at
//! `s = x+1`, `t = x`; its coefficients are Delannoy numbers and read the
//! same in both directions.

use std::sync::Mutex;

use num_traits::One;

use crate::arith::Integer;
use crate::error::{Error, Result};
use crate::poly::UniPoly;

/// Memoized table of Delannoy numbers. Extension is synchronized; lookups
/// return owned values.
pub struct DelannoyTable {
    rows: Mutex<Vec<Vec<Integer>>>,
}

impl Default for DelannoyTable {
    fn default() -> Self {
        Self::new()
    }
}

impl DelannoyTable {
    pub fn new() -> Self {
        DelannoyTable {
            rows: Mutex::new(vec![vec![Integer::one()]]),
        }
    }

    /// The Delannoy number `D(a, b)`.
    pub fn number(&self, a: usize, b: usize) -> Integer {
        let mut rows = self.rows.lock().unwrap();
        let rows_needed = (a + 1).max(rows.len());
        let cols_needed = (b + 1).max(rows[0].len());
        if rows.len() < rows_needed || rows[0].len() < cols_needed {
            // rebuild outright; the table stays desk-scale
            let mut table = vec![vec![Integer::one(); cols_needed]; rows_needed];
            for i in 1..rows_needed {
                for j in 1..cols_needed {
                    let value = &table[i - 1][j] + &table[i][j - 1] + &table[i - 1][j - 1];
                    table[i][j] = value;
                }
            }
            *rows = table;
        }
        rows[a][b].clone()
    }
}

/// The Delannoy polynomial `D_n(x)`: `D_0 = 0`, `D_1 = 1`,
/// `D_n = (x+1) D_{n-1} + x D_{n-2}`.
pub fn delannoy_poly(n: usize) -> UniPoly {
    let x = UniPoly::x();
    let x_plus_one = &x + &UniPoly::one();
    let mut prev = UniPoly::zero();
    let mut cur = UniPoly::one();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&x_plus_one * &cur) + &(&x * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// The delannomial `{D_n choose D_k}`: the product `D_n ... D_{n-k+1}`
/// divided exactly by `D_k ... D_1`. Polynomiality is a theorem; a division
/// failure aborts with a counterexample dump.
pub fn delannomial(n: usize, k: usize) -> Result<UniPoly> {
    if k > n {
        return Err(Error::input(format!(
            "delannomial requires 0 <= k <= n, got n={n} k={k}"
        )));
    }
    let mut numerator = UniPoly::one();
    for j in (n - k + 1)..=n {
        numerator = &numerator * &delannoy_poly(j);
    }
    let mut denominator = UniPoly::one();
    for j in 1..=k {
        denominator = &denominator * &delannoy_poly(j);
    }
    numerator.exact_div(&denominator).map_err(|_| {
        Error::theorem(
            "delannomials are polynomials",
            format!("  n = {n}\n  k = {k}\n  numerator = {numerator}\n  denominator = {denominator}"),
        )
    })
}

/// The delannomial computed by the binomial-style recurrence
/// `{D_n choose D_k} = D_{n-k+1} {D_{n-1} choose D_{k-1}}
///                    + x D_{k-1} {D_{n-1} choose D_k}`.
/// Used as a cross-check of [`delannomial`], never as its definition.
pub fn delannomial_by_recurrence(n: usize, k: usize) -> Result<UniPoly> {
    if k > n {
        return Err(Error::input(format!(
            "delannomial requires 0 <= k <= n, got n={n} k={k}"
        )));
    }
    let x = UniPoly::x();
    let mut previous = vec![UniPoly::one()];
    for row in 1..=n {
        let mut current = Vec::with_capacity(row + 1);
        for col in 0..=row.min(k) {
            if col == 0 || col == row {
                current.push(UniPoly::one());
                continue;
            }
            let first = &delannoy_poly(row - col + 1) * &previous[col - 1];
            let second = &(&x * &delannoy_poly(col - 1)) * &previous[col];
            current.push(&first + &second);
        }
        previous = current;
    }
    Ok(previous[k].clone())
}

/// Symmetry and unimodality verdicts for a nonzero polynomial, with its
/// central monomial `(degree, coefficient)`: index `(r+1)/2` for odd degree
/// `r`, index `r/2` for even `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    pub polynomial: UniPoly,
    pub is_symmetric: bool,
    pub is_unimodal: bool,
    pub central_monomial: (usize, Integer),
}

/// Inspects the coefficient list of `p`. Unimodality is weak (plateaus
/// allowed): the coefficients must rise to a peak and then fall.
pub fn symmetry_unimodality(p: &UniPoly) -> Result<SymmetryReport> {
    if p.is_zero() {
        return Err(Error::input(
            "symmetry report undefined for the zero polynomial",
        ));
    }
    let degree = p.degree().expect("nonzero");
    let coeffs = p.coeffs();
    let is_symmetric = p.is_palindromic();
    let mut is_unimodal = true;
    let mut falling = false;
    for w in coeffs.windows(2) {
        if w[1] < w[0] {
            falling = true;
        } else if w[1] > w[0] && falling {
            is_unimodal = false;
            break;
        }
    }
    // odd degree takes the upper of the two central indices; for even
    // degree this is the exact middle
    let central_index = degree.div_ceil(2);
    Ok(SymmetryReport {
        polynomial: p.clone(),
        is_symmetric,
        is_unimodal,
        central_monomial: (central_index, p.coeff(central_index)),
    })
}
