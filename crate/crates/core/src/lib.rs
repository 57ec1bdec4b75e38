//! Exact calculus of Lucas polynomials.
//!
//! The bivariate Lucas polynomials `L_n(s,t)` (and their circular companions
//! `K_n`) specialize to Fibonacci, Pell, the natural numbers, and q-integers.
//! This crate computes them exactly, together with the structures built on
//! top of them:
//!
//! - lucanomial coefficients and their flat/sharp factorizations,
//! - divisibility and multiplicity-freeness checks,
//! - Catalanomials,
//! - Delannoy numbers, Delannoy polynomials, and delannomials,
//! - divided differences and modified Lucas polynomials,
//! - integer specializations, residue periods, p-adic valuation profiles,
//!
//! plus brute-force tiling / lattice-path / box-partition oracles that
//! recompute the same polynomials by exhaustive enumeration, independently of
//! every recurrence.
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals);
//! there is no floating point anywhere.

pub mod arith;
pub mod combinat;
pub mod delannoy;
pub mod divdiff;
mod error;
pub mod lucas;
pub mod poly;
pub mod seqlab;

pub use arith::{factor, int_gcd, is_prime, nu_p, nu_p_integer, Factorization, Integer, Rational};
pub use error::{Error, Result};
pub use lucas::LucasCache;
pub use poly::{BiPoly, DivisionFailure, UniPoly};
