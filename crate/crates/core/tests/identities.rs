//! Cross-module identity sweeps: structural facts about the polynomial
//! families that the per-module unit tests only spot-check.

use num_traits::{One, Zero};

use lucas_core::arith::{factor, int_gcd, nu_p_integer, Integer, Rational};
use lucas_core::divdiff::{divided_difference, DividedDiffSeq};
use lucas_core::seqlab::{specialize_sequence, Family};
use lucas_core::{BiPoly, LucasCache};

#[test]
fn gcd_lattice_of_lucas_polynomials() {
    let cache = LucasCache::new();
    for m in 2..=20usize {
        for n in 2..=20usize {
            let g = BiPoly::gcd(&cache.lucas(m), &cache.lucas(n)).unwrap();
            let d = usize::try_from(int_gcd(&Integer::from(m), &Integer::from(n))).unwrap();
            assert_eq!(g, cache.lucas(d), "gcd(L_{m}, L_{n}) = L_{d}");
        }
    }
}

#[test]
fn lucas_monic_shape() {
    let cache = LucasCache::new();
    for n in 1..=60usize {
        let lucas = cache.lucas(n);
        assert_eq!(lucas.deg_s(), Some((n - 1) as u32), "deg_s L_{n}");
        assert!(lucas.is_monic_in_s(), "L_{n} monic in s");
        assert_eq!(lucas.deg_t(), Some(((n - 1) / 2) as u32), "deg_t L_{n}");
    }
}

#[test]
fn sharp_t_degree_formula_to_sixty() {
    let cache = LucasCache::new();
    for n in 1..=60usize {
        let sharp = cache.sharp(n).unwrap();
        let expected = ((n - 1) / 2) as i64
            - factor(&Integer::from(n))
                .unwrap()
                .distinct_primes()
                .map(|p| ((usize::try_from(p.clone()).unwrap() - 1) / 2) as i64)
                .sum::<i64>();
        assert_eq!(sharp.deg_t().map(i64::from).unwrap_or(0), expected, "n={n}");
    }
}

#[test]
fn specialization_coherence() {
    let cache = LucasCache::new();
    let one = Integer::one();
    let mut fib = (Integer::zero(), Integer::one());
    for n in 0..=40usize {
        let lucas = cache.lucas(n);
        // Fibonacci at (1,1)
        assert_eq!(lucas.eval(&one, &one), fib.0, "f_{n}");
        fib = (fib.1.clone(), fib.0 + &fib.1);
        // the identity sequence at (2,-1)
        assert_eq!(lucas.eval(&Integer::from(2), &Integer::from(-1)), Integer::from(n));
        // t = 0 leaves the pure power s^(n-1)
        if n >= 1 {
            assert_eq!(
                lucas.eval(&Integer::from(3), &Integer::zero()),
                Integer::from(3).pow((n - 1) as u32)
            );
        }
        // s = 0 kills even indices and leaves t^k at n = 2k+1
        let at_s0 = lucas.eval(&Integer::zero(), &Integer::from(5));
        if n % 2 == 0 {
            assert!(at_s0.is_zero(), "L_{n}(0,t)");
        } else {
            assert_eq!(at_s0, Integer::from(5).pow((n / 2) as u32), "L_{n}(0,t)");
        }
    }
}

#[test]
fn divided_difference_definition_sweep() {
    let cache = LucasCache::new();
    let seq = DividedDiffSeq::new(&cache);
    let s_minus_t = &BiPoly::var_s() - &BiPoly::var_t();
    for n in 0..=40usize {
        let s_n = seq.s_n(n).unwrap();
        let lucas = cache.lucas(n);
        assert_eq!(
            &s_minus_t * &s_n,
            &lucas - &lucas.swap_vars(),
            "(s-t) S_{n} = L_{n}(s,t) - L_{n}(t,s)"
        );
        assert_eq!(divided_difference(&lucas), s_n);
    }
}

#[test]
fn flat_factorial_valuation_two_routes() {
    // cumulative sum of per-term valuations vs one valuation of the product
    for (s0, t0, p) in [(2i64, -1i64, 3i64), (2, 1, 2), (3, 1, 2)] {
        let seq =
            specialize_sequence(Family::Flat, &Integer::from(s0), &Integer::from(t0), 40).unwrap();
        let prime = Integer::from(p);
        let mut cumulative = 0u64;
        let mut product = Integer::one();
        for n in 1..=40usize {
            let value = seq.value(n).unwrap();
            cumulative += nu_p_integer(value, &prime).unwrap();
            product *= value;
            assert_eq!(
                cumulative,
                nu_p_integer(&product, &prime).unwrap(),
                "(s,t,p)=({s0},{t0},{p}) n={n}"
            );
        }
    }
}

#[test]
fn flat_lucanomial_prime_multiplicity_is_at_most_one() {
    // the multiplicity of L_p in a flat lucanomial is the floor-sum
    // floor(n/p) - floor(k/p) - floor((n-k)/p), which is always 0 or 1
    let cache = LucasCache::new();
    for p in [2usize, 3, 5, 7] {
        let lucas_p = cache.lucas(p);
        for n in 1..=16usize {
            for k in 0..=n {
                let expected = (n / p - k / p - (n - k) / p) as u32;
                assert!(expected <= 1, "floor-sum out of range");
                let mut multiplicity = 0;
                let mut rest = cache.flat_lucanomial(n, k).unwrap();
                while let Ok(quotient) = rest.exact_div(&lucas_p) {
                    multiplicity += 1;
                    rest = quotient;
                }
                assert_eq!(multiplicity, expected, "p={p} n={n} k={k}");
            }
        }
    }
}

#[test]
fn lucanomial_clears_to_factorials() {
    let cache = LucasCache::new();
    for (n, k) in [(4usize, 2usize), (6, 3), (8, 4), (9, 2), (12, 5)] {
        let lucanomial = cache.lucanomial(n, k).unwrap().value;
        let cleared = &(&lucanomial * &cache.lucas_factorial(k)) * &cache.lucas_factorial(n - k);
        assert_eq!(cleared, cache.lucas_factorial(n), "n={n} k={k}");
    }
}

#[test]
fn rational_arithmetic_is_exact() {
    // (a/b + c/d) - c/d = a/b over a deterministic grid
    for a in -6i64..=6 {
        for b in 1i64..=5 {
            for c in -4i64..=4 {
                for d in 1i64..=4 {
                    let x = Rational::new(Integer::from(a), Integer::from(b));
                    let y = Rational::new(Integer::from(c), Integer::from(d));
                    assert_eq!(&(&x + &y) - &y, x);
                }
            }
        }
    }
}
