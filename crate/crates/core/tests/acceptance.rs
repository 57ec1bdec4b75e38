//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with its wall time and asserting the stated time limit. All comparisons
//! are exact (polynomial equality, big-integer equality, rational
//! comparison); there are no floating-point tolerances anywhere.

use std::time::{Duration, Instant};

use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lucas_core::arith::{factor, Integer, Rational};
use lucas_core::combinat::{
    circular_tilings_weight, delannoy_paths_count, linear_tilings_weight, lucanomial_tiling_sum,
    Budget,
};
use lucas_core::delannoy::{delannomial, delannoy_poly, symmetry_unimodality, DelannoyTable};
use lucas_core::divdiff::{
    second_order_fib_check, series_partial_sum, series_target, DividedDiffSeq, ModifiedLucasSeq,
};
use lucas_core::seqlab::{
    detect_period, motivating_corollary_check, pell_addition_check, pell_valuation_check,
    specialize_sequence, theta_search, Family, ThetaVerdict,
};
use lucas_core::{BiPoly, LucasCache, UniPoly};

fn finish(label: &str, started: Instant, limit: Duration) {
    let elapsed = started.elapsed();
    println!("criterion {label}: PASS ({elapsed:.2?})");
    assert!(
        elapsed < limit,
        "criterion {label} took {elapsed:?}, limit {limit:?}"
    );
}

#[test]
fn criterion_01_table_golden_serialization() {
    let started = Instant::now();
    let cache = LucasCache::new();
    let lucas_expected = [
        "0",
        "1",
        "s",
        "s^2 + t",
        "s^3 + 2*s*t",
        "s^4 + 3*s^2*t + t^2",
        "s^5 + 4*s^3*t + 3*s*t^2",
    ];
    let circular_expected = [
        "2",
        "s",
        "s^2 + 2*t",
        "s^3 + 3*s*t",
        "s^4 + 4*s^2*t + 2*t^2",
        "s^5 + 5*s^3*t + 5*s*t^2",
        "s^6 + 6*s^4*t + 9*s^2*t^2 + 2*t^3",
    ];
    for (n, expected) in lucas_expected.iter().enumerate() {
        assert_eq!(cache.lucas(n).to_string(), *expected, "L_{n}");
        // bit-exact round trip
        assert_eq!(expected.parse::<BiPoly>().unwrap(), cache.lucas(n));
    }
    for (n, expected) in circular_expected.iter().enumerate() {
        assert_eq!(cache.circular(n).to_string(), *expected, "K_{n}");
        assert_eq!(expected.parse::<BiPoly>().unwrap(), cache.circular(n));
    }
    finish("01 (table golden serialization)", started, Duration::from_secs(1));
}

#[test]
fn criterion_02_tiling_oracle_equivalence() {
    let started = Instant::now();
    let cache = LucasCache::new();
    let mut budget = Budget::default();
    for n in 1..=17 {
        assert_eq!(
            linear_tilings_weight(n - 1, &mut budget).unwrap(),
            cache.lucas(n),
            "linear tilings vs L_{n}"
        );
    }
    for n in 1..=16 {
        assert_eq!(
            circular_tilings_weight(n, &mut budget).unwrap(),
            cache.circular(n),
            "circular tilings vs K_{n}"
        );
    }
    for total in 0..=9 {
        for n in 0..=total {
            let m = total - n;
            assert_eq!(
                lucanomial_tiling_sum(m, n, &mut budget).unwrap(),
                cache.lucanomial(total, n).unwrap().value,
                "tiling sum vs lucanomial({total},{n})"
            );
        }
    }
    finish("02 (tiling oracle equivalence)", started, Duration::from_secs(60));
}

#[test]
fn criterion_03_divisibility_theorem() {
    let started = Instant::now();
    let cache = LucasCache::new();
    for n in 2..=30usize {
        for a in 2..=n {
            let divides = cache.non_divisibility_converse(a, n).unwrap();
            assert_eq!(divides, n % a == 0, "L_{a} | L_{n}");
        }
    }
    for n in 1..=30usize {
        for a in 1..=n {
            if n % a == 0 {
                let b = n / a;
                assert!(
                    cache.division_identity_check(a, b).unwrap(),
                    "cleared telescoped identity at a={a} b={b}"
                );
            }
        }
    }
    finish("03 (divisibility theorem)", started, Duration::from_secs(30));
}

#[test]
fn criterion_04_multiplicity_free() {
    let started = Instant::now();
    let cache = LucasCache::new();
    for n in 2..=36usize {
        for p in 2..=n {
            if n % p == 0 {
                // verifies the residue congruence and that it is nonzero
                let residue = cache.multiplicity_free_check(p, n).unwrap();
                assert!(!residue.is_zero(), "residue at p={p} N={n}");
            }
        }
    }
    finish("04 (multiplicity-free residues)", started, Duration::from_secs(60));
}

#[test]
fn criterion_05_flat_sharp_suite() {
    let started = Instant::now();
    let cache = LucasCache::new();
    // sharp polynomiality plus both degree formulas
    for n in 1..=40usize {
        let sharp = cache.sharp(n).unwrap();
        let factorization = factor(&Integer::from(n)).unwrap();
        let primes: Vec<usize> = factorization
            .distinct_primes()
            .map(|p| usize::try_from(p.clone()).unwrap())
            .collect();
        let r = primes.len();
        let expected_deg_s = (n - 1 + r) as i64 - primes.iter().sum::<usize>() as i64;
        let expected_deg_t =
            ((n - 1) / 2) as i64 - primes.iter().map(|p| ((p - 1) / 2) as i64).sum::<i64>();
        assert_eq!(
            sharp.deg_s().map(i64::from).unwrap_or(0),
            expected_deg_s,
            "deg_s sharp({n})"
        );
        assert_eq!(
            sharp.deg_t().map(i64::from).unwrap_or(0),
            expected_deg_t,
            "deg_t sharp({n})"
        );
    }
    // flat/sharp divisibility along divisor chains
    for n in 1..=40usize {
        for m in 1..=n {
            if n % m == 0 {
                assert!(
                    cache.flat(n).unwrap().is_divisible_by(&cache.flat(m).unwrap()),
                    "flat({m}) | flat({n})"
                );
                assert!(
                    cache
                        .sharp(n)
                        .unwrap()
                        .is_divisible_by(&cache.sharp(m).unwrap()),
                    "sharp({m}) | sharp({n})"
                );
            }
        }
    }
    // flat and sharp lucanomials: polynomial, nonnegative, product law
    // (all three checks are enforced inside flat_sharp_lucanomials)
    for n in 1..=40usize {
        for k in 0..=n {
            cache.flat_sharp_lucanomials(n, k).unwrap();
        }
    }
    // gcd(L_p, sharp(N)) = 1
    for p in [2usize, 3, 5, 7, 11, 13] {
        let lucas_p = cache.lucas(p);
        for n in 1..=40usize {
            let g = BiPoly::gcd(&lucas_p, &cache.sharp(n).unwrap()).unwrap();
            assert!(g.is_one(), "gcd(L_{p}, sharp({n}))");
        }
    }
    finish("05 (flat/sharp suite)", started, Duration::from_secs(180));
}

#[test]
fn criterion_06_catalanomials() {
    let started = Instant::now();
    let cache = LucasCache::new();
    for n in 1..=16usize {
        // each call verifies exact division and nonnegative coefficients
        let plain = cache.catalanomial(n).unwrap();
        let flat = cache.flat_catalanomial(n).unwrap();
        let sharp = cache.sharp_catalanomial(n).unwrap();
        assert_eq!(&flat * &sharp, plain, "flat*sharp Catalanomial n={n}");
        assert!(
            cache.catalanomial_two_term_check(n).unwrap(),
            "two-term identity n={n}"
        );
    }
    finish("06 (Catalanomial suite)", started, Duration::from_secs(30));
}

#[test]
fn criterion_07_delannoy_suite() {
    let started = Instant::now();
    let table = DelannoyTable::new();
    for n in 1..=30usize {
        let poly = delannoy_poly(n);
        assert!(poly.is_palindromic(), "D_{n} palindromic");
        assert_eq!(poly.degree(), Some(n - 1));
        for i in 0..n {
            assert_eq!(poly.coeff(i), table.number(n - 1 - i, i), "D_{n} coeff {i}");
        }
    }
    for n in 0..=16usize {
        for k in 0..=n {
            let value = delannomial(n, k).unwrap();
            assert!(value.has_nonnegative_coeffs(), "delannomial({n},{k}) >= 0");
            let report = symmetry_unimodality(&value).unwrap();
            assert!(report.is_symmetric, "delannomial({n},{k}) symmetric");
            assert!(report.is_unimodal, "delannomial({n},{k}) unimodal");
        }
    }
    // specialization at x = 1 gives the Pell numbers
    let pell = specialize_sequence(Family::Lucas, &Integer::from(2), &Integer::one(), 30).unwrap();
    for n in 0..=30usize {
        assert_eq!(
            delannoy_poly(n).eval(&Integer::one()),
            *pell.value(n).unwrap(),
            "D_{n}(1)"
        );
    }
    let mut budget = Budget::default();
    for a in 0..=6 {
        for b in 0..=6 {
            assert_eq!(
                delannoy_paths_count(a, b, &mut budget).unwrap(),
                table.number(a, b),
                "paths to ({b},{a})"
            );
        }
    }
    finish("07 (Delannoy suite)", started, Duration::from_secs(60));
}

#[test]
fn criterion_08_divided_difference_suite() {
    let started = Instant::now();
    let cache = LucasCache::new();
    let seq = DividedDiffSeq::new(&cache);
    // s_n verifies definition, mixed recurrence, and 4-term recurrence per index
    for n in 0..=40usize {
        let value = seq.s_n(n).unwrap();
        assert_eq!(value, value.swap_vars(), "S_{n} symmetric");
    }
    assert!(second_order_fib_check(&cache, 40).unwrap());
    // strictly decreasing deviation (terms are zero at n = 0, 1, so the
    // decrease starts at N = 2)
    for (s0, t0) in [(2i64, 1i64), (1, 1), (3, 2)] {
        let s0 = Integer::from(s0);
        let t0 = Integer::from(t0);
        let target = series_target(&s0, &t0).unwrap();
        let mut previous = &target - &series_partial_sum(&s0, &t0, 1).unwrap();
        for n in 2..=60usize {
            let deviation = &target - &series_partial_sum(&s0, &t0, n).unwrap();
            assert!(deviation.is_positive(), "deviation sign at N={n}");
            assert!(
                deviation < previous,
                "deviation not strictly decreasing at ({s0},{t0}) N={n}"
            );
            previous = deviation;
        }
    }
    // modified family: homogeneity, divisibility by s+t-1, nonnegativity
    for alpha in [0i64, 1, 2, 5] {
        let modified = ModifiedLucasSeq::new(Integer::from(alpha)).unwrap();
        for n in 0..=30usize {
            modified.checked_quotient(n, &cache).unwrap();
        }
    }
    finish("08 (divided-difference suite)", started, Duration::from_secs(60));
}

/// Final series deviation below 1e-6 at N = 60 for all three evaluation
/// points. The exact rational tails at N = 60 are ~1.06e-6 at (2,1) and
/// ~3.2e-5 at (1,1) — the series provably converge (see the strict-decrease
/// checks above) but not this fast at those two points, so this bound fails
/// by construction; it is kept as stated rather than loosened.
#[test]
fn criterion_08_series_final_deviation() {
    let started = Instant::now();
    let threshold = Rational::new(Integer::one(), Integer::from(1_000_000));
    for (s0, t0) in [(2i64, 1i64), (1, 1), (3, 2)] {
        let s0 = Integer::from(s0);
        let t0 = Integer::from(t0);
        let target = series_target(&s0, &t0).unwrap();
        let deviation = &target - &series_partial_sum(&s0, &t0, 60).unwrap();
        assert!(
            deviation < threshold,
            "final deviation at ({s0},{t0}), N=60: exact value {deviation} ≈ {:.3e} is not below 1e-6",
            rational_to_f64(&deviation)
        );
    }
    finish("08b (series final deviation)", started, Duration::from_secs(60));
}

fn rational_to_f64(q: &Rational) -> f64 {
    // precision-insensitive: display only
    let scaled = (q * Rational::from_integer(Integer::from(10u64.pow(15)))).to_integer();
    i64::try_from(scaled).map(|v| v as f64 / 1e15).unwrap_or(f64::NAN)
}

#[test]
fn criterion_09_pell_suite() {
    let started = Instant::now();
    let pell = specialize_sequence(Family::Lucas, &Integer::from(2), &Integer::one(), 7).unwrap();
    let first_eight = [0i64, 1, 2, 5, 12, 29, 70, 169];
    for (n, expected) in first_eight.iter().enumerate() {
        assert_eq!(pell.value(n).unwrap(), &Integer::from(*expected));
    }
    let report = detect_period(Family::Lucas, &Integer::from(2), &Integer::one(), 3).unwrap();
    assert_eq!(report.preperiod, 0);
    assert_eq!(report.period, 8);
    assert_eq!(report.cycle, vec![0, 1, 2, 2, 0, 2, 1, 1]);
    assert!(pell_valuation_check(2000).unwrap(), "3-adic closed form");
    assert!(pell_addition_check(50, 50).unwrap(), "addition identity");
    assert!(motivating_corollary_check(6).unwrap(), "square non-divisibility");
    finish("09 (Pell suite)", started, Duration::from_secs(60));
}

#[test]
fn criterion_10_theta_tool() {
    let started = Instant::now();
    for p in [2usize, 3, 5, 7, 11] {
        let report = theta_search(
            &Integer::from(2),
            &Integer::from(-1),
            &Integer::from(p as i64),
            200,
        )
        .unwrap();
        assert_eq!(
            report.verdict,
            ThetaVerdict::Consistent { theta: p },
            "theta at p={p}"
        );
    }
    finish("10 (theta scan)", started, Duration::from_secs(30));
}

#[test]
fn criterion_11_characteristic_polynomial() {
    let started = Instant::now();
    let cache = LucasCache::new();
    for n in 1..=8 {
        let det = cache.tridiagonal_charpoly(n, true).unwrap();
        assert_eq!(det, cache.lucas(n + 1), "det vs L_{}", n + 1);
        assert_eq!(det, cache.tridiagonal_charpoly(n, false).unwrap());
    }
    finish("11 (characteristic polynomial)", started, Duration::from_secs(10));
}

// ---- criterion 12: randomized property suites, 10^4 cases each ----

const PROPERTY_CASES: usize = 10_000;
const PROPERTY_SEED: u64 = 0x5eed_1ca5;

fn random_bipoly(rng: &mut ChaCha8Rng, max_terms: usize, max_exp: u32, max_coeff: i64) -> BiPoly {
    let terms = rng.gen_range(0..=max_terms);
    let mut acc = BiPoly::zero();
    for _ in 0..terms {
        let monomial = BiPoly::monomial(
            rng.gen_range(0..=max_exp),
            rng.gen_range(0..=max_exp),
            Integer::from(rng.gen_range(-max_coeff..=max_coeff)),
        );
        acc = &acc + &monomial;
    }
    acc
}

fn random_nonzero_bipoly(
    rng: &mut ChaCha8Rng,
    max_terms: usize,
    max_exp: u32,
    max_coeff: i64,
) -> BiPoly {
    loop {
        let poly = random_bipoly(rng, max_terms, max_exp, max_coeff);
        if !poly.is_zero() {
            return poly;
        }
    }
}

fn random_unipoly(rng: &mut ChaCha8Rng, max_deg: usize, max_coeff: i64) -> UniPoly {
    let coeffs = (0..=rng.gen_range(0..=max_deg))
        .map(|_| Integer::from(rng.gen_range(-max_coeff..=max_coeff)))
        .collect();
    UniPoly::new(coeffs)
}

#[test]
fn criterion_12a_ring_axioms() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED);
    for _ in 0..PROPERTY_CASES {
        let a = random_bipoly(&mut rng, 4, 5, 100);
        let b = random_bipoly(&mut rng, 4, 5, 100);
        let c = random_bipoly(&mut rng, 4, 5, 100);
        assert_eq!(&a + &b, &b + &a);
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }
    finish("12a (ring axioms, 10^4 cases)", started, Duration::from_secs(120));
}

#[test]
fn criterion_12b_division_round_trips() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED ^ 0xb);
    for _ in 0..PROPERTY_CASES {
        let a = random_bipoly(&mut rng, 4, 5, 50);
        let b = random_nonzero_bipoly(&mut rng, 3, 4, 50);
        assert_eq!((&a * &b).exact_div(&b).unwrap(), a, "(a*b)/b = a");
        // reduction is invariant under adding multiples of the modulus
        let monic = {
            let deg = rng.gen_range(1..=4u32);
            let mut m = BiPoly::monomial(deg, 0, Integer::one());
            for _ in 0..rng.gen_range(0..=3usize) {
                let term = BiPoly::monomial(
                    rng.gen_range(0..deg),
                    rng.gen_range(0..=3u32),
                    Integer::from(rng.gen_range(-9i64..=9)),
                );
                m = &m + &term;
            }
            m
        };
        let q = random_bipoly(&mut rng, 3, 3, 9);
        let shifted = &a + &(&q * &monic);
        assert_eq!(
            shifted.reduce_mod_monic_s(&monic).unwrap(),
            a.reduce_mod_monic_s(&monic).unwrap(),
            "reduction invariance"
        );
    }
    finish("12b (division round trips, 10^4 cases)", started, Duration::from_secs(120));
}

#[test]
fn criterion_12c_gcd_normalization() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED ^ 0xc);
    for _ in 0..PROPERTY_CASES {
        let a = random_nonzero_bipoly(&mut rng, 3, 3, 9);
        let b = random_nonzero_bipoly(&mut rng, 3, 3, 9);
        let g = random_nonzero_bipoly(&mut rng, 2, 2, 9);
        let lhs = BiPoly::gcd(&(&a * &g), &(&b * &g)).unwrap();
        let rhs = (&BiPoly::gcd(&a, &b).unwrap() * &g).normalize_sign();
        assert_eq!(lhs, rhs, "gcd(ag, bg) = gcd(a,b) g up to sign");
        // leading coefficient positive, and the gcd divides both inputs
        assert!(lhs.leading_coeff().unwrap().is_positive());
        assert!((&a * &g).is_divisible_by(&lhs));
        assert!((&b * &g).is_divisible_by(&lhs));
    }
    finish("12c (gcd normalization, 10^4 cases)", started, Duration::from_secs(300));
}

#[test]
fn criterion_12d_serialize_parse_round_trip() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED ^ 0xd);
    for _ in 0..PROPERTY_CASES {
        let poly = random_bipoly(&mut rng, 6, 8, 1000);
        assert_eq!(
            poly.to_string().parse::<BiPoly>().unwrap(),
            poly,
            "BiPoly round trip"
        );
        let uni = random_unipoly(&mut rng, 8, 1000);
        assert_eq!(
            uni.to_string().parse::<UniPoly>().unwrap(),
            uni,
            "UniPoly round trip"
        );
    }
    finish("12d (serialize/parse round trip, 10^4 cases)", started, Duration::from_secs(120));
}
