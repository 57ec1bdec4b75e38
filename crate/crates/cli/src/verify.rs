//! Theorem-verification suites: named bundles of exhaustive desk-scale
//! checks with per-case verdicts. Cases are independent and may be fanned
//! out across worker threads; reports are aggregated order-independently
//! (sorted by case name before printing), so output is stable for a given
//! `--seed` regardless of `--jobs`.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lucas_core::arith::{factor, Integer, Rational};
use lucas_core::combinat::{
    circular_tilings_weight, delannoy_paths_count, linear_tilings_weight, lucanomial_tiling_sum,
    Budget,
};
use lucas_core::delannoy::{
    delannomial, delannomial_by_recurrence, delannoy_poly, symmetry_unimodality, DelannoyTable,
};
use lucas_core::divdiff::{
    second_order_fib_check, series_partial_sum, series_target, DividedDiffSeq, ModifiedLucasSeq,
};
use lucas_core::seqlab::{
    detect_period, motivating_corollary_check, pell_addition_check, pell_valuation_check,
    specialize_sequence, Family,
};
use lucas_core::{BiPoly, Error, LucasCache, Result};

use crate::Format;

pub const SUITES: &[&str] = &[
    "table1",
    "addition",
    "divisibility",
    "multiplicity-free",
    "flatsharp",
    "lucanomial-tilings",
    "tilings",
    "catalan",
    "delannoy",
    "divdiff",
    "modified",
    "pell",
];

pub struct Context {
    pub cache: LucasCache,
    pub max_n: usize,
    pub seed: u64,
}

type CaseFn = Box<dyn Fn(&Context) -> Result<()> + Send + Sync>;

pub struct Case {
    name: String,
    run: CaseFn,
}

fn case(name: String, run: impl Fn(&Context) -> Result<()> + Send + Sync + 'static) -> Case {
    Case {
        name,
        run: Box::new(run),
    }
}

fn mismatch(identity: &str, fields: Vec<(String, String)>) -> Error {
    let dump = fields
        .into_iter()
        .map(|(k, v)| format!("  {k} = {v}"))
        .collect::<Vec<_>>()
        .join("\n");
    Error::theorem(identity, dump)
}

/// Builds the case list for one suite. Unknown names are input errors.
pub fn suite_cases(suite: &str, ctx: &Context) -> Result<Vec<Case>> {
    let n_max = ctx.max_n;
    let mut cases = Vec::new();
    match suite {
        "table1" => {
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
            for n in 0..=n_max.min(6) {
                cases.push(case(format!("table1/n={n:02}"), move |ctx| {
                    let lucas = ctx.cache.lucas(n).to_string();
                    if lucas != lucas_expected[n] {
                        return Err(mismatch(
                            "Lucas table row",
                            vec![
                                ("n".into(), n.to_string()),
                                ("computed".into(), lucas),
                                ("expected".into(), lucas_expected[n].into()),
                            ],
                        ));
                    }
                    let circular = ctx.cache.circular(n).to_string();
                    if circular != circular_expected[n] {
                        return Err(mismatch(
                            "circular Lucas table row",
                            vec![
                                ("n".into(), n.to_string()),
                                ("computed".into(), circular),
                                ("expected".into(), circular_expected[n].into()),
                            ],
                        ));
                    }
                    Ok(())
                }));
            }
        }
        "addition" => {
            for m in 0..=n_max {
                for n in m..=n_max {
                    cases.push(case(format!("addition/m={m:02},n={n:02}"), move |ctx| {
                        if ctx.cache.check_addition_identity(m, n) {
                            Ok(())
                        } else {
                            Err(mismatch(
                                "addition identities",
                                vec![("m".into(), m.to_string()), ("n".into(), n.to_string())],
                            ))
                        }
                    }));
                }
            }
        }
        "divisibility" => {
            for n in 2..=n_max {
                cases.push(case(format!("divisibility/N={n:02}"), move |ctx| {
                    for a in 2..=n {
                        let divides = ctx.cache.non_divisibility_converse(a, n)?;
                        if divides != (n % a == 0) {
                            return Err(mismatch(
                                "L_a | L_N iff a | N",
                                vec![
                                    ("a".into(), a.to_string()),
                                    ("N".into(), n.to_string()),
                                    ("divides".into(), divides.to_string()),
                                ],
                            ));
                        }
                    }
                    for a in 1..=n {
                        if n % a == 0 && !ctx.cache.division_identity_check(a, n / a)? {
                            return Err(mismatch(
                                "telescoped division identity",
                                vec![("a".into(), a.to_string()), ("b".into(), (n / a).to_string())],
                            ));
                        }
                    }
                    Ok(())
                }));
            }
        }
        "multiplicity-free" => {
            for n in 2..=n_max {
                cases.push(case(format!("multiplicity-free/N={n:02}"), move |ctx| {
                    for p in 2..=n {
                        if n % p == 0 {
                            ctx.cache.multiplicity_free_check(p, n)?;
                        }
                    }
                    Ok(())
                }));
            }
        }
        "flatsharp" => {
            for n in 1..=n_max {
                cases.push(case(format!("flatsharp/n={n:02}"), move |ctx| {
                    let sharp = ctx.cache.sharp(n)?;
                    let primes: Vec<usize> = factor(&Integer::from(n))?
                        .distinct_primes()
                        .map(|p| usize::try_from(p.clone()).expect("desk-scale prime"))
                        .collect();
                    let expected_deg_s =
                        (n - 1 + primes.len()) as i64 - primes.iter().sum::<usize>() as i64;
                    let expected_deg_t = ((n - 1) / 2) as i64
                        - primes.iter().map(|p| ((p - 1) / 2) as i64).sum::<i64>();
                    if sharp.deg_s().map(i64::from).unwrap_or(0) != expected_deg_s
                        || sharp.deg_t().map(i64::from).unwrap_or(0) != expected_deg_t
                    {
                        return Err(mismatch(
                            "sharp degree formulas",
                            vec![
                                ("n".into(), n.to_string()),
                                ("sharp".into(), sharp.to_string()),
                            ],
                        ));
                    }
                    for m in 1..=n {
                        if n % m == 0 {
                            let flat_ok = ctx
                                .cache
                                .flat(n)?
                                .is_divisible_by(&ctx.cache.flat(m)?);
                            let sharp_ok = ctx
                                .cache
                                .sharp(n)?
                                .is_divisible_by(&ctx.cache.sharp(m)?);
                            if !flat_ok || !sharp_ok {
                                return Err(mismatch(
                                    "flat/sharp divisibility",
                                    vec![
                                        ("m".into(), m.to_string()),
                                        ("n".into(), n.to_string()),
                                    ],
                                ));
                            }
                        }
                    }
                    for k in 0..=n {
                        ctx.cache.flat_sharp_lucanomials(n, k)?;
                    }
                    for p in [2usize, 3, 5, 7, 11, 13] {
                        let g = BiPoly::gcd(&ctx.cache.lucas(p), &sharp)?;
                        if !g.is_one() {
                            return Err(mismatch(
                                "gcd(L_p, sharp) = 1",
                                vec![
                                    ("p".into(), p.to_string()),
                                    ("N".into(), n.to_string()),
                                    ("gcd".into(), g.to_string()),
                                ],
                            ));
                        }
                    }
                    Ok(())
                }));
            }
        }
        "lucanomial-tilings" => {
            // the pair count is the fibonomial, which passes the default
            // 10^7 enumeration budget only up to m+n = 11; sweep the
            // exhaustive desk-scale range
            for total in 0..=n_max.min(9) {
                for n in 0..=total {
                    let m = total - n;
                    cases.push(case(
                        format!("lucanomial-tilings/m={m:02},n={n:02}"),
                        move |ctx| {
                            let mut budget = Budget::default();
                            let by_tilings = lucanomial_tiling_sum(m, n, &mut budget)?;
                            let direct = ctx.cache.lucanomial(m + n, n)?.value;
                            if by_tilings != direct {
                                return Err(mismatch(
                                    "box-partition tiling sum equals the lucanomial",
                                    vec![
                                        ("m".into(), m.to_string()),
                                        ("n".into(), n.to_string()),
                                        ("tilings".into(), by_tilings.to_string()),
                                        ("lucanomial".into(), direct.to_string()),
                                    ],
                                ));
                            }
                            Ok(())
                        },
                    ));
                }
            }
        }
        "tilings" => {
            for n in 1..=n_max {
                cases.push(case(format!("tilings/linear/n={n:02}"), move |ctx| {
                    let mut budget = Budget::default();
                    let weight = linear_tilings_weight(n - 1, &mut budget)?;
                    let expected = ctx.cache.lucas(n);
                    if weight != expected {
                        return Err(mismatch(
                            "linear tiling weights equal the Lucas polynomial",
                            vec![
                                ("n".into(), n.to_string()),
                                ("weight".into(), weight.to_string()),
                                ("expected".into(), expected.to_string()),
                            ],
                        ));
                    }
                    Ok(())
                }));
                cases.push(case(format!("tilings/circular/n={n:02}"), move |ctx| {
                    let mut budget = Budget::default();
                    let weight = circular_tilings_weight(n, &mut budget)?;
                    let expected = ctx.cache.circular(n);
                    if weight != expected {
                        return Err(mismatch(
                            "circular tiling weights equal the circular Lucas polynomial",
                            vec![
                                ("n".into(), n.to_string()),
                                ("weight".into(), weight.to_string()),
                                ("expected".into(), expected.to_string()),
                            ],
                        ));
                    }
                    Ok(())
                }));
            }
        }
        "catalan" => {
            for n in 1..=n_max {
                cases.push(case(format!("catalan/n={n:02}"), move |ctx| {
                    let plain = ctx.cache.catalanomial(n)?;
                    let product =
                        &ctx.cache.flat_catalanomial(n)? * &ctx.cache.sharp_catalanomial(n)?;
                    if product != plain {
                        return Err(mismatch(
                            "Catalanomial flat/sharp product",
                            vec![("n".into(), n.to_string())],
                        ));
                    }
                    if !ctx.cache.catalanomial_two_term_check(n)? {
                        return Err(mismatch(
                            "two-term Catalanomial identity",
                            vec![("n".into(), n.to_string())],
                        ));
                    }
                    Ok(())
                }));
            }
        }
        "delannoy" => {
            for n in 1..=n_max {
                cases.push(case(format!("delannoy/poly/n={n:02}"), move |_| {
                    let table = DelannoyTable::new();
                    let poly = delannoy_poly(n);
                    if !poly.is_palindromic() {
                        return Err(mismatch(
                            "Delannoy polynomial palindromicity",
                            vec![("n".into(), n.to_string()), ("poly".into(), poly.to_string())],
                        ));
                    }
                    for i in 0..n {
                        if poly.coeff(i) != table.number(n - 1 - i, i) {
                            return Err(mismatch(
                                "Delannoy polynomial coefficients",
                                vec![("n".into(), n.to_string()), ("i".into(), i.to_string())],
                            ));
                        }
                    }
                    let pell = specialize_sequence(
                        Family::Lucas,
                        &Integer::from(2),
                        &Integer::one(),
                        n,
                    )?;
                    if poly.eval(&Integer::one()) != *pell.value(n)? {
                        return Err(mismatch(
                            "Delannoy polynomial at x=1 equals the Pell number",
                            vec![("n".into(), n.to_string())],
                        ));
                    }
                    for k in 0..=n {
                        let value = delannomial(n, k)?;
                        if value != delannomial_by_recurrence(n, k)? {
                            return Err(mismatch(
                                "delannomial recurrence cross-check",
                                vec![("n".into(), n.to_string()), ("k".into(), k.to_string())],
                            ));
                        }
                        let report = symmetry_unimodality(&value)?;
                        if !report.is_symmetric || !report.is_unimodal
                            || !value.has_nonnegative_coeffs()
                        {
                            return Err(mismatch(
                                "delannomials are symmetric, unimodal, nonnegative",
                                vec![
                                    ("n".into(), n.to_string()),
                                    ("k".into(), k.to_string()),
                                    ("value".into(), value.to_string()),
                                ],
                            ));
                        }
                    }
                    Ok(())
                }));
            }
            for a in 0..=n_max.min(6) {
                cases.push(case(format!("delannoy/paths/a={a}"), move |_| {
                    let table = DelannoyTable::new();
                    let mut budget = Budget::default();
                    for b in 0..=6 {
                        let count = delannoy_paths_count(a, b, &mut budget)?;
                        if count != table.number(a, b) {
                            return Err(mismatch(
                                "path enumeration equals the Delannoy table",
                                vec![("a".into(), a.to_string()), ("b".into(), b.to_string())],
                            ));
                        }
                    }
                    Ok(())
                }));
            }
        }
        "divdiff" => {
            cases.push(case("divdiff/three-routes".into(), move |ctx| {
                let seq = DividedDiffSeq::new(&ctx.cache);
                for n in 0..=ctx.max_n.max(4) {
                    let value = seq.s_n(n)?;
                    if value != value.swap_vars() {
                        return Err(mismatch(
                            "divided differences are symmetric",
                            vec![("n".into(), n.to_string()), ("S_n".into(), value.to_string())],
                        ));
                    }
                }
                Ok(())
            }));
            cases.push(case("divdiff/second-order-fibonacci".into(), move |ctx| {
                if second_order_fib_check(&ctx.cache, ctx.max_n.max(2))? {
                    Ok(())
                } else {
                    Err(mismatch("second-order Fibonacci identity", vec![]))
                }
            }));
            for (s0, t0) in [(2i64, 1i64), (1, 1), (3, 2)] {
                cases.push(case(format!("divdiff/series/s={s0},t={t0}"), move |_| {
                    let s0 = Integer::from(s0);
                    let t0 = Integer::from(t0);
                    let target = series_target(&s0, &t0)?;
                    let mut previous = &target - &series_partial_sum(&s0, &t0, 1)?;
                    for n in 2..=60usize {
                        let deviation = &target - &series_partial_sum(&s0, &t0, n)?;
                        if !deviation.is_positive() || deviation >= previous {
                            return Err(mismatch(
                                "series deviation strictly decreasing",
                                vec![
                                    ("s0".into(), s0.to_string()),
                                    ("t0".into(), t0.to_string()),
                                    ("N".into(), n.to_string()),
                                ],
                            ));
                        }
                        previous = deviation;
                    }
                    Ok(())
                }));
            }
            cases.push(case("divdiff/series/threshold".into(), move |_| {
                // the fast-converging evaluation point reaches 1e-6 by N=40
                let deviation = &series_target(&Integer::from(3), &Integer::from(2))?
                    - &series_partial_sum(&Integer::from(3), &Integer::from(2), 40)?;
                let threshold = Rational::new(Integer::one(), Integer::from(1_000_000));
                if deviation < threshold {
                    Ok(())
                } else {
                    Err(mismatch(
                        "series threshold at (3,2), N=40",
                        vec![("deviation".into(), deviation.to_string())],
                    ))
                }
            }));
        }
        "modified" => {
            for alpha in [0i64, 1, 2, 5] {
                cases.push(case(format!("modified/alpha={alpha}"), move |ctx| {
                    let seq = ModifiedLucasSeq::new(Integer::from(alpha))?;
                    for n in 0..=ctx.max_n {
                        seq.checked_quotient(n, &ctx.cache)?;
                    }
                    Ok(())
                }));
            }
        }
        "pell" => {
            cases.push(case("pell/first-values".into(), move |_| {
                let seq =
                    specialize_sequence(Family::Lucas, &Integer::from(2), &Integer::one(), 7)?;
                let expected = [0i64, 1, 2, 5, 12, 29, 70, 169];
                for (n, want) in expected.iter().enumerate() {
                    if seq.value(n)? != &Integer::from(*want) {
                        return Err(mismatch(
                            "initial Pell values",
                            vec![("n".into(), n.to_string())],
                        ));
                    }
                }
                Ok(())
            }));
            cases.push(case("pell/period-mod-3".into(), move |_| {
                let report =
                    detect_period(Family::Lucas, &Integer::from(2), &Integer::one(), 3)?;
                if report.preperiod == 0
                    && report.period == 8
                    && report.cycle == vec![0, 1, 2, 2, 0, 2, 1, 1]
                {
                    Ok(())
                } else {
                    Err(mismatch(
                        "Pell residues mod 3",
                        vec![("report".into(), report.to_string())],
                    ))
                }
            }));
            cases.push(case("pell/3-adic-closed-form".into(), move |ctx| {
                if pell_valuation_check(ctx.max_n.max(25) * 8)? {
                    Ok(())
                } else {
                    Err(mismatch("3-adic valuation closed form", vec![]))
                }
            }));
            cases.push(case("pell/addition-identity".into(), move |ctx| {
                let bound = ctx.max_n.max(8);
                if pell_addition_check(bound, bound)? {
                    Ok(())
                } else {
                    Err(mismatch("Pell addition identity", vec![]))
                }
            }));
            cases.push(case("pell/addition-identity-sampled".into(), move |ctx| {
                let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
                let top = ctx.max_n.max(8) * 16;
                let seq = specialize_sequence(
                    Family::Lucas,
                    &Integer::from(2),
                    &Integer::one(),
                    2 * top + 1,
                )?;
                for _ in 0..50 {
                    let m = rng.gen_range(1..=top);
                    let n = rng.gen_range(0..=top);
                    if !lucas_core::seqlab::addition_identity_at(&seq, m, n)? {
                        return Err(mismatch(
                            "sampled Pell addition identity",
                            vec![("m".into(), m.to_string()), ("n".into(), n.to_string())],
                        ));
                    }
                }
                Ok(())
            }));
            cases.push(case("pell/square-non-divisibility".into(), move |ctx| {
                if motivating_corollary_check((ctx.max_n / 4).clamp(1, 6))? {
                    Ok(())
                } else {
                    Err(mismatch("square non-divisibility corollary", vec![]))
                }
            }));
        }
        other => {
            return Err(Error::input(format!(
                "unknown suite {other:?}; expected one of {SUITES:?} or \"all\""
            )))
        }
    }
    Ok(cases)
}

pub struct SuiteOutcome {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<(String, Error)>,
    pub elapsed_secs: f64,
}

/// Runs one suite with `jobs` workers, printing per-case verdicts sorted by
/// case name.
pub fn run_suite(
    suite: &str,
    ctx: &Context,
    jobs: usize,
    format: Format,
) -> Result<SuiteOutcome> {
    let cases = suite_cases(suite, ctx)?;
    let started = Instant::now();
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<(String, Option<Error>)>> = Mutex::new(Vec::new());
    let workers = jobs.max(1).min(cases.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let index = next.fetch_add(1, Ordering::Relaxed);
                let Some(case) = cases.get(index) else { break };
                let verdict = (case.run)(ctx).err();
                results.lock().unwrap().push((case.name.clone(), verdict));
            });
        }
    });
    let mut results = results.into_inner().unwrap();
    results.sort_by(|(a, _), (b, _)| a.cmp(b));
    let mut failures = Vec::new();
    for (name, verdict) in results {
        match verdict {
            None => match format {
                Format::Text => println!("ok   {name}"),
                Format::Record => println!("case={name} status=ok"),
            },
            Some(error) => {
                match format {
                    Format::Text => println!("FAIL {name}"),
                    Format::Record => println!("case={name} status=fail"),
                }
                failures.push((name, error));
            }
        }
    }
    Ok(SuiteOutcome {
        suite: suite.to_string(),
        cases: cases.len(),
        failures,
        elapsed_secs: started.elapsed().as_secs_f64(),
    })
}
