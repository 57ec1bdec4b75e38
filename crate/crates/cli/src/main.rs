//! `lucas` — exact Lucas-polynomial computation and theorem verification.
//!
//! Results print to stdout; diagnostics and counterexample dumps go to
//! stderr. Exit codes: 0 success, 2 usage or input error, 3 theorem
//! violation (a verified identity failed on a concrete instance — a
//! counterexample, not a crash).

mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lucas_core::arith::Integer;
use lucas_core::delannoy::{delannomial, symmetry_unimodality};
use lucas_core::divdiff::{DividedDiffSeq, ModifiedLucasSeq};
use lucas_core::seqlab::{detect_period, specialize_sequence, theta_search, Family};
use lucas_core::{nu_p_integer, BiPoly, Error, LucasCache, Result, UniPoly};

#[derive(Parser)]
#[command(
    name = "lucas",
    version,
    about = "Exact Lucas-polynomial calculator and theorem verifier",
    propagate_version = true
)]
struct Cli {
    /// Output format: human text or machine-readable records
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for the randomized verification cases
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Record,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Lucas polynomial L_N
    Lucas { n: usize },
    /// Print the circular Lucas polynomial K_N
    Circular { n: usize },
    /// Print the flat part of L_N (product of L_p over primes p | N)
    Flat { n: usize },
    /// Print the sharp part of L_N (L_N divided by its flat part)
    Sharp { n: usize },
    /// Print the lucanomial {L_N choose L_K}
    Lucanomial {
        n: usize,
        k: usize,
        /// Flat variant (ratio of flat factorials)
        #[arg(long, conflicts_with = "sharp")]
        flat: bool,
        /// Sharp variant (ratio of sharp factorials)
        #[arg(long)]
        sharp: bool,
    },
    /// Print the (s,t)-Catalan polynomial of index N
    Catalanomial {
        n: usize,
        #[arg(long, conflicts_with = "sharp")]
        flat: bool,
        #[arg(long)]
        sharp: bool,
    },
    /// Print the delannomial {D_N choose D_K}
    Delannomial {
        n: usize,
        k: usize,
        /// Also print the symmetry/unimodality report
        #[arg(long)]
        report: bool,
    },
    /// Print the divided difference S_N (or its modified-family variant)
    Divdiff {
        n: usize,
        /// Use the modified family with both initial values ALPHA
        #[arg(long)]
        alpha: Option<u32>,
    },
    /// Print the characteristic polynomial of the N x N tridiagonal matrix
    Charpoly {
        n: usize,
        /// Compute by cofactor-expansion determinant instead of the recurrence
        #[arg(long)]
        oracle: bool,
    },
    /// Run a verification suite (or "all")
    Verify {
        suite: String,
        /// Largest index the suite sweeps
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Worker threads for independent cases
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Residue period of a specialized sequence
    Period {
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
        #[arg(long = "mod")]
        modulus: u64,
        /// Sequence family (lucas, circular, delannoy-at-x)
        #[arg(long, default_value = "lucas")]
        family: String,
    },
    /// p-adic valuation profile of a specialized sequence
    Valuation {
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
        #[arg(long)]
        prime: i64,
        #[arg(long)]
        max_n: usize,
        /// Sequence family (lucas, circular, flat, sharp, delannoy-at-x)
        #[arg(long, default_value = "lucas")]
        family: String,
    },
    /// Scan for theta with nu_p(ev(flat_n)!) = floor(n/theta)
    Theta {
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
        #[arg(long)]
        prime: i64,
        #[arg(long)]
        max_n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error}");
            if error.is_theorem_violation() {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let format = cli.format;
    match cli.command {
        Command::Lucas { n } => print_bipoly(&LucasCache::new().lucas(n), format),
        Command::Circular { n } => print_bipoly(&LucasCache::new().circular(n), format),
        Command::Flat { n } => print_bipoly(&LucasCache::new().flat(n)?, format),
        Command::Sharp { n } => print_bipoly(&LucasCache::new().sharp(n)?, format),
        Command::Lucanomial { n, k, flat, sharp } => {
            let cache = LucasCache::new();
            let value = if flat {
                cache.flat_lucanomial(n, k)?
            } else if sharp {
                cache.sharp_lucanomial(n, k)?
            } else {
                cache.lucanomial(n, k)?.value
            };
            print_bipoly(&value, format);
        }
        Command::Catalanomial { n, flat, sharp } => {
            let cache = LucasCache::new();
            let value = if flat {
                cache.flat_catalanomial(n)?
            } else if sharp {
                cache.sharp_catalanomial(n)?
            } else {
                cache.catalanomial(n)?
            };
            print_bipoly(&value, format);
        }
        Command::Delannomial { n, k, report } => {
            let value = delannomial(n, k)?;
            print_unipoly(&value, format);
            if report {
                let verdicts = symmetry_unimodality(&value)?;
                println!(
                    "symmetric={} unimodal={} central_degree={} central_coefficient={}",
                    verdicts.is_symmetric,
                    verdicts.is_unimodal,
                    verdicts.central_monomial.0,
                    verdicts.central_monomial.1
                );
            }
        }
        Command::Divdiff { n, alpha } => {
            let cache = LucasCache::new();
            let value = match alpha {
                None => DividedDiffSeq::new(&cache).s_n(n)?,
                Some(alpha) => ModifiedLucasSeq::new(Integer::from(alpha))?.modified_s(n),
            };
            print_bipoly(&value, format);
        }
        Command::Charpoly { n, oracle } => {
            print_bipoly(&LucasCache::new().tridiagonal_charpoly(n, oracle)?, format)
        }
        Command::Verify { suite, max_n, jobs } => run_verify(&suite, max_n, jobs, cli.seed, format)?,
        Command::Period {
            s,
            t,
            modulus,
            family,
        } => {
            let family: Family = family.parse()?;
            let report = detect_period(family, &Integer::from(s), &Integer::from(t), modulus)?;
            println!("{report}");
        }
        Command::Valuation {
            s,
            t,
            prime,
            max_n,
            family,
        } => {
            use num_traits::Zero;
            let family: Family = family.parse()?;
            let prime = Integer::from(prime);
            let seq = specialize_sequence(family, &Integer::from(s), &Integer::from(t), max_n)?;
            for (n, value) in seq.iter() {
                if value.is_zero() {
                    println!("n={n} value=0 nu=undefined");
                } else {
                    println!("n={n} value={value} nu={}", nu_p_integer(value, &prime)?);
                }
            }
        }
        Command::Theta { s, t, prime, max_n } => {
            let report = theta_search(
                &Integer::from(s),
                &Integer::from(t),
                &Integer::from(prime),
                max_n,
            )?;
            println!("{report}");
        }
    }
    Ok(())
}

fn run_verify(suite: &str, max_n: usize, jobs: usize, seed: u64, format: Format) -> Result<()> {
    let ctx = verify::Context {
        cache: LucasCache::new(),
        max_n,
        seed,
    };
    let suites: Vec<&str> = if suite == "all" {
        verify::SUITES.to_vec()
    } else {
        vec![suite]
    };
    let mut total_failures = 0usize;
    let mut theorem_flavored = false;
    for name in suites {
        let outcome = verify::run_suite(name, &ctx, jobs, format)?;
        match format {
            Format::Text => println!(
                "suite {}: {} cases, {} failures ({:.2}s)",
                outcome.suite,
                outcome.cases,
                outcome.failures.len(),
                outcome.elapsed_secs
            ),
            // wall time intentionally omitted: record output is byte-stable
            Format::Record => println!(
                "suite={} cases={} failures={}",
                outcome.suite,
                outcome.cases,
                outcome.failures.len()
            ),
        }
        total_failures += outcome.failures.len();
        for (case, error) in &outcome.failures {
            theorem_flavored |= error.is_theorem_violation();
            eprintln!("counterexample in {case}:\n{error}");
        }
    }
    if total_failures == 0 {
        Ok(())
    } else if theorem_flavored {
        Err(Error::theorem(
            "verification run",
            format!("  failing cases = {total_failures}"),
        ))
    } else {
        Err(Error::input(format!(
            "{total_failures} verification cases failed without theorem violations"
        )))
    }
}

fn print_bipoly(poly: &BiPoly, format: Format) {
    match format {
        Format::Text => println!("{poly}"),
        Format::Record => {
            for (i, j, coeff) in poly.to_records() {
                println!("{i} {j} {coeff}");
            }
        }
    }
}

fn print_unipoly(poly: &UniPoly, format: Format) {
    match format {
        Format::Text => println!("{poly}"),
        Format::Record => {
            for (i, coeff) in poly
                .coeffs()
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            {
                println!("{i} {coeff}");
            }
        }
    }
}
