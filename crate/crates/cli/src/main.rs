//! `qncalc`: an exact calculator for the Nica-Toeplitz algebra generated by
//! the unitary `u` and the isometries `w(m)`, and for its Cuntz quotient.
//!
//! Exit codes: 0 for success (and for `equal` answering true), 1 for a
//! false answer or failing suite, 2 for usage, parse or evaluation errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use qn_cli::parse::{eval, parse, parse_poly};
use qn_cli::print::{element_json, print_element, print_fock_image, print_integer_image};
use qn_core::{
    apply_fock_basis, apply_integer_basis, equal, relation_suite, Algebra, Element, FockBasisIndex,
    Positive, SuiteKind, SuiteOptions, SuiteReport,
};

#[derive(Parser)]
#[command(
    name = "qncalc",
    version,
    about = "Exact calculator for the Nica-Toeplitz algebra on the generators u, w(m) and for the Cuntz algebra Q_N"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgebraArg {
    /// The Nica-Toeplitz algebra (Fock-model equality).
    Nt,
    /// The Cuntz quotient Q_N (integer-model equality).
    Qn,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModelArg {
    /// Basis vectors e(k) indexed by the integers.
    Qn,
    /// Fock basis vectors e(j,r) indexed by an integer and a level.
    Nt,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Toeplitz,
    Nica,
    Cuntz,
    LacaRaeburn,
}

impl From<SuiteArg> for SuiteKind {
    fn from(value: SuiteArg) -> Self {
        match value {
            SuiteArg::Toeplitz => SuiteKind::Toeplitz,
            SuiteArg::Nica => SuiteKind::Nica,
            SuiteArg::Cuntz => SuiteKind::Cuntz,
            SuiteArg::LacaRaeburn => SuiteKind::LacaRaeburn,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form of an expression.
    Normalize {
        /// Emit the machine-readable JSON form instead of text.
        #[arg(long)]
        json: bool,
        expr: String,
    },
    /// Decide whether two expressions are equal in the chosen algebra.
    Equal {
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        first: String,
        second: String,
    },
    /// Apply an expression to a basis vector of the chosen model.
    Apply {
        #[arg(long, value_enum)]
        model: ModelArg,
        /// `k` for the integer model, `j,r` for the Fock model.
        #[arg(long)]
        vector: String,
        expr: String,
    },
    /// Run a relation suite; exits nonzero if any instance fails.
    Check {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Largest index for m, n and primes.
        #[arg(long, default_value_t = 12)]
        max: u64,
        /// Seed for the sampled exponents.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Laurent-polynomial calculus on the coefficient algebra.
    Laurent {
        #[command(subcommand)]
        op: LaurentOp,
    },
}

#[derive(Subcommand)]
enum LaurentOp {
    /// The transfer operator: keeps exponents divisible by m, divided by m.
    Transfer {
        #[arg(short)]
        m: u64,
        poly: String,
    },
    /// The conditional expectation: keeps exponents divisible by m.
    Condexp {
        #[arg(short)]
        m: u64,
        poly: String,
    },
    /// The endomorphism f(z) -> f(z^m): multiplies exponents by m.
    Inflate {
        #[arg(short)]
        m: u64,
        poly: String,
    },
    /// The inner product of f*1_m and g*1_m in the level-m fiber.
    Inner {
        #[arg(short)]
        m: u64,
        f: String,
        g: String,
    },
}

fn eval_arg(text: &str) -> Result<Element, String> {
    let expr = parse(text).map_err(|e| e.to_string())?;
    eval(&expr).map_err(|e| e.to_string())
}

fn level_arg(m: u64) -> Result<Positive, String> {
    Positive::new(BigInt::from(m)).ok_or_else(|| "m must be at least 1".to_string())
}

fn parse_fock_vector(text: &str) -> Result<FockBasisIndex, String> {
    let (j, r) = text
        .split_once(',')
        .ok_or_else(|| "expected a vector of the form j,r".to_string())?;
    let j: BigInt = j
        .trim()
        .parse()
        .map_err(|_| format!("bad integer '{}'", j.trim()))?;
    let r: BigInt = r
        .trim()
        .parse()
        .map_err(|_| format!("bad level '{}'", r.trim()))?;
    let r = Positive::new(r).ok_or_else(|| "the level must be at least 1".to_string())?;
    Ok(FockBasisIndex::new(j, r))
}

fn print_report(report: &SuiteReport, max: u64, seed: u64) {
    println!("suite {} (max {}, seed {}):", report.kind.name(), max, seed);
    for family in &report.families {
        let status = if family.passed() { "ok" } else { "FAILED" };
        println!(
            "  {:<55} {:>7} instances  {}",
            family.name, family.checked, status
        );
        for failure in family.failures.iter().take(5) {
            println!("    failed: {failure}");
        }
        if family.failures.len() > 5 {
            println!("    ... and {} more", family.failures.len() - 5);
        }
    }
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    println!(
        "suite {}: {} ({} instances, {} failures)",
        report.kind.name(),
        verdict,
        report.total_checked(),
        report.total_failures()
    );
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Normalize { json, expr } => {
            let element = eval_arg(&expr)?;
            if json {
                println!("{}", element_json(&element));
            } else {
                println!("{}", print_element(&element));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Equal {
            algebra,
            first,
            second,
        } => {
            let x = eval_arg(&first)?;
            let y = eval_arg(&second)?;
            let algebra = match algebra {
                AlgebraArg::Nt => Algebra::Nt,
                AlgebraArg::Qn => Algebra::Qn,
            };
            if equal(algebra, &x, &y) {
                println!("true");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("false");
                Ok(ExitCode::from(1))
            }
        }
        Command::Apply {
            model,
            vector,
            expr,
        } => {
            let element = eval_arg(&expr)?;
            match model {
                ModelArg::Qn => {
                    let k: BigInt = vector
                        .trim()
                        .parse()
                        .map_err(|_| format!("bad basis index '{vector}'"))?;
                    let image = apply_integer_basis(&element, &k);
                    println!("{}", print_integer_image(&image));
                }
                ModelArg::Nt => {
                    let v = parse_fock_vector(&vector)?;
                    let image = apply_fock_basis(&element, &v);
                    println!("{}", print_fock_image(&image));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { suite, max, seed } => {
            if max == 0 {
                return Err("--max must be at least 1".to_string());
            }
            let options = SuiteOptions {
                max_index: max,
                seed,
                ..SuiteOptions::default()
            };
            let report = relation_suite(suite.into(), &options);
            print_report(&report, max, seed);
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Laurent { op } => {
            let out = match op {
                LaurentOp::Transfer { m, poly } => {
                    let f = parse_poly(&poly).map_err(|e| e.to_string())?;
                    f.transfer(&level_arg(m)?)
                }
                LaurentOp::Condexp { m, poly } => {
                    let f = parse_poly(&poly).map_err(|e| e.to_string())?;
                    f.cond_exp(&level_arg(m)?)
                }
                LaurentOp::Inflate { m, poly } => {
                    let f = parse_poly(&poly).map_err(|e| e.to_string())?;
                    f.inflate(&level_arg(m)?)
                }
                LaurentOp::Inner { m, f, g } => {
                    let f = parse_poly(&f).map_err(|e| e.to_string())?;
                    let g = parse_poly(&g).map_err(|e| e.to_string())?;
                    f.star().mul(&g).transfer(&level_arg(m)?)
                }
            };
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
