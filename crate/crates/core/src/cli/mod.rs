//! Command-line front end.
//!
//! [`run`] takes the argument vector and two writers and returns the exit
//! code, so the binary is a one-liner and every command can be driven from
//! tests. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success / invariant |
//! | 1 | not invariant |
//! | 2 | usage error |
//! | 3 | parse error (expression, exponent vector or group file) |
//! | 4 | engine error, or a failed verification |
//! | 5 | closure exceeded the element cap |
//! | 6 | group file could not be read |

mod expr;
mod group_file;
mod selfcheck;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

pub use expr::parse_polynomial;
pub use group_file::{Entry, GroupFileError, GroupSpecFile};
pub use selfcheck::{selfcheck, CheckOutcome};

use crate::error::Error;
use crate::group::{group_closure, MatrixGroup, DEFAULT_CLOSURE_CAP};
use crate::invariants::{
    invariance_witness, rationalize_invariant, reynolds, GeneratorKey, GeneratorStatus,
    RationalInvariant, Rewriter,
};
use crate::poly::ExponentVector;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_INVARIANT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_ENGINE: i32 = 4;
pub const EXIT_CAP: i32 = 5;
pub const EXIT_IO: i32 = 6;

#[derive(Debug, Parser)]
#[command(
    name = "invring",
    version,
    about = "Exact polynomial invariants of finite rational matrix groups"
)]
struct Cli {
    /// Maximum group order before the closure gives up (overrides the file)
    #[arg(long, global = true)]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum System {
    J,
    G,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the group order and all elements
    Closure { group: PathBuf },
    /// Average a polynomial over the group
    Reynolds {
        group: PathBuf,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Test whether a polynomial is invariant
    Check {
        group: PathBuf,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the orbit power sum table (j) or the resolvent coefficient table (g)
    Generators {
        group: PathBuf,
        #[arg(long, value_enum, default_value = "j")]
        system: System,
    },
    /// Rewrite an invariant in the generators and verify the result
    Rewrite {
        group: PathBuf,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value = "j")]
        basis: System,
    },
    /// Reduce an orbit power sum J[mu] with |mu| > h, e.g. `3,0`
    Reduce { group: PathBuf, mu: String },
    /// Turn a rational invariant into a quotient of polynomial invariants
    Rationalize {
        group: PathBuf,
        #[arg(allow_hyphen_values = true)]
        numerator: String,
        #[arg(allow_hyphen_values = true)]
        denominator: String,
    },
    /// Run the identity checks and property suite on a group
    Selfcheck { group: PathBuf },
}

#[derive(Debug)]
enum Failure {
    Io(String),
    Parse(String),
    Engine(Error),
    Verification(String),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Io(_) => EXIT_IO,
            Failure::Parse(_) => EXIT_PARSE,
            Failure::Engine(Error::NotFiniteWithinCap { .. }) => EXIT_CAP,
            Failure::Engine(Error::Parse { .. }) => EXIT_PARSE,
            Failure::Engine(_) | Failure::Verification(_) => EXIT_ENGINE,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Io(m) | Failure::Parse(m) | Failure::Verification(m) => m.clone(),
            Failure::Engine(e) => e.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

/// Runs one command. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{}", text)
            } else {
                write!(out, "{}", text)
            };
            return code;
        }
    };
    let mut report = String::new();
    let result = dispatch(&cli, &mut report);
    let _ = out.write_all(report.as_bytes());
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.exit_code()
        }
    }
}

fn load_group(path: &Path, cap: Option<usize>) -> Result<MatrixGroup, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {}", path.display(), e)))?;
    let spec = GroupSpecFile::from_json(&text).map_err(|e| Failure::Parse(e.to_string()))?;
    let gens = spec.matrices().map_err(|e| Failure::Parse(e.to_string()))?;
    let cap = cap.or(spec.closure_cap).unwrap_or(DEFAULT_CLOSURE_CAP);
    Ok(group_closure(&gens, Some(spec.dimension), cap)?)
}

fn parse_mu(text: &str, n: usize) -> Result<ExponentVector, Failure> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    let parts: Result<Vec<u32>, _> = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(str::parse::<u32>)
        .collect();
    match parts {
        Ok(v) if v.len() == n => Ok(ExponentVector::new(v)),
        Ok(v) => Err(Failure::Parse(format!(
            "exponent vector has {} entries, expected {}",
            v.len(),
            n
        ))),
        Err(_) => Err(Failure::Parse(format!(
            "'{}' is not a list of non-negative integers",
            text
        ))),
    }
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<i32, Failure> {
    use std::fmt::Write as _;
    match &cli.command {
        Command::Closure { group } => {
            let g = load_group(group, cli.cap)?;
            let _ = writeln!(out, "order h = {}", g.order());
            for (k, m) in g.elements().iter().enumerate() {
                let _ = writeln!(out, "A{} = {}", k + 1, m);
            }
            Ok(EXIT_OK)
        }
        Command::Reynolds { group, expr } => {
            let g = load_group(group, cli.cap)?;
            let f = parse_polynomial(expr, g.dim())?;
            let _ = writeln!(out, "{}", reynolds(&g, &f)?);
            Ok(EXIT_OK)
        }
        Command::Check { group, expr } => {
            let g = load_group(group, cli.cap)?;
            let f = parse_polynomial(expr, g.dim())?;
            match invariance_witness(&g, &f)? {
                None => {
                    let _ = writeln!(out, "invariant");
                    Ok(EXIT_OK)
                }
                Some(k) => {
                    let _ = writeln!(out, "not invariant: moved by A{}", k + 1);
                    Ok(EXIT_NOT_INVARIANT)
                }
            }
        }
        Command::Generators { group, system } => {
            let g = load_group(group, cli.cap)?;
            let mut rw = Rewriter::new(&g)?;
            match system {
                System::J => {
                    let sys = rw.j_system();
                    let _ = writeln!(
                        out,
                        "J-system: {} generators, |mu| <= h = {}",
                        sys.len(),
                        sys.order
                    );
                    for gen in &sys.generators {
                        let key = GeneratorKey::J(gen.sum.mu.clone());
                        let _ = match &gen.status {
                            GeneratorStatus::Distinct => {
                                writeln!(out, "{} = {}", key, gen.sum.value)
                            }
                            GeneratorStatus::Zero => writeln!(out, "{} = 0  # zero", key),
                            GeneratorStatus::DuplicateOf(rep) => writeln!(
                                out,
                                "{} = {}  # duplicate of {}",
                                key,
                                gen.sum.value,
                                GeneratorKey::J(rep.clone())
                            ),
                        };
                    }
                }
                System::G => {
                    let table = rw.resolvent();
                    let _ = writeln!(
                        out,
                        "G-system: {} nonzero resolvent coefficients, h = {}",
                        table.len(),
                        table.order()
                    );
                    for (key, value) in table.entries() {
                        let _ = writeln!(out, "{} = {}", key, value);
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Rewrite { group, expr, basis } => {
            let g = load_group(group, cli.cap)?;
            let f = parse_polynomial(expr, g.dim())?;
            let mut rw = Rewriter::new(&g)?;
            let cert = match basis {
                System::J => rw.rewrite_in_j(&f)?,
                System::G => rw.rewrite_in_g(&f)?,
            };
            let _ = writeln!(out, "certificate: {}", cert);
            verify(out, rw.realize(&cert)? == f)
        }
        Command::Reduce { group, mu } => {
            let g = load_group(group, cli.cap)?;
            let mu = parse_mu(mu, g.dim())?;
            let mut rw = Rewriter::new(&g)?;
            let cert = rw.reduce_high_j(&mu)?;
            let _ = writeln!(out, "{} = {}", GeneratorKey::J(mu.clone()), cert);
            let expected = rw.orbit_sum(&mu)?.clone();
            verify(out, rw.realize(&cert)? == expected)
        }
        Command::Rationalize {
            group,
            numerator,
            denominator,
        } => {
            let g = load_group(group, cli.cap)?;
            let w = RationalInvariant::new(
                parse_polynomial(numerator, g.dim())?,
                parse_polynomial(denominator, g.dim())?,
            )?;
            let r = rationalize_invariant(&g, &w)?;
            let _ = writeln!(out, "P = {}", r.numerator);
            let _ = writeln!(out, "Q = {}", r.denominator);
            Ok(EXIT_OK)
        }
        Command::Selfcheck { group } => {
            let g = load_group(group, cli.cap)?;
            let outcomes = selfcheck(&g)?;
            let mut failed = 0;
            for o in &outcomes {
                let _ = writeln!(out, "{} {}", if o.passed { "ok  " } else { "FAIL" }, o.name);
                if !o.passed {
                    failed += 1;
                }
            }
            if failed == 0 {
                let _ = writeln!(out, "selfcheck passed ({} checks)", outcomes.len());
                Ok(EXIT_OK)
            } else {
                Err(Failure::Verification(format!(
                    "{} of {} checks failed",
                    failed,
                    outcomes.len()
                )))
            }
        }
    }
}

fn verify(out: &mut String, matches: bool) -> Result<i32, Failure> {
    use std::fmt::Write as _;
    if matches {
        let _ = writeln!(out, "verified: realization matches");
        Ok(EXIT_OK)
    } else {
        let _ = writeln!(out, "verification FAILED: realization differs");
        Err(Failure::Verification(
            "certificate does not realize the input".into(),
        ))
    }
}
