//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on flag errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::constants::standard_constants;
use crate::error::Error;
use crate::lab::report;
use crate::lab::windows::{self, TURAN_RATIO};
use crate::lab::{abel_check, default_grid, golomb_check, Family, Lab, LabConfig, SetId};
use crate::sieve::{count_powerful, enumerate_powerful};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "divisum", version, about = "Divisor-sum laboratory")]
pub struct Cli {
    /// Worker threads for block-parallel passes
    #[arg(long, global = true, env = "DIVISUM_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,

    /// Sieve block length, a power of two in [2^16, 2^26]
    #[arg(long, global = true, env = "DIVISUM_BLOCK_LEN", value_parser = parse_block_len)]
    block_len: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Identities,
    Golomb,
    Abel,
    Turan,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Partial sums of one divisor-sum family
    Sum {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        xmax: u64,
        /// Checkpoints, e.g. `1e4,1e5,1000000`; defaults to half decades
        #[arg(long)]
        grid: Option<String>,
    },
    /// Exact census of an exceptional set
    Census {
        #[arg(long, value_parser = parse_set)]
        set: SetId,
        #[arg(long)]
        x: u64,
    },
    /// Constants with certified error bounds
    Constants {
        #[arg(long, default_value_t = 1e-9)]
        precision: f64,
    },
    /// Run one verification
    Verify {
        #[arg(long, value_enum)]
        check: Check,
        #[arg(long)]
        xmax: u64,
    },
    /// R(x) = S(x) log log x / x for S(x) = sum of 1/d(d(n))
    C3 {
        #[arg(long)]
        grid: String,
    },
    /// Count (or list) powerful numbers up to a bound
    Powerful {
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        list: bool,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| {
        let names: Vec<_> = Family::ALL.iter().map(|f| f.name().to_lowercase()).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}

fn parse_set(s: &str) -> Result<SetId, String> {
    s.parse().map_err(|e: Error| format!("{e}; expected one of b1, b2, b3"))
}

fn parse_block_len(s: &str) -> Result<u64, String> {
    let v: u64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_power_of_two() && ((1 << 16)..=(1 << 26)).contains(&v) {
        Ok(v)
    } else {
        Err(format!("{v} is not a power of two in [2^16, 2^26]"))
    }
}

/// Parses a comma-separated grid. Entries are integers (`_` separators
/// allowed) or integral scientific notation such as `1e4` or `2.5e5`.
pub fn parse_grid(spec: &str) -> Result<Vec<u64>, Error> {
    let bad = |item: &str| Error::InvalidArgument(format!("bad grid entry `{item}`"));
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let clean = item.replace('_', "");
            if let Ok(v) = clean.parse::<u64>() {
                return Ok(v);
            }
            let f: f64 = clean.parse().map_err(|_| bad(item))?;
            if f.is_finite() && f >= 0.0 && f.fract() == 0.0 && f < 1.8e19 {
                Ok(f as u64)
            } else {
                Err(bad(item))
            }
        })
        .collect()
}

fn decades(from_exp: u32, x_max: u64) -> Vec<u64> {
    let mut grid: Vec<u64> = (from_exp..20).map(|e| 10u64.pow(e)).take_while(|&x| x <= x_max).collect();
    if grid.last() != Some(&x_max) {
        grid.push(x_max);
    }
    grid
}

struct Outcome {
    body: String,
    passed: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, passed: true }
    }
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::ZeroInput
            | Error::InputTooLarge(_)
            | Error::InvalidArgument(_)
            | Error::GridBelowMinimum { .. }
            | Error::GridAboveMax { .. }
            | Error::GridNotIncreasing { .. }
            | Error::EmptyGrid
            | Error::InvalidRange { .. }
            | Error::PrecisionUnreachable { .. }
    )
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let mut config = LabConfig::default();
    if let Some(t) = cli.threads {
        config.threads = t as usize;
    }
    if let Some(b) = cli.block_len {
        config.block_len = b;
    }
    let fmt = cli.format;

    match &cli.command {
        Command::Sum { family, xmax, grid } => {
            let grid = match grid {
                Some(spec) => parse_grid(spec)?,
                None => default_grid(*xmax),
            };
            let series = Lab::new(config)?.accumulate(*family, *xmax, &grid)?;
            Ok(Outcome::ok(match fmt {
                Format::Csv => report::series_csv(&series),
                Format::Json => json(&series),
            }))
        }
        Command::Census { set, x } => {
            let r = Lab::new(config)?.census(*set, *x)?;
            let passed = r.verdict;
            let body = match fmt {
                Format::Csv => report::census_csv(std::slice::from_ref(&r)),
                Format::Json => json(&r),
            };
            Ok(Outcome { body, passed })
        }
        Command::Constants { precision } => {
            let table = standard_constants(*precision)?;
            Ok(Outcome::ok(match fmt {
                Format::Csv => report::constants_csv(&table),
                Format::Json => json(&report::constants_json(&table)),
            }))
        }
        Command::Verify { check, xmax } => verify(config, fmt, *check, *xmax),
        Command::C3 { grid } => {
            let grid = parse_grid(grid)?;
            let rows = Lab::new(config)?.c3_diagnostic(&grid)?;
            Ok(Outcome::ok(match fmt {
                Format::Csv => report::c3_csv(&rows),
                Format::Json => json(&rows),
            }))
        }
        Command::Powerful { bound, list } => {
            if *bound == 0 {
                return Err(Error::ZeroInput);
            }
            let body = if *list {
                let l = enumerate_powerful(*bound);
                match fmt {
                    Format::Csv => {
                        let mut s = String::from("value\n");
                        l.values.iter().for_each(|v| s.push_str(&format!("{v}\n")));
                        s
                    }
                    Format::Json => json(&l),
                }
            } else {
                let k = count_powerful(*bound);
                match fmt {
                    Format::Csv => format!("bound,count\n{bound},{k}\n"),
                    Format::Json => json(&serde_json::json!({ "bound": bound, "count": k })),
                }
            };
            Ok(Outcome::ok(body))
        }
    }
}

fn verify(config: LabConfig, fmt: Format, check: Check, xmax: u64) -> Result<Outcome, Error> {
    match check {
        Check::Identities => {
            let r = Lab::new(config)?.identity_scan(xmax)?;
            let passed = r.success();
            let body = match fmt {
                Format::Csv => report::identity_csv(&r),
                Format::Json => json(&r),
            };
            Ok(Outcome { body, passed })
        }
        Check::Golomb => {
            if xmax == 0 {
                return Err(Error::ZeroInput);
            }
            let rows = golomb_check(&decades(2, xmax))?;
            let passed = rows.iter().all(|r| r.verdict);
            let body = match fmt {
                Format::Csv => report::golomb_csv(&rows),
                Format::Json => json(&rows),
            };
            Ok(Outcome { body, passed })
        }
        Check::Abel => {
            let z = xmax as f64;
            let rows = [4.0, 100.0]
                .into_iter()
                .filter(|&y| y < z)
                .map(|y| abel_check(y, z))
                .collect::<Result<Vec<_>, _>>()?;
            if rows.is_empty() {
                return Err(Error::InvalidArgument("abel check needs xmax > 4".into()));
            }
            let passed = rows.iter().all(|r| r.agrees());
            let body = match fmt {
                Format::Csv => report::abel_csv(&rows),
                Format::Json => json(&rows),
            };
            Ok(Outcome { body, passed })
        }
        Check::Turan => {
            let reports = Lab::new(config)?.turan_scan(&decades(3, xmax))?;
            let rows: Vec<_> = reports
                .into_iter()
                .map(|r| {
                    let ok = r.ratio > 0.0 && windows::inside(TURAN_RATIO, r.ratio);
                    (r, ok)
                })
                .collect();
            let passed = rows.iter().all(|(_, ok)| *ok);
            let body = match fmt {
                Format::Csv => report::turan_csv(&rows),
                Format::Json => {
                    #[derive(Serialize)]
                    struct Row<'a> {
                        #[serde(flatten)]
                        report: &'a crate::lab::TuranReport,
                        verdict: bool,
                    }
                    json(&rows.iter().map(|(report, verdict)| Row { report, verdict: *verdict }).collect::<Vec<_>>())
                }
            };
            Ok(Outcome { body, passed })
        }
    }
}

/// Runs the CLI on `args` (program name first), writing the report to `out`
/// unless `--out` names a file.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };

    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return if usage_error(&e) { EXIT_USAGE } else { EXIT_VERIFY_FAILED };
        }
    };

    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.body),
        None => out.write_all(outcome.body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write report: {e}");
        return EXIT_VERIFY_FAILED;
    }

    if outcome.passed {
        EXIT_OK
    } else {
        let _ = writeln!(err, "verification failed");
        if cli.out.is_some() {
            let _ = err.write_all(outcome.body.as_bytes());
        }
        EXIT_VERIFY_FAILED
    }
}
