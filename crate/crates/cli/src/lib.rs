//! Command line front end.
//!
//! Exit codes: `0` success, `2` usage or argument errors, `3` a verification
//! or fixture mismatch. Diagnostics go to the error stream.

use std::io::Write;

use cayley_polygons::catalan::CatalanTable;
use cayley_polygons::full_count::{full_asymptotic, full_count_closed, full_min_n, kernel_check};
use cayley_polygons::oracle::{verify_family, OracleConfig};
use cayley_polygons::path_count::{
    gen_vector_path, gen_vector_path_additive, path_asymptotic, path_count_closed, path_count_recurrence,
    path_count_series,
};
use cayley_polygons::full_count::full_count_series;
use cayley_polygons::scalar::ratio_f64;
use cayley_polygons::{Count, Estimate};
use clap::{Parser, Subcommand, ValueEnum};

pub mod oeis;
pub mod table;

use table::{coefficients, counts, CountTable, FamilyName};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cayley-polygons", version, about = "Exact counts of connected components of the order-2 Cayley tree")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print C_0 ..= C_max, one per line.
    Catalan {
        #[arg(long)]
        max: usize,
    },
    /// Print one exact count.
    Count {
        #[arg(long, value_enum)]
        family: FamilyName,
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
    },
    /// Print counts for a range of n.
    Table {
        #[arg(long, value_enum)]
        family: FamilyName,
        #[arg(short)]
        m: usize,
        #[arg(long)]
        n_from: usize,
        #[arg(long)]
        n_to: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        /// Include the generating vector (JSON only).
        #[arg(long)]
        coefficients: bool,
    },
    /// Print the generating vector of a family.
    Coeffs {
        #[arg(long, value_enum)]
        family: FamilyName,
        #[arg(short)]
        m: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: TableFormat,
    },
    /// Check the closed forms against the convolution (and recurrence),
    /// optionally against the enumeration oracle.
    Verify {
        #[arg(long, value_enum)]
        family: FamilyName,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_m: usize,
        #[arg(long)]
        oracle: bool,
    },
    /// Compare the embedded integer-sequence fixtures with computed tables.
    OeisCheck,
    /// Print exact counts next to their leading-order estimates.
    Asymptotics {
        #[arg(long, value_enum)]
        family: FamilyName,
        #[arg(short)]
        m: usize,
        #[arg(long)]
        n_from: usize,
        #[arg(long)]
        n_to: usize,
    },
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error(transparent)]
    Count(#[from] cayley_polygons::Error),
    #[error(transparent)]
    Table(#[from] table::TableError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0} mismatch(es)")]
    Mismatch(usize),
}

/// Parse `args` (including the program name) and execute.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Mismatch(k)) => {
            let _ = writeln!(err, "verification failed: {k} mismatch(es)");
            EXIT_MISMATCH
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Catalan { max } => {
            let t = CatalanTable::<Count>::new(max)?;
            for c in t.values() {
                writeln!(out, "{c}")?;
            }
        }
        Command::Count { family, m, n } => {
            let mut c = counts(family, m, n, n)?;
            writeln!(out, "{}", c.pop().map(|(_, c)| c).unwrap_or_default())?;
        }
        Command::Table { family, m, n_from, n_to, format, coefficients } => {
            let t = CountTable::build(family, m, n_from, n_to, coefficients)?;
            match format {
                TableFormat::Csv => write!(out, "{}", t.to_csv()?)?,
                TableFormat::Json => writeln!(out, "{}", t.to_json()?)?,
            }
        }
        Command::Coeffs { family, m, format } => {
            let a = coefficients(family, m)?;
            match format {
                TableFormat::Json => {
                    let items: Vec<String> = a.iter().map(ToString::to_string).collect();
                    writeln!(out, "[{}]", items.join(","))?;
                }
                TableFormat::Csv => {
                    writeln!(out, "index,coefficient")?;
                    for (i, c) in a.iter().enumerate() {
                        writeln!(out, "{i},{c}")?;
                    }
                }
            }
        }
        Command::Verify { family, max_n, max_m, oracle } => {
            let mismatches = verify_identities(family, max_n, max_m, out, err)?
                + if oracle { verify_oracle(family, max_n, max_m, out, err)? } else { 0 };
            if mismatches > 0 {
                return Err(Failure::Mismatch(mismatches));
            }
        }
        Command::OeisCheck => {
            let mut bad = 0;
            for r in oeis::check_all()? {
                match &r.mismatch {
                    None => writeln!(out, "{} ok", r.id)?,
                    Some((n, want, got)) => {
                        bad += 1;
                        writeln!(out, "{} MISMATCH", r.id)?;
                        writeln!(err, "{}: at n={n} expected {want}, computed {got}", r.id)?;
                    }
                }
            }
            if bad > 0 {
                return Err(Failure::Mismatch(bad));
            }
        }
        Command::Asymptotics { family, m, n_from, n_to } => {
            let min = cayley_polygons::Family::from(family).min_n(m.max(2));
            if n_from < min {
                return Err(Failure::Usage(format!("n-from must be at least {min} for m = {m}")));
            }
            writeln!(out, "n,exact,estimate,ratio")?;
            for (n, exact) in counts(family, m, n_from, n_to)? {
                let estimate: Estimate = match family {
                    FamilyName::Full => full_asymptotic(n, m)?,
                    FamilyName::Path => path_asymptotic(n, m)?,
                };
                let ratio = ratio_f64(&exact, &Count::from(1)) / estimate;
                writeln!(out, "{n},{exact},{estimate:e},{ratio:.6}")?;
            }
        }
    }
    Ok(())
}

fn verify_identities(
    family: FamilyName,
    max_n: usize,
    max_m: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<usize, Failure> {
    let mut bad = 0;
    let mut checked = 0;
    for m in 2..=max_m {
        match family {
            FamilyName::Full => {
                if !kernel_check(m)? {
                    bad += 1;
                    writeln!(err, "kernel identity fails at m={m}")?;
                }
                let series = full_count_series::<Count>(m, max_n)?;
                for n in full_min_n(m)..=max_n {
                    checked += 1;
                    let closed: Count = full_count_closed(n, m)?;
                    if closed != series[n] {
                        bad += 1;
                        writeln!(err, "full m={m} n={n}: closed {closed} != convolution {}", series[n])?;
                    }
                }
            }
            FamilyName::Path => {
                let v = gen_vector_path::<Count>(m)?;
                if !v.alternates() || v.magnitudes() != gen_vector_path_additive::<Count>(m)? {
                    bad += 1;
                    writeln!(err, "generating vector routes disagree at m={m}")?;
                }
                let series = path_count_series::<Count>(m, max_n)?;
                for n in m..=max_n {
                    checked += 1;
                    let closed: Count = path_count_closed(n, m)?;
                    let rec: Count = path_count_recurrence(n, m)?;
                    if closed != series[n] || rec != series[n] {
                        bad += 1;
                        writeln!(
                            err,
                            "path m={m} n={n}: closed {closed}, recurrence {rec}, convolution {}",
                            series[n]
                        )?;
                    }
                }
            }
        }
    }
    writeln!(out, "identities: {checked} points checked, {bad} mismatch(es)")?;
    Ok(bad)
}

fn verify_oracle(
    family: FamilyName,
    max_n: usize,
    max_m: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<usize, Failure> {
    let config = OracleConfig::from_env()?;
    let report = verify_family(family.into(), max_n, max_m, &config)?;
    for p in &report.points {
        writeln!(
            out,
            "oracle m={} n={} oracle={} formula={} {}",
            p.m,
            p.n,
            p.oracle,
            p.convolution,
            if p.matched() { "ok" } else { "MISMATCH" }
        )?;
    }
    let bad = report.mismatches().count();
    for p in report.mismatches() {
        writeln!(err, "oracle mismatch at m={} n={}: {} vs {} / {}", p.m, p.n, p.oracle, p.convolution, p.closed)?;
    }
    writeln!(out, "oracle: {} points checked, {bad} mismatch(es)", report.points.len())?;
    Ok(bad)
}
