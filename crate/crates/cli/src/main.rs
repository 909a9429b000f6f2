//! `rmary`: counts restricted m-ary partitions and checks their congruences.
//!
//! Exit codes: 0 all checks passed, 1 a mathematical check failed (or the
//! cache is corrupt), 2 usage or configuration error, 3 resource budget
//! exceeded.

mod config;
mod report;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use rmary_core::series::{enumerate_partitions, ORACLE_LIMIT};
use rmary_core::symbolic::{valuation, TermKind};
use rmary_core::verify::{
    fit_lemma21_on, required_trunc, verify_theorem_on, CongruenceCase, DEFAULT_BUDGET,
};
use rmary_core::{
    brute_force_count, cross_check_recurrences, minimal_terms, restricted_series, s_table,
    substitute, theorem_divisor_check, theorem_modulus, Error, HFitResult, PartitionSpec,
    SeriesCache, TruncatedSeries,
};

use config::{Format, NumList, RunConfig, CACHE_DIR_ENV};
use report::{
    write_json, CrossCheckReport, FitReport, MinimalReport, STableReport, TermRow, VerifyReport,
};

#[derive(Debug, Parser)]
#[command(name = "rmary", version)]
#[command(about = "Restricted m-ary partition counts and congruence checks")]
struct Cli {
    #[command(flatten)]
    series: SeriesArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SeriesArgs {
    /// Maximum number of series coefficients any computation may request.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,

    /// Directory for cached generating-function prefixes.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,

    /// Do not read or write the series cache.
    #[arg(long, global = true)]
    no_cache: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// c_m(n) from the generating function.
    Count {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: usize,
    },
    /// c_m(n) from the brute-force oracle.
    Oracle {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: usize,
        /// Also list every partition (n <= 40).
        #[arg(long)]
        list: bool,
    },
    /// The change-of-basis table s[j][i].
    STable {
        #[arg(long)]
        m: u32,
        #[arg(long = "max-j")]
        max_j: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Minimal-valuation terms at level j, optionally evaluated at base m.
    Minimal {
        #[arg(long)]
        j: u32,
        #[arg(long)]
        m: Option<u32>,
    },
    /// Check c_m(m^(j+2) n + ... + m^2) ≡ 0 (mod m^j / c_j).
    Verify {
        /// Bases, e.g. `2..6` or `2,3,7`.
        #[arg(long)]
        m: NumList,
        /// Levels, e.g. `1..3`.
        #[arg(long)]
        j: NumList,
        #[arg(long = "n-max")]
        n_max: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Exact h-basis fit of the level-j subsequence.
    Fit {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        j: u32,
        /// Last n checked against the fit; defaults to 4j + 8.
        #[arg(long)]
        holdout: Option<u64>,
    },
    /// Fits at levels j and j+1 and checks the recurrences linking them.
    CrossCheck {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        holdout: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Passed = 0,
    CheckFailed = 1,
    Usage = 2,
    Budget = 3,
}

impl Status {
    fn from_checks(ok: bool) -> Self {
        if ok {
            Status::Passed
        } else {
            Status::CheckFailed
        }
    }
}

enum Failure {
    Usage(String),
    Core(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn status(&self) -> Status {
        match self {
            Failure::Usage(_) => Status::Usage,
            Failure::Core(Error::InvalidArgument(_)) | Failure::Core(Error::Io(_)) => Status::Usage,
            Failure::Core(Error::ResourceLimit { .. }) => Status::Budget,
            Failure::Core(_) => Status::CheckFailed,
            Failure::Io(_) => Status::Usage,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(msg) => msg.clone(),
            Failure::Core(e) => e.to_string(),
            Failure::Io(e) => e.to_string(),
        }
    }
}

/// Where series come from: computed fresh, or through the on-disk cache.
struct SeriesSource {
    cache: Option<SeriesCache>,
    budget: usize,
}

impl SeriesSource {
    fn new(budget: usize, cache_dir: Option<&PathBuf>) -> Self {
        Self {
            cache: cache_dir.map(SeriesCache::new),
            budget,
        }
    }

    fn series(&self, m: u32, trunc: usize) -> Result<TruncatedSeries, Error> {
        if trunc > self.budget {
            return Err(Error::ResourceLimit {
                needed: trunc as u64,
                limit: self.budget as u64,
            });
        }
        match &self.cache {
            Some(cache) => cache.get_or_compute(m, trunc),
            None => restricted_series(m, trunc),
        }
    }
}

fn holdout_or_default(j: u32, holdout: Option<u64>) -> u64 {
    holdout.unwrap_or_else(|| rmary_core::verify::min_holdout(j))
}

fn fit_with(source: &SeriesSource, m: u32, j: u32, holdout: u64) -> Result<HFitResult, Error> {
    let series = source.series(m, required_trunc(m, j, holdout)?)?;
    fit_lemma21_on(&series, m, j, holdout)
}

fn verify_sweep(source: &SeriesSource, config: &RunConfig) -> Result<Vec<CongruenceCase>, Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let per_base: Vec<Result<Vec<CongruenceCase>, Error>> = pool.install(|| {
        config
            .m_values
            .par_iter()
            .map(|&m| {
                let mut trunc = 0;
                for &j in &config.j_values {
                    trunc = trunc.max(required_trunc(m, j, config.n_max)?);
                }
                let series = source.series(m, trunc)?;
                let mut cases = Vec::new();
                for &j in &config.j_values {
                    cases.extend(verify_theorem_on(&series, m, j, config.n_max)?);
                }
                Ok(cases)
            })
            .collect()
    });
    let mut cases = Vec::new();
    for r in per_base {
        cases.extend(r?);
    }
    Ok(cases)
}

fn minimal_report(j: u32, m: Option<u32>) -> Result<(MinimalReport, bool), Error> {
    let table = minimal_terms(j)?;
    let s = match m {
        Some(m) => Some((s_table(m, j + 2)?, theorem_modulus(m, j)?)),
        None => None,
    };
    let mut all_divisible = true;
    let mut rows = |kind: TermKind| -> Result<Vec<TermRow>, Error> {
        (1..=table.columns(kind))
            .map(|i| {
                let p = table.get(kind, i).expect("column in range");
                let mut row = TermRow {
                    i,
                    monomial: p.to_string(),
                    valuation: valuation(p).to_string(),
                    value: None,
                    divisor: None,
                    divisible: None,
                };
                if let (Some((st, modulus)), Some(m)) = (&s, m) {
                    let divisible = theorem_divisor_check(p, j, m)?;
                    all_divisible &= divisible;
                    row.value = Some(substitute(p, st)?.to_string());
                    row.divisor = Some(modulus.to_string());
                    row.divisible = Some(divisible);
                }
                Ok(row)
            })
            .collect()
    };
    let (p, q, r, t) = (
        rows(TermKind::P)?,
        rows(TermKind::Q)?,
        rows(TermKind::R)?,
        rows(TermKind::T)?,
    );
    let closed_form = table.matches_closed_form();
    let gaps = table.gaps_hold();
    let overall_minimum = table.overall_minimum().map(|p| p.to_string());
    let ok = closed_form && gaps && overall_minimum.is_some() && all_divisible;
    let report = MinimalReport {
        j,
        m,
        p,
        q,
        r,
        t,
        closed_form,
        gaps,
        overall_minimum,
    };
    Ok((report, ok))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<Status, Failure> {
    let cache_dir = if cli.series.no_cache {
        None
    } else {
        cli.series.cache_dir
    };
    let source = SeriesSource::new(cli.series.budget, cache_dir.as_ref());
    match cli.command {
        Command::Count { m, n } => {
            let spec = PartitionSpec::new(m, n)?;
            let series = source.series(m, spec.n() + 1)?;
            writeln!(out, "{}", series.coeffs()[n])?;
            Ok(Status::Passed)
        }
        Command::Oracle { m, n, list } => {
            let spec = PartitionSpec::new(m, n)?;
            if n > ORACLE_LIMIT {
                return Err(Error::ResourceLimit {
                    needed: n as u64,
                    limit: ORACLE_LIMIT as u64,
                }
                .into());
            }
            writeln!(out, "{}", brute_force_count(spec)?)?;
            if list {
                for p in enumerate_partitions(spec)? {
                    let parts: Vec<String> = p.iter().map(u64::to_string).collect();
                    writeln!(out, "{}", parts.join("+"))?;
                }
            }
            Ok(Status::Passed)
        }
        Command::STable { m, max_j, format } => {
            STableReport::new(&s_table(m, max_j)?).write(format, out)?;
            Ok(Status::Passed)
        }
        Command::Minimal { j, m } => {
            let (report, ok) = minimal_report(j, m)?;
            write_json(&report, out)?;
            Ok(Status::from_checks(ok))
        }
        Command::Verify {
            m,
            j,
            n_max,
            format,
            jobs,
        } => {
            let config = RunConfig {
                m_values: m.0,
                j_values: j.0,
                n_max,
                budget: cli.series.budget,
                format,
                cache_dir,
                jobs,
            }
            .validate()
            .map_err(Failure::Usage)?;
            let source = SeriesSource::new(config.budget, config.cache_dir.as_ref());
            let report = VerifyReport::new(verify_sweep(&source, &config)?);
            report.write(config.format, out)?;
            Ok(Status::from_checks(report.summary.failed == 0))
        }
        Command::Fit { m, j, holdout } => {
            let fit = fit_with(&source, m, j, holdout_or_default(j, holdout))?;
            write_json(&FitReport::from(&fit), out)?;
            Ok(Status::from_checks(fit.holdout_verified))
        }
        Command::CrossCheck { m, j, holdout } => {
            let fit = fit_with(&source, m, j, holdout_or_default(j, holdout))?;
            let next = fit_with(&source, m, j + 1, holdout_or_default(j + 1, holdout))?;
            let ok = cross_check_recurrences(&fit, &next, &s_table(m, j + 2)?)?;
            let report = CrossCheckReport {
                m,
                j,
                ok,
                fit: FitReport::from(&fit),
                next: FitReport::from(&next),
            };
            write_json(&report, out)?;
            Ok(Status::from_checks(
                ok && fit.holdout_verified && next.holdout_verified,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let status = match run(cli, &mut out) {
        Ok(status) => status,
        Err(failure) => {
            eprintln!("rmary: {}", failure.message());
            failure.status()
        }
    };
    if let Err(e) = out.flush() {
        eprintln!("rmary: {e}");
    }
    ExitCode::from(status as u8)
}
