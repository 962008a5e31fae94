use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use domb_verify::congruence::CongruenceTarget;
use domb_verify::domb::domb_sequence;
use domb_verify::identities::check_all;
use domb_verify::quadform::decompose_x2_3y2;
use domb_verify::sweep::{run_sweep, write_reports, OutputFormat, SweepConfig};
use domb_verify::Error;

#[derive(Parser)]
#[command(
    name = "domb-verify",
    version,
    about = "Verify Domb-number supercongruences prime by prime"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check congruences over a range of primes.
    Verify {
        /// Comma-separated groups (thm1.1, thm1.2, thm1.3, conj1, conj2, musun, lemmas, all) or target ids.
        #[arg(long, default_value = "all")]
        targets: String,
        /// Inclusive prime range `lo:hi`.
        #[arg(long, default_value = "5:200")]
        primes: String,
        /// Guard digits beyond each modulus.
        #[arg(long, default_value_t = 1)]
        guard: u32,
        /// Worker threads; defaults to the number of CPUs.
        #[arg(long)]
        workers: Option<usize>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// csv, jsonl or table.
        #[arg(long, default_value = "csv")]
        format: String,
        /// Prime cap: `N` for every target or `TARGET=N`; repeatable.
        #[arg(long)]
        cap: Vec<String>,
        /// Fill in the millis column.
        #[arg(long)]
        timings: bool,
    },
    /// Check the finite identity catalog in exact arithmetic.
    Identities {
        #[arg(long, default_value_t = 40)]
        max_n: u64,
    },
    /// Print D_0 through D_n.
    Domb {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Write a prime as x^2 + 3y^2.
    Decompose { p: u64 },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_range(s: &str) -> Result<(u64, u64), Error> {
    let bad = || Error::InvalidConfig(format!("expected lo:hi, got '{s}'"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo = lo.trim().parse().map_err(|_| bad())?;
    let hi = hi.trim().parse().map_err(|_| bad())?;
    if hi < lo {
        return Err(Error::InvalidConfig(format!("empty range {lo}:{hi}")));
    }
    Ok((lo, hi))
}

fn parse_caps(specs: &[String]) -> Result<BTreeMap<CongruenceTarget, u64>, Error> {
    let mut caps = BTreeMap::new();
    for spec in specs {
        let bad = || Error::InvalidConfig(format!("bad cap '{spec}'"));
        match spec.split_once('=') {
            Some((name, n)) => {
                let n = n.trim().parse().map_err(|_| bad())?;
                for t in CongruenceTarget::parse_group(name)? {
                    caps.insert(t, n);
                }
            }
            None => {
                let n = spec.trim().parse().map_err(|_| bad())?;
                for t in CongruenceTarget::ALL {
                    caps.insert(t, n);
                }
            }
        }
    }
    Ok(caps)
}

fn parse_targets(s: &str) -> Result<Vec<CongruenceTarget>, Error> {
    let mut out = Vec::new();
    for name in s.split(',').filter(|n| !n.trim().is_empty()) {
        out.extend(CongruenceTarget::parse_group(name)?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    targets: &str,
    primes: &str,
    guard: u32,
    workers: Option<usize>,
    out: Option<PathBuf>,
    format: &str,
    cap: &[String],
    timings: bool,
) -> ExitCode {
    let parsed = (|| {
        let (lo, hi) = parse_range(primes)?;
        Ok::<_, Error>((
            lo,
            hi,
            parse_targets(targets)?,
            format.parse::<OutputFormat>()?,
            parse_caps(cap)?,
        ))
    })();
    let (lo, hi, targets, format, caps) = match parsed {
        Ok(v) => v,
        Err(e) => return usage(e),
    };
    let lo = lo.max(5);
    let reports = if hi < lo {
        eprintln!("warning: no primes >= 5 in {primes}");
        Vec::new()
    } else {
        let mut cfg = match SweepConfig::new(lo, hi, targets) {
            Ok(c) => c,
            Err(e) => return usage(e),
        };
        cfg.guard = guard;
        cfg.caps = caps;
        cfg.timings = timings;
        if let Some(w) = workers {
            cfg.workers = w;
        }
        if let Err(e) = cfg.validate() {
            return usage(e);
        }
        match run_sweep(&cfg) {
            Ok(outcome) => {
                eprintln!("{}", outcome.summary());
                for r in outcome.failures() {
                    eprintln!(
                        "FAIL p={} {} mod p^{}: lhs={} rhs={}{}",
                        r.prime,
                        r.target,
                        r.modulus_exponent,
                        r.lhs,
                        r.rhs,
                        r.detail
                            .as_deref()
                            .map(|d| format!(" ({d})"))
                            .unwrap_or_default()
                    );
                }
                outcome.reports
            }
            Err(e) => return usage(e),
        }
    };
    let written = match &out {
        Some(path) => File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            write_reports(&reports, format, timings, &mut w)?;
            w.flush()
        }),
        None => {
            let mut w = io::stdout().lock();
            write_reports(&reports, format, timings, &mut w)
        }
    };
    if let Err(e) = written {
        eprintln!("error: writing report: {e}");
        return ExitCode::from(2);
    }
    if reports.iter().all(|r| r.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn identities(max_n: u64) -> ExitCode {
    if max_n == 0 {
        return usage("--max-n must be at least 1");
    }
    let mut ok = true;
    for r in check_all(max_n) {
        match &r.failure {
            None => println!("{:<14} pass  ({} cases, n <= {})", r.id, r.cases, r.max_n),
            Some(f) => {
                ok = false;
                println!("{:<14} FAIL  {f}", r.id);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Verify {
            targets,
            primes,
            guard,
            workers,
            out,
            format,
            cap,
            timings,
        } => verify(
            &targets, &primes, guard, workers, out, &format, &cap, timings,
        ),
        Command::Identities { max_n } => identities(max_n),
        Command::Domb { n } => {
            if n < 0 {
                return usage("--n must be non-negative");
            }
            let mut out = io::stdout().lock();
            for d in domb_sequence(n as u64) {
                if writeln!(out, "{d}").is_err() {
                    return ExitCode::from(2);
                }
            }
            ExitCode::SUCCESS
        }
        Command::Decompose { p } => match decompose_x2_3y2(p) {
            Ok(q) => {
                println!("{p} = {}^2 + 3*{}^2", q.x, q.y);
                ExitCode::SUCCESS
            }
            Err(Error::NotRepresentable(_)) => {
                println!("{p} is not representable as x^2 + 3y^2");
                ExitCode::SUCCESS
            }
            Err(e) => usage(e),
        },
    }
}
