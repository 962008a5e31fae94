//! Batch verification over a range of primes, and report serialization.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::congruence::{CongruenceReport, CongruenceTarget, PrimeSession};
use crate::error::{Error, Result};
use crate::padic::prime::primes_in;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    JsonLines,
    Table,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "jsonl" | "json-lines" | "json" => Ok(OutputFormat::JsonLines),
            "table" => Ok(OutputFormat::Table),
            _ => Err(Error::InvalidConfig(format!("unknown format '{s}'"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub lo: u64,
    pub hi: u64,
    pub targets: Vec<CongruenceTarget>,
    /// Extra p-adic digits carried beyond each target's modulus.
    pub guard: u32,
    pub workers: usize,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    /// Per-target prime caps overriding [`CongruenceTarget::default_cap`].
    pub caps: BTreeMap<CongruenceTarget, u64>,
    pub timings: bool,
}

impl SweepConfig {
    pub fn new(lo: u64, hi: u64, targets: Vec<CongruenceTarget>) -> Result<Self> {
        let cfg = SweepConfig {
            lo,
            hi,
            targets,
            guard: 1,
            workers: rayon::current_num_threads(),
            out: None,
            format: OutputFormat::Csv,
            caps: BTreeMap::new(),
            timings: false,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.lo < 5 {
            return Err(Error::InvalidConfig(format!(
                "lower bound {} is below 5",
                self.lo
            )));
        }
        if self.hi < self.lo {
            return Err(Error::InvalidConfig(format!(
                "empty range {}:{}",
                self.lo, self.hi
            )));
        }
        if self.workers == 0 {
            return Err(Error::InvalidConfig(
                "worker count must be at least 1".into(),
            ));
        }
        Ok(())
    }

    pub fn cap(&self, target: CongruenceTarget) -> u64 {
        self.caps
            .get(&target)
            .copied()
            .unwrap_or_else(|| target.default_cap())
    }

    /// Targets that will run at `p`.
    pub fn targets_for(&self, p: u64) -> Vec<CongruenceTarget> {
        let mut ts: Vec<_> = self
            .targets
            .iter()
            .copied()
            .filter(|&t| t.applies_to(p) && p <= self.cap(t))
            .collect();
        ts.sort();
        ts.dedup();
        ts
    }
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    /// Sorted by prime, then target.
    pub reports: Vec<CongruenceReport>,
    pub primes: usize,
    pub elapsed: Duration,
}

impl SweepOutcome {
    pub fn passes(&self) -> usize {
        self.reports.iter().filter(|r| r.pass).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CongruenceReport> {
        self.reports.iter().filter(|r| !r.pass)
    }

    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }

    /// Distinct targets that produced at least one row.
    pub fn targets_run(&self) -> usize {
        let mut ts: Vec<_> = self.reports.iter().map(|r| r.target).collect();
        ts.sort();
        ts.dedup();
        ts.len()
    }

    pub fn summary(&self) -> String {
        format!(
            "{} primes, {} targets, {} checks: {} passed, {} failed in {:.2}s",
            self.primes,
            self.targets_run(),
            self.reports.len(),
            self.passes(),
            self.reports.len() - self.passes(),
            self.elapsed.as_secs_f64()
        )
    }
}

/// Evaluate every applicable target at every prime in the configured range.
/// Primes are processed concurrently; targets at one prime share a session.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutcome> {
    config.validate()?;
    let start = Instant::now();
    let primes = primes_in(config.lo, config.hi);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    let per_prime: Vec<Vec<CongruenceReport>> = pool.install(|| {
        primes
            .par_iter()
            .map(|&p| {
                let targets = config.targets_for(p);
                if targets.is_empty() {
                    return Ok(Vec::new());
                }
                PrimeSession::with_guard(p, config.guard)?.run_all(&targets)
            })
            .collect::<Result<_>>()
    })?;
    let mut reports: Vec<_> = per_prime.into_iter().flatten().collect();
    reports.sort_by_key(|r| (r.prime, r.target));
    Ok(SweepOutcome {
        reports,
        primes: primes.len(),
        elapsed: start.elapsed(),
    })
}

pub const CSV_HEADER: &str = "prime,target,modulus_exponent,lhs,rhs,pass,millis";

#[derive(Serialize)]
struct Row<'a> {
    prime: u64,
    target: &'a str,
    modulus_exponent: u32,
    lhs: u128,
    rhs: u128,
    pass: bool,
    millis: Option<u64>,
}

impl<'a> Row<'a> {
    fn new(r: &'a CongruenceReport, timings: bool) -> Self {
        Row {
            prime: r.prime,
            target: r.target.id(),
            modulus_exponent: r.modulus_exponent,
            lhs: r.lhs,
            rhs: r.rhs,
            pass: r.pass,
            millis: timings.then_some(r.millis),
        }
    }
}

/// Write reports in `format`. Without `timings` the millis column is left
/// empty so identical sweeps produce identical bytes.
pub fn write_reports(
    reports: &[CongruenceReport],
    format: OutputFormat,
    timings: bool,
    w: &mut dyn Write,
) -> io::Result<()> {
    match format {
        OutputFormat::Csv => {
            writeln!(w, "{CSV_HEADER}")?;
            for r in reports {
                let millis = if timings {
                    r.millis.to_string()
                } else {
                    String::new()
                };
                writeln!(
                    w,
                    "{},{},{},{},{},{},{}",
                    r.prime,
                    r.target.id(),
                    r.modulus_exponent,
                    r.lhs,
                    r.rhs,
                    r.pass,
                    millis
                )?;
            }
        }
        OutputFormat::JsonLines => {
            for r in reports {
                serde_json::to_writer(&mut *w, &Row::new(r, timings))?;
                writeln!(w)?;
            }
        }
        OutputFormat::Table => {
            writeln!(
                w,
                "{:>6}  {:<14} {:>2}  {:>20}  {:>20}  ok",
                "p", "target", "m", "lhs", "rhs"
            )?;
            for r in reports {
                writeln!(
                    w,
                    "{:>6}  {:<14} {:>2}  {:>20}  {:>20}  {}{}",
                    r.prime,
                    r.target.id(),
                    r.modulus_exponent,
                    r.lhs,
                    r.rhs,
                    if r.pass { "pass" } else { "FAIL" },
                    if timings {
                        format!("  {}ms", r.millis)
                    } else {
                        String::new()
                    }
                )?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use CongruenceTarget::*;

    #[test]
    fn rows_are_sorted_and_filtered() {
        let mut cfg = SweepConfig::new(5, 60, vec![Thm12FourK, Thm11FourK]).unwrap();
        cfg.workers = 3;
        let out = run_sweep(&cfg).unwrap();
        assert!(out.all_passed());
        let keys: Vec<_> = out.reports.iter().map(|r| (r.prime, r.target)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        // 15 primes in [5, 60], 6 of them ≡ 1 mod 3
        assert_eq!(out.primes, 15);
        assert_eq!(out.reports.len(), 15 + 6);
    }

    #[test]
    fn caps_limit_primes() {
        let mut cfg = SweepConfig::new(5, 100, vec![Conj1]).unwrap();
        cfg.caps.insert(Conj1, 20);
        let out = run_sweep(&cfg).unwrap();
        assert_eq!(
            out.reports.iter().map(|r| r.prime).collect::<Vec<_>>(),
            vec![5, 7, 11, 13, 17, 19]
        );
    }

    #[test]
    fn invalid_configs() {
        assert!(SweepConfig::new(4, 10, vec![]).is_err());
        assert!(SweepConfig::new(100, 5, vec![]).is_err());
    }

    #[test]
    fn csv_without_timings_is_stable() {
        let cfg = SweepConfig::new(5, 30, CongruenceTarget::ALL.to_vec()).unwrap();
        let render = || {
            let out = run_sweep(&cfg).unwrap();
            let mut buf = Vec::new();
            write_reports(&out.reports, OutputFormat::Csv, false, &mut buf).unwrap();
            buf
        };
        let a = render();
        assert_eq!(a, render());
        let text = String::from_utf8(a).unwrap();
        assert!(text.starts_with(CSV_HEADER));
        assert!(text.contains("\n5,THM11_4K,3,75,75,true,\n"));
    }

    #[test]
    fn jsonl_mirrors_csv_fields() {
        let cfg = SweepConfig::new(7, 7, vec![Thm11FourK]).unwrap();
        let out = run_sweep(&cfg).unwrap();
        let mut buf = Vec::new();
        write_reports(&out.reports, OutputFormat::JsonLines, false, &mut buf).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["target"], "THM11_4K");
        assert_eq!(v["lhs"], 149);
        assert!(v["millis"].is_null());
    }
}
