//! Finite combinatorial identities checked in exact rational arithmetic.
//!
//! Each identity is evaluated on both sides over a parameter range; a pass
//! is therefore a proof for that range.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::domb::{domb_exact, domb_via_four_powers, domb_via_sixteen_powers};
use crate::error::Error;
use crate::exact::{binomial, binomial_rational, harmonic, int, pochhammer};
use crate::padic::{rational, RationalExact};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityId {
    I1,
    I2,
    I3,
    I4,
    I5,
    I6,
    I7,
    I8,
    I9,
    I10,
    I11,
    I12,
    I13,
    I14,
    Cyid,
    CzTransform,
    SunTransform,
}

use IdentityId::*;

impl IdentityId {
    pub const ALL: [IdentityId; 17] = [
        I1,
        I2,
        I3,
        I4,
        I5,
        I6,
        I7,
        I8,
        I9,
        I10,
        I11,
        I12,
        I13,
        I14,
        Cyid,
        CzTransform,
        SunTransform,
    ];

    pub fn id(self) -> &'static str {
        match self {
            I1 => "I1",
            I2 => "I2",
            I3 => "I3",
            I4 => "I4",
            I5 => "I5",
            I6 => "I6",
            I7 => "I7",
            I8 => "I8",
            I9 => "I9",
            I10 => "I10",
            I11 => "I11",
            I12 => "I12",
            I13 => "I13",
            I14 => "I14",
            Cyid => "CYID",
            CzTransform => "CZ_TRANSFORM",
            SunTransform => "SUN_TRANSFORM",
        }
    }

    /// Every `(n, j)` checked for a given `max_n`. The second parameter is
    /// `j` for the binomial-sum families and `k` for `CYID`.
    pub fn cases(self, max_n: u64) -> Vec<(u64, Option<u64>)> {
        let ns = 0..=max_n;
        match self {
            I1 | I6 | I11 | I13 => ns
                .flat_map(|n| (0..=n / 2).map(move |j| (n, Some(j))))
                .collect(),
            I10 | I12 | I14 => ns
                .flat_map(|n| (0..=n).map(move |j| (n, Some(j))))
                .collect(),
            Cyid => ns
                .flat_map(|n| (0..=max_n).map(move |k| (n, Some(k))))
                .collect(),
            _ => ns.map(|n| (n, None)).collect(),
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.id())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        IdentityId::ALL
            .into_iter()
            .find(|i| i.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidConfig(format!("unknown identity `{s}`")))
    }
}

/// One side-by-side comparison inside a case.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub label: &'static str,
    pub lhs: RationalExact,
    pub rhs: RationalExact,
}

impl Comparison {
    fn new(label: &'static str, lhs: RationalExact, rhs: RationalExact) -> Self {
        Comparison { label, lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityFailure {
    pub n: u64,
    pub j: Option<u64>,
    pub comparison: Comparison,
}

impl fmt::Display for IdentityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n = {}", self.n)?;
        if let Some(j) = self.j {
            write!(f, ", j = {j}")?;
        }
        let c = &self.comparison;
        write!(f, " ({}): {} != {}", c.label, c.lhs, c.rhs)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub max_n: u64,
    pub cases: usize,
    pub failure: Option<IdentityFailure>,
}

impl IdentityReport {
    pub fn pass(&self) -> bool {
        self.failure.is_none()
    }
}

fn c(n: i64, k: i64) -> RationalExact {
    RationalExact::from_integer(binomial(n, k))
}

fn sum(range: impl Iterator<Item = i64>, f: impl Fn(i64) -> RationalExact) -> RationalExact {
    range.fold(RationalExact::zero(), |acc, k| acc + f(k))
}

fn prod(range: impl Iterator<Item = i64>, f: impl Fn(i64) -> RationalExact) -> RationalExact {
    range.fold(RationalExact::one(), |acc, k| acc * f(k))
}

fn sign(k: i64) -> RationalExact {
    int(if k % 2 == 0 { 1 } else { -1 })
}

/// `(a)_n / (b)_n`.
fn poch_ratio(a: (i64, i64), b: (i64, i64), n: u64) -> RationalExact {
    pochhammer(&rational(a.0, a.1), n) / pochhammer(&rational(b.0, b.1), n)
}

/// `C(n,k) C(n+k,k) (-1)^k`, the kernel shared by I2, I5, I7 and I8.
fn kernel(n: i64, k: i64) -> RationalExact {
    c(n, k) * c(n + k, k) * sign(k)
}

/// Both sides of every comparison for one case.
pub fn evaluate(id: IdentityId, n: u64, j: Option<u64>) -> Vec<Comparison> {
    let ni = n as i64;
    let j = j.unwrap_or(0) as i64;
    let r = |a: i64, b: i64| rational(a, b);
    match id {
        I1 => vec![Comparison::new(
            "identity",
            sum(2 * j..ni, |k| c(k + j, 3 * j)),
            c(ni + j, 3 * j + 1),
        )],
        I2 => {
            // ∏_{k≤n} (3k-1)/(3k-2) and the inner ∏_{i≤k} (3i-2)/(3i-1)
            let outer = prod(1..=ni, |k| r(3 * k - 1, 3 * k - 2));
            let inner = sum(1..=ni, |k| {
                prod(1..=k, |i| r(3 * i - 2, 3 * i - 1)) / int(k)
            });
            let lhs = sum(0..=ni, |k| {
                kernel(ni, k) * (harmonic(k as u64, 1) - harmonic(2 * k as u64, 1)) / int(3 * k + 1)
            });
            let inner_poch = sum(1..=ni, |k| poch_ratio((1, 3), (2, 3), k as u64) / int(k));
            vec![
                Comparison::new("identity", lhs, outer.clone() * &inner / int(3 * ni + 1)),
                Comparison::new("pochhammer form", outer, poch_ratio((2, 3), (1, 3), n)),
                Comparison::new("inner pochhammer form", inner, inner_poch),
            ]
        }
        I3 => {
            let lhs = sum(1..=ni, |rr| {
                c(ni, rr) * sign(rr) / int(rr) * sum(1..=rr, |k| r(1, k * (3 * k - 1)))
            });
            let rhs = harmonic(n, 2)
                - sum(1..=ni, |k| {
                    sign(k) / (int(k * k) * binomial_rational(&r(-2, 3), k as u64))
                });
            vec![Comparison::new("identity", lhs, rhs)]
        }
        I4 => {
            let a = r(-1, 3);
            let lhs = sum(1..=ni, |k| {
                binomial_rational(&a, (2 * ni - k) as u64) * binomial_rational(&a, (k - 1) as u64)
            });
            let p = prod(1..=ni, |k| {
                r((3 * k - 2) * (6 * k - 1), 9 * k * (2 * k - 1))
            });
            let poch = pochhammer(&r(1, 3), n) * pochhammer(&r(5, 6), n)
                / (pochhammer(&r(1, 1), n) * pochhammer(&r(1, 2), n));
            vec![
                Comparison::new("identity", lhs, -r(3 * ni, 6 * ni - 1) * &p),
                Comparison::new("pochhammer form", p, poch),
            ]
        }
        I5 => {
            let lhs = sum(0..=ni, |k| kernel(ni, k) / int(3 * k + 1));
            let p = prod(1..=ni, |k| r(3 * k - 1, 3 * k - 2));
            vec![
                Comparison::new("identity", lhs, p.clone() / int(3 * ni + 1)),
                Comparison::new("pochhammer form", p, poch_ratio((2, 3), (1, 3), n)),
            ]
        }
        I6 => vec![Comparison::new(
            "identity",
            sum(2 * j..ni, |k| int(3 * k + 2) * c(k + j, 3 * j)),
            r((3 * ni + 1) * (3 * j + 1), 3 * j + 2) * c(ni + j, 3 * j + 1),
        )],
        I7 => {
            let lhs = sum(0..=ni, |k| kernel(ni, k) / int(3 * k + 2));
            let p = prod(1..=ni, |k| r(3 * k - 2, 3 * k - 1));
            vec![
                Comparison::new("identity", lhs, p.clone() / int(3 * ni + 2)),
                Comparison::new("pochhammer form", p, poch_ratio((1, 3), (2, 3), n)),
            ]
        }
        I8 => {
            // the summand carries H_{2k} - H_k
            let lhs = sum(0..=ni, |k| {
                kernel(ni, k) * (harmonic(2 * k as u64, 1) - harmonic(k as u64, 1)) / int(3 * k + 2)
            });
            let outer = prod(1..=ni, |k| r(3 * k - 2, 3 * k - 1));
            let inner = sum(1..=ni, |k| {
                prod(1..=k, |i| r(3 * i - 1, 3 * i - 2)) / int(k)
            });
            let inner_poch = sum(1..=ni, |k| poch_ratio((2, 3), (1, 3), k as u64) / int(k));
            vec![
                Comparison::new("identity", lhs, -(outer.clone() * &inner) / int(3 * ni + 2)),
                Comparison::new("pochhammer form", outer, poch_ratio((1, 3), (2, 3), n)),
                Comparison::new("inner pochhammer form", inner, inner_poch),
            ]
        }
        I9 => {
            let a = r(-2, 3);
            let lhs = sum(1..=ni, |k| {
                binomial_rational(&a, (2 * ni - k) as u64) * binomial_rational(&a, (k - 1) as u64)
            });
            let p = prod(1..=ni, |k| {
                r((3 * k - 1) * (6 * k - 5), 9 * k * (2 * k - 1))
            });
            let poch = pochhammer(&r(2, 3), n) * pochhammer(&r(1, 6), n)
                / (pochhammer(&r(1, 1), n) * pochhammer(&r(1, 2), n));
            vec![
                Comparison::new("identity", lhs, int(-3 * ni) * &p),
                Comparison::new("pochhammer form", p, poch),
            ]
        }
        I10 => vec![Comparison::new(
            "identity",
            sum(j..ni, |k| int(3 * k + 1) * c(k + 2 * j, 3 * j)),
            r((3 * ni - 1) * (3 * j + 1), 3 * j + 2) * c(ni + 2 * j, 3 * j + 1),
        )],
        I11 => {
            let num =
                1 - j * j - ni * (2 * j + 3) * (3 * j + 1) + ni * ni * (3 * j + 1) * (3 * j + 2);
            vec![Comparison::new(
                "identity",
                sum(2 * j..ni, |k| int(k * k) * c(k + j, 3 * j)),
                r(num, (3 * j + 2) * (3 * j + 3)) * c(ni + j, 3 * j + 1),
            )]
        }
        I12 => {
            let num = 1 + 3 * j + 2 * j * j - ni * (4 * j + 3) * (3 * j + 1)
                + ni * ni * (3 * j + 1) * (3 * j + 2);
            vec![Comparison::new(
                "identity",
                sum(j..ni, |k| int(k * k) * c(k + 2 * j, 3 * j)),
                r(num, (3 * j + 2) * (3 * j + 3)) * c(ni + 2 * j, 3 * j + 1),
            )]
        }
        I13 => vec![Comparison::new(
            "identity",
            sum(2 * j..ni, |k| int(k) * c(k + j, 3 * j)),
            r(3 * ni * j + ni - j - 1, 3 * j + 2) * c(ni + j, 3 * j + 1),
        )],
        I14 => vec![Comparison::new(
            "identity",
            sum(j..ni, |k| int(k) * c(k + 2 * j, 3 * j)),
            r(3 * ni * j + ni - 2 * j - 1, 3 * j + 2) * c(ni + 2 * j, 3 * j + 1),
        )],
        Cyid => {
            let k = j;
            vec![Comparison::new(
                "identity",
                c(ni + 1 + k, k).recip(),
                int(ni + 1) * sum(0..=ni, |rr| c(ni, rr) * sign(rr) / int(k + rr + 1)),
            )]
        }
        CzTransform => vec![Comparison::new(
            "identity",
            big(domb_exact(n)),
            big(domb_via_sixteen_powers(n)),
        )],
        SunTransform => vec![Comparison::new(
            "identity",
            big(domb_exact(n)),
            big(domb_via_four_powers(n)),
        )],
    }
}

fn big(n: BigInt) -> RationalExact {
    RationalExact::from_integer(n)
}

/// Check one identity for all cases up to `max_n`, in parallel. The reported
/// failure is the first one in case order.
pub fn check(id: IdentityId, max_n: u64) -> IdentityReport {
    let cases = id.cases(max_n);
    let failure = cases
        .par_iter()
        .map(|&(n, j)| {
            evaluate(id, n, j)
                .into_iter()
                .find(|cmp| !cmp.holds())
                .map(|comparison| IdentityFailure { n, j, comparison })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next();
    IdentityReport {
        id,
        max_n,
        cases: cases.len(),
        failure,
    }
}

/// The whole catalog, in catalog order.
pub fn check_all(max_n: u64) -> Vec<IdentityReport> {
    IdentityId::ALL
        .par_iter()
        .map(|&id| check(id, max_n))
        .collect()
}
