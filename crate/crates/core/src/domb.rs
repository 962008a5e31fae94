//! Domb numbers `D_n = Σ_k C(n,k)^2 C(2k,k) C(2n-2k,n-k)`, exactly and
//! modulo `p^K`, with the transformation formulas and generating-function
//! checks that surround them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::exact::{binomial, int};
use crate::padic::{FactorialTable, PrimeContext, RationalExact};
use crate::series::PowerSeries;

pub fn domb_exact(n: u64) -> BigInt {
    let n = n as i64;
    (0..=n)
        .map(|k| {
            let c = binomial(n, k);
            &c * &c * binomial(2 * k, k) * binomial(2 * n - 2 * k, n - k)
        })
        .sum()
}

/// `D_0..=D_n` exactly.
pub fn domb_sequence(n: u64) -> Vec<BigInt> {
    (0..=n).map(domb_exact).collect()
}

/// `Σ_{k≤n/2} C(n+k,3k) C(2k,k)^2 C(3k,k) 4^{n-2k}`.
pub fn domb_via_four_powers(n: u64) -> BigInt {
    let n = n as i64;
    (0..=n / 2)
        .map(|k| {
            let c = binomial(2 * k, k);
            binomial(n + k, 3 * k)
                * &c
                * &c
                * binomial(3 * k, k)
                * BigInt::from(4).pow((n - 2 * k) as u32)
        })
        .sum()
}

/// `Σ_{k≤n} (-1)^k C(n+2k,3k) C(2k,k)^2 C(3k,k) 16^{n-k}`.
pub fn domb_via_sixteen_powers(n: u64) -> BigInt {
    let n = n as i64;
    (0..=n)
        .map(|k| {
            let c = binomial(2 * k, k);
            let t = binomial(n + 2 * k, 3 * k)
                * &c
                * &c
                * binomial(3 * k, k)
                * BigInt::from(16).pow((n - k) as u32);
            if k % 2 == 1 {
                -t
            } else {
                t
            }
        })
        .sum()
}

/// `D_0..D_{p-1}` reduced modulo `p^K`.
#[derive(Debug, Clone)]
pub struct DombTable {
    p: u64,
    precision: u32,
    residues: Vec<u128>,
}

impl DombTable {
    pub fn new(ctx: &PrimeContext) -> Self {
        let p = ctx.p();
        let ring = ctx.ring();
        let facts = FactorialTable::new(ctx, 2 * p);
        // C(2j, j) picks up a factor p once 2j >= p
        let central: Vec<u128> = (0..p)
            .map(|j| facts.binomial_residue(ctx, 2 * j, j))
            .collect();
        let mut residues = Vec::with_capacity(p as usize);
        for k in 0..p {
            let mut acc = 0u128;
            for j in 0..=k {
                let c = facts.binomial_residue(ctx, k, j);
                let term = ring.mul(
                    ring.mul(c, c),
                    ring.mul(central[j as usize], central[(k - j) as usize]),
                );
                acc = ring.add(acc, term);
            }
            residues.push(acc);
        }
        DombTable {
            p,
            precision: ctx.precision(),
            residues,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn residues(&self) -> &[u128] {
        &self.residues
    }

    pub fn get(&self, k: u64) -> u128 {
        self.residues[k as usize]
    }
}

/// Outcome of a sequence-level check such as the generating-series match.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceCheck {
    pub name: &'static str,
    pub checked: u64,
    pub first_failure: Option<String>,
}

impl SequenceCheck {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Expand `(1-4u)^{-1} Σ_k C(2k,k)^2 C(3k,k) (u^2/(1-4u)^3)^k` to order
/// `N + 1` and compare with `D_0..D_N`.
pub fn generating_series(order: usize) -> PowerSeries {
    let inv = PowerSeries::geometric(int(4), order);
    let z = &PowerSeries::monomial(int(1), 2, order) * &inv.pow(3);
    let mut total = PowerSeries::zero(order);
    let mut zk = PowerSeries::one(order);
    for k in 0..=(order / 2) as i64 {
        let c = binomial(2 * k, k);
        let coeff = RationalExact::from_integer(&c * &c * binomial(3 * k, k));
        total = &total + &zk.scale(&coeff);
        zk = &zk * &z;
    }
    &inv * &total
}

pub fn generating_series_check(n: u64) -> SequenceCheck {
    let series = generating_series(n as usize + 1);
    let first_failure = series.coeffs().iter().enumerate().find_map(|(i, c)| {
        let d = domb_exact(i as u64);
        (!c.is_integer() || c.to_integer() != d)
            .then(|| format!("coefficient {i}: series {c}, D_{i} = {d}"))
    });
    SequenceCheck {
        name: "generating series",
        checked: n + 1,
        first_failure,
    }
}

/// `(1/n) Σ_{k<n} (2k+1) D_k c^{n-1-k}` for `c = 8` and `c = -8` must be a
/// positive integer for every `1 ≤ n ≤ N`.
pub fn companion_integrality_check(n_max: u64) -> SequenceCheck {
    let d = domb_sequence(n_max);
    let mut first_failure = None;
    'outer: for base in [8i64, -8] {
        let base = BigInt::from(base);
        // S_n = base * S_{n-1} + (2n-1) D_{n-1}
        let mut s = BigInt::zero();
        for n in 1..=n_max {
            s = &s * &base + BigInt::from(2 * n - 1) * &d[n as usize - 1];
            let (q, r) = s.div_rem(&BigInt::from(n));
            if !r.is_zero() || !q.is_positive() {
                first_failure = Some(format!(
                    "base {base}, n = {n}: sum {s} not a positive multiple of n"
                ));
                break 'outer;
            }
        }
    }
    SequenceCheck {
        name: "companion sums",
        checked: n_max,
        first_failure,
    }
}

/// `(1/n) Σ_{k<n} (2k+1) D_k base^{n-1-k}` as an exact rational.
pub fn companion_sum(n: u64, base: i64) -> RationalExact {
    let s: BigInt = (0..n)
        .map(|k| {
            BigInt::from(2 * k + 1) * domb_exact(k) * BigInt::from(base).pow((n - 1 - k) as u32)
        })
        .sum();
    RationalExact::new(s, BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, ToPrimitive};

    #[test]
    fn exact_values() {
        let d: Vec<u64> = (0..=4).map(|n| domb_exact(n).to_u64().unwrap()).collect();
        assert_eq!(d, vec![1, 4, 28, 256, 2716]);
    }

    #[test]
    fn transformation_examples() {
        assert_eq!(domb_via_sixteen_powers(1), BigInt::from(4));
        assert_eq!(domb_via_four_powers(2), BigInt::from(28));
        assert_eq!(domb_via_four_powers(0), BigInt::one());
        for n in 0..=30 {
            assert_eq!(domb_via_four_powers(n), domb_exact(n));
            assert_eq!(domb_via_sixteen_powers(n), domb_exact(n));
        }
    }

    #[test]
    fn table_at_five() {
        let ctx = PrimeContext::new(5, 3).unwrap();
        let t = DombTable::new(&ctx);
        assert_eq!(t.residues(), &[1, 4, 28, 6, 91]);
    }

    #[test]
    fn table_matches_exact() {
        for p in [7u64, 13, 31, 97] {
            let ctx = PrimeContext::new(p, 4).unwrap();
            let t = DombTable::new(&ctx);
            let m = BigInt::from(ctx.modulus());
            for k in 0..p {
                assert_eq!(
                    BigInt::from(t.get(k)),
                    domb_exact(k).mod_floor(&m),
                    "p={p} k={k}"
                );
            }
        }
    }

    #[test]
    fn generating_series_small() {
        let s = generating_series(5);
        let expect: Vec<RationalExact> = [1, 4, 28, 256, 2716].iter().map(|&v| int(v)).collect();
        assert_eq!(s.coeffs(), expect.as_slice());
        assert!(generating_series_check(0).passed());
        assert!(generating_series_check(12).passed());
    }

    #[test]
    fn companion_examples() {
        assert_eq!(companion_sum(1, 8), int(1));
        assert_eq!(companion_sum(2, 8), int(10));
        assert_eq!(companion_sum(2, -8), int(2));
        assert!(companion_integrality_check(30).passed());
    }
}
