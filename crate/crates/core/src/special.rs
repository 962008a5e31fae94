//! Harmonic numbers, Fermat quotients, Bernoulli and Euler numbers modulo p,
//! and Morita's p-adic Gamma function.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::padic::{PAdicValue, PrimeContext, RationalExact, Zmod};

fn reciprocal_power(k: u64, order: u32, ctx: &PrimeContext) -> PAdicValue {
    match ctx.small_inverse(k) {
        Some(inv) => {
            let r = ctx.ring().pow(inv, order as u64);
            PAdicValue::from_parts(ctx.p(), 0, r, ctx.precision())
        }
        None => {
            let inv = ctx.embed_ratio(1, k as i128).expect("k > 0");
            inv.pow(order)
        }
    }
}

/// `H_n^{(order)} = Σ_{k=1}^n 1/k^order`, accumulated with valuation
/// tracking so the terms `k = p, 2p, ...` are carried exactly.
pub fn harmonic(n: u64, order: u32, ctx: &PrimeContext) -> PAdicValue {
    (1..=n).fold(ctx.zero(), |acc, k| acc + reciprocal_power(k, order, ctx))
}

/// `H_n` and `H_n^{(2)}` for `n = 0..=ceiling`.
#[derive(Debug, Clone)]
pub struct HarmonicCache {
    first: Vec<PAdicValue>,
    second: Vec<PAdicValue>,
}

impl HarmonicCache {
    pub fn default_ceiling(p: u64) -> u64 {
        2 * p
    }

    pub fn new(ctx: &PrimeContext, ceiling: u64) -> Self {
        let mut first = Vec::with_capacity(ceiling as usize + 1);
        let mut second = Vec::with_capacity(ceiling as usize + 1);
        first.push(ctx.zero());
        second.push(ctx.zero());
        for k in 1..=ceiling {
            let r = reciprocal_power(k, 1, ctx);
            first.push(first[k as usize - 1] + r);
            second.push(second[k as usize - 1] + r * r);
        }
        HarmonicCache { first, second }
    }

    pub fn ceiling(&self) -> u64 {
        self.first.len() as u64 - 1
    }

    pub fn get(&self, n: u64, order: u32) -> Result<PAdicValue> {
        let table = match order {
            1 => &self.first,
            2 => &self.second,
            _ => {
                return Err(Error::IndexOutOfRange {
                    index: order as u64,
                    limit: 2,
                })
            }
        };
        table
            .get(n as usize)
            .copied()
            .ok_or(Error::IndexOutOfRange {
                index: n,
                limit: self.ceiling(),
            })
    }

    /// `H_n`; panics past the ceiling.
    pub fn h(&self, n: u64) -> PAdicValue {
        self.first[n as usize]
    }

    /// `H_n^{(2)}`; panics past the ceiling.
    pub fn h2(&self, n: u64) -> PAdicValue {
        self.second[n as usize]
    }
}

/// Fermat quotient `q_p(a) = (a^{p-1} - 1) / p`.
pub fn fermat_quotient(a: i64, ctx: &PrimeContext) -> Result<PAdicValue> {
    let p = ctx.p();
    if a.rem_euclid(p as i64) == 0 {
        return Err(Error::ArgumentDivisibleByP(p));
    }
    let wide = Zmod::new(ctx.modulus() * p as u128);
    let base = wide.reduce_signed(a as i128);
    let t = wide.sub(wide.pow(base, p - 1), 1);
    debug_assert_eq!(t % p as u128, 0);
    Ok(ctx.embed_residue(t / p as u128, ctx.precision()))
}

fn factorials_mod_p(p: u64, n: usize) -> (Vec<u64>, Vec<u64>) {
    let z = Zmod::new(p as u128);
    let mut fact = vec![1u64; n + 1];
    for k in 1..=n {
        fact[k] = (fact[k - 1] * k as u64) % p;
    }
    let mut inv = vec![1u64; n + 1];
    inv[n] = z.inv(fact[n] as u128).expect("n < p") as u64;
    for k in (1..=n).rev() {
        inv[k - 1] = (inv[k] * k as u64) % p;
    }
    (fact, inv)
}

/// `B_0, ..., B_{p-3}` modulo p.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    p: u64,
    residues: Vec<u64>,
}

impl BernoulliTable {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// `B_n mod p`; `n` must be at most `p - 3`.
    pub fn get(&self, n: u64) -> Result<u64> {
        self.residues
            .get(n as usize)
            .copied()
            .ok_or(Error::IndexOutOfRange {
                index: n,
                limit: self.p - 3,
            })
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }
}

/// Bernoulli numbers modulo p from `Σ_{k=0}^{n-1} C(n, k) B_k = 0`. Every
/// division is by `n ≤ p - 2`, hence invertible.
pub fn bernoulli_table(ctx: &PrimeContext) -> BernoulliTable {
    let p = ctx.p();
    let top = (p - 3) as usize;
    let (fact, inv_fact) = factorials_mod_p(p, top + 1);
    let z = Zmod::new(p as u128);
    let mut b = vec![0u64; top + 1];
    b[0] = 1;
    for n in 1..=top {
        // (n+1) B_n = -Σ_{k<n} C(n+1, k) B_k
        let m = n + 1;
        let mut s = 0u64;
        for (k, &bk) in b.iter().enumerate().take(n) {
            if bk == 0 {
                continue;
            }
            let c = fact[m] * inv_fact[k] % p * inv_fact[m - k] % p;
            s = (s + c * bk) % p;
        }
        let inv_m = z.inv(m as u128).expect("m < p") as u64;
        b[n] = (p - s) % p * inv_m % p;
    }
    BernoulliTable { p, residues: b }
}

fn rational_mod_p(x: &RationalExact, p: u64) -> Result<u64> {
    let pb = BigInt::from(p);
    let den = x.denom().mod_floor(&pb).to_u64().expect("small");
    if den == 0 {
        return Err(Error::DenominatorDivisibleByP(p));
    }
    let num = x.numer().mod_floor(&pb).to_u64().expect("small");
    let inv = Zmod::new(p as u128).inv(den as u128).expect("coprime") as u64;
    Ok(num * inv % p)
}

/// `B_n(x) = Σ_k C(n, k) B_k x^{n-k}` modulo p for `n ≤ p - 2`.
///
/// At `n = p - 2` the top term `B_{p-2}` vanishes (odd index ≥ 3), so only
/// the tabulated `B_0..B_{p-3}` enter.
pub fn bernoulli_poly(n: u64, x: &RationalExact, table: &BernoulliTable) -> Result<u64> {
    let p = table.p();
    if n > p - 2 {
        return Err(Error::IndexOutOfRange {
            index: n,
            limit: p - 2,
        });
    }
    let xr = rational_mod_p(x, p)?;
    let (fact, inv_fact) = factorials_mod_p(p, n as usize);
    let mut s = 0u64;
    // Horner in x over descending k: Σ_k C(n,k) B_k x^{n-k}
    let mut xpow = 1u64;
    for k in (0..=n as usize).rev() {
        let bk = if k as u64 == p - 2 {
            0
        } else {
            table.get(k as u64)?
        };
        let c = fact[n as usize] * inv_fact[k] % p * inv_fact[n as usize - k] % p;
        s = (s + c * bk % p * xpow) % p;
        xpow = xpow * xr % p;
    }
    Ok(s)
}

/// Integer (secant) Euler numbers `E_0, ..., E_{p-3}` modulo p.
#[derive(Debug, Clone)]
pub struct EulerTable {
    p: u64,
    residues: Vec<u64>,
}

impl EulerTable {
    pub fn get(&self, n: u64) -> Result<u64> {
        self.residues
            .get(n as usize)
            .copied()
            .ok_or(Error::IndexOutOfRange {
                index: n,
                limit: self.p - 3,
            })
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }
}

/// Euler numbers modulo p from `Σ_j C(2n, 2j) E_{2j} = 0` (`E_0 = 1`,
/// `E_2 = -1`, `E_4 = 5`).
pub fn euler_table(ctx: &PrimeContext) -> EulerTable {
    let p = ctx.p();
    let top = (p - 3) as usize;
    let (fact, inv_fact) = factorials_mod_p(p, top);
    let mut e = vec![0u64; top + 1];
    e[0] = 1;
    for m in (2..=top).step_by(2) {
        let mut s = 0u64;
        for j in (0..m).step_by(2) {
            let c = fact[m] * inv_fact[j] % p * inv_fact[m - j] % p;
            s = (s + c * e[j]) % p;
        }
        e[m] = (p - s) % p;
    }
    EulerTable { p, residues: e }
}

/// `Γ_p(n) = (-1)^n ∏_{1≤k<n, p∤k} k` modulo `p^K`, with `Γ_p(0) = 1`.
pub fn padic_gamma_int(n: u64, ctx: &PrimeContext) -> PAdicValue {
    let ring = ctx.ring();
    let p = ctx.p();
    let mut acc = 1 % ring.modulus();
    for k in 1..n {
        if k % p != 0 {
            acc = ring.mul(acc, k as u128 % ring.modulus());
        }
    }
    if n % 2 == 1 {
        acc = ring.neg(acc);
    }
    if n == 0 {
        acc = 1;
    }
    ctx.embed_residue(acc, ctx.precision())
}

/// `Γ_p` at any integer. Nonpositive arguments are reached from `Γ_p(0) = 1`
/// by running the functional equation downward.
pub fn padic_gamma_signed(n: i64, ctx: &PrimeContext) -> PAdicValue {
    if n >= 0 {
        return padic_gamma_int(n as u64, ctx);
    }
    let p = ctx.p() as i64;
    let mut g = ctx.one();
    // Γ_p(x) = Γ_p(x+1) / (-x) for p ∤ x, Γ_p(x+1) / (-1) otherwise
    for x in (n..0).rev() {
        let div = if x % p == 0 {
            ctx.embed_int(-1)
        } else {
            ctx.embed_int(-(x as i128))
        };
        g = g.checked_div(&div).expect("unit");
    }
    g
}

/// `Γ_p(x) mod p` at a rational with denominator prime to p, through the
/// representative `m ≡ x (mod p)` with `1 ≤ m ≤ p`.
pub fn padic_gamma_rational(x: &RationalExact, ctx: &PrimeContext) -> Result<u64> {
    let p = ctx.p();
    let r = rational_mod_p(x, p)?;
    let m = if r == 0 { p } else { r };
    let mut acc = 1u64;
    for k in 1..m {
        acc = acc * k % p;
    }
    Ok(if m % 2 == 1 { (p - acc) % p } else { acc })
}
