//! Factorials, binomials and rising factorials with exact p-adic valuations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::context::PrimeContext;
use super::value::PAdicValue;
use crate::error::{Error, Result};

/// `n! = p^v * u` with `u` a unit modulo `p^K`.
///
/// Evaluated by the block recursion `u(n!) = (∏_{k≤n, p∤k} k) · u(⌊n/p⌋!)`,
/// `v(n!) = ⌊n/p⌋ + v(⌊n/p⌋!)`.
pub fn factorial_decomposed(n: u64, ctx: &PrimeContext) -> (u64, u128) {
    let ring = ctx.ring();
    let p = ctx.p();
    let mut val = 0u64;
    let mut unit = 1u128;
    let mut m = n;
    while m > 0 {
        let mut block = 1u128;
        for k in 1..=m {
            if k % p != 0 {
                block = ring.mul(block, k as u128 % ring.modulus());
            }
        }
        unit = ring.mul(unit, block);
        m /= p;
        val += m;
    }
    (val, unit)
}

/// Decomposed factorials `0!..=n_max!`, built incrementally.
#[derive(Debug, Clone)]
pub struct FactorialTable {
    p: u64,
    precision: u32,
    vals: Vec<u64>,
    units: Vec<u128>,
    inv_units: Vec<u128>,
}

impl FactorialTable {
    pub fn new(ctx: &PrimeContext, n_max: u64) -> Self {
        let ring = ctx.ring();
        let p = ctx.p();
        let len = n_max as usize + 1;
        let mut vals = Vec::with_capacity(len);
        let mut units = Vec::with_capacity(len);
        vals.push(0);
        units.push(1 % ring.modulus());
        for k in 1..=n_max {
            let mut c = k;
            let mut v = 0;
            while c % p == 0 {
                c /= p;
                v += 1;
            }
            vals.push(vals[k as usize - 1] + v);
            units.push(ring.mul(units[k as usize - 1], c as u128 % ring.modulus()));
        }
        let mut inv_units = vec![0u128; len];
        inv_units[len - 1] = ring.inv(units[len - 1]).expect("unit");
        for k in (1..len).rev() {
            let mut c = k as u64;
            while c.is_multiple_of(p) {
                c /= p;
            }
            inv_units[k - 1] = ring.mul(inv_units[k], c as u128 % ring.modulus());
        }
        FactorialTable {
            p,
            precision: ctx.precision(),
            vals,
            units,
            inv_units,
        }
    }

    pub fn limit(&self) -> u64 {
        self.vals.len() as u64 - 1
    }

    pub fn get(&self, n: u64) -> (u64, u128) {
        (self.vals[n as usize], self.units[n as usize])
    }

    /// `C(n, k)` for `0 <= n <= limit`; zero outside `0 <= k <= n`.
    pub fn binomial(&self, ctx: &PrimeContext, n: u64, k: i64) -> PAdicValue {
        if k < 0 || k as u64 > n {
            return PAdicValue::zero(self.p);
        }
        let k = k as usize;
        let n = n as usize;
        let ring = ctx.ring();
        let v = self.vals[n] - self.vals[k] - self.vals[n - k];
        let u = ring.mul(
            self.units[n],
            ring.mul(self.inv_units[k], self.inv_units[n - k]),
        );
        PAdicValue::from_parts(self.p, v as i64, u, self.precision)
    }

    /// `C(n, k) mod p^K` as an integer residue.
    pub fn binomial_residue(&self, ctx: &PrimeContext, n: u64, k: u64) -> u128 {
        if k > n {
            return 0;
        }
        let (n, k) = (n as usize, k as usize);
        let v = self.vals[n] - self.vals[k] - self.vals[n - k];
        if v >= self.precision as u64 {
            return 0;
        }
        let ring = ctx.ring();
        let u = ring.mul(
            self.units[n],
            ring.mul(self.inv_units[k], self.inv_units[n - k]),
        );
        ring.mul(u, ctx.power(v as u32))
    }
}

/// `C(n, k)` as a p-adic value with its true valuation.
pub fn binomial_int(n: u64, k: i64, ctx: &PrimeContext) -> PAdicValue {
    if k < 0 || k as u64 > n {
        return ctx.zero();
    }
    let k = k as u64;
    let (vn, un) = factorial_decomposed(n, ctx);
    let (vk, uk) = factorial_decomposed(k, ctx);
    let (vr, ur) = factorial_decomposed(n - k, ctx);
    let ring = ctx.ring();
    let denom = ring.inv(ring.mul(uk, ur)).expect("unit");
    PAdicValue::from_parts(
        ctx.p(),
        (vn - vk - vr) as i64,
        ring.mul(un, denom),
        ctx.precision(),
    )
}

fn factorial_value(n: u64, ctx: &PrimeContext) -> PAdicValue {
    let (v, u) = factorial_decomposed(n, ctx);
    PAdicValue::from_parts(ctx.p(), v as i64, u, ctx.precision())
}

fn check_denominator(a: &BigRational, ctx: &PrimeContext) -> Result<()> {
    if a.denom().is_multiple_of(&BigInt::from(ctx.p())) {
        return Err(Error::DenominatorDivisibleByP(ctx.p()));
    }
    Ok(())
}

/// Product `∏_{i<m} (a + step·i)` evaluated factor by factor.
fn shifted_product(a: &BigRational, m: u64, step: i64, ctx: &PrimeContext) -> PAdicValue {
    let small = a.numer().to_i128().zip(a.denom().to_i128());
    let mut acc = ctx.one();
    match small {
        Some((num, den))
            if (m as i128)
                .checked_mul(den)
                .is_some_and(|x| x < i128::MAX / 4) =>
        {
            for i in 0..m as i128 {
                let f = num + step as i128 * i * den;
                if f == 0 {
                    return ctx.zero();
                }
                acc = acc * ctx.embed_int(f);
            }
            let d = ctx.embed_int(den).pow(m as u32);
            acc.checked_div(&d).expect("denominator coprime to p")
        }
        _ => {
            for i in 0..m {
                let f = a + BigRational::from_integer(BigInt::from(step) * BigInt::from(i));
                if f.is_zero() {
                    return ctx.zero();
                }
                acc = acc * ctx.embed_rational(&f);
            }
            acc
        }
    }
}

/// Generalized binomial `C(a, m) = ∏_{i<m} (a - i) / m!`.
pub fn binomial_rational(a: &BigRational, m: u64, ctx: &PrimeContext) -> Result<PAdicValue> {
    check_denominator(a, ctx)?;
    let num = shifted_product(a, m, -1, ctx);
    if num.is_exact_zero() {
        return Ok(num);
    }
    num.checked_div(&factorial_value(m, ctx))
}

/// Rising factorial `(a)_k = a (a+1) ··· (a+k-1)`.
pub fn pochhammer(a: &BigRational, k: u64, ctx: &PrimeContext) -> Result<PAdicValue> {
    check_denominator(a, ctx)?;
    Ok(shifted_product(a, k, 1, ctx))
}

/// The Legendre symbol `(p/3)`: +1 for `p ≡ 1 (mod 3)`, -1 for `p ≡ 2 (mod 3)`.
pub fn jacobi3(p: u64) -> i32 {
    match p % 3 {
        1 => 1,
        2 => -1,
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn rat(n: i64, d: i64) -> BigRational {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn factorial_examples() {
        let c5 = PrimeContext::new(5, 2).unwrap();
        assert_eq!(factorial_decomposed(4, &c5), (0, 24));
        assert_eq!(factorial_decomposed(6, &c5), (1, 19));
        let c7 = PrimeContext::new(7, 3).unwrap();
        assert_eq!(factorial_decomposed(0, &c7), (0, 1));
    }

    #[test]
    fn table_matches_recursion() {
        let c = PrimeContext::new(7, 4).unwrap();
        let t = FactorialTable::new(&c, 400);
        for n in 0..=400 {
            assert_eq!(t.get(n), factorial_decomposed(n, &c), "n = {n}");
        }
        for n in 0..60 {
            for k in -1..=(n as i64 + 1) {
                assert_eq!(t.binomial(&c, n, k), binomial_int(n, k, &c));
            }
        }
    }

    #[test]
    fn binomial_examples() {
        let c7 = PrimeContext::new(7, 3).unwrap();
        let b = binomial_int(4, 2, &c7);
        assert_eq!((b.valuation(), b.residue(3)), (Some(0), Ok(6)));
        let c5 = PrimeContext::new(5, 3).unwrap();
        let b = binomial_int(6, 3, &c5);
        assert_eq!(b.valuation(), Some(1));
        assert_eq!(b.unit().map(|u| u % 5), Some(4));
        assert!(binomial_int(3, 5, &c5).is_exact_zero());
    }

    #[test]
    fn rational_binomial_examples() {
        let c7 = PrimeContext::new(7, 3).unwrap();
        let half = rat(-1, 2);
        assert_eq!(
            binomial_rational(&half, 1, &c7).unwrap().residue(3),
            Ok(171)
        );
        assert_eq!(
            binomial_rational(&rat(3, 4), 0, &c7).unwrap().residue(3),
            Ok(1)
        );
        for p in [7u64, 13] {
            let c = PrimeContext::new(p, 3).unwrap();
            let b = binomial_rational(&half, (2 * p - 2) / 3, &c).unwrap();
            assert_eq!(b.valuation(), Some(1), "p = {p}");
        }
        assert_eq!(
            binomial_rational(&rat(1, 7), 2, &c7),
            Err(Error::DenominatorDivisibleByP(7))
        );
        // integer upper argument inside [0, m) vanishes exactly
        assert!(binomial_rational(&rat(2, 1), 3, &c7)
            .unwrap()
            .is_exact_zero());
    }

    #[test]
    fn pochhammer_examples() {
        let c5 = PrimeContext::new(5, 3).unwrap();
        assert_eq!(pochhammer(&rat(1, 3), 2, &c5).unwrap().residue(3), Ok(56));
        assert_eq!(pochhammer(&rat(2, 9), 0, &c5).unwrap().residue(3), Ok(1));
        let c7 = PrimeContext::new(7, 3).unwrap();
        for k in 0..20u64 {
            let (v, u) = factorial_decomposed(k, &c7);
            let x = pochhammer(&rat(1, 1), k, &c7).unwrap();
            assert_eq!(x, PAdicValue::from_parts(7, v as i64, u, 3));
        }
    }

    #[test]
    fn jacobi_symbol() {
        assert_eq!(jacobi3(7), 1);
        assert_eq!(jacobi3(5), -1);
        assert_eq!(jacobi3(13), 1);
    }
}
