use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::prime::is_prime;
use super::value::{pow_p, PAdicValue};
use super::zmod::{split_p, Zmod, MAX_MODULUS};
use crate::error::{Error, Result};

/// A prime `p > 3` together with a working precision `K`.
///
/// Embedded values carry `K` digits of relative precision. The context also
/// caches the powers `p^0..=p^K` and inverses of small integers modulo `p^K`.
#[derive(Debug, Clone)]
pub struct PrimeContext {
    p: u64,
    precision: u32,
    powers: Vec<u128>,
    ring: Zmod,
    inverses: Vec<u128>,
}

impl PrimeContext {
    /// Context with the default inverse-table bound `2p`.
    pub fn new(p: u64, precision: u32) -> Result<Self> {
        Self::with_inverse_bound(p, precision, 2 * p)
    }

    /// Context sized for residues modulo `p^target` with `guard` extra digits.
    pub fn for_target(p: u64, target: u32, guard: u32) -> Result<Self> {
        Self::new(p, target + guard.max(1))
    }

    pub fn with_inverse_bound(p: u64, precision: u32, bound: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p <= 3 {
            return Err(Error::PrimeTooSmall(p));
        }
        if precision == 0 {
            return Err(Error::ZeroPrecision);
        }
        // p^(K+1) is needed by the Fermat quotient
        let fits = (p as u128)
            .checked_pow(precision + 1)
            .is_some_and(|m| m < MAX_MODULUS);
        if !fits {
            return Err(Error::PrecisionOverflow { p, k: precision });
        }
        let powers: Vec<u128> = (0..=precision).map(|e| pow_p(p, e)).collect();
        let ring = Zmod::new(powers[precision as usize]);
        let inverses = small_inverses(&ring, p, bound);
        Ok(PrimeContext {
            p,
            precision,
            powers,
            ring,
            inverses,
        })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Working precision `K`.
    #[inline]
    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// `p^K`.
    #[inline]
    pub fn modulus(&self) -> u128 {
        self.powers[self.precision as usize]
    }

    /// `p^e` for `e <= K`.
    #[inline]
    pub fn power(&self, e: u32) -> u128 {
        self.powers[e as usize]
    }

    /// Residue ring modulo `p^K`.
    #[inline]
    pub fn ring(&self) -> &Zmod {
        &self.ring
    }

    /// Cached inverse of `k` modulo `p^K`, for `p ∤ k` within the table bound.
    pub fn small_inverse(&self, k: u64) -> Option<u128> {
        match self.inverses.get(k as usize) {
            Some(&0) | None => None,
            Some(&v) => Some(v),
        }
    }

    pub fn zero(&self) -> PAdicValue {
        PAdicValue::zero(self.p)
    }

    pub fn one(&self) -> PAdicValue {
        self.embed_int(1)
    }

    /// Embed a residue known only modulo `p^digits` (e.g. a Bernoulli number
    /// computed mod p).
    pub fn embed_residue(&self, r: u128, digits: u32) -> PAdicValue {
        PAdicValue::from_parts(self.p, 0, r, digits.min(self.precision))
    }

    pub fn embed_int(&self, n: i128) -> PAdicValue {
        if n == 0 {
            return self.zero();
        }
        let (v, u) = split_p(n.unsigned_abs(), self.p);
        let mut unit = u % self.modulus();
        if n < 0 {
            unit = self.ring.neg(unit);
        }
        PAdicValue::from_parts(self.p, v as i64, unit, self.precision)
    }

    /// Embed `num / den` for machine-sized integers.
    pub fn embed_ratio(&self, num: i128, den: i128) -> Result<PAdicValue> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        if num == 0 {
            return Ok(self.zero());
        }
        let n = self.embed_int(num);
        let d = self.embed_int(den);
        n.checked_div(&d)
    }

    /// Embed an exact rational into the truncated p-adic numbers.
    pub fn embed_rational(&self, q: &BigRational) -> PAdicValue {
        if q.is_zero() {
            return self.zero();
        }
        let (vn, un) = self.split_big(q.numer());
        let (vd, ud) = self.split_big(q.denom());
        let inv = self.ring.inv(ud).expect("cofactor is coprime to p");
        PAdicValue::from_parts(self.p, vn - vd, self.ring.mul(un, inv), self.precision)
    }

    fn split_big(&self, n: &BigInt) -> (i64, u128) {
        if let Some(small) = n.to_i128() {
            let (v, u) = split_p(small.unsigned_abs(), self.p);
            let r = u % self.modulus();
            return (v as i64, if small < 0 { self.ring.neg(r) } else { r });
        }
        let p = BigInt::from(self.p);
        let mut m = n.clone();
        let mut v = 0;
        loop {
            let (q, r) = m.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            m = q;
            v += 1;
        }
        let modulus = BigInt::from(self.modulus());
        let r = m.mod_floor(&modulus);
        debug_assert!(!r.is_negative());
        (v, r.to_u128().expect("reduced below p^K"))
    }
}

fn small_inverses(ring: &Zmod, p: u64, bound: u64) -> Vec<u128> {
    let mut table = vec![0u128; bound as usize + 1];
    for k in 1..=bound {
        if k % p != 0 {
            table[k as usize] = ring.inv(k as u128).expect("coprime");
        }
    }
    table
}
