use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::zmod::{split_p, Zmod};
use crate::error::{Error, Result};

/// Absolute precision of an exactly known zero.
const EXACT: i64 = i64::MAX;

/// An element of Q_p known to finite precision, stored as `p^v * u`.
///
/// For a nonzero value the unit `u` is coprime to `p` and known modulo
/// `p^prec`, so the value itself is known modulo `p^(v + prec)`. A zero value
/// carries only its absolute precision: it is known to be divisible by
/// `p^abs` (or is exactly zero).
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct PAdicValue {
    p: u64,
    // valuation for nonzero values; absolute precision for zero
    val: i64,
    unit: u128,
    // 0 marks a zero value
    prec: u32,
}

impl PAdicValue {
    pub fn zero(p: u64) -> Self {
        PAdicValue {
            p,
            val: EXACT,
            unit: 0,
            prec: 0,
        }
    }

    /// A value only known to be `0 mod p^abs`.
    pub fn zero_mod(p: u64, abs: i64) -> Self {
        PAdicValue {
            p,
            val: abs,
            unit: 0,
            prec: 0,
        }
    }

    /// `p^val * unit` with `unit` taken modulo `p^prec`. A unit divisible by
    /// `p` is normalized; a unit that vanishes modulo `p^prec` yields a zero
    /// known to absolute precision `val + prec`.
    pub fn from_parts(p: u64, val: i64, unit: u128, prec: u32) -> Self {
        if prec == 0 {
            return Self::zero_mod(p, val);
        }
        let m = pow_p(p, prec);
        let u = unit % m;
        if u == 0 {
            return Self::zero_mod(p, val.saturating_add(prec as i64));
        }
        let (w, rest) = split_p(u, p);
        PAdicValue {
            p,
            val: val + w as i64,
            unit: rest,
            prec: prec - w,
        }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.prec == 0
    }

    pub fn is_exact_zero(&self) -> bool {
        self.prec == 0 && self.val == EXACT
    }

    /// Valuation of a nonzero value.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.val)
    }

    /// Unit part of a nonzero value, reduced modulo `p^prec`.
    pub fn unit(&self) -> Option<u128> {
        (!self.is_zero()).then_some(self.unit)
    }

    /// Relative precision (digits of the unit); 0 for zero.
    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// The value is known modulo `p^absolute_precision()`; `i64::MAX` for an
    /// exact zero.
    pub fn absolute_precision(&self) -> i64 {
        if self.is_zero() {
            self.val
        } else {
            self.val + self.prec as i64
        }
    }

    /// Lower bound on the valuation, exact for nonzero values.
    pub fn min_valuation(&self) -> i64 {
        self.val
    }

    /// Canonical representative of the value modulo `p^m` in `[0, p^m)`.
    pub fn residue(&self, m: u32) -> Result<u128> {
        if self.is_zero() {
            if self.val < m as i64 {
                return Err(Error::InsufficientPrecision {
                    needed: m,
                    available: self.val,
                });
            }
            return Ok(0);
        }
        if self.val < 0 {
            return Err(Error::NegativeValuation(self.val));
        }
        let abs = self.val + self.prec as i64;
        if abs < m as i64 {
            return Err(Error::InsufficientPrecision {
                needed: m,
                available: abs,
            });
        }
        if self.val >= m as i64 {
            return Ok(0);
        }
        let ring = Zmod::new(pow_p(self.p, m));
        Ok(ring.mul(pow_p(self.p, self.val as u32), self.unit % ring.modulus()))
    }

    /// Drop digits so that the value is known only modulo `p^abs`.
    pub fn truncate(&self, abs: i64) -> Self {
        if abs >= self.absolute_precision() {
            return *self;
        }
        if self.is_zero() || self.val >= abs {
            return Self::zero_mod(self.p, abs);
        }
        let prec = (abs - self.val) as u32;
        PAdicValue {
            p: self.p,
            val: self.val,
            unit: self.unit % pow_p(self.p, prec),
            prec,
        }
    }

    /// Multiply by `p^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_exact_zero() {
            return *self;
        }
        PAdicValue {
            val: self.val + k,
            ..*self
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ring = Zmod::new(pow_p(self.p, self.prec));
        let u = ring.inv(self.unit).expect("unit is coprime to p");
        Ok(PAdicValue {
            p: self.p,
            val: -self.val,
            unit: u,
            prec: self.prec,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(*self * rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return PAdicValue {
                p: self.p,
                val: 0,
                unit: 1,
                prec: self.prec.max(1),
            };
        }
        let mut base = *self;
        let mut acc: Option<PAdicValue> = None;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a * base,
                    None => base,
                });
            }
            e >>= 1;
            if e > 0 {
                base = base * base;
            }
        }
        acc.expect("e > 0")
    }

    /// Whether `self - other` is known to vanish modulo `p^m`.
    pub fn congruent(&self, other: &Self, m: u32) -> Result<bool> {
        Ok((*self - *other).residue(m)? == 0)
    }
}

#[inline]
pub(crate) fn pow_p(p: u64, e: u32) -> u128 {
    (p as u128).pow(e)
}

impl Neg for PAdicValue {
    type Output = PAdicValue;

    fn neg(self) -> PAdicValue {
        if self.is_zero() {
            return self;
        }
        let m = pow_p(self.p, self.prec);
        PAdicValue {
            unit: m - self.unit,
            ..self
        }
    }
}

impl Mul for PAdicValue {
    type Output = PAdicValue;

    fn mul(self, rhs: PAdicValue) -> PAdicValue {
        debug_assert_eq!(self.p, rhs.p);
        match (self.is_zero(), rhs.is_zero()) {
            (true, true) => PAdicValue::zero_mod(self.p, self.val.saturating_add(rhs.val)),
            (true, false) => zero_times(self, rhs.val),
            (false, true) => zero_times(rhs, self.val),
            (false, false) => {
                let prec = self.prec.min(rhs.prec);
                let ring = Zmod::new(pow_p(self.p, prec));
                let unit = ring.mul(self.unit % ring.modulus(), rhs.unit % ring.modulus());
                PAdicValue {
                    p: self.p,
                    val: self.val + rhs.val,
                    unit,
                    prec,
                }
            }
        }
    }
}

fn zero_times(zero: PAdicValue, val: i64) -> PAdicValue {
    if zero.is_exact_zero() {
        zero
    } else {
        PAdicValue::zero_mod(zero.p, zero.val + val)
    }
}

impl Add for PAdicValue {
    type Output = PAdicValue;

    fn add(self, rhs: PAdicValue) -> PAdicValue {
        debug_assert_eq!(self.p, rhs.p);
        let p = self.p;
        let abs = self.absolute_precision().min(rhs.absolute_precision());
        if abs == EXACT {
            return PAdicValue::zero(p);
        }
        if self.is_zero() {
            return rhs.truncate(abs);
        }
        if rhs.is_zero() {
            return self.truncate(abs);
        }
        let base = self.val.min(rhs.val);
        // abs > base because both operands carry at least one digit
        let digits = (abs - base) as u32;
        let ring = Zmod::new(pow_p(p, digits));
        let lift = |x: &PAdicValue| {
            let gap = x.val - base;
            if gap >= digits as i64 {
                0
            } else {
                ring.mul(pow_p(p, gap as u32), x.unit % ring.modulus())
            }
        };
        let s = ring.add(lift(&self), lift(&rhs));
        PAdicValue::from_parts(p, base, s, digits)
    }
}

impl Sub for PAdicValue {
    type Output = PAdicValue;

    fn sub(self, rhs: PAdicValue) -> PAdicValue {
        self + (-rhs)
    }
}

impl fmt::Debug for PAdicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact_zero() {
            write!(f, "0")
        } else if self.is_zero() {
            write!(f, "O({}^{})", self.p, self.val)
        } else {
            write!(
                f,
                "{}^{} * {} + O({}^{})",
                self.p,
                self.val,
                self.unit,
                self.p,
                self.val + self.prec as i64
            )
        }
    }
}

impl fmt::Display for PAdicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(p: u64, val: i64, unit: u128, prec: u32) -> PAdicValue {
        PAdicValue::from_parts(p, val, unit, prec)
    }

    #[test]
    fn mul_adds_valuations() {
        let five = v(5, 1, 1, 3);
        let sq = five * five;
        assert_eq!(sq.valuation(), Some(2));
        assert_eq!(sq.unit(), Some(1));
    }

    #[test]
    fn additive_inverse_is_zero() {
        let x = v(7, 0, 123, 3);
        let z = x + (-x);
        assert!(z.is_zero());
        assert_eq!(z.absolute_precision(), 3);
        assert_eq!(z.residue(3), Ok(0));
        assert!(z.residue(4).is_err());
    }

    #[test]
    fn addition_loses_precision_on_alignment() {
        // p^-1 * 1 (3 digits) + 1 (3 digits): known modulo p^2 only
        let a = v(5, -1, 1, 3);
        let b = v(5, 0, 1, 3);
        let s = a + b;
        assert_eq!(s.valuation(), Some(-1));
        assert_eq!(s.absolute_precision(), 2);
        assert_eq!(s.precision(), 3);
    }

    #[test]
    fn cancellation_raises_valuation() {
        // 1 + 4 = 5 in Z_5
        let s = v(5, 0, 1, 3) + v(5, 0, 4, 3);
        assert_eq!(s.valuation(), Some(1));
        assert_eq!(s.precision(), 2);
        assert_eq!(s.residue(3), Ok(5));
    }

    #[test]
    fn residue_errors() {
        let inv5 = v(5, -1, 1, 3);
        assert_eq!(inv5.residue(3), Err(Error::NegativeValuation(-1)));
        let low = v(5, 0, 2, 1);
        assert!(matches!(
            low.residue(2),
            Err(Error::InsufficientPrecision { .. })
        ));
        assert_eq!(PAdicValue::zero(5).residue(7), Ok(0));
    }

    #[test]
    fn division_by_zero() {
        let x = v(7, 0, 3, 2);
        assert_eq!(
            x.checked_div(&PAdicValue::zero(7)),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            x.checked_div(&PAdicValue::zero_mod(7, 3)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let x = v(11, 1, 17, 4);
        assert_eq!(x.pow(3), x * x * x);
        assert_eq!(x.pow(0).residue(4), Ok(1));
    }
}
