//! Residue arithmetic modulo a fixed modulus below 2^126.
//!
//! Moduli up to 2^64 multiply through a single `u128` product. Larger moduli
//! (p^K with big p and K) take a slower shift-and-add path.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Zmod {
    modulus: u128,
}

pub(crate) const MAX_MODULUS: u128 = 1 << 126;
const FAST_LIMIT: u128 = 1 << 64;

impl Zmod {
    pub fn new(modulus: u128) -> Self {
        assert!((1..MAX_MODULUS).contains(&modulus), "modulus out of range");
        Zmod { modulus }
    }

    #[inline]
    pub fn modulus(&self) -> u128 {
        self.modulus
    }

    #[inline]
    pub fn reduce(&self, a: u128) -> u128 {
        a % self.modulus
    }

    /// Reduce a signed integer into `[0, modulus)`.
    #[inline]
    pub fn reduce_signed(&self, a: i128) -> u128 {
        a.rem_euclid(self.modulus as i128) as u128
    }

    #[inline]
    pub fn add(&self, a: u128, b: u128) -> u128 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u128, b: u128) -> u128 {
        if a >= b {
            a - b
        } else {
            a + self.modulus - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u128) -> u128 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u128, b: u128) -> u128 {
        if self.modulus <= FAST_LIMIT {
            (a * b) % self.modulus
        } else {
            self.mul_wide(a, b)
        }
    }

    fn mul_wide(&self, a: u128, mut b: u128) -> u128 {
        let mut acc = 0u128;
        let mut base = a % self.modulus;
        b %= self.modulus;
        while b > 0 {
            if b & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            b >>= 1;
        }
        acc
    }

    pub fn pow(&self, base: u128, mut exp: u64) -> u128 {
        let mut result = 1 % self.modulus;
        let mut b = base % self.modulus;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(result, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        result
    }

    /// Inverse by the extended Euclidean algorithm; `None` when not coprime.
    pub fn inv(&self, a: u128) -> Option<u128> {
        let m = self.modulus as i128;
        let (mut old_r, mut r) = ((a % self.modulus) as i128, m);
        let (mut old_s, mut s) = (1i128, 0i128);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            // q * s can overflow near the top of the modulus range
            let qs = mul_mod_signed(q, s, m);
            (old_s, s) = (s, (old_s - qs).rem_euclid(m));
        }
        if old_r != 1 {
            return None;
        }
        Some(old_s.rem_euclid(m) as u128)
    }
}

fn mul_mod_signed(q: i128, s: i128, m: i128) -> i128 {
    match q.checked_mul(s) {
        Some(v) => v.rem_euclid(m),
        None => {
            let z = Zmod::new(m as u128);
            z.mul(q.rem_euclid(m) as u128, s.rem_euclid(m) as u128) as i128
        }
    }
}

/// Exponent of `p` in a nonzero `n`, and the cofactor.
#[inline]
pub fn split_p(mut n: u128, p: u64) -> (u32, u128) {
    debug_assert!(n != 0);
    let p = p as u128;
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    (v, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_examples() {
        let z = Zmod::new(125);
        assert_eq!(z.inv(2), Some(63));
        assert_eq!(z.inv(9), Some(14));
        assert_eq!(z.inv(5), None);
        let z = Zmod::new(343);
        assert_eq!(z.inv(16), Some(193));
    }

    #[test]
    fn wide_path_matches_bigint() {
        use num_bigint::BigUint;
        let m: u128 = 2003u128.pow(11);
        let z = Zmod::new(m);
        let a = m - 12345;
        let b = m / 3 + 100;
        let expect = (BigUint::from(a) * BigUint::from(b)) % BigUint::from(m);
        assert_eq!(BigUint::from(z.mul(a, b)), expect);
        let inv = z.inv(b).unwrap();
        assert_eq!(z.mul(inv, b), 1);
    }

    #[test]
    fn pow_and_signed() {
        let z = Zmod::new(625);
        assert_eq!(z.pow(64, 4), 341);
        assert_eq!(z.reduce_signed(-1), 624);
        assert_eq!(z.sub(3, 5), 623);
    }
}
