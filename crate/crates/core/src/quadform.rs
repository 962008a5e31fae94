//! Square roots modulo p and the representation `p = x^2 + 3y^2`.

use crate::error::{Error, Result};
use crate::padic::prime::is_prime;

/// `p = x^2 + 3 y^2` with `x, y ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadDecomposition {
    pub x: u64,
    pub y: u64,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

/// Tonelli–Shanks. Returns the smaller of the two roots, or `None` for a
/// non-residue.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)?;
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r.min(p - r))
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Cornacchia's algorithm for `x^2 + 3 y^2 = p`, seeded with `sqrt(-3) mod p`.
pub fn decompose_x2_3y2(p: u64) -> Result<QuadDecomposition> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p <= 3 {
        return Err(Error::PrimeTooSmall(p));
    }
    if p % 3 != 1 {
        return Err(Error::NotRepresentable(p));
    }
    let root = sqrt_mod(p - 3, p).ok_or(Error::NotRepresentable(p))?;
    let limit = isqrt(p);
    // descend with the root in (p/2, p)
    let (mut a, mut b) = (p, p - root);
    while b > limit {
        (a, b) = (b, a % b);
    }
    let rest = p - b * b;
    if rest.is_multiple_of(3) {
        let y = isqrt(rest / 3);
        if y * y * 3 == rest && b >= 1 && y >= 1 {
            return Ok(QuadDecomposition { x: b, y });
        }
    }
    Err(Error::NotRepresentable(p))
}
