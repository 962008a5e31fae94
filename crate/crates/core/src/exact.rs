//! Exact integer and rational combinatorics.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::padic::RationalExact;

/// `C(n, k)` over the integers; zero unless `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Generalized binomial `C(a, m) = ∏_{i<m} (a - i) / m!`.
pub fn binomial_rational(a: &RationalExact, m: u64) -> RationalExact {
    let mut acc = RationalExact::one();
    for i in 0..m {
        acc *= a - RationalExact::from_integer(BigInt::from(i));
        acc /= RationalExact::from_integer(BigInt::from(i + 1));
    }
    acc
}

/// Rising factorial `(a)_k`.
pub fn pochhammer(a: &RationalExact, k: u64) -> RationalExact {
    let mut acc = RationalExact::one();
    for i in 0..k {
        acc *= a + RationalExact::from_integer(BigInt::from(i));
    }
    acc
}

/// `H_n^{(order)}` as an exact rational.
pub fn harmonic(n: u64, order: u32) -> RationalExact {
    (1..=n).fold(RationalExact::zero(), |acc, k| {
        acc + RationalExact::new(BigInt::one(), BigInt::from(k).pow(order))
    })
}

pub fn int(n: i64) -> RationalExact {
    RationalExact::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::rational;

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
        assert_eq!(binomial_rational(&rational(-1, 2), 2), rational(3, 8));
        assert_eq!(binomial_rational(&int(5), 2), int(10));
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(4, 1), rational(25, 12));
        assert_eq!(harmonic(4, 2), rational(205, 144));
        assert_eq!(harmonic(0, 2), int(0));
        assert_eq!(pochhammer(&rational(1, 3), 2), rational(4, 9));
    }
}
