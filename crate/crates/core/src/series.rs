//! Truncated formal power series over exact rationals.

use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::padic::RationalExact;

/// `Σ c_i u^i + O(u^order)`, stored densely.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<RationalExact>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![RationalExact::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(RationalExact::one(), 0, order)
    }

    /// `c u^degree`.
    pub fn monomial(c: RationalExact, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree < order {
            s.coeffs[degree] = c;
        }
        s
    }

    /// `1 / (1 - c u) = Σ c^i u^i`.
    pub fn geometric(c: RationalExact, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut term = RationalExact::one();
        for _ in 0..order {
            coeffs.push(term.clone());
            term *= &c;
        }
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &RationalExact {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[RationalExact] {
        &self.coeffs
    }

    pub fn scale(&self, c: &RationalExact) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.order()), |acc, _| &acc * self)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut out = PowerSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn geometric_inverts_linear_factor() {
        let g = PowerSeries::geometric(int(4), 6);
        let mut lin = PowerSeries::one(6);
        lin = &lin + &PowerSeries::monomial(int(-4), 1, 6);
        assert_eq!(&g * &lin, PowerSeries::one(6));
    }

    #[test]
    fn truncation_uses_smaller_order() {
        let a = PowerSeries::geometric(int(1), 5);
        let b = PowerSeries::geometric(int(1), 3);
        let c = &a * &b;
        assert_eq!(c.order(), 3);
        assert_eq!(c.coeffs(), &[int(1), int(2), int(3)]);
    }
}
