//! Closed-form sums of `D_k` weighted by powers of 4 and 16.

use super::session::{CongruenceReport, PrimeSession, Residue};
use super::target::CongruenceTarget::{self, *};
use crate::error::Result;
use crate::padic::PAdicValue;
use crate::special::fermat_quotient;

impl PrimeSession {
    fn sum(&self, m: u32, base: u128, weight: impl Fn(u64) -> i128) -> Result<Residue> {
        Ok(Residue(self.level(m)?.weighted_sum(base, weight)))
    }

    fn rhs(&self, target: CongruenceTarget, value: PAdicValue) -> Result<Residue> {
        Residue::of(&value, target.modulus_exponent(self.p()))
    }

    /// `4x^2 - 2p - p^2/(4x^2)` for `p ≡ 1 (mod 3)`.
    fn thm11_rhs_one(&self) -> Result<PAdicValue> {
        let l = self.level(3)?;
        let x = self.quad()?.x as i128;
        let p = self.p() as i128;
        let x2 = l.int(4 * x * x);
        Ok(x2 - l.int(2 * p) - l.int(p * p).checked_div(&x2)?)
    }

    /// `C((p-1)/2, i)^{-2}` with `i = (p-5)/6` or `(p-1)/6`.
    fn inverse_square_binomial(&self, m: u32) -> Result<PAdicValue> {
        let p = self.p();
        let l = self.level(m)?;
        // ⌊p/6⌋ is (p-1)/6 or (p-5)/6 according to p mod 6
        debug_assert!(p % 6 == 1 || p % 6 == 5);
        let c = l.binomial((p - 1) / 2, (p / 6) as i64);
        c.pow(2).inv()
    }

    pub fn thm11_4k(&self) -> Result<CongruenceReport> {
        self.require(Thm11FourK)?;
        let lhs = self.sum(3, 4, |_| 1)?;
        let rhs = if self.p() % 3 == 1 {
            self.thm11_rhs_one()?
        } else {
            let l = self.level(3)?;
            let p = self.p() as i128;
            l.ratio(p * p, 2) * self.inverse_square_binomial(3)?
        };
        Ok(self.report(Thm11FourK, &lhs, &self.rhs(Thm11FourK, rhs)?))
    }

    pub fn thm11_16k(&self) -> Result<CongruenceReport> {
        self.require(Thm11SixteenK)?;
        let lhs = self.sum(3, 16, |_| 1)?;
        let rhs = if self.p() % 3 == 1 {
            self.thm11_rhs_one()?
        } else {
            let l = self.level(3)?;
            let p = self.p() as i128;
            l.ratio(-p * p, 4) * self.inverse_square_binomial(3)?
        };
        Ok(self.report(Thm11SixteenK, &lhs, &self.rhs(Thm11SixteenK, rhs)?))
    }

    pub fn thm12_4k(&self) -> Result<CongruenceReport> {
        self.require(Thm12FourK)?;
        let lhs = self.sum(3, 4, |k| 3 * k as i128 + 2)?;
        let p = self.p() as i128;
        let rhs = self.level(3)?.int(2 * p * p) * self.inverse_square_binomial(3)?;
        Ok(self.report(Thm12FourK, &lhs, &self.rhs(Thm12FourK, rhs)?))
    }

    pub fn thm12_16k(&self) -> Result<CongruenceReport> {
        self.require(Thm12SixteenK)?;
        let lhs = self.sum(3, 16, |k| 3 * k as i128 + 1)?;
        let p = self.p() as i128;
        let rhs = self.level(3)?.int(p * p) * self.inverse_square_binomial(3)?;
        Ok(self.report(Thm12SixteenK, &lhs, &self.rhs(Thm12SixteenK, rhs)?))
    }

    /// `R_3(p) = (1 + 2p + (4/3)(2^{p-1} - 1) - (3/2)(3^{p-1} - 1)) C((p-1)/2, ⌊p/6⌋)^2`.
    pub fn r3(&self) -> Result<PAdicValue> {
        let l = self.level(3)?;
        let p = self.p() as i128;
        let q2 = fermat_quotient(2, &l.ctx)?.shift(1);
        let q3 = fermat_quotient(3, &l.ctx)?.shift(1);
        let head = l.int(1 + 2 * p) + l.ratio(4, 3) * q2 - l.ratio(3, 2) * q3;
        let c = l.binomial((self.p() - 1) / 2, (self.p() / 6) as i64);
        Ok(head * c.pow(2))
    }

    /// `c_x x^2 + c_p p + c_r p^2/x^2` for `p ≡ 1 (mod 3)`.
    fn thm13_rhs_one(
        &self,
        cx: (i128, i128),
        cp: (i128, i128),
        cr: (i128, i128),
    ) -> Result<PAdicValue> {
        let l = self.level(3)?;
        let x = self.quad()?.x as i128;
        let p = self.p() as i128;
        let x2 = l.int(x * x);
        Ok(l.ratio(cx.0, cx.1) * x2
            + l.ratio(cp.0 * p, cp.1)
            + l.ratio(cr.0 * p * p, cr.1).checked_div(&x2)?)
    }

    pub fn thm13_k2_4k(&self) -> Result<CongruenceReport> {
        self.require(Thm13SquareFourK)?;
        let lhs = self.sum(3, 4, |k| (k * k) as i128)?;
        let rhs = if self.p() % 3 == 1 {
            self.thm13_rhs_one((16, 9), (-8, 9), (-7, 18))?
        } else {
            self.level(3)?.ratio(-20, 9) * self.r3()?
        };
        Ok(self.report(Thm13SquareFourK, &lhs, &self.rhs(Thm13SquareFourK, rhs)?))
    }

    pub fn thm13_k2_16k(&self) -> Result<CongruenceReport> {
        self.require(Thm13SquareSixteenK)?;
        let lhs = self.sum(3, 16, |k| (k * k) as i128)?;
        let rhs = if self.p() % 3 == 1 {
            self.thm13_rhs_one((4, 9), (-2, 9), (-1, 18))?
        } else {
            self.level(3)?.ratio(4, 9) * self.r3()?
        };
        Ok(self.report(
            Thm13SquareSixteenK,
            &lhs,
            &self.rhs(Thm13SquareSixteenK, rhs)?,
        ))
    }

    pub fn thm13_k_4k(&self) -> Result<CongruenceReport> {
        self.require(Thm13LinearFourK)?;
        let lhs = self.sum(3, 4, |k| k as i128)?;
        let rhs = self.level(3)?.ratio(4, 3) * self.r3()?;
        Ok(self.report(Thm13LinearFourK, &lhs, &self.rhs(Thm13LinearFourK, rhs)?))
    }

    pub fn thm13_k_16k(&self) -> Result<CongruenceReport> {
        self.require(Thm13LinearSixteenK)?;
        let lhs = self.sum(3, 16, |k| k as i128)?;
        let rhs = self.level(3)?.ratio(-4, 3) * self.r3()?;
        Ok(self.report(
            Thm13LinearSixteenK,
            &lhs,
            &self.rhs(Thm13LinearSixteenK, rhs)?,
        ))
    }

    /// Both `Σ D_k/4^k` and `Σ D_k/16^k` modulo `p^2`. The report carries the
    /// 4^k sum unless only the 16^k sum fails.
    pub fn conj2_mod_p2(&self) -> Result<CongruenceReport> {
        self.require(Conj2)?;
        let rhs = if self.p() % 3 == 1 {
            let x = self.quad()?.x as i128;
            self.level(2)?.int(4 * x * x - 2 * self.p() as i128)
        } else {
            self.level(2)?.ctx.zero()
        };
        let rhs = self.rhs(Conj2, rhs)?;
        let four = self.report(Conj2, &self.sum(2, 4, |_| 1)?, &rhs);
        let sixteen = self.report(Conj2, &self.sum(2, 16, |_| 1)?, &rhs);
        if four.pass && !sixteen.pass {
            return Ok(CongruenceReport {
                detail: Some("16^k sum".into()),
                ..sixteen
            });
        }
        Ok(four)
    }

    /// `D_{p-1} ≡ 64^{p-1} - (p^3/6) B_{p-3} (mod p^4)`.
    pub fn conj1_dp1(&self) -> Result<CongruenceReport> {
        self.require(Conj1)?;
        let p = self.p();
        let l = self.level(4)?;
        let lhs = Residue(l.domb().get(p - 1));
        let b = l.ctx.embed_residue(self.bernoulli().get(p - 3)? as u128, 1);
        let rhs = l.int(64).pow((p - 1) as u32) - l.ratio(1, 6) * b.shift(3);
        Ok(self.report(Conj1, &lhs, &self.rhs(Conj1, rhs)?))
    }

    /// `Σ (3k^2 + k) D_k / 16^k ≡ -4 p^4 q_p(2) (mod p^5)`.
    pub fn musun(&self) -> Result<CongruenceReport> {
        self.require(MuSun)?;
        let lhs = self.sum(5, 16, |k| (3 * k * k + k) as i128)?;
        let l = self.level(5)?;
        let rhs = l.int(-4) * fermat_quotient(2, &l.ctx)?.shift(4);
        Ok(self.report(MuSun, &lhs, &self.rhs(MuSun, rhs)?))
    }
}
