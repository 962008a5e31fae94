//! Auxiliary congruences checked exhaustively over their index ranges.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::session::{CaseLog, CongruenceReport, PrimeSession, Residue};
use super::target::CongruenceTarget::*;
use crate::error::Result;
use crate::padic::rational;
use crate::padic::{binomial_rational, jacobi3, PAdicValue};
use crate::special::{bernoulli_poly, fermat_quotient};

/// Fixed sample of `t` for the shifted binomial lemma, before random draws.
pub const MPT_FIXED_SAMPLES: [i64; 5] = [0, 1, -1, 2, -2];

impl PrimeSession {
    /// `C(3j, j) C(p+j, 3j+1) ≡ p/(3j+1) (1 - pH_{2j} + pH_j) (mod p^3)` for
    /// `0 ≤ j ≤ (p-1)/2`.
    pub fn lemma22_check(&self) -> Result<CongruenceReport> {
        self.require(Lemma22)?;
        let p = self.p();
        let l = self.level(3)?;
        let h = l.harmonic();
        let mut log = CaseLog::new(p, 3);
        for j in 0..=(p - 1) / 2 {
            let lhs = l.binomial(3 * j, j as i64) * l.binomial(p + j, 3 * j as i64 + 1);
            let pj = l.int(p as i128);
            let rhs = l.ratio(p as i128, 3 * j as i128 + 1)
                * (l.ctx.one() - pj * h.h(2 * j) + pj * h.h(j));
            log.compare(&lhs, &rhs, 3, || format!("j = {j}"))?;
        }
        Ok(log.finish(self, Lemma22))
    }

    /// `C(m + pt, (p-1)/2) ≡ C(m, (p-1)/2)(1 + pt(H_m - H_{(p-1)/6})) (mod p^2)`
    /// with `m = (2p-2)/3`. An empty `t_samples` selects the fixed samples
    /// plus four seeded random integers.
    pub fn lemma_mpt_check(&self, t_samples: &[i64]) -> Result<CongruenceReport> {
        self.require(LemmaMpt)?;
        let p = self.p();
        let l = self.level(2)?;
        let h = l.harmonic();
        let m = (2 * p - 2) / 3;
        let half = (p - 1) / 2;
        let samples = if t_samples.is_empty() {
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed() ^ p);
            let mut s = MPT_FIXED_SAMPLES.to_vec();
            s.extend((0..4).map(|_| rng.gen_range(-1_000_000i64..=1_000_000)));
            s
        } else {
            t_samples.to_vec()
        };
        let base = l.binomial(m, half as i64);
        let dh = h.h(m) - h.h((p - 1) / 6);
        let mut log = CaseLog::new(p, 2);
        for t in samples {
            let top = BigRational::from_integer(BigInt::from(m as i128 + p as i128 * t as i128));
            let lhs = binomial_rational(&top, half, &l.ctx)?;
            let rhs = base * (l.ctx.one() + l.int(p as i128 * t as i128) * dh);
            log.compare(&lhs, &rhs, 2, || format!("t = {t}"))?;
        }
        Ok(log.finish(self, LemmaMpt))
    }

    /// `(3j+1) C(3j, j) C(p+2j, 3j+1)` modulo `p^3` for every `j < p`.
    pub fn lemma_p2j_check(&self) -> Result<CongruenceReport> {
        self.require(LemmaP2j)?;
        let p = self.p();
        let l = self.level(3)?;
        let h = l.harmonic();
        let pv = l.int(p as i128);
        let mut log = CaseLog::new(p, 3);
        for j in 0..p {
            let lhs = l.int(3 * j as i128 + 1)
                * l.binomial(3 * j, j as i64)
                * l.binomial(p + 2 * j, 3 * j as i64 + 1);
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let rhs = if j <= (p - 1) / 2 {
                l.int(sign * p as i128) * (l.ctx.one() + pv * h.h(2 * j) - pv * h.h(j))
            } else {
                l.int(sign * 2 * (p * p) as i128) * (h.h(2 * j) - h.h(j))
            };
            log.compare(&lhs, &rhs, 3, || format!("j = {j}"))?;
        }
        Ok(log.finish(self, LemmaP2j))
    }

    /// `Σ D_k/16^k ≡ Σ C(2k,k)^2 16^{-k} p(1 + pH_{2k} - pH_k)/(3k+1) (mod p^3)`.
    pub fn lemma_sh55_check(&self) -> Result<CongruenceReport> {
        self.require(LemmaSh55)?;
        let p = self.p();
        let l = self.level(3)?;
        let lhs = Residue(l.weighted_sum(16, |_| 1));
        let h = l.harmonic();
        let pv = l.int(p as i128);
        let step = l.ratio(1, 16);
        let mut scale = l.ctx.one();
        let mut rhs = l.ctx.zero();
        for k in 0..p {
            let c = l.binomial(2 * k, k as i64);
            let tail = l.ratio(p as i128, 3 * k as i128 + 1)
                * (l.ctx.one() + pv * h.h(2 * k) - pv * h.h(k));
            rhs = rhs + c * c * scale * tail;
            scale = scale * step;
        }
        Ok(self.report(LemmaSh55, &lhs, &Residue::of(&rhs, 3)?))
    }

    /// The harmonic-number congruences for `p > 5`, ten separate comparisons.
    pub fn lemma_sunh_check(&self) -> Result<CongruenceReport> {
        self.require(LemmaSunh)?;
        let p = self.p();
        let l = self.level(2)?;
        let h = l.harmonic();
        let ctx = &l.ctx;
        let pv = l.int(p as i128);
        let q2 = fermat_quotient(2, ctx)?;
        let q3 = fermat_quotient(3, ctx)?;
        let leg = jacobi3(p) as i128;
        // (p/3) B_{p-2}(1/3), known mod p
        let b = ctx.embed_residue(
            bernoulli_poly(p - 2, &rational(1, 3), self.bernoulli())? as u128,
            1,
        ) * l.int(leg);
        let e = ctx.embed_residue(self.euler().get(p - 3)? as u128, 1);
        let zero = ctx.zero();
        let (p6, p3, p4, p23, half) = (p / 6, p / 3, p / 4, 2 * p / 3, (p - 1) / 2);

        let checks: [(&str, PAdicValue, PAdicValue, u32); 10] = [
            ("H2_{p-1}", h.h2(p - 1), zero, 1),
            ("H2_{(p-1)/2}", h.h2(half), zero, 1),
            ("H_{p-1}", h.h(p - 1), zero, 2),
            ("H2_{p/6}", h.h2(p6), l.int(5) * h.h2(p3), 1),
            ("H2_{p/3}", h.h2(p3), l.ratio(1, 2) * b, 1),
            (
                "H_{p/6}",
                h.h(p6),
                l.int(-2) * q2 - l.ratio(3, 2) * q3
                    + pv * q2 * q2
                    + l.ratio(3 * p as i128, 4) * q3 * q3
                    - l.ratio(5 * p as i128, 12) * b,
                2,
            ),
            (
                "H_{p/3}",
                h.h(p3),
                l.ratio(-3, 2) * q3 + l.ratio(3 * p as i128, 4) * q3 * q3
                    - l.ratio(p as i128, 6) * b,
                2,
            ),
            ("H_{(p-1)/2}", h.h(half), l.int(-2) * q2 + pv * q2 * q2, 2),
            (
                "H2_{p/4}",
                h.h2(p4),
                l.int(if half % 2 == 0 { 4 } else { -4 }) * e,
                1,
            ),
            (
                "H_{2p/3}",
                h.h(p23),
                l.ratio(-3, 2) * q3
                    + l.ratio(3 * p as i128, 4) * q3 * q3
                    + l.ratio(p as i128, 3) * b,
                2,
            ),
        ];
        let mut log = CaseLog::new(p, 2);
        for (name, lhs, rhs, m) in checks {
            // lift mod-p comparisons into the p^2 log by scaling with p
            let (lhs, rhs) = if m == 1 {
                (lhs * pv, rhs * pv)
            } else {
                (lhs, rhs)
            };
            log.compare(&lhs, &rhs, 2, || name.to_string())?;
        }
        Ok(log.finish(self, LemmaSunh))
    }
}
