use std::cell::OnceCell;
use std::time::Instant;

use serde::Serialize;

use super::target::CongruenceTarget;
use crate::domb::DombTable;
use crate::error::{Error, Result};
use crate::padic::{FactorialTable, PAdicValue, PrimeContext};
use crate::quadform::{decompose_x2_3y2, QuadDecomposition};
use crate::special::{bernoulli_table, euler_table, BernoulliTable, EulerTable, HarmonicCache};

/// Verdict for one congruence at one prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub prime: u64,
    pub target: CongruenceTarget,
    pub modulus_exponent: u32,
    /// Canonical representative in `[0, p^m)`.
    pub lhs: u128,
    pub rhs: u128,
    pub pass: bool,
    pub millis: u64,
    /// Failure context, e.g. which index of a lemma range broke.
    #[serde(skip)]
    pub detail: Option<String>,
}

/// Tables shared by all targets evaluated at one working precision.
pub(crate) struct Level {
    pub ctx: PrimeContext,
    domb: OnceCell<DombTable>,
    facts: OnceCell<FactorialTable>,
    harmonic: OnceCell<HarmonicCache>,
}

impl Level {
    fn new(ctx: PrimeContext) -> Self {
        Level {
            ctx,
            domb: OnceCell::new(),
            facts: OnceCell::new(),
            harmonic: OnceCell::new(),
        }
    }

    pub fn domb(&self) -> &DombTable {
        self.domb.get_or_init(|| DombTable::new(&self.ctx))
    }

    /// Factorials up to `3p`, enough for `C(p + 2j, 3j + 1)` with `j < p`.
    pub fn facts(&self) -> &FactorialTable {
        self.facts
            .get_or_init(|| FactorialTable::new(&self.ctx, 3 * self.ctx.p()))
    }

    pub fn harmonic(&self) -> &HarmonicCache {
        self.harmonic.get_or_init(|| {
            HarmonicCache::new(&self.ctx, HarmonicCache::default_ceiling(self.ctx.p()))
        })
    }

    pub fn binomial(&self, n: u64, k: i64) -> PAdicValue {
        self.facts().binomial(&self.ctx, n, k)
    }

    pub fn int(&self, n: i128) -> PAdicValue {
        self.ctx.embed_int(n)
    }

    pub fn ratio(&self, num: i128, den: i128) -> PAdicValue {
        self.ctx.embed_ratio(num, den).expect("nonzero denominator")
    }

    /// `Σ_{k<p} w(k) D_k / base^k` modulo `p^K`, from the Domb table and a
    /// running power of `base^{-1}`.
    pub fn weighted_sum(&self, base: u128, weight: impl Fn(u64) -> i128) -> u128 {
        let ring = self.ctx.ring();
        let step = ring.inv(base).expect("base is a unit");
        let mut scale = 1 % ring.modulus();
        let mut acc = 0;
        for (k, &d) in self.domb().residues().iter().enumerate() {
            let w = ring.reduce_signed(weight(k as u64));
            acc = ring.add(acc, ring.mul(ring.mul(w, d), scale));
            scale = ring.mul(scale, step);
        }
        acc
    }
}

/// Everything needed to evaluate the targets at a single prime. Tables are
/// built lazily and shared across targets.
pub struct PrimeSession {
    p: u64,
    guard: u32,
    levels: [OnceCell<Level>; 4],
    bernoulli: OnceCell<BernoulliTable>,
    euler: OnceCell<EulerTable>,
    quad: OnceCell<Option<QuadDecomposition>>,
    seed: u64,
}

impl PrimeSession {
    pub fn new(p: u64) -> Result<Self> {
        Self::with_guard(p, 1)
    }

    pub fn with_guard(p: u64, guard: u32) -> Result<Self> {
        // validates p
        PrimeContext::new(p, 1)?;
        Ok(PrimeSession {
            p,
            guard: guard.max(1),
            levels: Default::default(),
            bernoulli: OnceCell::new(),
            euler: OnceCell::new(),
            quad: OnceCell::new(),
            seed: 0x5eed,
        })
    }

    /// Seed for the random samples drawn by the `LEMMA_MPT` check.
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub(crate) fn seed(&self) -> u64 {
        self.seed
    }

    /// Working level for targets stated modulo `p^m`; every `m ≤ 3` shares one.
    pub(crate) fn level(&self, m: u32) -> Result<&Level> {
        let m = m.clamp(3, 6);
        let slot = &self.levels[(m - 3) as usize];
        if let Some(l) = slot.get() {
            return Ok(l);
        }
        let ctx = PrimeContext::new(self.p, m + self.guard)?;
        Ok(slot.get_or_init(|| Level::new(ctx)))
    }

    pub(crate) fn bernoulli(&self) -> &BernoulliTable {
        self.bernoulli.get_or_init(|| {
            bernoulli_table(&PrimeContext::new(self.p, 1).expect("validated prime"))
        })
    }

    pub(crate) fn euler(&self) -> &EulerTable {
        self.euler
            .get_or_init(|| euler_table(&PrimeContext::new(self.p, 1).expect("validated prime")))
    }

    /// `(x, y)` with `p = x^2 + 3y^2`, for `p ≡ 1 (mod 3)`.
    pub fn quad(&self) -> Result<QuadDecomposition> {
        self.quad
            .get_or_init(|| decompose_x2_3y2(self.p).ok())
            .ok_or(Error::NotRepresentable(self.p))
    }

    /// Domb residues `D_0..D_{p-1}` at the working precision used for
    /// targets modulo `p^m`.
    pub fn domb_table(&self, m: u32) -> Result<&DombTable> {
        Ok(self.level(m)?.domb())
    }

    /// Evaluate one target and time it.
    pub fn run(&self, target: CongruenceTarget) -> Result<CongruenceReport> {
        use CongruenceTarget::*;
        if !target.applies_to(self.p) {
            return Err(Error::WrongPrimeClass {
                target: target.id(),
                p: self.p,
            });
        }
        let start = Instant::now();
        let mut report = match target {
            Thm11FourK => self.thm11_4k(),
            Thm11SixteenK => self.thm11_16k(),
            Thm12FourK => self.thm12_4k(),
            Thm12SixteenK => self.thm12_16k(),
            Thm13SquareFourK => self.thm13_k2_4k(),
            Thm13SquareSixteenK => self.thm13_k2_16k(),
            Thm13LinearFourK => self.thm13_k_4k(),
            Thm13LinearSixteenK => self.thm13_k_16k(),
            Conj1 => self.conj1_dp1(),
            Conj2 => self.conj2_mod_p2(),
            MuSun => self.musun(),
            Lemma22 => self.lemma22_check(),
            LemmaMpt => self.lemma_mpt_check(&[]),
            LemmaP2j => self.lemma_p2j_check(),
            LemmaSunh => self.lemma_sunh_check(),
            LemmaSh55 => self.lemma_sh55_check(),
        }?;
        report.millis = start.elapsed().as_millis() as u64;
        Ok(report)
    }

    /// Every applicable target among `targets`, in the given order.
    pub fn run_all(&self, targets: &[CongruenceTarget]) -> Result<Vec<CongruenceReport>> {
        targets
            .iter()
            .filter(|t| t.applies_to(self.p))
            .map(|&t| self.run(t))
            .collect()
    }

    pub(crate) fn report(
        &self,
        target: CongruenceTarget,
        lhs: &Residue,
        rhs: &Residue,
    ) -> CongruenceReport {
        let m = target.modulus_exponent(self.p);
        let modulus = (self.p as u128).pow(m);
        let (l, r) = (lhs.0 % modulus, rhs.0 % modulus);
        CongruenceReport {
            prime: self.p,
            target,
            modulus_exponent: m,
            lhs: l,
            rhs: r,
            pass: l == r,
            millis: 0,
            detail: None,
        }
    }

    pub(crate) fn require(&self, target: CongruenceTarget) -> Result<()> {
        if target.applies_to(self.p) {
            Ok(())
        } else {
            Err(Error::WrongPrimeClass {
                target: target.id(),
                p: self.p,
            })
        }
    }
}

/// A residue already reduced at least to the target modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Residue(pub u128);

impl Residue {
    pub fn of(value: &PAdicValue, m: u32) -> Result<Self> {
        value.residue(m).map(Residue)
    }
}

/// Collects per-index outcomes of a lemma over a range and folds them into
/// one report: on success both sides are the sum of all residues, otherwise
/// the first failing case is reported.
pub(crate) struct CaseLog {
    modulus: u128,
    lhs_sum: u128,
    rhs_sum: u128,
    failure: Option<(u128, u128, String)>,
}

impl CaseLog {
    pub fn new(p: u64, m: u32) -> Self {
        CaseLog {
            modulus: (p as u128).pow(m),
            lhs_sum: 0,
            rhs_sum: 0,
            failure: None,
        }
    }

    pub fn record(&mut self, lhs: u128, rhs: u128, label: impl FnOnce() -> String) {
        self.lhs_sum = (self.lhs_sum + lhs % self.modulus) % self.modulus;
        self.rhs_sum = (self.rhs_sum + rhs % self.modulus) % self.modulus;
        if lhs != rhs && self.failure.is_none() {
            self.failure = Some((lhs, rhs, label()));
        }
    }

    /// Compare two values modulo `p^m` and record the outcome.
    pub fn compare(
        &mut self,
        lhs: &PAdicValue,
        rhs: &PAdicValue,
        m: u32,
        label: impl FnOnce() -> String,
    ) -> Result<()> {
        let l = lhs.residue(m)?;
        let r = rhs.residue(m)?;
        self.record(l, r, label);
        Ok(())
    }

    pub fn finish(self, session: &PrimeSession, target: CongruenceTarget) -> CongruenceReport {
        match self.failure {
            None => session.report(target, &Residue(self.lhs_sum), &Residue(self.rhs_sum)),
            Some((l, r, label)) => {
                let mut rep = session.report(target, &Residue(l), &Residue(r));
                rep.detail = Some(label);
                rep
            }
        }
    }
}
