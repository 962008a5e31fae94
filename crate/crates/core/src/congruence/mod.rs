//! Verification of the Domb-number congruences prime by prime.
//!
//! Left-hand sides come only from [`DombTable`](crate::domb::DombTable)
//! residues and geometric weights; right-hand sides are closed forms
//! evaluated in [`PAdicValue`](crate::padic::PAdicValue) arithmetic.

mod closed_forms;
mod lemmas;
mod session;
mod target;

pub use lemmas::MPT_FIXED_SAMPLES;
pub use session::{CongruenceReport, PrimeSession};
pub use target::{CongruenceTarget, PrimeClass};

#[cfg(test)]
mod tests {
    use super::CongruenceTarget::*;
    use super::*;
    use crate::padic::prime::primes_in;

    fn run(p: u64, t: CongruenceTarget) -> CongruenceReport {
        PrimeSession::new(p).unwrap().run(t).unwrap()
    }

    #[test]
    fn small_prime_residues() {
        let r = run(5, Thm11FourK);
        assert_eq!((r.lhs, r.rhs), (75, 75));
        let r = run(5, Thm11SixteenK);
        assert_eq!((r.lhs, r.rhs), (25, 25));
        for t in [Thm11FourK, Thm11SixteenK] {
            let r = run(7, t);
            assert_eq!((r.lhs, r.rhs), (149, 149));
        }
        let r = run(7, Thm12FourK);
        assert_eq!((r.lhs, r.rhs), (49, 49));
        let r = run(5, Thm13LinearFourK);
        assert_eq!((r.lhs, r.rhs), (23, 23));
        let r = run(5, Thm13LinearSixteenK);
        assert_eq!((r.lhs, r.rhs), (2, 2));
        let r = run(5, Conj2);
        assert_eq!((r.lhs, r.rhs), (0, 0));
        let r = run(7, Conj2);
        assert_eq!((r.lhs, r.rhs), (2, 2));
    }

    #[test]
    fn r3_at_five() {
        let s = PrimeSession::new(5).unwrap();
        assert_eq!(s.r3().unwrap().residue(2), Ok(11));
    }

    #[test]
    fn wrong_class_is_rejected() {
        let s = PrimeSession::new(5).unwrap();
        assert!(s.run(Thm12FourK).is_err());
        assert!(s.run(LemmaSunh).is_err());
        assert!(PrimeSession::new(7).unwrap().run(Thm13LinearFourK).is_err());
    }

    #[test]
    fn every_target_passes_below_200() {
        for p in primes_in(5, 200) {
            let s = PrimeSession::new(p).unwrap();
            for r in s.run_all(&CongruenceTarget::ALL).unwrap() {
                assert!(r.pass, "{} at p = {p}: {r:?}", r.target);
            }
        }
    }

    #[test]
    fn lemma_detail_names_failing_case() {
        let s = PrimeSession::new(13).unwrap();
        let r = s.lemma_mpt_check(&[0, 3, -7]).unwrap();
        assert!(r.pass && r.detail.is_none());
    }
}
