//! Randomized checks of the p-adic kernel against independent big-integer
//! computations.

mod support;

use domb_verify::padic::factorial_decomposed;
use domb_verify::padic::PrimeContext;

fn check(run: fn() -> Result<u32, String>) {
    let cases = run().unwrap_or_else(|e| panic!("{e}"));
    assert!(cases > 0);
}

#[test]
fn ring_laws() {
    check(support::ring_laws);
}

#[test]
fn embedding_is_a_homomorphism() {
    check(support::embedding_homomorphism);
}

#[test]
fn factorial_valuation_is_legendre() {
    check(support::factorial_legendre);
}

#[test]
fn binomials_match_big_integers() {
    check(support::binomial_oracle);
}

#[test]
fn minus_half_binomials() {
    check(support::minus_half_binomial);
}

#[test]
fn gamma_shift_law_on_integers() {
    check(support::gamma_shift_integers);
}

#[test]
fn gamma_shift_law_on_rationals() {
    check(support::gamma_shift_rationals);
}

#[test]
fn gamma_reflection() {
    check(support::gamma_reflection);
}

#[test]
fn gamma_continuity() {
    check(support::gamma_continuity);
}

#[test]
fn wilson_for_every_prime_below_2000() {
    check(support::wilson);
}

#[test]
fn factorial_valuation_exhaustive() {
    for p in [5u64, 7, 101] {
        let ctx = PrimeContext::new(p, 3).unwrap();
        let mut legendre = 0;
        for n in 1..=10_000u64 {
            let mut k = n;
            while k % p == 0 {
                k /= p;
                legendre += 1;
            }
            assert_eq!(
                factorial_decomposed(n, &ctx).0,
                legendre,
                "p = {p}, n = {n}"
            );
        }
    }
}

#[test]
fn bernoulli_oracle_sanity() {
    let b = support::bernoulli_exact(4);
    assert_eq!(b[1], num_rational::BigRational::new((-1).into(), 2.into()));
    assert_eq!(b[4], num_rational::BigRational::new((-1).into(), 30.into()));
}
