//! Independent oracles shared by the property tests and the acceptance run.
//! Nothing here goes through the crate's residue tables.

#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use domb_verify::padic::prime::primes_in;
use domb_verify::padic::{
    binomial_int, binomial_rational, factorial_decomposed, PAdicValue, PrimeContext,
};
use domb_verify::special::{padic_gamma_int, padic_gamma_rational};

pub const PRIMES: [u64; 8] = [5, 7, 11, 13, 17, 31, 101, 997];
pub const CASES: u32 = 1000;

pub fn valuation_big(n: &BigInt, p: u64) -> u32 {
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while !n.is_zero() && (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

/// Residue modulo `p^m` of a rational whose denominator is prime to p.
pub fn reduce(q: &BigRational, p: u64, m: u32) -> u128 {
    let modulus = BigInt::from(p).pow(m);
    let num = q.numer().mod_floor(&modulus);
    let den = q.denom().mod_floor(&modulus);
    let inv = den.extended_gcd(&modulus).x.mod_floor(&modulus);
    (num * inv).mod_floor(&modulus).to_u128().unwrap()
}

pub fn big_binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn legendre_by_division(n: u64, p: u64) -> u64 {
    (1..=n)
        .map(|mut k| {
            let mut v = 0;
            while k % p == 0 {
                k /= p;
                v += 1;
            }
            v
        })
        .sum()
}

/// `D_n` straight from its definition, in big integers.
pub fn domb(n: u64) -> BigInt {
    (0..=n)
        .map(|k| {
            let c = big_binomial(n, k);
            BigInt::from(&c * &c * big_binomial(2 * k, k) * big_binomial(2 * n - 2 * k, n - k))
        })
        .sum()
}

/// `Σ_{k<p} w(k) D_k / base^k` as an exact rational, reduced mod `p^m`.
pub fn weighted_domb_sum(p: u64, m: u32, base: i64, weight: impl Fn(i64) -> i64) -> u128 {
    let mut s = BigRational::zero();
    for k in 0..p {
        let term = BigRational::new(domb(k) * weight(k as i64), BigInt::from(base).pow(k as u32));
        s += term;
    }
    reduce(&s, p, m)
}

/// Bernoulli numbers `B_0..B_n` as exact rationals (`B_1 = -1/2`).
pub fn bernoulli_exact(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=n {
        let mut s = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            s += BigRational::from_integer(BigInt::from(big_binomial(m as u64 + 1, k as u64))) * bk;
        }
        b.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// Both sides agree modulo the smaller of their absolute precisions.
pub fn agree(x: PAdicValue, y: PAdicValue) -> bool {
    let m = x
        .absolute_precision()
        .min(y.absolute_precision())
        .clamp(0, 12) as u32;
    x.residue(m) == y.residue(m)
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(PRIMES.to_vec())
}

fn raw_value() -> impl Strategy<Value = (i64, u64, u32)> {
    (0i64..3, any::<u64>(), 1u32..5)
}

fn make_value(p: u64, (v, u, prec): (i64, u64, u32)) -> PAdicValue {
    let m = (p as u128).pow(prec);
    let mut unit = u as u128 % m;
    if unit.is_multiple_of(p as u128) {
        unit += 1;
    }
    PAdicValue::from_parts(p, v, unit, prec)
}

fn runner() -> TestRunner {
    TestRunner::new(Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    })
}

/// A named property with its runner; returns the number of cases executed.
pub struct Property {
    pub name: &'static str,
    pub run: fn() -> Result<u32, String>,
}

fn finish(
    r: Result<(), proptest::test_runner::TestError<impl std::fmt::Debug>>,
) -> Result<u32, String> {
    r.map(|_| CASES).map_err(|e| e.to_string())
}

pub fn ring_laws() -> Result<u32, String> {
    finish(runner().run(
        &(prime(), raw_value(), raw_value(), raw_value()),
        |(p, a, b, c)| {
            let (a, b, c) = (make_value(p, a), make_value(p, b), make_value(p, c));
            prop_assert!(agree((a + b) + c, a + (b + c)));
            prop_assert!(agree((a * b) * c, a * (b * c)));
            prop_assert!(agree(a * (b + c), a * b + a * c));
            prop_assert!(agree(a + b, b + a));
            prop_assert!(agree(a * b, b * a));
            Ok(())
        },
    ))
}

pub fn embedding_homomorphism() -> Result<u32, String> {
    let s = (
        prime(),
        -10_000i64..10_000,
        1i64..500,
        -10_000i64..10_000,
        1i64..500,
    );
    finish(runner().run(&s, |(p, an, ad, bn, bd)| {
        // shift denominators off multiples of p
        let fix = |d: i64| if d % p as i64 == 0 { d + 1 } else { d };
        let ctx = PrimeContext::new(p, 4).unwrap();
        let a = BigRational::new(an.into(), fix(ad).into());
        let b = BigRational::new(bn.into(), fix(bd).into());
        let (ea, eb) = (ctx.embed_rational(&a), ctx.embed_rational(&b));
        prop_assert_eq!(
            (ea * eb).residue(4),
            ctx.embed_rational(&(&a * &b)).residue(4)
        );
        prop_assert_eq!(
            (ea + eb).residue(4),
            ctx.embed_rational(&(&a + &b)).residue(4)
        );
        prop_assert_eq!(ea.residue(4).unwrap(), reduce(&a, p, 4));
        Ok(())
    }))
}

pub fn factorial_legendre() -> Result<u32, String> {
    finish(runner().run(&(prime(), 0u64..=10_000), |(p, n)| {
        let ctx = PrimeContext::new(p, 3).unwrap();
        prop_assert_eq!(factorial_decomposed(n, &ctx).0, legendre_by_division(n, p));
        Ok(())
    }))
}

pub fn binomial_oracle() -> Result<u32, String> {
    finish(
        runner().run(&(prime(), 0u64..=300, 0u64..=300), |(p, n, k)| {
            let ctx = PrimeContext::new(p, 4).unwrap();
            let got = binomial_int(n, k as i64, &ctx);
            if k > n {
                prop_assert!(got.is_exact_zero());
            } else {
                let exact = BigInt::from(big_binomial(n, k));
                prop_assert_eq!(got.valuation(), Some(valuation_big(&exact, p) as i64));
                let modulus = BigInt::from(p).pow(4);
                prop_assert_eq!(
                    got.residue(4).unwrap(),
                    exact.mod_floor(&modulus).to_u128().unwrap()
                );
            }
            Ok(())
        }),
    )
}

pub fn minus_half_binomial() -> Result<u32, String> {
    finish(runner().run(&(prime(), 0u64..=200), |(p, m)| {
        let ctx = PrimeContext::new(p, 4).unwrap();
        let a = BigRational::new((-1).into(), 2.into());
        let mut exact = BigRational::one();
        for i in 0..m {
            exact = exact * (&a - BigRational::from_integer(i.into()))
                / BigRational::from_integer((i + 1).into());
        }
        let got = binomial_rational(&a, m, &ctx).unwrap();
        let v = valuation_big(exact.numer(), p) as i64 - valuation_big(exact.denom(), p) as i64;
        prop_assert_eq!(got.valuation(), Some(v));
        let unit = &exact / BigRational::from_integer(BigInt::from(p).pow(v as u32));
        prop_assert_eq!(
            got.unit().unwrap() % (p as u128).pow(4),
            reduce(&unit, p, 4)
        );
        Ok(())
    }))
}

pub fn gamma_shift_integers() -> Result<u32, String> {
    finish(runner().run(&(prime(), 0u64..3000), |(p, n)| {
        let ctx = PrimeContext::new(p, 3).unwrap();
        let g0 = padic_gamma_int(n, &ctx);
        let g1 = padic_gamma_int(n + 1, &ctx);
        let factor = if n % p == 0 {
            ctx.embed_int(-1)
        } else {
            ctx.embed_int(-(n as i128))
        };
        prop_assert!(g1.congruent(&(factor * g0), 3).unwrap());
        Ok(())
    }))
}

fn p_integral_rational() -> impl Strategy<Value = (u64, BigRational)> {
    (prime(), -5000i64..5000, 1i64..60).prop_map(|(p, num, den)| {
        let den = if den % p as i64 == 0 { den + 1 } else { den };
        (p, BigRational::new(num.into(), den.into()))
    })
}

pub fn gamma_shift_rationals() -> Result<u32, String> {
    finish(runner().run(&p_integral_rational(), |(p, x)| {
        let ctx = PrimeContext::new(p, 1).unwrap();
        let g0 = padic_gamma_rational(&x, &ctx).unwrap() as u128;
        let g1 = padic_gamma_rational(&(&x + BigRational::one()), &ctx).unwrap() as u128;
        let xr = reduce(&x, p, 1);
        let factor = if xr == 0 {
            p as u128 - 1
        } else {
            p as u128 - xr
        };
        prop_assert_eq!(g1, factor * g0 % p as u128);
        Ok(())
    }))
}

pub fn gamma_reflection() -> Result<u32, String> {
    finish(runner().run(&p_integral_rational(), |(p, x)| {
        let ctx = PrimeContext::new(p, 1).unwrap();
        let y = BigRational::one() - &x;
        let prod = padic_gamma_rational(&x, &ctx).unwrap() as u128
            * padic_gamma_rational(&y, &ctx).unwrap() as u128
            % p as u128;
        // a_0(x) in {1, ..., p} with a_0 ≡ x (mod p)
        let a0 = match reduce(&x, p, 1) {
            0 => p as u128,
            r => r,
        };
        let expected = if a0 % 2 == 0 { 1 } else { p as u128 - 1 };
        prop_assert_eq!(prod, expected);
        Ok(())
    }))
}

pub fn gamma_continuity() -> Result<u32, String> {
    let small = prop::sample::select(vec![5u64, 7, 11, 13, 17, 31]);
    finish(
        runner().run(&(small, 0u64..500, 1u64..4, 1u32..3), |(p, z, t, e)| {
            let ctx = PrimeContext::new(p, 3).unwrap();
            let g1 = padic_gamma_int(z, &ctx);
            let g2 = padic_gamma_int(z + t * p.pow(e), &ctx);
            prop_assert!(g1.congruent(&g2, e).unwrap());
            Ok(())
        }),
    )
}

/// Γ_p(p) ≡ 1 (mod p) for every prime below 2000; returns the count.
pub fn wilson() -> Result<u32, String> {
    let primes = primes_in(5, 2000);
    for &p in &primes {
        let ctx = PrimeContext::new(p, 2).unwrap();
        if padic_gamma_int(p, &ctx).residue(1) != Ok(1) {
            return Err(format!("Gamma_p(p) != 1 mod p at p = {p}"));
        }
    }
    Ok(primes.len() as u32)
}

pub const PROPERTIES: [Property; 10] = [
    Property {
        name: "ring laws",
        run: ring_laws,
    },
    Property {
        name: "embedding homomorphism",
        run: embedding_homomorphism,
    },
    Property {
        name: "factorial valuation = Legendre",
        run: factorial_legendre,
    },
    Property {
        name: "binomial vs big integers",
        run: binomial_oracle,
    },
    Property {
        name: "C(-1/2, m) vs exact",
        run: minus_half_binomial,
    },
    Property {
        name: "Gamma_p shift (integers)",
        run: gamma_shift_integers,
    },
    Property {
        name: "Gamma_p shift (rationals)",
        run: gamma_shift_rationals,
    },
    Property {
        name: "Gamma_p reflection",
        run: gamma_reflection,
    },
    Property {
        name: "Gamma_p continuity",
        run: gamma_continuity,
    },
    Property {
        name: "Wilson",
        run: wilson,
    },
];
