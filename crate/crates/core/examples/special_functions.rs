//! Harmonic numbers, Fermat quotients, Bernoulli and Euler numbers, and
//! Morita's p-adic Gamma function.

use domb_verify::padic::{rational, PrimeContext};
use domb_verify::special::{
    bernoulli_poly, bernoulli_table, euler_table, fermat_quotient, harmonic, padic_gamma_int,
    padic_gamma_rational,
};

fn main() -> domb_verify::Result<()> {
    let p = 11;
    let ctx = PrimeContext::new(p, 3)?;

    let h = harmonic(p - 1, 1, &ctx);
    println!("H_{} = {h}   (Wolstenholme: valuation >= 2)", p - 1);
    println!(
        "H_{}^(2) mod {p} = {}",
        p - 1,
        harmonic(p - 1, 2, &ctx).residue(1)?
    );
    println!("q_{p}(2) = {}", fermat_quotient(2, &ctx)?);

    let b = bernoulli_table(&ctx);
    let e = euler_table(&ctx);
    println!("B_0..B_{} mod {p}: {:?}", p - 3, b.residues());
    println!("E_0..E_{} mod {p}: {:?}", p - 3, e.residues());
    println!(
        "B_{}(1/3) mod {p} = {}",
        p - 2,
        bernoulli_poly(p - 2, &rational(1, 3), &b)?
    );

    for n in 0..6 {
        println!("Gamma_{p}({n}) = {}", padic_gamma_int(n, &ctx));
    }
    for (a, b) in [(1, 2), (1, 3), (2, 3)] {
        println!(
            "Gamma_{p}({a}/{b}) mod {p} = {}",
            padic_gamma_rational(&rational(a, b), &ctx)?
        );
    }
    Ok(())
}
