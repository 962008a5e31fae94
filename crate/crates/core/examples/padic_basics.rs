//! Valuation-aware p-adic arithmetic: embedding rationals, carrying powers
//! of p through division, and reading off residues.

use domb_verify::padic::{binomial_int, binomial_rational, rational, PrimeContext};

fn main() -> domb_verify::Result<()> {
    let ctx = PrimeContext::new(7, 4)?;

    let a = ctx.embed_ratio(49, 16)?;
    println!("49/16 in Z_7: {a}  (valuation {:?})", a.valuation());
    println!("  residue mod 7^3 = {}", a.residue(3)?);

    // p/p keeps full precision because the valuation is tracked separately
    let p = ctx.embed_int(7);
    let q = ctx.embed_ratio(14, 3)?;
    println!(
        "7 / (14/3) = {}  -> mod 7^3 = {}",
        p.checked_div(&q)?,
        p.checked_div(&q)?.residue(3)?
    );

    for n in [6u64, 7, 14, 49] {
        let c = binomial_int(2 * n, n as i64, &ctx);
        println!("C({}, {n}) has 7-adic valuation {:?}", 2 * n, c.valuation());
    }

    let m = (2 * 7 - 2) / 3;
    let c = binomial_rational(&rational(-1, 2), m, &ctx)?;
    println!("C(-1/2, {m}) = {c}");
    Ok(())
}
