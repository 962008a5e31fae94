//! Domb numbers exactly, through both transformation formulas, and as a
//! residue table modulo a prime power.

use domb_verify::domb::{
    companion_integrality_check, domb_sequence, domb_via_four_powers, domb_via_sixteen_powers,
    generating_series_check, DombTable,
};
use domb_verify::padic::PrimeContext;

fn main() -> domb_verify::Result<()> {
    for (n, d) in domb_sequence(10).iter().enumerate() {
        let n = n as u64;
        assert_eq!(*d, domb_via_sixteen_powers(n));
        assert_eq!(*d, domb_via_four_powers(n));
        println!("D_{n:<2} = {d}");
    }

    let ctx = PrimeContext::new(13, 3)?;
    let table = DombTable::new(&ctx);
    println!("D_k mod 13^3 for k < 13: {:?}", table.residues());

    let series = generating_series_check(24);
    println!(
        "generating function through u^24: {} coefficients checked",
        series.checked
    );
    assert!(series.passed());
    let companion = companion_integrality_check(200);
    println!(
        "integrality of the companion sums for n <= 200: {}",
        if companion.passed() { "ok" } else { "FAILED" }
    );
    Ok(())
}
