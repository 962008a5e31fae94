//! Verify every congruence for the primes up to 300 and print the results
//! for one prime of each residue class.

use domb_verify::congruence::{CongruenceTarget, PrimeSession};
use domb_verify::sweep::{run_sweep, write_reports, OutputFormat, SweepConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for p in [13, 17] {
        let session = PrimeSession::new(p)?;
        println!("p = {p}");
        for r in session.run_all(&CongruenceTarget::ALL)? {
            println!(
                "  {:<14} mod {p}^{}: {} = {}  {}",
                r.target, r.modulus_exponent, r.lhs, r.rhs, r.pass
            );
        }
    }

    let config = SweepConfig::new(5, 300, CongruenceTarget::ALL.to_vec())?;
    let outcome = run_sweep(&config)?;
    println!("{}", outcome.summary());

    let failures: Vec<_> = outcome.failures().cloned().collect();
    write_reports(
        &failures,
        OutputFormat::Table,
        false,
        &mut std::io::stdout(),
    )?;
    Ok(())
}
