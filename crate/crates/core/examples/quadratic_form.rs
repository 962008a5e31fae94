//! Writing primes p ≡ 1 (mod 3) as x^2 + 3y^2.

use domb_verify::padic::prime::primes_in;
use domb_verify::quadform::{decompose_x2_3y2, sqrt_mod};

fn main() {
    for p in primes_in(5, 80) {
        match decompose_x2_3y2(p) {
            Ok(q) => println!(
                "{p:>3} = {}^2 + 3*{}^2   (sqrt(-3) mod p = {})",
                q.x,
                q.y,
                sqrt_mod(p - 3, p).unwrap()
            ),
            Err(e) => println!("{p:>3}: {e}"),
        }
    }
}
