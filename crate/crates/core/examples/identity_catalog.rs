//! Check the finite binomial-sum identities in exact rational arithmetic.

use domb_verify::identities::{check_all, evaluate, IdentityId};

fn main() {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(20);
    for r in check_all(max_n) {
        match &r.failure {
            None => println!("{:<14} holds on {} cases", r.id, r.cases),
            Some(f) => println!("{:<14} fails at {f}", r.id),
        }
    }

    let i8 = evaluate(IdentityId::I8, 3, None);
    println!("I8 at n = 3: {} = {}", i8[0].lhs, i8[0].rhs);
}
