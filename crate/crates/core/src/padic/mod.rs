//! Valuation-aware p-adic arithmetic at finite precision.

mod combinat;
mod context;
pub mod prime;
mod value;
mod zmod;

pub use combinat::{
    binomial_int, binomial_rational, factorial_decomposed, jacobi3, pochhammer, FactorialTable,
};
pub use context::PrimeContext;
pub use value::PAdicValue;
pub use zmod::Zmod;

/// Exact rationals, always in lowest terms with a positive denominator.
pub type RationalExact = num_rational::BigRational;

/// Shorthand for building a small exact rational.
pub fn rational(num: i64, den: i64) -> RationalExact {
    RationalExact::new(num.into(), den.into())
}
