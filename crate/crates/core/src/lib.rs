//! Exact verification of supercongruences for Domb numbers.
//!
//! Both sides of every congruence are evaluated in valuation-aware p-adic
//! arithmetic ([`padic`]) over ranges of primes, and the finite binomial
//! identities behind them are checked in exact rational arithmetic
//! ([`identities`]).

pub mod congruence;
pub mod domb;
pub mod error;
pub mod exact;
pub mod identities;
pub mod padic;
pub mod quadform;
pub mod series;
pub mod special;
pub mod sweep;

pub use error::{Error, Result};
