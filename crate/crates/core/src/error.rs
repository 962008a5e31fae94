use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is too small; p > 3 is required")]
    PrimeTooSmall(u64),
    #[error("working precision must be at least 1")]
    ZeroPrecision,
    #[error("p^K = {p}^{k} does not fit the residue representation")]
    PrecisionOverflow { p: u64, k: u32 },
    #[error("insufficient precision: residue mod p^{needed} requested but only {available} digits are known")]
    InsufficientPrecision { needed: u32, available: i64 },
    #[error("value has negative valuation {0} and no residue class")]
    NegativeValuation(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator is divisible by p = {0}")]
    DenominatorDivisibleByP(u64),
    #[error("argument is divisible by p = {0}")]
    ArgumentDivisibleByP(u64),
    #[error("{0} is not representable as x^2 + 3y^2")]
    NotRepresentable(u64),
    #[error("target {target} does not apply to p = {p}")]
    WrongPrimeClass { target: &'static str, p: u64 },
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: u64, limit: u64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
