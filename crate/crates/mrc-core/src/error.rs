use thiserror::Error;

/// Errors shared across the toolkit. Each variant corresponds to a contract
/// violation or resource guard; none are recoverable mid-computation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("inverse of zero is undefined")]
    InverseOfZero,
    #[error("element {0} out of range for field of size {1}")]
    ElementOutOfRange(u64, u64),
    #[error("modulus polynomial is not irreducible over GF({p})")]
    ReducibleModulus { p: u32 },
    #[error("invalid field spec: {0}")]
    InvalidFieldSpec(String),
    #[error("coordinate index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("enumeration of {0} items exceeds guard {1} (set MRC_MAX_ENUM to raise)")]
    EnumerationTooLarge(u128, u128),
    #[error("parameters out of scope: {0}")]
    ParamsOutOfScope(String),
    #[error("negative coefficient at degree {0}: inconsistent rank-size input")]
    NegativeCoefficient(usize),
    #[error("polynomial not divisible by q^k: invalid weight distribution input")]
    NotDivisible,
    #[error("subcode dimension {s} out of range 1..={k}")]
    SOutOfRange { s: usize, k: usize },
    #[error("construction failed after {0} attempts (try a larger field)")]
    ConstructionFailed(u64),
    #[error("generator layout does not match MRC parameters: {0}")]
    LayoutMismatch(String),
    #[error("bad file: {0}")]
    BadFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
