use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("series constant term is not 1")]
    ConstantTermNotOne,
    #[error("truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("expected a single monomial term")]
    NotAMonomial,
    #[error("coefficient {0} is not an integer")]
    NonIntegerCoefficient(String),
    #[error("{what}: {states} states exceeds the enumeration guard of {limit}")]
    GuardExceeded {
        what: &'static str,
        states: u128,
        limit: u64,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid graph family: {0}")]
    InvalidFamily(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("invalid Hodge diamond: {0}")]
    InvalidDiamond(String),
    #[error("Hodge diamond violates {0}")]
    AsymmetricDiamond(&'static str),
    #[error("polynomial is not symmetric under u <-> v")]
    AsymmetricPolynomial,
    #[error("monomial u^{a}*v^{b} exceeds dimension {n}")]
    ExponentAboveDimension { a: u32, b: u32, n: u32 },
    #[error("generator index needs 0 <= q <= p <= n and p + q <= n, got (p, q, n) = ({p}, {q}, {n})")]
    InvalidGeneratorIndex { p: u32, q: u32, n: u32 },
    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),
    #[error("{0} must be at least 1")]
    ZeroArgument(&'static str),
}
