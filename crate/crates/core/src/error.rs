//! Error types, one enum per subsystem.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("mixed ground fields")]
    FieldMismatch,
    #[error("degenerate resultant: {0}")]
    DegenerateResultant(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalError {
    #[error("zero divisor at working precision")]
    ZeroDivisor,
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("residual factors not coprime")]
    NotCoprime,
    #[error("residual factors do not match the reduction")]
    ResidualMismatch,
    #[error("wild degree: p divides {0}")]
    WildDegree(usize),
    #[error("no irreducibility certificate for the given polynomial")]
    NoCertificate,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("cannot parse permutation {0:?}")]
    Parse(String),
    #[error("degree bound exceeded: degree {0} > {1}")]
    DegreeBound(usize, usize),
    #[error("group too large to enumerate: order exceeds {0}")]
    EnumerationBound(u128),
    #[error("element order is not p: {0}")]
    OrderNotP(String),
    #[error("not a normalizer element")]
    NotNormalizer,
    #[error("order divisible by p")]
    OrderDivisibleByP,
    #[error("element is not a member of the group")]
    NotAMember,
    #[error("degree mismatch between permutations")]
    DegreeMismatch,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProductError {
    #[error("a product group needs at least one factor")]
    Empty,
    #[error("factor {0} is not quasi-{1}")]
    NotQuasiP(usize, u64),
    #[error("closure deficiency: conjugates of Q do not generate the product")]
    ClosureDeficiency,
    #[error("empty support: Q is trivial")]
    EmptySupport,
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RamError {
    #[error("parameter domain violation: {0}")]
    Domain(String),
    #[error("t >= 2 when p|d")]
    TameCountWithPDividingD,
    #[error("p divides a tame index: {0}")]
    WildTameIndex(u64),
    #[error("conductor h = sigma*m is not an integer (sigma = {0}, m = {1})")]
    NonIntegralConductor(String, u64),
    #[error("excluded pair: (p,s) != (7,2)")]
    ExcludedPair,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("lemma falsified: no s in [1, p-1] with s|j and (j, d-p-s) = 1 for p={p}, a={a}")]
    LemmaFalsified { p: u64, a: u64 },
    #[error("field too small: no smooth fibre over F_q")]
    FieldTooSmall,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error(transparent)]
    Ramification(#[from] RamError),
    #[error(transparent)]
    Group(#[from] GroupError),
}
