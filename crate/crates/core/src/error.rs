use thiserror::Error;

use crate::poly::Monomial;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("operands live over different fields ({0} vs {1})")]
    FieldMismatch(String, String),

    #[error("term {term} is not divisible by {divisor}")]
    NotDivisible { term: String, divisor: Monomial },

    #[error("polynomial is not weighted-homogeneous: {first} and {second} have different degrees")]
    NonHomogeneous { first: String, second: String },

    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("ideals use different gradings")]
    WeightMismatch,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("minimal relation search for pivot {pivot} exceeded bound {bound}")]
    SearchBoundExceeded { pivot: usize, bound: u64 },

    #[error("inconsistent relations: {0}")]
    InconsistentRelations(String),

    #[error("no variable relabeling satisfies the type 1 or type 2 conditions for {0:?}")]
    Unclassifiable([u32; 6]),

    #[error("the determinantal ideal is not prime: {0}")]
    NotPrime(String),

    #[error("operation requires a matrix of {expected}, got {found}")]
    WrongType { expected: &'static str, found: String },

    #[error("level {level} is outside the supported range 0..={max}")]
    LevelOutOfRange { level: u32, max: u32 },

    #[error("malformed staircase: {0}")]
    MalformedStaircase(String),

    #[error("generator {0} does not reduce to a monomial")]
    NonMonomialReduction(String),

    #[error("quotient is not artinian: no pure power of {0} survives")]
    NotArtinian(&'static str),

    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
}
