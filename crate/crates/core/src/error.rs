use thiserror::Error;

/// Failure modes shared by every module of the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("no element of multiplicative order {order} in {field}")]
    OrderUnavailable { order: u64, field: String },
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("ideal contains the unit")]
    ImproperIdeal,
    #[error("characteristic {p} is too small for an algebra of dimension {dim} (need p > dim)")]
    CharacteristicTooSmall { p: u64, dim: usize },
    #[error("minimal polynomial {0} does not split into linear factors over Q")]
    NotSplit(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("quiver has a cycle through vertex {0}")]
    CyclicQuiver(usize),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("inclusion is not injective")]
    NotInjective,
    #[error("map is not a coalgebra morphism: {0}")]
    NotACoalgebraMap(String),
    #[error("twisting map fails its axioms: {0}")]
    InvalidTwist(String),
    #[error("cotwisting map fails its axioms: {0}")]
    InvalidCotwist(String),
    #[error("map is not an algebra automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("action is not a module algebra: {0}")]
    NotAModuleAlgebra(String),
    #[error("bialgebra axioms fail: {0}")]
    InvalidBialgebra(String),
    #[error("truncation ({a}, {b}) is incompatible with the Z/{n} grading")]
    GradingIncompatible { n: u64, a: usize, b: usize },
    #[error("central fiber ({c}, {d}) is on the coordinate axes")]
    NotAzumaya { c: u64, d: u64 },
    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for failures caused by an unmet mathematical precondition
    /// (as opposed to malformed input).
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::OrderUnavailable { .. }
                | Error::CharacteristicTooSmall { .. }
                | Error::NotSplit(_)
                | Error::GradingIncompatible { .. }
                | Error::NotAzumaya { .. }
                | Error::NotPrime(_)
        )
    }
}
