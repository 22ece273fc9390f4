use thiserror::Error;

/// Errors raised by group constructions and computations.
///
/// Axiom violations found by [`crate::group::validate_table`] are reported as
/// data, not through this type; they only surface here when a loader or
/// constructor refuses an invalid table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `order` is a lower bound when only a quotient was measured.
    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("unknown or malformed catalog spec `{0}`")]
    UnknownSpec(String),

    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("invalid semidirect action: {0}")]
    InvalidAction(String),

    #[error("subgroups live in different ambient groups")]
    AmbientMismatch,

    #[error("subgroup is not normal: conjugating {element} by {by} leaves it")]
    NotNormal { element: usize, by: usize },

    #[error("element product set is not a subgroup")]
    NotASubgroup,

    #[error("prime {given} does not match the group's prime tag {tagged:?}")]
    PrimeMismatch { given: u32, tagged: Option<u32> },

    #[error("map is not a homomorphism: image({x}*{y}) != image({x})*image({y})")]
    NotHomomorphism { x: usize, y: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("coset enumeration exceeded {max_cosets} cosets")]
    CosetsExceeded { max_cosets: usize },

    #[error("presentation has {count} generators, cap is {cap}")]
    GeneratorCap { count: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("crossed structure violated: {0}")]
    Structure(String),
}

impl Error {
    /// True for failures caused by configured size limits rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::OrderCap { .. } | Error::CosetsExceeded { .. } | Error::GeneratorCap { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
