use crate::generator::Generator;

/// Errors reported by construction and verification entry points.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("generator {0} does not belong to this algebra")]
    UnknownGenerator(Generator),

    #[error("no weight assigned to generator {0}")]
    MissingWeight(Generator),

    #[error("illegal build spec: {0}")]
    IllegalSpec(String),

    #[error("coefficient domain error: {0}")]
    CoeffDomain(String),

    #[error("operands belong to different oscillator algebras")]
    MixedAlgebras,

    #[error("graded commutator requires operands of definite parity")]
    IndefiniteParity,
}

pub type Result<T> = std::result::Result<T, Error>;
