use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0}")]
    Domain(String),
    #[error("cochain degree {0} is out of range for this operation")]
    DegreeOutOfRange(usize),
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("not a subalgebra: {0}")]
    NotASubalgebra(String),
    #[error("not an algebra morphism: {0}")]
    NotAMorphism(String),
    #[error("not a flat lift: {0}")]
    NotALift(String),
    #[error("lifted product is not associative over the truncation ring")]
    NotAssociative,
    #[error("matrix is not an R-linear lift of the given map")]
    NotALinearLift,
    #[error("element is not central")]
    NotCentral,
    #[error("endomorphism does not preserve the center")]
    CenterNotPreserved,
    #[error("algebra is not commutative")]
    NotCommutative,
    #[error("bimodule is not diagonal over the base subalgebra")]
    NotDiagonal,
    #[error("not a unital ring morphism: {0}")]
    NotARingMorphism(String),
    #[error("mismatched Weyl signature: {0}")]
    MismatchedSignature(String),
    #[error("generator images do not satisfy the Weyl relations")]
    NotAnEndo,
    #[error("element has a non-central monomial: {0}")]
    NotCentralMonomial(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
