use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ConeError {
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("the zero functional does not define a hyperplane or halfspace")]
    ZeroFunctional,
    #[error("a zero-dimensional cone has no relative interior point")]
    NoRelativeInterior,
    #[error("functional is not a supporting halfspace of the cone")]
    NotSupporting,
}
