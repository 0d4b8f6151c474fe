use polycone::ConeError;
use rootsys::RootSysError;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum GitFanError {
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Roots(#[from] RootSysError),
    #[error("multiplicity n must be at least 1, got {0}")]
    BadMultiplicity(i64),
    #[error("point lies outside the fundamental cone")]
    PointOutsideFundamental,
    #[error("cone lies outside the fundamental cone; the fan is only certified there")]
    ConeOutsideFundamental,
    #[error("cell enumeration requires a face of the fundamental cone")]
    NotAFace,
    #[error("verification is only defined for multiplicity n >= 2, got {0}")]
    VerifyNeedsN2(i64),
    #[error("enumeration budget exceeded: {used} candidates over limit {limit}")]
    BudgetExceeded { used: u64, limit: u64 },
}
