use thiserror::Error;

/// Errors surfaced by ring construction and analysis.
#[derive(Debug, Error)]
pub enum RingError {
    #[error("structural error: {0}")]
    Structure(String),

    #[error("element is not idempotent: {0}")]
    NotIdempotent(String),

    #[error("subgroup is not a two-sided ideal")]
    NotAnIdeal,

    #[error("subgroup is not nilpotent within the configured cap")]
    NotNilpotent,

    #[error("idempotent is not Peirce trivial: {0}")]
    NotPeirceTrivial(String),

    #[error("element is not a member of the required subgroup: {0}")]
    NotAMember(String),

    #[error("idempotent set is not orthogonal with sum 1")]
    NotOrthogonalSet,

    #[error("{what} refused: ring has {size} elements, cap is {cap}")]
    CapExceeded { what: String, size: u128, cap: u128 },

    #[error("unknown gallery name: {0}")]
    UnknownGallery(String),

    #[error("generalized matrix spec invalid: {0}")]
    InvalidGenMatrix(String),
}

impl RingError {
    pub fn cap(what: &str, size: u128, cap: u128) -> Self {
        RingError::CapExceeded {
            what: what.to_string(),
            size,
            cap,
        }
    }
}
