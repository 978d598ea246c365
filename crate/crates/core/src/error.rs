use thiserror::Error;

/// Everything that can go wrong when building or analysing a section.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not hermitian (relative asymmetry {asymmetry:.3e})")]
    NonHermitian { asymmetry: f64 },

    #[error("matrix is not traceless (trace {trace:.3e})")]
    NonTraceless { trace: f64 },

    #[error("the two matrices do not span a plane (Gram condition number {condition:.3e})")]
    DegenerateSpan { condition: f64 },

    #[error("plane basis is not orthonormal (deviation {deviation:.3e})")]
    NotOrthonormal { deviation: f64 },

    #[error("invalid section parameters: {0}")]
    InvalidParams(String),

    #[error("operation not applicable in this parameter regime: {0}")]
    InapplicableRegime(&'static str),

    #[error("the origin is not strictly inside the region")]
    OriginOutside,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Rejected input, as opposed to a failure of the numerics on valid input.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::NonHermitian { .. }
                | Error::NonTraceless { .. }
                | Error::DegenerateSpan { .. }
                | Error::NotOrthonormal { .. }
                | Error::InvalidParams(_)
                | Error::InvalidArgument(_)
        )
    }
}
