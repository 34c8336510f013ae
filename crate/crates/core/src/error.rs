use thiserror::Error;

/// Every failure the toolkit can report.
///
/// Variants map one-to-one onto the stable error codes emitted by the
/// command-line front end (see [`Error::code`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("degenerate spectrum: {0}")]
    DegenerateSpectrum(String),
    #[error("fiber condition violated: {0}")]
    FiberConditionViolated(String),
    #[error("not in Det_1: {0}")]
    NotInDet1(String),
    #[error("point is not in the null cone")]
    NotInNullCone,
    #[error("point is not a member of C_{k} (interval [{d_min}, {d_max}])")]
    NotAMember { k: usize, d_min: usize, d_max: usize },
    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DegenerateSpectrum(_) => "degenerate_spectrum",
            Error::FiberConditionViolated(_) => "fiber_condition_violated",
            Error::NotInDet1(_) => "not_in_det1",
            Error::NotInNullCone => "not_in_null_cone",
            Error::NotAMember { .. } => "not_a_member",
            Error::Singular => "singular_matrix",
            Error::ShapeMismatch(_) | Error::NotSquare { .. } | Error::AmbientMismatch(..) => {
                "shape_mismatch"
            }
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Malformed(_) => "malformed_input",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
