use thiserror::Error;

use crate::scalar::GaussianRational;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("coordinate {index} out of range for ambient dimension {ambient}")]
    CoordinateOutOfRange { index: usize, ambient: usize },

    #[error("malformed algebra document: {0}")]
    Schema(String),

    #[error("grading violated: {0}")]
    Grading(String),

    #[error("skew-symmetry violated: {0}")]
    Skew(String),

    #[error("map is not homogeneous of the requested degree")]
    NotHomogeneous,

    #[error("{0} spaces carry no witness maps")]
    NoWitness(String),

    #[error("map is not a member of the {0} space")]
    NotMember(String),

    #[error("characteristic polynomial does not split over Q(i)")]
    NotSplit {
        /// Linear factors found before giving up, with multiplicities.
        roots: Vec<(GaussianRational, usize)>,
        /// Unfactored remainder, coefficients from the constant term up.
        residual: Vec<GaussianRational>,
    },

    #[error("unknown identifier {0:?}")]
    UnknownId(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
