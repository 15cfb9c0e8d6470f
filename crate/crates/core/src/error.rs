use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input violates a structural requirement. `field` names the offending
    /// location, e.g. `points[3]` or `dim`.
    #[error("invalid input at `{field}`: {reason}")]
    InvalidInput { field: String, reason: String },

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("objective is singular at ({x}, {y})")]
    Singular { x: f64, y: f64 },

    #[error("arc has no admissible sub-arc inside the lens")]
    EmptySubArc,

    #[error("arc meets the lens in {pieces} disjoint pieces; expected a single sub-arc")]
    DisconnectedSubArc { pieces: usize },

    #[error(
        "grid too fine: about {pairs:.3e} point pairs exceeds the limit of {limit:.0e}; use a coarser resolution"
    )]
    GridTooFine { pairs: f64, limit: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidInput {
            field: field.into(),
            reason: reason.into(),
        }
    }
}
