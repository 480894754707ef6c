use thiserror::Error;

use crate::codec::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed literal {input:?}: {reason}")]
    MalformedLiteral { input: String, reason: String },

    /// The integer part needs a magnitude level the configuration does not provide.
    #[error("literal {literal:?} needs integer level {level}, but at most {max} levels are configured")]
    LevelOverflow { literal: String, level: u32, max: u32 },

    /// The fraction needs a precision depth the configuration does not provide.
    #[error("literal {literal:?} needs fraction depth {depth}, but at most {max} depths are configured")]
    DepthOverflow { literal: String, depth: u32, max: u32 },

    #[error("marker index {index} is outside 1..={max}")]
    MarkerRange { index: u32, max: u32 },

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("invalid locale rule: {0}")]
    InvalidLocale(String),

    #[error("invalid token sequence: {0}")]
    InvalidSequence(Violation),

    #[error("token {0:?} carries no value")]
    NotValueBearing(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable identifier for the error class, shared with the CLI and bindings.
    pub fn code(&self) -> &'static str {
        match self {
            Error::MalformedLiteral { .. } => "malformed-literal",
            Error::LevelOverflow { .. } => "level-overflow",
            Error::DepthOverflow { .. } => "depth-overflow",
            Error::MarkerRange { .. } => "marker-range",
            Error::InvalidConfig(_) => "invalid-config",
            Error::InvalidLocale(_) => "invalid-locale",
            Error::InvalidSequence(_) => "invalid-sequence",
            Error::NotValueBearing(_) => "not-value-bearing",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }

    pub fn is_range_overflow(&self) -> bool {
        matches!(self, Error::LevelOverflow { .. } | Error::DepthOverflow { .. })
    }
}
