use thiserror::Error;

/// Errors surfaced by the public API.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate value at positions {first} and {second} (1-based): sequences must be pairwise distinct")]
    DuplicateValue { first: usize, second: usize },

    #[error("duplicate x-coordinate between points {first} and {second} (by x-rank): point sets must be generic")]
    DuplicateX { first: usize, second: usize },

    #[error("duplicate y-coordinate between points {first} and {second} (by x-rank): point sets must be generic")]
    DuplicateY { first: usize, second: usize },

    #[error("{what} accepts at most {limit} points, got {got}")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("construction requires n >= 10k^3 (k = {k} needs n >= {required}, got {n})")]
    BelowThreshold { n: usize, k: usize, required: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid covering: {0}")]
    InvalidCovering(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
