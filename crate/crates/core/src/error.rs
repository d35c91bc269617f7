use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("{what} refused: size {size} exceeds the configured bound {bound}")]
    SizeGuard {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("orientation is not acyclic")]
    Cyclic,

    #[error("fundamental index {0} is not minimal")]
    NotMinimal(String),

    #[error("structural assumption violated: {0}")]
    Structural(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
