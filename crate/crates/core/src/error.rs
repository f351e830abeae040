use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse word {input:?}: {reason}")]
    WordParse { input: String, reason: String },

    #[error("cannot parse polynomial {input:?}: {reason}")]
    PolyParse { input: String, reason: String },

    #[error("rotate requires a cyclically reduced word, got {0}")]
    NotCyclicallyReduced(String),

    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: u32, rank: usize },

    #[error("no value or assignment for variable {0}")]
    MissingVariable(String),

    #[error("matrix {index} is not unimodular (det = {det})")]
    NotUnimodular { index: usize, det: String },

    #[error("trace reduction of {word} exceeded its step bound ({bound})")]
    StepBound { word: String, bound: u64 },

    #[error("unsupported surface: {0}")]
    Surface(String),

    #[error("curves {0} and {1} represent the same free homotopy class up to orientation")]
    SameClass(String, String),

    #[error("malformed diagram record {figure}: {reason}")]
    Diagram { figure: String, reason: String },

    #[error("{0}")]
    Data(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
