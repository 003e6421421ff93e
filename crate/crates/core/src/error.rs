use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("neuron index {index} out of range 1..={max}")]
    NeuronIndex { index: usize, max: usize },

    #[error("neuron count {0} out of range 1..=64")]
    NeuronCount(usize),

    #[error("neuron count mismatch: expected {expected}, found {found}")]
    NeuronCountMismatch { expected: usize, found: usize },

    #[error("a code must contain at least one codeword")]
    EmptyCode,

    #[error("codeword {0} is not in the code")]
    NotInCode(String),

    #[error("invalid code map: {0}")]
    InvalidMap(String),

    #[error("invalid elementary map: {0}")]
    InvalidSpec(String),

    #[error("code is not complete: {0} and {1} are incomparable")]
    NotComplete(String, String),

    #[error("{what} needs n <= {max}, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("no canonical-form transformation rule is known for the inclusion map")]
    UnsupportedPrediction,

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("segment {0} has zero length")]
    DegenerateSegment(usize),

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("invalid family parameter: {0}")]
    Family(String),
}

pub type Result<T> = std::result::Result<T, Error>;
