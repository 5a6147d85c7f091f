use std::path::PathBuf;

use thiserror::Error;

use crate::bounds::BoundId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("unsupported graph order {0} (supported: 1..=62)")]
    UnsupportedOrder(usize),

    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex set must be non-empty")]
    EmptyVertexSet,

    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(String),

    #[error("cannot parse rational number {0:?}")]
    InvalidRational(String),

    #[error("refusing to enumerate labeled graphs on {n} vertices (guard is {max})")]
    EnumerationGuard { n: usize, max: usize },

    #[error("set #{index} of the independent-set family is empty")]
    EmptyFamilyMember { index: usize },

    #[error("set #{index} of the independent-set family is not independent")]
    NotIndependent { index: usize },

    #[error("sets #{first} and #{second} of the independent-set family overlap")]
    OverlappingSets { first: usize, second: usize },

    #[error("{0:?} is not a cut-set of the complement graph")]
    NotComplementCut(Vec<usize>),

    #[error("H \\ K is empty")]
    EmptyRemainder,

    #[error("{0} needs the chromatic excess, which was not computed")]
    MissingExcess(BoundId),

    #[error("epsilon must be positive, got {0}")]
    NonPositiveEpsilon(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}, line {line}: {source}")]
    Input {
        path: PathBuf,
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("unknown strategy {0:?} (expected exhaustive or heuristic)")]
    UnknownStrategy(String),

    #[error("graph {graph6} has {n} vertices, above the solver guard of {max}")]
    Oversize { graph6: String, n: usize, max: usize },

    #[error("record serialization failed: {0}")]
    Serialize(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
