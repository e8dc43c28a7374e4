use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {n} vertices, at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },

    #[error("vertex index {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),

    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertices {u} and {v} are adjacent, so the set is not independent")]
    NotIndependent { u: usize, v: usize },

    #[error("vertex {0} occurs more than once in the ordered set")]
    RepeatedVertex(usize),

    #[error("vertex {vertex} does not have maximum degree at step {step}")]
    NotMaxDegree { vertex: usize, step: usize },

    #[error("the given set is not a face of the complex")]
    NotAFace,

    #[error("{what} needs at most {cap} vertices, got {n}")]
    VertexCapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("{what} needs at most {cap} facets, got {facets}")]
    FacetCapExceeded { what: &'static str, facets: usize, cap: usize },

    #[error("field characteristic {0} is neither 0 nor a prime")]
    NotPrime(u32),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("parse error at {position}: {message}")]
    Parse { position: String, message: String },
}

impl Error {
    pub(crate) fn parse(position: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            position: position.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
