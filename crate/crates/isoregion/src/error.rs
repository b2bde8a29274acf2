use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// Malformed PD text.
    #[error("syntax error: {0}")]
    Syntax(String),

    /// An edge label did not occur exactly twice.
    #[error("edge label {label} appears {count} times, expected exactly 2")]
    UnpairedLabel { label: u64, count: usize },

    /// An edge label outside the range of the projection.
    #[error("edge {0} does not exist in this projection")]
    InvalidEdge(usize),

    /// The projection fails validation (disconnected or non-spherical).
    #[error("invalid projection: {0}")]
    InvalidProjection(String),

    /// Operation requires an irreducible projection.
    #[error("projection has a reducible crossing")]
    NotIrreducible,

    /// Operation requires a connected projection.
    #[error("projection is disconnected")]
    NotConnected,

    /// Operation is undefined for the zero-crossing circle.
    #[error("operation undefined for the zero-crossing circle")]
    TrivialProjection,

    /// A region id outside the graph.
    #[error("region {0} does not exist")]
    InvalidRegion(usize),

    /// Region graphs are capped at 64 vertices.
    #[error("graph has {0} vertices, the supported maximum is 64")]
    GraphTooLarge(usize),

    /// A shadow with more than one strand where a knot is required.
    #[error("shadow has {0} strands, expected a single-strand knot")]
    NotAKnot(usize),

    /// Exhaustive diagram search refused above the cutoff.
    #[error("search over {crossings} crossings exceeds the limit of {limit}")]
    SearchTooLarge { crossings: usize, limit: usize },

    /// A parameter outside the supported range.
    #[error("{0}")]
    Range(String),

    /// Census request above the supported crossing number.
    #[error("census limit {requested} exceeds the supported maximum {max}")]
    LimitExceeded { requested: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
