use thiserror::Error;

/// Errors produced by the core data model and its operations.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("edge {index} is empty")]
    EmptyEdge { index: usize },

    #[error("edge {index} mentions vertex {vertex}, but the vertex set is 0..{n}")]
    VertexOutOfRange { index: usize, vertex: usize, n: usize },

    #[error("self-loop on vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("vertex {vertex} is out of range 0..{n}")]
    BadVertex { vertex: usize, n: usize },

    #[error("list for vertex {vertex} is empty")]
    EmptyList { vertex: usize },

    #[error("vertex {vertex} has a list of {found} colors, need {required}")]
    ListTooSmall { vertex: usize, found: usize, required: usize },

    #[error("expected an assignment of exactly {required} colors per vertex, vertex {vertex} has {found}")]
    NotAnRAssignment { vertex: usize, found: usize, required: usize },

    #[error("coloring has {found} slots for {expected} vertices")]
    ColoringSizeMismatch { found: usize, expected: usize },

    #[error("input is not conflict-free: {violations} of {edges} edges lack a uniquely colored vertex")]
    NotConflictFree { violations: usize, edges: usize },

    #[error("gave up after {attempts} attempts: {reason}")]
    RetriesExhausted { attempts: usize, reason: String },

    #[error("vertex {vertex} colored twice while merging colorings")]
    MergeConflict { vertex: usize },

    #[error("order must be a permutation of 0..{n}")]
    BadOrder { n: usize },

    #[error("target part {part} for vertex {vertex} is out of range 0..{parts}")]
    BadTarget { vertex: usize, part: usize, parts: usize },

    #[error("neighborhood of vertex {vertex} has {degree} vertices, exhaustive search handles at most {limit}")]
    NeighborhoodTooLarge { vertex: usize, degree: usize, limit: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, CoreError>;
