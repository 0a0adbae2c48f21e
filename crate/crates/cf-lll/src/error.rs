use cf_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ColorerError {
    #[error("edge {edge} has {size} vertices, need at least {required}")]
    UndersizedEdge { edge: usize, size: usize, required: usize },

    #[error("edge {edge} has {size} vertices, outside the configured window [{lo}, {hi}]")]
    EdgeOutsideWindow { edge: usize, size: usize, lo: usize, hi: usize },

    #[error("instance overlap {found} exceeds the configured bound {bound}")]
    OverlapExceedsBound { found: usize, bound: usize },

    #[error("invalid parameter: {what}")]
    BadParams { what: String },

    #[error("lists of length {found} are shorter than the required {required}")]
    ListsTooShort { found: usize, required: usize },

    #[error("no verifier-approved coloring within {attempts} restarts")]
    RestartsExhausted { attempts: u32, failures: Vec<AttemptLog> },

    #[error("{violated} edges still violated after {steps} resampling steps")]
    ResamplesExhausted { steps: u64, violated: usize, edges: Vec<usize> },

    #[error(
        "no subset met the degree window in {attempts} attempts; \
         worst vertex {worst_vertex} saw {count} picked neighbors, want [{lo}, {hi}]"
    )]
    RetriesExhausted { attempts: u32, worst_vertex: usize, count: usize, lo: usize, hi: usize },

    #[error(transparent)]
    Core(#[from] CoreError),
}

/// What went wrong in one failed coloring attempt, per trimmed edge:
/// overfull edges drew too many colors at once, empty edges drew none,
/// and the rest were colored yet never uniquely.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AttemptLog {
    pub attempt: u32,
    pub overfull_edges: usize,
    pub empty_edges: usize,
    pub unwitnessed_edges: usize,
}

pub type Result<T> = std::result::Result<T, ColorerError>;
