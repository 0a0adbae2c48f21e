use thiserror::Error;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("{what} must be at least {min}, got {got}")]
    TooSmall { what: &'static str, min: usize, got: usize },

    #[error("need right side at least as large as left: m = {m} < d = {d}")]
    BicliqueShape { d: usize, m: usize },

    #[error("edge probability must lie in [0, 1], got {p}")]
    BadProbability { p: f64 },

    #[error("degree bounds unsatisfiable: n = {n}, min = {min}, max = {max}")]
    DegreeBounds { n: usize, min: usize, max: usize },

    #[error("no graph met the degree bounds within {attempts} attempts")]
    DegreeRetries { attempts: usize },

    #[error("radius must be positive and finite, got {radius}")]
    BadRadius { radius: f64 },

    #[error("client {index} at ({x}, {y}) is out of range of every station")]
    UncoveredClient { index: usize, x: f64, y: f64 },

    #[error(transparent)]
    Core(#[from] cf_core::CoreError),
}

pub type Result<T> = std::result::Result<T, GenError>;
