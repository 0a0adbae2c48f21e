use cf_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("K = {given} is below the minimum {minimum} admissible for this instance")]
    KTooSmall { given: usize, minimum: usize },

    #[error(
        "minimum degree {found} is below the required {required}; \
         use the dense-degree path or provide longer lists"
    )]
    DegreeTooSmall { found: usize, required: usize },

    #[error("stage {stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: StageFailure,
    },

    #[error(transparent)]
    Core(#[from] CoreError),
}

/// Why a single stage of a composite run could not deliver its coloring.
#[derive(Debug, Error)]
pub enum StageFailure {
    #[error(transparent)]
    Colorer(#[from] cf_lll::ColorerError),

    #[error("exact search exhausted its budget without an answer")]
    OracleIndeterminate,

    #[error("exact search proved the stage instance uncolorable, breaking the stage's guarantee")]
    OracleUnsat,

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("{0}")]
    Other(String),
}

impl GraphError {
    pub(crate) fn stage(stage: &'static str, source: impl Into<StageFailure>) -> Self {
        GraphError::Stage { stage, source: source.into() }
    }
}

pub type Result<T> = std::result::Result<T, GraphError>;
