//! Conflict-free list coloring of graph neighborhoods.
//!
//! Each routine here decomposes a graph, hands the pieces to the
//! colorers in `cf_lll` or the exact search in `cf_oracle`, and merges
//! the results.  The decompositions guarantee that every open (or
//! closed) neighborhood ends up with a color appearing exactly once,
//! using only colors from per-vertex lists.  Every composite re-verifies
//! its output before returning, so a successful call is a certificate.
//!
//! Routines take a [`Mode`]: `Paper` keeps the constants that make the
//! probabilistic arguments airtight at six-digit degrees, `Desk` shrinks
//! them so the same pipelines finish on instances small enough to test.

mod cfcn;
mod claw;
mod dense;
mod error;
mod lift;
mod min_degree;
mod mode;
mod reindex;

pub use cfcn::{cfcn_general, cfcn_list_size, cfcn_min_k, CfcnRun, CfcnSummary};
pub use claw::{cfon_claw, cfon_claw_list_size, ClawRun, ClawSummary};
pub use dense::{
    cfcn_dense_min_degree, cfon_dense_min_degree, DenseRun, DENSE_DELTA_THRESHOLD,
};
pub use error::{GraphError, Result, StageFailure};
pub use lift::{cf_full_from_partial_list, LiftRun};
pub use min_degree::{cfcn_min_degree, cfon_min_degree, witness_count, MinDegreeRun};
pub use mode::Mode;

/// Round-schedule multiplier for every staged colorer in this crate.
///
/// The stock multiplier in `PachTardosParams` keeps lists short but
/// leaves each vertex a noticeable chance of ending a run uncolored;
/// acceptable for one edge, fatal when a stage must witness dozens of
/// edges at once within its restart budget.  At 90 the per-vertex miss
/// probability drops to roughly `(gamma + 2)^-3`, which keeps whole
/// stages succeeding on the first or second attempt.
pub(crate) const ROUNDS_FACTOR: f64 = 90.0;
