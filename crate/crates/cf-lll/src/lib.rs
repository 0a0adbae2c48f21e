//! Randomized colorers and samplers whose guarantees come from local
//! independence: each works in rounds or repair steps that only look at a
//! bounded neighborhood, and every returned object is checked against its
//! contract before it leaves the crate.  Budgets cap the randomness; when
//! one runs out the caller gets a diagnosis of what kept failing, never a
//! silently wrong answer.

mod core_subset;
mod error;
mod near_uniform;
mod pach_tardos;
mod trim;

pub use core_subset::{sample_core_subset, CoreSample, CoreSubsetParams, SAMPLE_RETRY_BUDGET};
pub use error::{AttemptLog, ColorerError, Result};
pub use near_uniform::{near_uniform_color, NearUniformParams, NearUniformRun, RESAMPLE_BUDGET};
pub use pach_tardos::{pach_tardos_color, PachTardosParams, PachTardosRun, RESTART_BUDGET};
pub use trim::trim;
