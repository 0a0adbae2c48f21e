//! Exact oracles for conflict-free coloring at desk scale.
//!
//! Everything here is ground truth within an explicit budget: chromatic
//! numbers by branch and bound, list colorability by backtracking, and
//! choosability by exhaustive canonical enumeration of list assignments.
//! Whenever a budget runs out the answer is an explicit indeterminate
//! value, never a guess.

mod budget;
mod chi;
mod list_color;
mod probe;
mod proper;
mod solver;

pub use budget::OracleBudget;
pub use chi::{chi_cf, chi_cf_with_coloring, chi_cn, chi_cn_star, chi_on, chi_on_star, ChiBound};
pub use list_color::{list_cf_color, ListColorOutcome};
pub use probe::{choice_probe, graph_choice_probe, ChoiceVerdict};
pub use proper::{chi_proper, graph_list_color};
