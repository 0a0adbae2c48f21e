//! Exact conflict-free chromatic numbers for small instances.

use cf_core::{Graph, Hypergraph, Result, VerifyMode};

use crate::budget::OracleBudget;
use crate::solver::{solve, Candidates, SearchOutcome};

/// Outcome of an exact chromatic-number query. `AtLeast(k)` means every
/// palette smaller than `k` was refuted but the budget ran out before `k`
/// itself was decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiBound {
    Exact(usize),
    AtLeast(usize),
}

impl ChiBound {
    pub fn exact(self) -> Option<usize> {
        match self {
            ChiBound::Exact(k) => Some(k),
            ChiBound::AtLeast(_) => None,
        }
    }

    /// Lower bound valid in either case.
    pub fn lower(self) -> usize {
        match self {
            ChiBound::Exact(k) | ChiBound::AtLeast(k) => k,
        }
    }
}

/// Smallest palette size admitting a conflict-free coloring in the given
/// mode. A rainbow coloring always works, so the answer is at most `n`;
/// palettes are tried in increasing order.
pub fn chi_cf(h: &Hypergraph, mode: VerifyMode, budget: &OracleBudget) -> ChiBound {
    let mut gas = budget.gas();
    let cap = h.n().min(budget.max_palette);
    for k in 0..=cap {
        match solve(h, Candidates::Shared(k), mode, &mut gas) {
            SearchOutcome::Sat(_) => return ChiBound::Exact(k),
            SearchOutcome::Unsat => {}
            SearchOutcome::Exhausted => return ChiBound::AtLeast(k),
        }
    }
    ChiBound::AtLeast(cap + 1)
}

/// Like [`chi_cf`] but also returns a witness coloring.
pub fn chi_cf_with_coloring(
    h: &Hypergraph,
    mode: VerifyMode,
    budget: &OracleBudget,
) -> (ChiBound, Option<cf_core::PartialColoring>) {
    let mut gas = budget.gas();
    let cap = h.n().min(budget.max_palette);
    for k in 0..=cap {
        match solve(h, Candidates::Shared(k), mode, &mut gas) {
            SearchOutcome::Sat(c) => return (ChiBound::Exact(k), Some(c)),
            SearchOutcome::Unsat => {}
            SearchOutcome::Exhausted => return (ChiBound::AtLeast(k), None),
        }
    }
    (ChiBound::AtLeast(cap + 1), None)
}

/// Conflict-free chromatic number of the open neighborhood hypergraph.
pub fn chi_on(g: &Graph, budget: &OracleBudget) -> Result<ChiBound> {
    Ok(chi_cf(&cf_core::open_neighborhood_hypergraph(g)?, VerifyMode::Full, budget))
}

/// Partial variant: uncolored vertices are allowed.
pub fn chi_on_star(g: &Graph, budget: &OracleBudget) -> Result<ChiBound> {
    Ok(chi_cf(&cf_core::open_neighborhood_hypergraph(g)?, VerifyMode::Partial, budget))
}

/// Conflict-free chromatic number of the closed neighborhood hypergraph.
pub fn chi_cn(g: &Graph, budget: &OracleBudget) -> Result<ChiBound> {
    Ok(chi_cf(&cf_core::closed_neighborhood_hypergraph(g)?, VerifyMode::Full, budget))
}

pub fn chi_cn_star(g: &Graph, budget: &OracleBudget) -> Result<ChiBound> {
    Ok(chi_cf(&cf_core::closed_neighborhood_hypergraph(g)?, VerifyMode::Partial, budget))
}
