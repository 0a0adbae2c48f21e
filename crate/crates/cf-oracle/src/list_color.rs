//! Exact conflict-free coloring from prescribed lists.

use cf_core::{Hypergraph, ListAssignment, PartialColoring, VerifyMode};

use crate::budget::OracleBudget;
use crate::solver::{solve, Candidates, SearchOutcome};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ListColorOutcome {
    Colored(PartialColoring),
    Unsat,
    Indeterminate,
}

impl ListColorOutcome {
    pub fn coloring(self) -> Option<PartialColoring> {
        match self {
            ListColorOutcome::Colored(c) => Some(c),
            _ => None,
        }
    }
}

/// Searches for a conflict-free coloring that draws each vertex's color
/// from its list. In partial mode vertices may also stay uncolored.
pub fn list_cf_color(
    h: &Hypergraph,
    lists: &ListAssignment,
    mode: VerifyMode,
    budget: &OracleBudget,
) -> ListColorOutcome {
    assert_eq!(lists.n(), h.n(), "list assignment must cover every vertex");
    let mut gas = budget.gas();
    let cand = Candidates::PerVertex(lists.lists().to_vec());
    match solve(h, cand, mode, &mut gas) {
        SearchOutcome::Sat(c) => {
            debug_assert!(cf_core::verify(h, &c, mode, Some(lists)).ok);
            ListColorOutcome::Colored(c)
        }
        SearchOutcome::Unsat => ListColorOutcome::Unsat,
        SearchOutcome::Exhausted => ListColorOutcome::Indeterminate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cf_core::verify;

    #[test]
    fn disjoint_singletons_force_the_coloring() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let lists = ListAssignment::new(vec![vec![7], vec![7], vec![9]]).unwrap();
        let budget = OracleBudget::default();
        let out = list_cf_color(&h, &lists, VerifyMode::Full, &budget);
        let c = out.coloring().expect("vertex 2 is a unique witness");
        assert_eq!(c.get(2), Some(9));
        assert!(verify(&h, &c, VerifyMode::Full, Some(&lists)).ok);
    }

    #[test]
    fn identical_singletons_on_an_edge_are_unsat() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let lists = ListAssignment::new(vec![vec![3], vec![3]]).unwrap();
        let budget = OracleBudget::default();
        assert_eq!(list_cf_color(&h, &lists, VerifyMode::Full, &budget), ListColorOutcome::Unsat);
        // Leaving one endpoint uncolored rescues the partial variant.
        let out = list_cf_color(&h, &lists, VerifyMode::Partial, &budget);
        assert!(out.coloring().is_some());
    }

    #[test]
    fn budget_zero_is_indeterminate() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let lists = ListAssignment::shared_palette(2, 2).unwrap();
        let budget = OracleBudget { max_nodes: 0, ..Default::default() };
        assert_eq!(
            list_cf_color(&h, &lists, VerifyMode::Full, &budget),
            ListColorOutcome::Indeterminate
        );
    }
}
