//! Exact proper coloring of graphs: chromatic number and list coloring.

use cf_core::{Color, Graph, PartialColoring};

use crate::budget::{Gas, OracleBudget};
use crate::chi::ChiBound;
use crate::list_color::ListColorOutcome;
use crate::solver::SearchOutcome;

pub(crate) enum ProperCand {
    Shared(usize),
    PerVertex(Vec<Vec<Color>>),
}

impl ProperCand {
    fn values(&self, v: usize, max_used: Option<Color>) -> Vec<Color> {
        match self {
            ProperCand::Shared(k) => {
                if *k == 0 {
                    return Vec::new();
                }
                let cap = match max_used {
                    None => 0,
                    Some(m) => (m as usize + 1).min(k - 1),
                };
                (0..=cap as Color).collect()
            }
            ProperCand::PerVertex(lists) => lists[v].clone(),
        }
    }
}

/// Backtracking proper coloring; branches on the uncolored vertex with the
/// fewest admissible colors left.
pub(crate) fn solve_proper(g: &Graph, cand: ProperCand, gas: &mut Gas) -> SearchOutcome {
    let mut slots: Vec<Option<Color>> = vec![None; g.n()];
    match dfs(g, &cand, &mut slots, None, gas) {
        Some(true) => SearchOutcome::Sat(PartialColoring::from_slots(slots)),
        Some(false) => SearchOutcome::Unsat,
        None => SearchOutcome::Exhausted,
    }
}

fn dfs(
    g: &Graph,
    cand: &ProperCand,
    slots: &mut Vec<Option<Color>>,
    max_used: Option<Color>,
    gas: &mut Gas,
) -> Option<bool> {
    if !gas.tick() {
        return None;
    }
    // Most constrained vertex first.
    let mut pick: Option<(usize, usize, Vec<Color>)> = None;
    for v in 0..g.n() {
        if slots[v].is_some() {
            continue;
        }
        let avail: Vec<Color> = cand
            .values(v, max_used)
            .into_iter()
            .filter(|&c| g.neighbors(v).iter().all(|&u| slots[u] != Some(c)))
            .collect();
        if avail.is_empty() {
            return Some(false);
        }
        if pick.as_ref().is_none_or(|(n_avail, _, _)| avail.len() < *n_avail) {
            pick = Some((avail.len(), v, avail));
        }
    }
    let Some((_, v, avail)) = pick else {
        return Some(true);
    };
    for c in avail {
        slots[v] = Some(c);
        let next_max = Some(max_used.map_or(c, |m: Color| m.max(c)));
        match dfs(g, cand, slots, next_max, gas) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => {
                slots[v] = None;
                return None;
            }
        }
    }
    slots[v] = None;
    Some(false)
}

/// Chromatic number of a graph, smallest palette first.
pub fn chi_proper(g: &Graph, budget: &OracleBudget) -> ChiBound {
    let mut gas = budget.gas();
    let cap = g.n().min(budget.max_palette);
    for k in 0..=cap {
        match solve_proper(g, ProperCand::Shared(k), &mut gas) {
            SearchOutcome::Sat(_) => return ChiBound::Exact(k),
            SearchOutcome::Unsat => {}
            SearchOutcome::Exhausted => return ChiBound::AtLeast(k),
        }
    }
    ChiBound::AtLeast(cap + 1)
}

/// Proper coloring drawing each vertex's color from its list.
pub fn graph_list_color(
    g: &Graph,
    lists: &cf_core::ListAssignment,
    budget: &OracleBudget,
) -> ListColorOutcome {
    assert_eq!(lists.n(), g.n(), "list assignment must cover every vertex");
    let mut gas = budget.gas();
    match solve_proper(g, ProperCand::PerVertex(lists.lists().to_vec()), &mut gas) {
        SearchOutcome::Sat(c) => {
            debug_assert!(is_proper(g, &c));
            ListColorOutcome::Colored(c)
        }
        SearchOutcome::Unsat => ListColorOutcome::Unsat,
        SearchOutcome::Exhausted => ListColorOutcome::Indeterminate,
    }
}

pub(crate) fn is_proper(g: &Graph, c: &PartialColoring) -> bool {
    g.edge_list()
        .iter()
        .all(|&(u, v)| c.get(u).is_some() && c.get(u) != c.get(v))
        && (0..g.n()).all(|v| c.get(v).is_some())
}
