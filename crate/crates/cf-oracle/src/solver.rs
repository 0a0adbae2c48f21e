//! Backtracking search for conflict-free colorings.
//!
//! One engine serves the chromatic-number decision procedure, exact list
//! coloring, and the relaxed instances built by the choosability probes.
//! Vertices take values from per-vertex candidate sets or from a shared
//! palette; in the shared case color names are interchangeable, so a vertex
//! may only open one color beyond the highest used so far.

use cf_core::{Color, Hypergraph, PartialColoring, VerifyMode};

use crate::budget::Gas;

#[derive(Debug, Clone)]
pub(crate) enum Candidates {
    /// Colors 0..k, interchangeable.
    Shared(usize),
    /// Explicit candidates per vertex. An empty set is allowed: in partial
    /// mode the vertex is pinned uncolored, in full mode the instance is
    /// immediately unsatisfiable.
    PerVertex(Vec<Vec<Color>>),
}

impl Candidates {
    fn may_take(&self, v: usize, c: Color) -> bool {
        match self {
            Candidates::Shared(k) => (c as usize) < *k,
            Candidates::PerVertex(lists) => lists[v].contains(&c),
        }
    }
}

pub(crate) enum SearchOutcome {
    Sat(PartialColoring),
    Unsat,
    /// Budget ran out before the search space was covered.
    Exhausted,
}

#[derive(Clone, Copy, PartialEq)]
enum Slot {
    Undecided,
    Uncolored,
    Colored(Color),
}

pub(crate) struct Searcher<'a> {
    h: &'a Hypergraph,
    cand: Candidates,
    mode: VerifyMode,
    slots: Vec<Slot>,
    /// Full mode with an empty candidate set somewhere: no solution.
    hopeless: bool,
}

/// Result of examining one edge under the current partial state.
enum EdgeState {
    /// Safely witnessed (settled, or a witness no undecided member can
    /// take), or all members decided with some color unique.
    Done,
    /// All members decided, no unique color: the branch is dead.
    Dead,
    /// Still in play: witness candidates and the lowest undecided member.
    Open { witness_candidates: usize, lowest_undecided: usize },
}

impl<'a> Searcher<'a> {
    pub(crate) fn new(h: &'a Hypergraph, cand: Candidates, mode: VerifyMode) -> Self {
        let mut slots = vec![Slot::Undecided; h.n()];
        let mut hopeless = false;
        if let Candidates::PerVertex(lists) = &cand {
            for (v, list) in lists.iter().enumerate() {
                if list.is_empty() {
                    match mode {
                        // No candidates means permanently uncolored.
                        VerifyMode::Partial => slots[v] = Slot::Uncolored,
                        VerifyMode::Full => hopeless = true,
                    }
                }
            }
        }
        if matches!(&cand, Candidates::Shared(0)) && matches!(mode, VerifyMode::Full) && h.n() > 0 {
            hopeless = true;
        }
        Searcher { h, cand, mode, slots, hopeless }
    }

    pub(crate) fn run(&mut self, gas: &mut Gas) -> SearchOutcome {
        if self.hopeless {
            return SearchOutcome::Unsat;
        }
        match self.dfs(None, gas) {
            Some(true) => {
                let slots = self
                    .slots
                    .iter()
                    .map(|s| match s {
                        Slot::Colored(c) => Some(*c),
                        _ => None,
                    })
                    .collect();
                SearchOutcome::Sat(PartialColoring::from_slots(slots))
            }
            Some(false) => SearchOutcome::Unsat,
            None => SearchOutcome::Exhausted,
        }
    }

    /// Values for `v` in branching order. In the shared case at most one
    /// color above `max_used` is offered; color classes are interchangeable,
    /// so this loses no solutions.
    fn values(&self, v: usize, max_used: Option<Color>) -> Vec<Color> {
        match &self.cand {
            Candidates::Shared(k) => {
                if *k == 0 {
                    return Vec::new();
                }
                let cap = match max_used {
                    None => 0,
                    Some(m) => (m as usize + 1).min(k - 1),
                };
                (0..=cap as Color).collect()
            }
            Candidates::PerVertex(lists) => lists[v].clone(),
        }
    }

    fn edge_state(&self, edge: &[usize]) -> EdgeState {
        // Edges are small; quadratic counting beats hashing here.
        let mut undecided = 0usize;
        let mut lowest_undecided = usize::MAX;
        for &v in edge {
            if self.slots[v] == Slot::Undecided {
                undecided += 1;
                if v < lowest_undecided {
                    lowest_undecided = v;
                }
            }
        }
        let mut uniques = 0usize;
        for (i, &v) in edge.iter().enumerate() {
            let Slot::Colored(c) = self.slots[v] else { continue };
            let unique = edge.iter().enumerate().all(|(j, &w)| {
                i == j || self.slots[w] != Slot::Colored(c)
            });
            if !unique {
                continue;
            }
            // v is a current witness.
            if undecided == 0 {
                return EdgeState::Done;
            }
            uniques += 1;
            let safe = edge
                .iter()
                .all(|&u| self.slots[u] != Slot::Undecided || !self.cand.may_take(u, c));
            if safe {
                return EdgeState::Done;
            }
        }
        if undecided == 0 {
            return EdgeState::Dead;
        }
        EdgeState::Open { witness_candidates: uniques + undecided, lowest_undecided }
    }

    /// Some(true) = satisfiable below here, Some(false) = refuted,
    /// None = budget exhausted.
    fn dfs(&mut self, max_used: Option<Color>, gas: &mut Gas) -> Option<bool> {
        if !gas.tick() {
            return None;
        }
        // Pick the edge with the fewest remaining witness candidates; ties
        // go to the lowest edge index.
        let mut pick: Option<(usize, usize)> = None; // (candidates, vertex)
        for edge in self.h.edges() {
            match self.edge_state(edge) {
                EdgeState::Dead => return Some(false),
                EdgeState::Done => {}
                EdgeState::Open { witness_candidates, lowest_undecided } => {
                    if pick.is_none_or(|(best, _)| witness_candidates < best) {
                        pick = Some((witness_candidates, lowest_undecided));
                    }
                }
            }
        }
        let Some((_, v)) = pick else {
            return Some(self.finish_unconstrained());
        };

        for c in self.values(v, max_used) {
            self.slots[v] = Slot::Colored(c);
            let next_max = Some(max_used.map_or(c, |m: Color| m.max(c)));
            match self.dfs(next_max, gas) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => {
                    self.slots[v] = Slot::Undecided;
                    return None;
                }
            }
        }
        if matches!(self.mode, VerifyMode::Partial) {
            self.slots[v] = Slot::Uncolored;
            match self.dfs(max_used, gas) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => {
                    self.slots[v] = Slot::Undecided;
                    return None;
                }
            }
        }
        self.slots[v] = Slot::Undecided;
        Some(false)
    }

    /// Every edge is done, so the remaining undecided vertices are
    /// unconstrained. In partial mode they stay uncolored. In full mode each
    /// takes its first candidate; this cannot spoil a done edge, whose
    /// witness color is outside its undecided members' candidate sets.
    fn finish_unconstrained(&mut self) -> bool {
        for v in 0..self.slots.len() {
            if self.slots[v] != Slot::Undecided {
                continue;
            }
            match self.mode {
                VerifyMode::Partial => self.slots[v] = Slot::Uncolored,
                VerifyMode::Full => {
                    let first = match &self.cand {
                        Candidates::Shared(_) => Some(0),
                        Candidates::PerVertex(lists) => lists[v].first().copied(),
                    };
                    match first {
                        Some(c) => self.slots[v] = Slot::Colored(c),
                        None => return false,
                    }
                }
            }
        }
        true
    }
}

/// Convenience wrapper: solve one instance on fresh state.
pub(crate) fn solve(
    h: &Hypergraph,
    cand: Candidates,
    mode: VerifyMode,
    gas: &mut Gas,
) -> SearchOutcome {
    Searcher::new(h, cand, mode).run(gas)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::OracleBudget;

    fn sat(h: &Hypergraph, cand: Candidates, mode: VerifyMode) -> Option<PartialColoring> {
        let mut gas = OracleBudget::default().gas();
        match solve(h, cand, mode, &mut gas) {
            SearchOutcome::Sat(c) => Some(c),
            SearchOutcome::Unsat => None,
            SearchOutcome::Exhausted => panic!("budget should suffice"),
        }
    }

    #[test]
    fn shared_zero_palette() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        assert!(sat(&h, Candidates::Shared(0), VerifyMode::Full).is_none());
        // Partial mode cannot witness the edge either.
        assert!(sat(&h, Candidates::Shared(0), VerifyMode::Partial).is_none());
    }

    #[test]
    fn empty_candidate_vertex_is_pinned_uncolored() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let cand = Candidates::PerVertex(vec![vec![4], vec![]]);
        let c = sat(&h, cand.clone(), VerifyMode::Partial).unwrap();
        assert_eq!(c.get(0), Some(4));
        assert_eq!(c.get(1), None);
        assert!(sat(&h, cand, VerifyMode::Full).is_none());
    }

    #[test]
    fn found_coloring_is_conflict_free() {
        // Fano-like overlap structure.
        let h = Hypergraph::new(
            7,
            vec![
                vec![0, 1, 2],
                vec![2, 3, 4],
                vec![4, 5, 6],
                vec![0, 3, 6],
                vec![1, 3, 5],
            ],
        )
        .unwrap();
        let c = sat(&h, Candidates::Shared(3), VerifyMode::Full).unwrap();
        assert!(cf_core::verify(&h, &c, VerifyMode::Full, None).ok);
    }
}
