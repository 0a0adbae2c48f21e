use std::collections::HashMap;

use crate::coloring::PartialColoring;
use crate::hypergraph::Hypergraph;
use crate::lists::{Color, ListAssignment};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Uncolored vertices are allowed.
    Partial,
    /// Every vertex must be colored.
    Full,
}

/// Outcome for a single edge: the lowest-index vertex whose color occurs
/// exactly once among the colored vertices of the edge, or a violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeVerdict {
    Witness { vertex: usize, color: Color },
    Violation,
}

/// Result of checking a coloring against a hypergraph.
///
/// `ok` holds exactly when every edge has a witness, full mode saw no
/// uncolored vertex, and the list check (when requested) passed.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub mode: VerifyMode,
    pub edges: Vec<EdgeVerdict>,
    /// Vertices without a color; only collected in full mode.
    pub uncolored: Vec<usize>,
    /// `Some(false)` if a vertex wears a color missing from its list.
    pub list_ok: Option<bool>,
    pub ok: bool,
}

impl VerifyReport {
    pub fn violation_count(&self) -> usize {
        self.edges
            .iter()
            .filter(|v| matches!(v, EdgeVerdict::Violation))
            .count()
    }

    pub fn violating_edges(&self) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, v)| matches!(v, EdgeVerdict::Violation).then_some(i))
            .collect()
    }

    /// Witness vertex of edge `i`, if any.
    pub fn witness(&self, i: usize) -> Option<(usize, Color)> {
        match self.edges[i] {
            EdgeVerdict::Witness { vertex, color } => Some((vertex, color)),
            EdgeVerdict::Violation => None,
        }
    }
}

/// Checks conflict-freeness: every edge must contain a vertex whose color is
/// unique among the edge's colored vertices. Pass `lists` to also check that
/// every colored vertex drew from its own list.
pub fn verify(
    h: &Hypergraph,
    coloring: &PartialColoring,
    mode: VerifyMode,
    lists: Option<&ListAssignment>,
) -> VerifyReport {
    debug_assert_eq!(h.n(), coloring.n());
    let mut counts: HashMap<Color, usize> = HashMap::new();
    let edges = h
        .edges()
        .iter()
        .map(|edge| {
            counts.clear();
            for &v in edge {
                if let Some(c) = coloring.get(v) {
                    *counts.entry(c).or_insert(0) += 1;
                }
            }
            edge.iter()
                .find_map(|&v| {
                    let c = coloring.get(v)?;
                    (counts[&c] == 1).then_some(EdgeVerdict::Witness { vertex: v, color: c })
                })
                .unwrap_or(EdgeVerdict::Violation)
        })
        .collect::<Vec<_>>();

    let uncolored = match mode {
        VerifyMode::Full => (0..h.n()).filter(|&v| coloring.get(v).is_none()).collect(),
        VerifyMode::Partial => Vec::new(),
    };
    let list_ok = lists.map(|la| {
        (0..h.n()).all(|v| coloring.get(v).is_none_or(|c| la.contains(v, c)))
    });

    let ok = edges.iter().all(|e| matches!(e, EdgeVerdict::Witness { .. }))
        && uncolored.is_empty()
        && list_ok != Some(false);
    VerifyReport { mode, edges, uncolored, list_ok, ok }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h_pair() -> Hypergraph {
        Hypergraph::new(2, vec![vec![0, 1]]).unwrap()
    }

    #[test]
    fn same_color_pair_fails() {
        let mut c = PartialColoring::empty(2);
        c.set(0, 5);
        c.set(1, 5);
        let report = verify(&h_pair(), &c, VerifyMode::Full, None);
        assert!(!report.ok);
        assert_eq!(report.violating_edges(), vec![0]);
    }

    #[test]
    fn uncolored_vertex_neither_witnesses_nor_blocks() {
        let mut c = PartialColoring::empty(2);
        c.set(0, 5);
        let partial = verify(&h_pair(), &c, VerifyMode::Partial, None);
        assert!(partial.ok);
        assert_eq!(partial.witness(0), Some((0, 5)));
        let full = verify(&h_pair(), &c, VerifyMode::Full, None);
        assert!(!full.ok);
        assert_eq!(full.uncolored, vec![1]);
    }

    #[test]
    fn witness_is_lowest_index() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let mut c = PartialColoring::empty(3);
        c.set(0, 1);
        c.set(1, 2);
        c.set(2, 3);
        let report = verify(&h, &c, VerifyMode::Full, None);
        assert_eq!(report.witness(0), Some((0, 1)));
    }

    #[test]
    fn list_compliance_checked() {
        let lists = ListAssignment::new(vec![vec![1, 2], vec![3]]).unwrap();
        let mut c = PartialColoring::empty(2);
        c.set(0, 1);
        c.set(1, 9);
        let report = verify(&h_pair(), &c, VerifyMode::Full, Some(&lists));
        assert_eq!(report.list_ok, Some(false));
        assert!(!report.ok);
    }
}
