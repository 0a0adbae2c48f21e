use std::collections::BTreeSet;

use crate::error::{CoreError, Result};
use crate::hypergraph::Hypergraph;
use crate::lists::Color;
use crate::verify::{verify, VerifyMode};

/// A coloring in which vertices may be left uncolored. Uncolored vertices
/// never serve as witnesses and never spoil anyone's unique color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring {
    slots: Vec<Option<Color>>,
}

impl PartialColoring {
    pub fn empty(n: usize) -> Self {
        PartialColoring { slots: vec![None; n] }
    }

    pub fn from_slots(slots: Vec<Option<Color>>) -> Self {
        PartialColoring { slots }
    }

    pub fn n(&self) -> usize {
        self.slots.len()
    }

    pub fn get(&self, v: usize) -> Option<Color> {
        self.slots[v]
    }

    pub fn set(&mut self, v: usize, c: Color) {
        self.slots[v] = Some(c);
    }

    pub fn clear(&mut self, v: usize) {
        self.slots[v] = None;
    }

    pub fn slots(&self) -> &[Option<Color>] {
        &self.slots
    }

    pub fn is_total(&self) -> bool {
        self.slots.iter().all(Option::is_some)
    }

    pub fn colored_count(&self) -> usize {
        self.slots.iter().filter(|s| s.is_some()).count()
    }

    pub fn distinct_colors(&self) -> BTreeSet<Color> {
        self.slots.iter().flatten().copied().collect()
    }

    pub fn color_count(&self) -> usize {
        self.distinct_colors().len()
    }

    /// Smallest color id not smaller than every used color: max used + 1,
    /// or 0 when nothing is colored.
    pub fn fresh_color(&self) -> Color {
        self.slots.iter().flatten().max().map_or(0, |&c| c + 1)
    }

    /// Union of two colorings with disjoint colored domains.
    pub fn merge(&self, other: &PartialColoring) -> Result<PartialColoring> {
        let mut merged = self.clone();
        for (v, slot) in other.slots.iter().enumerate() {
            if let Some(c) = slot {
                if merged.slots[v].is_some() {
                    return Err(CoreError::MergeConflict { vertex: v });
                }
                merged.slots[v] = Some(*c);
            }
        }
        Ok(merged)
    }
}

/// Extends a conflict-free partial coloring to a total one by giving every
/// uncolored vertex one shared fresh color.
///
/// The fresh color appears nowhere in the input, so existing witnesses
/// survive; an edge whose only colored vertex count was saved by a witness
/// keeps it, and an edge that gains exactly one freshly colored vertex gains
/// a witness. Costs one extra color at most.
pub fn lift_partial_to_full(h: &Hypergraph, coloring: &PartialColoring) -> Result<PartialColoring> {
    let report = verify(h, coloring, VerifyMode::Partial, None);
    if !report.ok {
        return Err(CoreError::NotConflictFree {
            violations: report.violation_count(),
            edges: h.edge_count(),
        });
    }
    let fresh = coloring.fresh_color();
    let slots = coloring
        .slots
        .iter()
        .map(|slot| Some(slot.unwrap_or(fresh)))
        .collect();
    Ok(PartialColoring { slots })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fresh_color_rules() {
        let mut c = PartialColoring::empty(3);
        assert_eq!(c.fresh_color(), 0);
        c.set(1, 4);
        assert_eq!(c.fresh_color(), 5);
    }

    #[test]
    fn lift_adds_one_shared_color() {
        // Path on 3 vertices, open neighborhoods: {1}, {0,2}, {1}.
        let h = Hypergraph::new(3, vec![vec![1], vec![0, 2], vec![1]]).unwrap();
        let mut partial = PartialColoring::empty(3);
        partial.set(1, 0);
        partial.set(0, 1);
        let full = lift_partial_to_full(&h, &partial).unwrap();
        assert!(full.is_total());
        assert_eq!(full.get(2), Some(2));
        assert_eq!(full.color_count(), 3);
        let report = verify(&h, &full, VerifyMode::Full, None);
        assert!(report.ok);
    }

    #[test]
    fn lift_rejects_broken_partial() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let c = PartialColoring::empty(2);
        assert!(lift_partial_to_full(&h, &c).is_err());
    }

    #[test]
    fn merge_rejects_overlap() {
        let mut a = PartialColoring::empty(2);
        a.set(0, 1);
        let mut b = PartialColoring::empty(2);
        b.set(0, 2);
        assert!(a.merge(&b).is_err());
        b.clear(0);
        b.set(1, 2);
        let m = a.merge(&b).unwrap();
        assert_eq!(m.get(0), Some(1));
        assert_eq!(m.get(1), Some(2));
    }
}
