use cf_core::Hypergraph;

use crate::error::{ColorerError, Result};

/// Shrink every edge to the part of it that matters for witnessing.
///
/// Each edge designates its `2t - 1` smallest vertices; the support is the
/// union of all designations and every edge is restricted to that support.
/// An edge keeps its own designated vertices plus whatever its overlapping
/// neighbors designated inside it, so restricted sizes always land in
/// `[2t - 1, (2t - 1) * (overlap + 1)]`.  Coloring the support so the
/// restricted instance is witnessed also witnesses the original one.
///
/// Returns the restricted hypergraph together with the sorted support.
pub fn trim(h: &Hypergraph, t: usize) -> Result<(Hypergraph, Vec<usize>)> {
    if t == 0 {
        return Err(ColorerError::BadParams { what: "t must be at least 1".into() });
    }
    let keep = 2 * t - 1;
    for (i, e) in h.edges().iter().enumerate() {
        if e.len() < keep {
            return Err(ColorerError::UndersizedEdge { edge: i, size: e.len(), required: keep });
        }
    }

    let mut in_support = vec![false; h.n()];
    for e in h.edges() {
        // Edges are stored sorted, so the smallest vertices come first.
        for &v in &e[..keep] {
            in_support[v] = true;
        }
    }
    let support: Vec<usize> = (0..h.n()).filter(|&v| in_support[v]).collect();

    let restricted: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|e| e.iter().copied().filter(|&v| in_support[v]).collect())
        .collect();
    let out = Hypergraph::new(h.n(), restricted)?;

    let cap = keep * (h.stats().overlap + 1);
    for (i, e) in out.edges().iter().enumerate() {
        assert!(
            (keep..=cap).contains(&e.len()),
            "restricted edge {i} has {} vertices, expected {keep}..={cap}",
            e.len()
        );
    }
    Ok((out, support))
}
