use cf_core::{Graph, Hypergraph, PartialColoring, Result as CoreResult};

/// A sorted vertex subset with maps in both directions, for running a
/// stage on its own compact index space and lifting the result back.
pub(crate) struct SubIndex {
    pub verts: Vec<usize>,
    pos: Vec<Option<usize>>,
}

impl SubIndex {
    /// `verts` must be sorted and within `0..n`.
    pub fn new(n: usize, verts: Vec<usize>) -> Self {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        let mut pos = vec![None; n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = Some(i);
        }
        SubIndex { verts, pos }
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    /// Edges over original ids, restricted to the subset and compacted.
    /// Members outside the subset are dropped, not errors.
    pub fn hypergraph(&self, edges: &[Vec<usize>]) -> CoreResult<Hypergraph> {
        let mapped = edges
            .iter()
            .map(|e| e.iter().filter_map(|&v| self.pos[v]).collect())
            .collect();
        Hypergraph::new(self.len(), mapped)
    }

    /// The induced subgraph on the subset, compacted.
    pub fn graph(&self, g: &Graph) -> Graph {
        let mut sub = Graph::new(self.len());
        for (i, &v) in self.verts.iter().enumerate() {
            for &u in g.neighbors(v) {
                if let Some(j) = self.pos[u] {
                    if i < j {
                        sub.add_edge(i, j).expect("indices are in range and distinct");
                    }
                }
            }
        }
        sub
    }

    /// Copies a coloring of the compact space onto the original ids.
    pub fn lift(&self, sub: &PartialColoring, into: &mut PartialColoring) {
        for (i, &v) in self.verts.iter().enumerate() {
            if let Some(c) = sub.get(i) {
                into.set(v, c);
            }
        }
    }
}
