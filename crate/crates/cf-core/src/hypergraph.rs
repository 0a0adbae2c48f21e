use crate::error::{CoreError, Result};

/// A hypergraph on vertices `0..n`. Edges are kept sorted and deduplicated;
/// edge order is significant (neighborhood hypergraphs index edges by vertex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// Size and overlap summary of a hypergraph.
///
/// `overlap` is the largest number of *other* edges any single edge
/// intersects. `max_vertex_degree` is the largest number of edges any one
/// vertex lies in. For an edge-less hypergraph all fields except `n` are 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypergraphStats {
    pub n: usize,
    pub edge_count: usize,
    pub max_vertex_degree: usize,
    pub overlap: usize,
    pub min_edge_size: usize,
    pub max_edge_size: usize,
}

impl Hypergraph {
    /// Builds a hypergraph, normalizing each edge to a sorted set.
    /// Rejects empty edges and out-of-range vertices.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (index, mut edge) in edges.into_iter().enumerate() {
            if edge.is_empty() {
                return Err(CoreError::EmptyEdge { index });
            }
            edge.sort_unstable();
            edge.dedup();
            if let Some(&vertex) = edge.iter().find(|&&v| v >= n) {
                return Err(CoreError::VertexOutOfRange { index, vertex, n });
            }
            normalized.push(edge);
        }
        Ok(Hypergraph { n, edges: normalized })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertices that appear in at least one edge, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        for edge in &self.edges {
            for &v in edge {
                seen[v] = true;
            }
        }
        (0..self.n).filter(|&v| seen[v]).collect()
    }

    /// Number of edges containing each vertex.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for edge in &self.edges {
            for &v in edge {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Exact stats; edge overlap is computed pairwise over bitset rows.
    pub fn stats(&self) -> HypergraphStats {
        let m = self.edges.len();
        let words = self.n.div_ceil(64);
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(m);
        for edge in &self.edges {
            let mut row = vec![0u64; words];
            for &v in edge {
                row[v / 64] |= 1u64 << (v % 64);
            }
            rows.push(row);
        }
        let mut overlap = 0usize;
        for i in 0..m {
            let mut hits = 0usize;
            for j in 0..m {
                if i != j && rows[i].iter().zip(&rows[j]).any(|(a, b)| a & b != 0) {
                    hits += 1;
                }
            }
            overlap = overlap.max(hits);
        }
        HypergraphStats {
            n: self.n,
            edge_count: m,
            max_vertex_degree: self.vertex_degrees().into_iter().max().unwrap_or(0),
            overlap,
            min_edge_size: self.edges.iter().map(Vec::len).min().unwrap_or(0),
            max_edge_size: self.edges.iter().map(Vec::len).max().unwrap_or(0),
        }
    }
}
