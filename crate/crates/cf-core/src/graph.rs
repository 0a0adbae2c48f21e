use std::collections::BTreeSet;

use crate::error::{CoreError, Result};
use crate::hypergraph::Hypergraph;

/// Simple undirected graph on vertices `0..n`, no loops or multi-edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![BTreeSet::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n {
            return Err(CoreError::BadVertex { vertex: u, n });
        }
        if v >= n {
            return Err(CoreError::BadVertex { vertex: v, n });
        }
        if u == v {
            return Err(CoreError::SelfLoop { vertex: u });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(BTreeSet::is_empty)
    }

    /// True if all vertices are reachable from vertex 0 (vacuously for n <= 1).
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }
}

/// Hypergraph whose edge `v` is the open neighborhood `N(v)`.
/// Isolated vertices would produce empty edges and are rejected.
pub fn open_neighborhood_hypergraph(g: &Graph) -> Result<Hypergraph> {
    let edges: Vec<Vec<usize>> = (0..g.n())
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    Hypergraph::new(g.n(), edges)
}

/// Hypergraph whose edge `v` is the closed neighborhood `N[v]`.
/// Defined for every graph; edge `v` always contains `v`.
pub fn closed_neighborhood_hypergraph(g: &Graph) -> Result<Hypergraph> {
    let edges: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            let mut e: Vec<usize> = g.neighbors(v).iter().copied().collect();
            e.push(v);
            e
        })
        .collect();
    Hypergraph::new(g.n(), edges)
}
