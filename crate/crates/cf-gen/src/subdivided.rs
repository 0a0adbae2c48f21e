//! Subdivided complete and complete-bipartite graphs, plus the hand
//! constructions that color the bipartite family's neighborhoods.
//!
//! Subdividing every edge once turns each original edge `uv` into a path
//! `u - x - v`. Vertex numbering: all branch vertices first (left part
//! before right part for the bipartite family), then one subdivision vertex
//! per original edge in row-major order of the original edge list.

use cf_core::{Graph, ListAssignment, PartialColoring};

use crate::error::{GenError, Result};

/// `K_n` with every edge subdivided once. Branch vertices `0..n`; the
/// subdivision vertex of edge `(i, j)`, `i < j`, follows in lexicographic
/// order of `(i, j)`. Total: `n + C(n,2)` vertices, `2·C(n,2)` edges.
pub fn subdivided_complete(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(GenError::TooSmall { what: "branch vertex count", min: 2, got: n });
    }
    let mut g = Graph::new(n + n * (n - 1) / 2);
    let mut next = n;
    for i in 0..n {
        for j in (i + 1)..n {
            g.add_edge(i, next)?;
            g.add_edge(j, next)?;
            next += 1;
        }
    }
    Ok(g)
}

/// `K_{d,m}` with every edge subdivided once, `m >= d >= 1`. Left branch
/// vertices `0..d`, right branch vertices `d..d+m`, then subdivision
/// vertices row-major: the vertex on the edge (left i, right j) sits at
/// index `d + m + i*m + j`.
pub fn subdivided_biclique(d: usize, m: usize) -> Result<Graph> {
    if d < 1 {
        return Err(GenError::TooSmall { what: "left part size", min: 1, got: d });
    }
    if m < d {
        return Err(GenError::BicliqueShape { d, m });
    }
    let mut g = Graph::new(d + m + d * m);
    for i in 0..d {
        for j in 0..m {
            let mid = d + m + i * m + j;
            g.add_edge(i, mid)?;
            g.add_edge(d + j, mid)?;
        }
    }
    Ok(g)
}

/// Index of the subdivision vertex on the edge (left `i`, right `j`).
pub fn biclique_mid(d: usize, m: usize, i: usize, j: usize) -> usize {
    d + m + i * m + j
}

/// Total coloring of the subdivided biclique with colors {0, 1, 2} in which
/// every vertex sees a unique color in its open neighborhood.
///
/// Left and diagonal subdivision vertices wear 0, the right side and the
/// bulk of the subdivision vertices wear 1, and row `d-1` beyond the
/// diagonal wears 2. Each branch vertex then sees exactly one 0 (or one 2),
/// and each subdivision vertex sees {0, 1} on its two branch neighbors.
pub fn biclique_cfon3_coloring(d: usize, m: usize) -> Result<PartialColoring> {
    if d < 1 {
        return Err(GenError::TooSmall { what: "left part size", min: 1, got: d });
    }
    if m < d {
        return Err(GenError::BicliqueShape { d, m });
    }
    let mut c = PartialColoring::empty(d + m + d * m);
    for i in 0..d {
        c.set(i, 0);
    }
    for j in 0..m {
        c.set(d + j, 1);
    }
    for i in 0..d {
        for j in 0..m {
            let color = if i == j {
                0
            } else if j >= d && i == d - 1 {
                2
            } else {
                1
            };
            c.set(biclique_mid(d, m, i, j), color);
        }
    }
    Ok(c)
}

/// Partial coloring of the subdivided biclique from arbitrary 2-color
/// lists, leaving the right part and most subdivision vertices uncolored.
///
/// Colored: every left vertex and every diagonal subdivision vertex take
/// their smallest list color; the subdivision vertices of row `d-1` beyond
/// the diagonal take a list color different from the diagonal vertex of
/// that row. Uncolored vertices never block, so each left vertex keeps its
/// diagonal neighbor unique, each right vertex sees exactly one colored
/// subdivision vertex, and each subdivision vertex sees only its left
/// neighbor colored.
pub fn biclique_cfonstar_coloring(d: usize, m: usize, lists: &ListAssignment) -> Result<PartialColoring> {
    if d < 1 {
        return Err(GenError::TooSmall { what: "left part size", min: 1, got: d });
    }
    if m < d {
        return Err(GenError::BicliqueShape { d, m });
    }
    let n = d + m + d * m;
    if lists.n() != n {
        return Err(GenError::TooSmall { what: "list count", min: n, got: lists.n() });
    }
    lists.require_exact(2)?;

    let mut c = PartialColoring::empty(n);
    for i in 0..d {
        c.set(i, lists.list(i)[0]);
    }
    for i in 0..d {
        let diag = biclique_mid(d, m, i, i);
        c.set(diag, lists.list(diag)[0]);
    }
    let anchor = c.get(biclique_mid(d, m, d - 1, d - 1)).unwrap();
    for j in d..m {
        let v = biclique_mid(d, m, d - 1, j);
        let pick = *lists
            .list(v)
            .iter()
            .find(|&&color| color != anchor)
            .expect("a 2-color list holds a color differing from any fixed color");
        c.set(v, pick);
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cf_core::{open_neighborhood_hypergraph, verify, VerifyMode};

    #[test]
    fn subdivided_complete_shape() {
        let g = subdivided_complete(4).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 12);
        // Branch vertices have degree n-1, subdivision vertices degree 2.
        for v in 0..4 {
            assert_eq!(g.degree(v), 3);
        }
        for v in 4..10 {
            assert_eq!(g.degree(v), 2);
        }
        // K_2 subdivided is the path on 3 vertices.
        let p = subdivided_complete(2).unwrap();
        assert_eq!(p.n(), 3);
        assert_eq!(p.edge_list(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn subdivided_complete_open_edges_by_direct_enumeration() {
        // Rebuild the expected neighborhoods straight from the edge list.
        let g = subdivided_complete(4).unwrap();
        let h = open_neighborhood_hypergraph(&g).unwrap();
        assert_eq!(h.edge_count(), 10);
        let mut expected: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
        for (u, v) in g.edge_list() {
            expected[u].push(v);
            expected[v].push(u);
        }
        for e in &mut expected {
            e.sort_unstable();
        }
        assert_eq!(h.edges(), &expected[..]);
        for v in 0..4 {
            assert_eq!(h.edges()[v].len(), 3);
        }
        for v in 4..10 {
            assert_eq!(h.edges()[v].len(), 2);
        }
    }

    #[test]
    fn subdivided_biclique_shape() {
        let g = subdivided_biclique(2, 4).unwrap();
        assert_eq!(g.n(), 2 + 4 + 8);
        assert_eq!(g.edge_count(), 16);
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(2), 2);
        assert_eq!(g.degree(biclique_mid(2, 4, 1, 3)), 2);
        assert!(g.has_edge(0, biclique_mid(2, 4, 0, 2)));
        assert!(g.has_edge(2 + 2, biclique_mid(2, 4, 0, 2)));
        assert!(subdivided_biclique(3, 2).is_err());
    }

    #[test]
    fn cfon3_coloring_is_conflict_free_on_open_neighborhoods() {
        for (d, m) in [(1, 1), (2, 2), (2, 4), (3, 5), (4, 9)] {
            let g = subdivided_biclique(d, m).unwrap();
            let h = open_neighborhood_hypergraph(&g).unwrap();
            let c = biclique_cfon3_coloring(d, m).unwrap();
            assert!(c.is_total());
            assert!(c.color_count() <= 3, "d={d} m={m}");
            let report = verify(&h, &c, VerifyMode::Full, None);
            assert!(report.ok, "d={d} m={m}: {:?}", report.violating_edges());
        }
    }

    #[test]
    fn cfonstar_coloring_verifies_and_respects_lists() {
        let (d, m) = (2, 4);
        let g = subdivided_biclique(d, m).unwrap();
        let h = open_neighborhood_hypergraph(&g).unwrap();
        for seed in 0..10 {
            let lists = ListAssignment::random(g.n(), 2, 6, seed).unwrap();
            let c = biclique_cfonstar_coloring(d, m, &lists).unwrap();
            let report = verify(&h, &c, VerifyMode::Partial, Some(&lists));
            assert!(report.ok, "seed {seed}");
            assert_eq!(report.list_ok, Some(true));
        }
    }

    #[test]
    fn cfonstar_single_pair_draws_from_lists() {
        // d = m = 1: path a - v - b; only a and v get colored.
        let lists = ListAssignment::new(vec![vec![5, 7], vec![3, 9], vec![5, 6]]).unwrap();
        let c = biclique_cfonstar_coloring(1, 1, &lists).unwrap();
        assert_eq!(c.get(0), Some(5));
        assert_eq!(c.get(1), None);
        assert_eq!(c.get(2), Some(5));
    }
}
