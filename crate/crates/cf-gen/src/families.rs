use rand::Rng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cf_core::{Graph, Hypergraph};

use crate::error::{GenError, Result};

/// Star `K_{1,k}`: center 0, leaves `1..=k`.
pub fn star(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(GenError::TooSmall { what: "leaf count", min: 1, got: k });
    }
    let mut g = Graph::new(k + 1);
    for leaf in 1..=k {
        g.add_edge(0, leaf)?;
    }
    Ok(g)
}

/// All contiguous intervals of `0..n` as edges, singletons included,
/// ordered by start then end. `n(n+1)/2` edges in total.
pub fn discrete_interval_hypergraph(n: usize) -> Result<Hypergraph> {
    if n < 1 {
        return Err(GenError::TooSmall { what: "vertex count", min: 1, got: n });
    }
    let mut edges = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            edges.push((i..=j).collect());
        }
    }
    Ok(Hypergraph::new(n, edges)?)
}

/// Erdős–Rényi `G(n, p)`, each pair drawn independently with a seeded RNG.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(GenError::BadProbability { p });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

const DEGREE_ATTEMPTS: usize = 200;

/// Random graph with every degree in `[min_deg, max_deg]`.
///
/// Each attempt samples target degrees, wires random stubs, drops loops and
/// duplicates, then tops up deficient vertices with random admissible
/// partners; attempts that still miss the bounds are rejected.
pub fn random_graph_min_degree(n: usize, min_deg: usize, max_deg: usize, seed: u64) -> Result<Graph> {
    if min_deg > max_deg || max_deg >= n || n < 2 {
        return Err(GenError::DegreeBounds { n, min: min_deg, max: max_deg });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..DEGREE_ATTEMPTS {
        let mut stubs: Vec<usize> = Vec::new();
        for v in 0..n {
            let d = rng.gen_range(min_deg..=max_deg);
            stubs.extend(std::iter::repeat(v).take(d));
        }
        stubs.shuffle(&mut rng);
        let mut g = Graph::new(n);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u != v && !g.has_edge(u, v) && g.degree(u) < max_deg && g.degree(v) < max_deg {
                g.add_edge(u, v)?;
            }
        }
        // Top up vertices the matching left short.
        for v in 0..n {
            let mut guard = 0;
            while g.degree(v) < min_deg && guard < 4 * n {
                guard += 1;
                let u = rng.gen_range(0..n);
                if u != v && !g.has_edge(u, v) && g.degree(u) < max_deg {
                    g.add_edge(u, v)?;
                }
            }
        }
        if g.min_degree() >= min_deg && g.max_degree() <= max_deg {
            return Ok(g);
        }
    }
    Err(GenError::DegreeRetries { attempts: DEGREE_ATTEMPTS })
}

/// Line graph: one vertex per edge of `g` (in `edge_list` order), adjacent
/// when the original edges share an endpoint. Line graphs contain no
/// induced `K_{1,3}`.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edge_list();
    let mut lg = Graph::new(edges.len());
    for (a, &(u1, v1)) in edges.iter().enumerate() {
        for (b, &(u2, v2)) in edges.iter().enumerate().skip(a + 1) {
            if u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 {
                lg.add_edge(a, b).unwrap();
            }
        }
    }
    lg
}

#[cfg(test)]
mod tests {
    use super::*;
    use cf_core::claw_number;

    #[test]
    fn star_shape() {
        let g = star(3).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.degree(0), 3);
        assert!(star(0).is_err());
    }

    #[test]
    fn interval_edges_in_order() {
        let h = discrete_interval_hypergraph(2).unwrap();
        assert_eq!(h.edges(), &[vec![0], vec![0, 1], vec![1]]);
        let h8 = discrete_interval_hypergraph(8).unwrap();
        assert_eq!(h8.edge_count(), 36);
        assert!(h8.edges().iter().all(|e| e.windows(2).all(|w| w[1] == w[0] + 1)));
    }

    #[test]
    fn random_graph_is_seed_deterministic() {
        let a = random_graph(20, 0.3, 5).unwrap();
        let b = random_graph(20, 0.3, 5).unwrap();
        assert_eq!(a.edge_list(), b.edge_list());
        let c = random_graph(20, 0.3, 6).unwrap();
        assert_ne!(a.edge_list(), c.edge_list());
        assert!(random_graph(5, 1.5, 0).is_err());
    }

    #[test]
    fn degree_bounded_graphs_meet_bounds() {
        for seed in 0..10 {
            let g = random_graph_min_degree(30, 3, 7, seed).unwrap();
            assert!(g.min_degree() >= 3, "seed {seed}");
            assert!(g.max_degree() <= 7, "seed {seed}");
        }
        assert!(random_graph_min_degree(5, 5, 5, 0).is_err());
    }

    #[test]
    fn line_graphs_are_claw_free() {
        let k13 = star(3).unwrap();
        assert_eq!(claw_number(&k13).unwrap(), 3);
        let lg = line_graph(&k13);
        // L(K_{1,3}) is a triangle.
        assert_eq!(lg.n(), 3);
        assert_eq!(lg.edge_count(), 3);
        for seed in 0..10 {
            let g = random_graph(9, 0.4, seed).unwrap();
            let lg = line_graph(&g);
            if lg.n() > 0 {
                assert!(claw_number(&lg).unwrap() <= 2, "seed {seed}");
            }
        }
    }
}
