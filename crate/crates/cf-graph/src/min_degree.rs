use cf_core::{
    closed_neighborhood_hypergraph, open_neighborhood_hypergraph, verify, Graph, Hypergraph,
    ListAssignment, PartialColoring, VerifyMode,
};
use cf_lll::{pach_tardos_color, PachTardosParams};

use crate::error::{GraphError, Result};
use crate::mode::Mode;
use crate::ROUNDS_FACTOR;

#[derive(Debug, Clone)]
pub struct MinDegreeRun {
    pub coloring: PartialColoring,
    pub t: usize,
    pub rounds: usize,
    pub attempt: u32,
}

/// Witness multiplicity that makes `ln d` colors suffice: half the log,
/// rounded up, and never below one.
pub fn witness_count(delta: usize) -> usize {
    if delta <= 1 {
        return 1;
    }
    ((((delta as f64).ln() + 1.0) / 2.0).ceil() as usize).max(1)
}

fn run(g: &Graph, h: Hypergraph, lists: &ListAssignment, mode: Mode, seed: u64) -> Result<MinDegreeRun> {
    let delta = g.max_degree();
    let t = witness_count(delta);
    if g.min_degree() < 2 * t - 1 {
        return Err(GraphError::DegreeTooSmall { found: g.min_degree(), required: 2 * t - 1 });
    }
    let overlap = h.stats().overlap;
    assert!(
        overlap <= delta * delta,
        "two neighborhoods share at most a neighborhood's worth of vertices"
    );
    let gamma = if mode.is_paper() { delta * delta } else { overlap };
    let p = PachTardosParams::with_rounds_factor(t, gamma, ROUNDS_FACTOR)
        .map_err(|e| GraphError::stage("round", e))?;
    let run = pach_tardos_color(&h, lists, &p, seed).map_err(|e| GraphError::stage("round", e))?;
    assert!(verify(&h, &run.coloring, VerifyMode::Partial, Some(lists)).ok);
    Ok(MinDegreeRun { coloring: run.coloring, t, rounds: run.rounds, attempt: run.attempt })
}

/// Colors some vertices so every open neighborhood holds a unique color,
/// provided the minimum degree supports `2t - 1` designated witnesses.
pub fn cfon_min_degree(
    g: &Graph,
    lists: &ListAssignment,
    mode: Mode,
    seed: u64,
) -> Result<MinDegreeRun> {
    // Also rejects isolated vertices, whose open neighborhood is empty.
    let h = open_neighborhood_hypergraph(g)?;
    run(g, h, lists, mode, seed)
}

/// Closed-neighborhood variant under the same degree precondition.
pub fn cfcn_min_degree(
    g: &Graph,
    lists: &ListAssignment,
    mode: Mode,
    seed: u64,
) -> Result<MinDegreeRun> {
    run(g, closed_neighborhood_hypergraph(g)?, lists, mode, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_count_tracks_the_log() {
        assert_eq!(witness_count(0), 1);
        assert_eq!(witness_count(1), 1);
        assert_eq!(witness_count(7), 2);
        assert_eq!(witness_count(100), 3);
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    #[test]
    fn complete_graph_passes_both_variants() {
        let g = complete(8);
        let lists = ListAssignment::random(8, 1100, 4000, 71).unwrap();
        let on = cfon_min_degree(&g, &lists, Mode::desk(), 5).unwrap();
        assert_eq!(on.t, 2);
        let cn = cfcn_min_degree(&g, &lists, Mode::desk(), 5).unwrap();
        assert!(verify(
            &closed_neighborhood_hypergraph(&g).unwrap(),
            &cn.coloring,
            VerifyMode::Partial,
            Some(&lists)
        )
        .ok);
    }

    #[test]
    fn sparse_graph_is_rejected_with_the_requirement() {
        // A long path has minimum degree 1, but Delta of 2 already wants
        // t = 1 and degree 1, so force a bigger Delta with a star.
        let mut g = Graph::new(10);
        for v in 1..10 {
            g.add_edge(0, v).unwrap();
        }
        let lists = ListAssignment::shared_palette(10, 50).unwrap();
        match cfon_min_degree(&g, &lists, Mode::desk(), 0) {
            Err(GraphError::DegreeTooSmall { found: 1, required: 3 }) => {}
            other => panic!("expected a degree complaint, got {other:?}"),
        }
    }
}
