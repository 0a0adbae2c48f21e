use std::collections::{BTreeSet, HashMap};

use cf_core::{
    closed_neighborhood_hypergraph, verify, Color, Graph, Hypergraph, ListAssignment,
    PartialColoring, VerifyMode,
};
use cf_lll::{pach_tardos_color, PachTardosParams};
use cf_oracle::{list_cf_color, ListColorOutcome, OracleBudget};

use crate::error::{GraphError, Result, StageFailure};
use crate::mode::Mode;
use crate::ROUNDS_FACTOR;

/// `⌈ln d⌉`, the degree threshold the decomposition pivots on.
fn theta(delta: usize) -> usize {
    if delta <= 1 {
        0
    } else {
        (delta as f64).ln().ceil() as usize
    }
}

/// `⌈ln² d⌉`, the unit the list-size precondition is quoted in.
fn ln_squared(delta: usize) -> usize {
    if delta <= 1 {
        0
    } else {
        (delta as f64).ln().powi(2).ceil() as usize
    }
}

/// How the vertex set was split and how each stage went.
#[derive(Debug, Clone)]
pub struct CfcnSummary {
    pub theta: usize,
    pub k_min: usize,
    /// Sizes of the high-degree core, its fringe, and the low-degree rest.
    pub a1: usize,
    pub a2: usize,
    pub b: usize,
    pub round_stage_colors: usize,
    pub exact_stage_colors: usize,
    pub round_stage_attempt: u32,
    pub rounds: usize,
}

#[derive(Debug, Clone)]
pub struct CfcnRun {
    pub coloring: PartialColoring,
    pub summary: CfcnSummary,
}

struct Plan {
    theta: usize,
    denom: usize,
    in_a: Vec<bool>,
    in_a1: Vec<bool>,
    a1: Vec<usize>,
    b: Vec<usize>,
    h1: Hypergraph,
    pt: PachTardosParams,
    k_min: usize,
}

fn plan(g: &Graph, mode: Mode) -> Result<Plan> {
    let n = g.n();
    let delta = g.max_degree();
    let theta = theta(delta);
    let denom = ln_squared(delta).max(1);

    let in_a: Vec<bool> = (0..n).map(|v| g.degree(v) >= theta).collect();
    let d_a = |v: usize| g.neighbors(v).iter().filter(|&&u| in_a[u]).count();
    let in_a1: Vec<bool> = (0..n).map(|v| in_a[v] && d_a(v) >= theta).collect();
    let a1: Vec<usize> = (0..n).filter(|&v| in_a1[v]).collect();
    let b: Vec<usize> = (0..n).filter(|&v| !in_a[v]).collect();

    // One edge per core vertex: its closed neighborhood inside the core.
    let h1_edges: Vec<Vec<usize>> = a1
        .iter()
        .map(|&v| {
            let mut e: Vec<usize> =
                g.neighbors(v).iter().copied().filter(|&u| in_a[u]).collect();
            e.push(v);
            e
        })
        .collect();
    let h1 = Hypergraph::new(n, h1_edges)?;

    // Two neighborhoods only intersect within distance two, so the overlap
    // never beats the square of the degree.
    let overlap = h1.stats().overlap;
    assert!(overlap <= delta * delta, "neighborhood overlap {overlap} above degree bound");
    let gamma = if mode.is_paper() { delta * delta } else { overlap };

    let t1 = ((theta + 1).div_ceil(2)).max(1);
    let pt = PachTardosParams::with_rounds_factor(t1, gamma, ROUNDS_FACTOR)
        .map_err(|e| GraphError::stage("round", e))?;

    // A list must survive the round schedule if the vertex is in the core,
    // or the two trims plus the exact stage's demand if it is not; one K
    // covers both sides.  The two trims cost at most `theta - 1` and
    // `theta^2` colors (closed neighborhoods put the extra vertex in both
    // factors, which the integer ceilings absorb).
    let need = pt.rounds + theta.saturating_sub(1) + theta * theta + theta + 1;
    let k_min = need.div_ceil(denom);

    Ok(Plan { theta, denom, in_a, in_a1, a1, b, h1, pt, k_min })
}

/// The smallest admissible list-size constant for this instance: lists of
/// `K ⌈ln² d⌉` colors are accepted whenever `K` is at least this.
pub fn cfcn_min_k(g: &Graph, mode: Mode) -> Result<usize> {
    Ok(plan(g, mode)?.k_min)
}

/// List length that the constant `k` stands for: `k ⌈ln² d⌉`.
pub fn cfcn_list_size(g: &Graph, k: usize) -> usize {
    k * ln_squared(g.max_degree()).max(1)
}

/// Colors part of the graph so every vertex sees a color exactly once in
/// its closed neighborhood, drawing only from the given lists.
///
/// High-degree vertices (the core `A`, degree at least `⌈ln d⌉`) are
/// handled by round-coloring the hypergraph of core neighborhoods, which
/// hands every deep-core vertex a witness color.  The low-degree rest `B`
/// is colored exactly, after striking from each `B`-list the witness
/// colors of adjacent core vertices and every core color visible from a
/// neighborhood the vertex might itself witness.  The two stages touch
/// disjoint vertices, and the trims make their guarantees compose; the
/// merged coloring is checked against the closed-neighborhood hypergraph
/// before it is returned.
pub fn cfcn_general(
    g: &Graph,
    lists: &ListAssignment,
    k: usize,
    mode: Mode,
    seed: u64,
) -> Result<CfcnRun> {
    assert_eq!(g.n(), lists.n(), "lists must cover the vertex set");
    let p = plan(g, mode)?;
    if k < p.k_min {
        return Err(GraphError::KTooSmall { given: k, minimum: p.k_min });
    }
    let r = k * p.denom;
    if mode.is_paper() {
        lists.require_exact(r)?;
    } else {
        lists.require_min(r)?;
    }

    // Round stage over the core.
    let run1 = pach_tardos_color(&p.h1, lists, &p.pt, seed)
        .map_err(|e| GraphError::stage("round", e))?;
    assert!(!run1.rounds_capped, "K >= K_min sizes the lists for the full schedule");
    let f1 = run1.coloring;

    // The witness color of each deep-core vertex, read off the gate report.
    let report1 = verify(&p.h1, &f1, VerifyMode::Partial, None);
    let mut witness_of: HashMap<usize, (usize, Color)> = HashMap::new();
    for (i, &v) in p.a1.iter().enumerate() {
        let w = report1.witness(i).expect("the round stage is verifier-gated");
        witness_of.insert(v, w);
    }

    // Trim the low-degree lists so the exact stage cannot collide with the
    // core: not with a neighbor's witness color, and not with any core
    // color visible from a vertex it might witness.
    let mut trimmed: Vec<Vec<Color>> = lists.lists().to_vec();
    for &b in &p.b {
        let mut s_b: BTreeSet<Color> = BTreeSet::new();
        for &v in g.neighbors(b) {
            if let Some(&(_, c)) = witness_of.get(&v) {
                s_b.insert(c);
            }
        }
        assert!(s_b.len() <= p.theta.saturating_sub(1), "low degree bounds the witness trim");

        let mut t_b: BTreeSet<Color> = BTreeSet::new();
        for w in g.neighbors(b).iter().copied().chain([b]) {
            if p.in_a1[w] {
                continue;
            }
            for a in g.neighbors(w).iter().copied().chain([w]) {
                if p.in_a[a] {
                    if let Some(c) = f1.get(a) {
                        t_b.insert(c);
                    }
                }
            }
        }
        assert!(t_b.len() <= p.theta * p.theta, "visibility trim is quadratic in the threshold");

        trimmed[b].retain(|c| !s_b.contains(c) && !t_b.contains(c));
        assert!(
            trimmed[b].len() >= p.theta + 1,
            "K >= K_min leaves the exact stage enough colors"
        );
    }

    // One edge per non-deep-core vertex: its closed neighborhood in B.
    let h2_edges: Vec<Vec<usize>> = (0..g.n())
        .filter(|&w| !p.in_a1[w])
        .map(|w| {
            let mut e: Vec<usize> =
                g.neighbors(w).iter().copied().filter(|&u| !p.in_a[u]).collect();
            if !p.in_a[w] {
                e.push(w);
            }
            assert!(!e.is_empty(), "a fringe vertex always has a low-degree neighbor");
            e
        })
        .collect();
    let h2 = Hypergraph::new(g.n(), h2_edges)?;
    for &b in &p.b {
        assert!(
            h2.vertex_degrees()[b] <= p.theta,
            "low-degree vertices join few neighborhoods"
        );
    }

    let f2 = if h2.edge_count() == 0 {
        PartialColoring::empty(g.n())
    } else {
        let lists2 = ListAssignment::new(trimmed)?;
        match list_cf_color(&h2, &lists2, VerifyMode::Partial, &OracleBudget::default()) {
            ListColorOutcome::Colored(c) => c,
            ListColorOutcome::Unsat => {
                return Err(GraphError::stage("exact", StageFailure::OracleUnsat))
            }
            ListColorOutcome::Indeterminate => {
                return Err(GraphError::stage("exact", StageFailure::OracleIndeterminate))
            }
        }
    };

    let merged = f1.merge(&f2)?;

    // The composition argument, checked literally: each deep-core witness
    // survives the exact stage because adjacent low-degree vertices had
    // its color struck from their lists.
    for (&v, &(wv, cv)) in &witness_of {
        assert_eq!(merged.get(wv), Some(cv));
        for &u in g.neighbors(v) {
            if !p.in_a[u] {
                assert_ne!(merged.get(u), Some(cv), "trimmed neighbor stole a witness");
            }
        }
    }
    let hcn = closed_neighborhood_hypergraph(g)?;
    assert!(
        verify(&hcn, &merged, VerifyMode::Partial, Some(lists)).ok,
        "merged stages must be conflict-free on closed neighborhoods"
    );

    Ok(CfcnRun {
        summary: CfcnSummary {
            theta: p.theta,
            k_min: p.k_min,
            a1: p.a1.len(),
            a2: (0..g.n()).filter(|&v| p.in_a[v] && !p.in_a1[v]).count(),
            b: p.b.len(),
            round_stage_colors: f1.color_count(),
            exact_stage_colors: f2.color_count(),
            round_stage_attempt: run1.attempt,
            rounds: run1.rounds,
        },
        coloring: merged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists_for(g: &Graph, mode: Mode, seed: u64) -> (usize, ListAssignment) {
        let k = cfcn_min_k(g, mode).unwrap();
        let r = k * ln_squared(g.max_degree()).max(1);
        (k, ListAssignment::random(g.n(), r, 3 * r, seed).unwrap())
    }

    #[test]
    fn path_on_two_vertices_uses_the_degenerate_split() {
        // Maximum degree 1 puts the threshold at zero: everything is core,
        // the exact stage has nothing to do.
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let (k, lists) = lists_for(&g, Mode::Paper, 3);
        let run = cfcn_general(&g, &lists, k, Mode::Paper, 1).unwrap();
        assert_eq!(run.summary.theta, 0);
        assert_eq!(run.summary.b, 0);
        assert_eq!(run.summary.exact_stage_colors, 0);
        assert!(run.coloring.colored_count() >= 1);
    }

    #[test]
    fn star_splits_into_center_core_and_leaf_rest() {
        // K_{1,3}: threshold 2 makes the center all of A but not deep core,
        // so the round stage is empty and the exact stage carries the graph.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (k, lists) = lists_for(&g, Mode::desk(), 5);
        let run = cfcn_general(&g, &lists, k, Mode::desk(), 2).unwrap();
        assert_eq!(run.summary.theta, 2);
        assert_eq!(run.summary.a1, 0);
        assert_eq!(run.summary.a2, 1);
        assert_eq!(run.summary.b, 3);
        assert!(run.summary.exact_stage_colors >= 1);
    }

    #[test]
    fn undersized_k_reports_the_minimum() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let (k, lists) = lists_for(&g, Mode::desk(), 7);
        match cfcn_general(&g, &lists, k - 1, Mode::desk(), 0) {
            Err(GraphError::KTooSmall { given, minimum }) => {
                assert_eq!(given, k - 1);
                assert_eq!(minimum, k);
            }
            other => panic!("expected a K rejection, got {other:?}"),
        }
    }

    #[test]
    fn paper_mode_wants_exact_lists() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let k = cfcn_min_k(&g, Mode::Paper).unwrap();
        // One color too many.
        let lists = ListAssignment::random(2, k + 1, 3 * k, 2).unwrap();
        assert!(matches!(
            cfcn_general(&g, &lists, k, Mode::Paper, 0),
            Err(GraphError::Core(cf_core::CoreError::NotAnRAssignment { .. }))
        ));
    }

    #[test]
    fn edgeless_graph_colors_every_vertex() {
        // Every closed neighborhood is a singleton, so everything must be
        // colored; the round stage does it all via singleton edges.
        let g = Graph::new(4);
        let (k, lists) = lists_for(&g, Mode::desk(), 11);
        let run = cfcn_general(&g, &lists, k, Mode::desk(), 6).unwrap();
        assert!(run.coloring.is_total());
    }
}
