use cf_core::{
    closed_neighborhood_hypergraph, open_neighborhood_hypergraph, verify, Graph, ListAssignment,
    PartialColoring, VerifyMode,
};
use cf_lll::{near_uniform_color, sample_core_subset, CoreSubsetParams, NearUniformParams};
use cf_oracle::{list_cf_color, ListColorOutcome, OracleBudget};

use crate::error::{GraphError, Result, StageFailure};
use crate::mode::Mode;
use crate::reindex::SubIndex;

/// Below this maximum degree the sampled core's window constants cross
/// over and the direct exact route is both available and faster.
pub const DENSE_DELTA_THRESHOLD: usize = 866_799;

#[derive(Debug, Clone)]
pub struct DenseRun {
    pub coloring: PartialColoring,
    /// Sorted core subset, when the sampled route ran.
    pub core: Option<Vec<usize>>,
    pub core_attempts: u32,
    pub resamples: u64,
}

fn degree_floor(delta: usize, c: f64, eps: f64) -> usize {
    if delta < 2 {
        return 0;
    }
    (c * delta as f64 / (delta as f64).ln().powf(eps)).ceil() as usize
}

fn dense_impl(
    g: &Graph,
    lists: &ListAssignment,
    c: f64,
    eps: f64,
    mode: Mode,
    seed: u64,
    closed: bool,
) -> Result<DenseRun> {
    if !(c > 0.0) || !(eps > 0.0) || eps >= 1.0 {
        return Err(GraphError::stage(
            "core",
            StageFailure::Other(format!("need c > 0 and eps in (0, 1), got c = {c}, eps = {eps}")),
        ));
    }
    let delta = g.max_degree();
    let need = degree_floor(delta, c, eps);
    if g.min_degree() < need {
        return Err(GraphError::DegreeTooSmall { found: g.min_degree(), required: need });
    }
    let h = if closed { closed_neighborhood_hypergraph(g)? } else { open_neighborhood_hypergraph(g)? };

    if mode.is_paper() && delta < DENSE_DELTA_THRESHOLD {
        // The sampled route's windows only separate at very large degree;
        // below the crossover an exact search over the lists settles it.
        let f = match list_cf_color(&h, lists, VerifyMode::Partial, &OracleBudget::default()) {
            ListColorOutcome::Colored(f) => f,
            ListColorOutcome::Unsat => return Err(GraphError::stage("exact", StageFailure::OracleUnsat)),
            ListColorOutcome::Indeterminate => {
                return Err(GraphError::stage("exact", StageFailure::OracleIndeterminate))
            }
        };
        assert!(verify(&h, &f, VerifyMode::Partial, Some(lists)).ok);
        return Ok(DenseRun { coloring: f, core: None, core_attempts: 0, resamples: 0 });
    }

    let cp = if mode.is_paper() {
        CoreSubsetParams::stock(delta, c, eps)
    } else {
        CoreSubsetParams::desk(delta, (g.min_degree() / 4).max(4))
    }
    .map_err(|e| GraphError::stage("core", e))?;
    let sample = sample_core_subset(g, &cp, seed).map_err(|e| GraphError::stage("core", e))?;
    let in_core = {
        let mut m = vec![false; g.n()];
        for &v in &sample.vertices {
            m[v] = true;
        }
        m
    };

    // Every neighborhood, restricted to the core, becomes an edge; the
    // core's window bounds these edge sizes directly (self-membership in
    // the closed case adds at most one).
    let edges: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            let mut e: Vec<usize> =
                g.neighbors(v).iter().copied().filter(|&u| in_core[u]).collect();
            if closed && in_core[v] {
                e.push(v);
                e.sort_unstable();
            }
            e
        })
        .collect();
    for e in &edges {
        assert!(
            e.len() >= cp.lo && e.len() <= cp.hi + usize::from(closed),
            "core sampling promised {}..{} neighbors, found {}",
            cp.lo,
            cp.hi,
            e.len()
        );
    }

    let sub = SubIndex::new(g.n(), sample.vertices.clone());
    let h_core = sub.hypergraph(&edges)?;
    let core_lists =
        ListAssignment::new(sub.verts.iter().map(|&v| lists.list(v).to_vec()).collect())?;
    let beta = cp.hi + usize::from(closed);
    let np = if mode.is_paper() {
        NearUniformParams::stock(beta, delta * delta)
    } else {
        NearUniformParams::custom(cp.lo, beta, (32 * beta).min(core_lists.min_len()))
    }
    .map_err(|e| GraphError::stage("uniform", e))?;
    let run = near_uniform_color(&h_core, &core_lists, &np, seed)
        .map_err(|e| GraphError::stage("uniform", e))?;

    let mut merged = PartialColoring::empty(g.n());
    sub.lift(&run.coloring, &mut merged);
    let report = verify(&h, &merged, VerifyMode::Partial, Some(lists));
    assert!(report.ok);
    for i in 0..h.edges().len() {
        let (w, _) = report.witness(i).expect("verified edge has a witness");
        assert!(in_core[w], "witnesses come from the sampled core");
    }
    Ok(DenseRun {
        coloring: merged,
        core: Some(sample.vertices),
        core_attempts: sample.attempts,
        resamples: run.resamples,
    })
}

/// Colors a subset of a dense graph (minimum degree near `c d / ln^eps d`)
/// so every open neighborhood holds a unique color.  At paper scale the
/// witnesses come from a sampled core whose neighborhood windows feed the
/// uniform colorer; at desk scale the same route runs with rescaled
/// windows, and small paper instances fall through to an exact search.
pub fn cfon_dense_min_degree(
    g: &Graph,
    lists: &ListAssignment,
    c: f64,
    eps: f64,
    mode: Mode,
    seed: u64,
) -> Result<DenseRun> {
    dense_impl(g, lists, c, eps, mode, seed, false)
}

/// Closed-neighborhood variant of the dense route.
pub fn cfcn_dense_min_degree(
    g: &Graph,
    lists: &ListAssignment,
    c: f64,
    eps: f64,
    mode: Mode,
    seed: u64,
) -> Result<DenseRun> {
    dense_impl(g, lists, c, eps, mode, seed, true)
}
