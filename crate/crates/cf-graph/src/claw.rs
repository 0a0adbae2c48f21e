use std::collections::BTreeSet;

use cf_core::{
    claw_number, closed_neighborhood_hypergraph, greedy_proper_color, maximal_independent_set,
    open_neighborhood_hypergraph, palette_partition, verify, ceil_ln, Graph, Hypergraph,
    ListAssignment, PartialColoring, VerifyMode, PARTITION_RETRY_BUDGET,
};
use cf_lll::{near_uniform_color, NearUniformParams};
use cf_oracle::{list_cf_color, ListColorOutcome, OracleBudget};

use crate::error::{GraphError, Result, StageFailure};
use crate::mode::Mode;
use crate::reindex::SubIndex;

/// How the vertex set was split and how each stage went.
#[derive(Debug, Clone)]
pub struct ClawSummary {
    /// The graph is free of induced stars with this many leaves.
    pub k: usize,
    /// Greedy classes up to this index form the dense layer `B`.
    pub b_cut: usize,
    pub z: usize,
    pub classes: usize,
    pub a_l: usize,
    pub a_h: usize,
    pub x: usize,
    pub b: usize,
    pub c: usize,
    /// Independent vertices whose whole neighborhood sits in `B`; they are
    /// witnessed by extra dense-layer edges rather than by `C`.
    pub stranded: usize,
    pub stage_colors: [usize; 5],
    pub partition_attempts: usize,
    pub uniform_resamples: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct ClawRun {
    pub coloring: PartialColoring,
    pub summary: ClawSummary,
}

/// The exact list size `cfon_claw` demands for this instance and mode.
pub fn cfon_claw_list_size(g: &Graph, mode: Mode) -> Result<usize> {
    let k = claw_number(g)? + 1;
    Ok(25 * (stage_palette(g.max_degree(), k, mode) + ceil_ln(g.n())))
}

/// Per-part palette budget: scales `2^17 k ln d` into the mode's regime.
fn stage_palette(delta: usize, k: usize, mode: Mode) -> usize {
    let ln_d = if delta <= 1 { 0.0 } else { (delta as f64).ln() };
    mode.scale((1 << 17) as f64 * k as f64 * ln_d, 1)
}

/// Class cutoff for the dense layer: scales `max(2^12, 272 ln(4d))`.
fn dense_cut(delta: usize, mode: Mode) -> usize {
    let raw = 4096f64.max(272.0 * (4.0 * delta.max(1) as f64).ln());
    mode.scale(raw, 1)
}

fn nonempty_sorted(edges: Vec<Vec<usize>>, what: &str) -> Vec<Vec<usize>> {
    for e in &edges {
        assert!(!e.is_empty(), "{what} produced an empty neighborhood");
    }
    edges
}

/// Colors part of a claw-free-ish graph so every vertex sees a color
/// exactly once in its open neighborhood (and, as a byproduct, in its
/// closed one), drawing only from the given lists.
///
/// The vertex set splits five ways around a maximal independent set `A`:
/// its low- and high-degree halves, the joint neighborhood `X` of the low
/// half, and a greedy proper coloring of the remainder whose first
/// classes form a dense layer `B` with everything later in `C`.  The
/// palette is split into five matching parts, so no two stages can share
/// a color.  `B` is colored by uniform draws with local repairs (every
/// `C` vertex has many `B`-neighbors); the other four hypergraphs have
/// bounded degree and are colored exactly.  Independent vertices whose
/// neighborhoods avoid both `X` and `C` are witnessed by extra `B` edges.
pub fn cfon_claw(g: &Graph, lists: &ListAssignment, mode: Mode, seed: u64) -> Result<ClawRun> {
    assert_eq!(g.n(), lists.n(), "lists must cover the vertex set");
    let n = g.n();
    // Fails on isolated vertices, which no open-neighborhood coloring can
    // serve; also the final gate.
    let h_on = open_neighborhood_hypergraph(g)?;
    let delta = g.max_degree();
    let k = claw_number(g)? + 1;
    assert!(k >= 2, "a graph with edges contains an induced single-leaf star");

    let a = maximal_independent_set(g, seed);
    let low_cap = k as f64 * if delta <= 1 { 0.0 } else { (delta as f64).ln() };
    let a_l: BTreeSet<usize> =
        a.iter().copied().filter(|&v| g.degree(v) as f64 <= low_cap).collect();
    let a_h: BTreeSet<usize> = a.difference(&a_l).copied().collect();
    let x: BTreeSet<usize> =
        a_l.iter().flat_map(|&v| g.neighbors(v).iter().copied()).collect();
    assert!(x.is_disjoint(&a), "neighbors of an independent set stay outside it");

    let rest: Vec<usize> =
        (0..n).filter(|v| !a.contains(v) && !x.contains(v)).collect();

    // Greedy proper classes of the remainder graph, in original ids.
    let sub_rest = SubIndex::new(n, rest.clone());
    let order: Vec<usize> = (0..rest.len()).collect();
    let classes: Vec<Vec<usize>> = greedy_proper_color(&sub_rest.graph(g), &order)?
        .into_iter()
        .map(|class| class.into_iter().map(|i| sub_rest.verts[i]).collect())
        .collect();

    // The decomposition's load-bearing facts, checked outright.
    let class_of = {
        let mut cl = vec![usize::MAX; n];
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                cl[v] = i;
            }
        }
        cl
    };
    for &v in &rest {
        assert!(
            g.neighbors(v).iter().any(|u| a_h.contains(u)),
            "a vertex outside the independent set and X must touch its high half"
        );
        assert!(
            g.neighbors(v).iter().all(|u| !a_l.contains(u)),
            "low-half neighbors would have pulled the vertex into X"
        );
        for earlier in 0..class_of[v] {
            assert!(
                g.neighbors(v).iter().any(|&u| class_of[u] == earlier),
                "greedy would have used the earlier class"
            );
        }
    }
    for v in 0..n {
        for class in &classes {
            let inside = g.neighbors(v).iter().filter(|&&u| class_of[u] == class_of[class[0]]).count();
            assert!(
                inside <= k - 1,
                "{inside} neighbors in one independent class contradicts the star bound"
            );
        }
    }

    let b_cut = dense_cut(delta, mode);
    let b_verts: Vec<usize> = {
        let mut b: Vec<usize> =
            classes.iter().take(b_cut).flat_map(|c| c.iter().copied()).collect();
        b.sort_unstable();
        b
    };
    let c_verts: BTreeSet<usize> =
        classes.iter().skip(b_cut).flat_map(|c| c.iter().copied()).collect();

    // Palette parts: B, A_H, A_L, X, C in that order.
    let mut targets = vec![usize::MAX; n];
    for &v in &b_verts {
        targets[v] = 0;
    }
    for &v in &a_h {
        targets[v] = 1;
    }
    for &v in &a_l {
        targets[v] = 2;
    }
    for &v in &x {
        targets[v] = 3;
    }
    for &v in &c_verts {
        targets[v] = 4;
    }
    assert!(targets.iter().all(|&t| t < 5), "the five parts cover the vertex set");

    let z = stage_palette(delta, k, mode);
    let partition = palette_partition(lists, z, 5, &targets, seed, PARTITION_RETRY_BUDGET)?;
    let part_lists = ListAssignment::new(partition.sublists.clone())?;

    // Independent vertices are witnessed from X when possible, from C
    // otherwise, and from B when even C is out of reach.
    let a_x: Vec<usize> = a
        .iter()
        .copied()
        .filter(|&v| g.neighbors(v).iter().any(|u| x.contains(u)))
        .collect();
    let a_bar: Vec<usize> = a.iter().copied().filter(|v| !a_x.contains(v)).collect();
    assert!(a_bar.iter().all(|v| a_h.contains(v)), "low-half vertices always reach X");
    let (a_c, a_stranded): (Vec<usize>, Vec<usize>) = a_bar
        .into_iter()
        .partition(|&v| g.neighbors(v).iter().any(|u| c_verts.contains(u)));

    let nb_in = |v: usize, set: &dyn Fn(usize) -> bool| -> Vec<usize> {
        g.neighbors(v).iter().copied().filter(|&u| set(u)).collect()
    };
    let in_b = {
        let mut m = vec![false; n];
        for &v in &b_verts {
            m[v] = true;
        }
        m
    };

    // Dense-layer edges: one per C vertex, plus one per stranded vertex.
    let mut e1: Vec<Vec<usize>> = Vec::new();
    for &v in &c_verts {
        let e = nb_in(v, &|u| in_b[u]);
        assert!(
            e.len() >= b_cut && e.len() <= (k - 1) * b_cut,
            "a late-class vertex touches every dense class, at most k - 1 times each"
        );
        e1.push(e);
    }
    for &v in &a_stranded {
        e1.push(nb_in(v, &|u| in_b[u]));
    }
    let e1 = nonempty_sorted(e1, "dense layer");

    let mut merged = PartialColoring::empty(n);
    let mut uniform_resamples = None;
    let mut stage_colors = [0usize; 5];

    if !e1.is_empty() {
        let sub_b = SubIndex::new(n, b_verts.clone());
        let h1 = sub_b.hypergraph(&e1)?;
        let lists1 = ListAssignment::new(
            sub_b.verts.iter().map(|&v| partition.sublists[v].clone()).collect(),
        )?;
        let sizes: Vec<usize> = h1.edges().iter().map(Vec::len).collect();
        let np = if mode.is_paper() {
            NearUniformParams::custom(b_cut, (k - 1) * b_cut, 32 * (k - 1) * b_cut)
        } else {
            // The window the sampler must cope with is whatever the layer
            // actually produced; stranded edges may undershoot b_cut.
            let alpha = *sizes.iter().min().expect("nonempty");
            let beta = *sizes.iter().max().expect("nonempty");
            NearUniformParams::custom(alpha, beta, (32 * beta).min(lists1.min_len()))
        }
        .map_err(|e| GraphError::stage("dense", e))?;
        let run1 =
            near_uniform_color(&h1, &lists1, &np, seed).map_err(|e| GraphError::stage("dense", e))?;
        uniform_resamples = Some(run1.resamples);
        stage_colors[0] = run1.coloring.color_count();
        sub_b.lift(&run1.coloring, &mut merged);
    }

    // The four exact stages: (hypergraph edges, degree cap, stage tag).
    let exact_stages: [(Vec<Vec<usize>>, usize, &'static str); 4] = [
        (
            nonempty_sorted(
                b_verts.iter().map(|&v| nb_in(v, &|u| a_h.contains(&u))).collect(),
                "high half",
            ),
            (k - 1) * b_cut,
            "high",
        ),
        (
            nonempty_sorted(
                x.iter().map(|&v| nb_in(v, &|u| a_l.contains(&u))).collect(),
                "low half",
            ),
            low_cap.floor() as usize,
            "low",
        ),
        (
            nonempty_sorted(a_x.iter().map(|&v| nb_in(v, &|u| x.contains(&u))).collect(), "X"),
            k - 1,
            "joint",
        ),
        (
            nonempty_sorted(
                a_c.iter().map(|&v| nb_in(v, &|u| c_verts.contains(&u))).collect(),
                "C",
            ),
            k - 1,
            "late",
        ),
    ];

    for (i, (edges, degree_cap, tag)) in exact_stages.into_iter().enumerate() {
        if edges.is_empty() {
            continue;
        }
        let h = Hypergraph::new(n, edges)?;
        let max_deg = h.vertex_degrees().into_iter().max().unwrap_or(0);
        assert!(max_deg <= degree_cap, "stage {tag}: degree {max_deg} beats its cap {degree_cap}");
        let f = match list_cf_color(&h, &part_lists, VerifyMode::Partial, &OracleBudget::default())
        {
            ListColorOutcome::Colored(c) => c,
            ListColorOutcome::Unsat => return Err(GraphError::stage(tag, StageFailure::OracleUnsat)),
            ListColorOutcome::Indeterminate => {
                return Err(GraphError::stage(tag, StageFailure::OracleIndeterminate))
            }
        };
        stage_colors[i + 1] = f.color_count();
        merged = merged.merge(&f)?;
    }

    assert!(
        verify(&h_on, &merged, VerifyMode::Partial, Some(lists)).ok,
        "merged stages must witness every open neighborhood"
    );
    assert!(
        verify(&closed_neighborhood_hypergraph(g)?, &merged, VerifyMode::Partial, Some(lists)).ok,
        "witness parts differ from own-color parts, so closed neighborhoods hold too"
    );

    Ok(ClawRun {
        summary: ClawSummary {
            k,
            b_cut,
            z,
            classes: classes.len(),
            a_l: a_l.len(),
            a_h: a_h.len(),
            x: x.len(),
            b: b_verts.len(),
            c: c_verts.len(),
            stranded: a_stranded.len(),
            stage_colors,
            partition_attempts: partition.attempts,
            uniform_resamples,
        },
        coloring: merged,
    })
}
