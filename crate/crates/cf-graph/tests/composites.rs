use cf_core::{
    ceil_ln, closed_neighborhood_hypergraph, open_neighborhood_hypergraph, verify, Hypergraph,
    ListAssignment, VerifyMode,
};
use cf_gen::{line_graph, random_graph, random_graph_min_degree};
use cf_graph::{
    cf_full_from_partial_list, cfcn_general, cfcn_min_k, cfon_claw, cfon_claw_list_size,
    cfon_dense_min_degree, cfon_min_degree, Mode,
};
use cf_oracle::{list_cf_color, ListColorOutcome, OracleBudget};

/// Closed-neighborhood coloring of middling random graphs, end to end:
/// the output verifies against the closed hypergraph and stays inside
/// the lists it was given.
#[test]
fn cfcn_general_handles_random_graphs() {
    for seed in 0..5u64 {
        let g = random_graph(60, 0.18, 400 + seed).unwrap();
        let k = cfcn_min_k(&g, Mode::desk()).unwrap();
        let delta = g.max_degree();
        let denom = (((delta.max(2) as f64).ln().powi(2)).ceil() as usize).max(1);
        let r = k * denom;
        let lists = ListAssignment::random(g.n(), r, 3 * r, 777 + seed).unwrap();
        let run = cfcn_general(&g, &lists, k, Mode::desk(), seed).unwrap();
        let h = closed_neighborhood_hypergraph(&g).unwrap();
        let report = verify(&h, &run.coloring, VerifyMode::Partial, Some(&lists));
        assert!(report.ok, "seed {seed}: {} closed neighborhoods unwitnessed", report.violation_count());
        assert!(run.coloring.color_count() <= r);
    }
}

/// The claw decomposition on a line graph, which is claw-free by
/// construction: the merged coloring witnesses every open neighborhood
/// and, as the dual gate promises, every closed one too.
#[test]
fn claw_route_colors_a_line_graph() {
    let mut k6 = cf_core::Graph::new(6);
    for u in 0..6 {
        for v in u + 1..6 {
            k6.add_edge(u, v).unwrap();
        }
    }
    let g = line_graph(&k6);
    assert_eq!(g.n(), 15);
    let r = cfon_claw_list_size(&g, Mode::desk()).unwrap();
    let lists = ListAssignment::random(g.n(), r, 3 * r, 52).unwrap();
    let run = cfon_claw(&g, &lists, Mode::desk(), 7).unwrap();
    assert_eq!(run.summary.k, 3);
    let on = verify(
        &open_neighborhood_hypergraph(&g).unwrap(),
        &run.coloring,
        VerifyMode::Partial,
        Some(&lists),
    );
    assert!(on.ok);
    let cn = verify(
        &closed_neighborhood_hypergraph(&g).unwrap(),
        &run.coloring,
        VerifyMode::Partial,
        Some(&lists),
    );
    assert!(cn.ok);
}

/// Fifty random graphs with enough minimum degree: the one-shot colorer
/// never needs to refuse and every result verifies.
#[test]
fn min_degree_route_succeeds_across_seeds() {
    for seed in 0..50u64 {
        let g = random_graph_min_degree(30, 5, 9, 900 + seed).unwrap();
        let lists = ListAssignment::random(30, 1300, 4000, seed).unwrap();
        let run = cfon_min_degree(&g, &lists, Mode::desk(), seed).unwrap();
        let h = open_neighborhood_hypergraph(&g).unwrap();
        assert!(verify(&h, &run.coloring, VerifyMode::Partial, Some(&lists)).ok, "seed {seed}");
    }
}

/// Dense desk route: the returned core really is the witness pool for
/// every vertex of the graph.
#[test]
fn dense_route_witnesses_from_the_core() {
    let g = random_graph(80, 0.7, 31).unwrap();
    let lists = ListAssignment::random(80, 900, 5000, 8).unwrap();
    let run = cfon_dense_min_degree(&g, &lists, 1.0, 0.5, Mode::desk(), 2).unwrap();
    let core = run.core.expect("desk mode samples");
    let h = open_neighborhood_hypergraph(&g).unwrap();
    let report = verify(&h, &run.coloring, VerifyMode::Partial, Some(&lists));
    assert!(report.ok);
    for i in 0..h.edges().len() {
        let (w, _) = report.witness(i).unwrap();
        assert!(core.binary_search(&w).is_ok(), "edge {i} witnessed outside the core");
    }
    // Only core vertices carry colors at all.
    for (v, slot) in run.coloring.slots().iter().enumerate() {
        assert_eq!(slot.is_some(), core.binary_search(&v).is_ok(), "vertex {v}");
    }
}

/// Lifting a partial coloring to a full one, with an exact search as the
/// partial stage: for random small hypergraphs the patched coloring is
/// total, verifies fully, and stays inside the original lists.
#[test]
fn lift_completes_exact_partial_stages() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    for trial in 0..20 {
        let n = 12;
        let edges: Vec<Vec<usize>> = (0..6)
            .map(|_| {
                let size = rng.gen_range(2..=4);
                let mut e: Vec<usize> = Vec::new();
                while e.len() < size {
                    let v = rng.gen_range(0..n);
                    if !e.contains(&v) {
                        e.push(v);
                    }
                }
                e.sort_unstable();
                e
            })
            .collect();
        let h = Hypergraph::new(n, edges).unwrap();
        let z = 8;
        let r = 10 * (z + ceil_ln(n));
        let lists = ListAssignment::random(n, r, 3 * r, 1000 + trial).unwrap();
        let run = cf_full_from_partial_list(
            &h,
            &lists,
            z,
            |hh, ll, _| match list_cf_color(hh, ll, VerifyMode::Partial, &OracleBudget::default()) {
                ListColorOutcome::Colored(f) => Ok(f),
                other => Err(format!("{other:?}")),
            },
            trial,
        )
        .unwrap();
        assert!(run.coloring.is_total());
        assert!(verify(&h, &run.coloring, VerifyMode::Full, Some(&lists)).ok, "trial {trial}");
    }
}

/// Same seed, same bytes: the composites are pure functions of their
/// inputs.
#[test]
fn composites_are_deterministic() {
    let g = random_graph(40, 0.2, 5).unwrap();
    let k = cfcn_min_k(&g, Mode::desk()).unwrap();
    let delta = g.max_degree();
    let denom = (((delta.max(2) as f64).ln().powi(2)).ceil() as usize).max(1);
    let r = k * denom;
    let lists = ListAssignment::random(40, r, 3 * r, 6).unwrap();
    let a = cfcn_general(&g, &lists, k, Mode::desk(), 12).unwrap();
    let b = cfcn_general(&g, &lists, k, Mode::desk(), 12).unwrap();
    assert_eq!(a.coloring.slots(), b.coloring.slots());
    assert_eq!(a.summary.round_stage_attempt, b.summary.round_stage_attempt);

    let dense_g = random_graph(50, 0.8, 77).unwrap();
    let dense_lists = ListAssignment::random(50, 700, 4000, 13).unwrap();
    let x = cfon_dense_min_degree(&dense_g, &dense_lists, 1.0, 0.5, Mode::desk(), 3).unwrap();
    let y = cfon_dense_min_degree(&dense_g, &dense_lists, 1.0, 0.5, Mode::desk(), 3).unwrap();
    assert_eq!(x.coloring.slots(), y.coloring.slots());
    assert_eq!(x.core, y.core);
}
