//! Exact chromatic numbers of the example families. The values were
//! computed once by the oracle and are frozen here; several also have
//! short pencil arguments noted inline.

use cf_core::{open_neighborhood_hypergraph, VerifyMode};
use cf_gen::{discrete_interval_hypergraph, star, subdivided_biclique, subdivided_complete};
use cf_oracle::{chi_cf, chi_cn, chi_cn_star, chi_on, chi_on_star, ChiBound, OracleBudget};

#[test]
fn subdivided_complete_graphs() {
    let budget = OracleBudget::default();
    for n in 2..=5 {
        let g = subdivided_complete(n).unwrap();
        // Each subdivision vertex sees both endpoints of its original
        // edge, which forces a proper coloring of the underlying clique.
        assert_eq!(chi_on(&g, &budget).unwrap(), ChiBound::Exact(n), "open, n={n}");
        // Two colors: branch vertices one color, subdivision vertices the
        // other; every closed neighborhood mixes them with one minority.
        assert_eq!(chi_cn(&g, &budget).unwrap(), ChiBound::Exact(2), "closed, n={n}");
    }
}

#[test]
fn stars() {
    let budget = OracleBudget::default();
    for k in 2..=6 {
        let g = star(k).unwrap();
        assert_eq!(chi_on(&g, &budget).unwrap(), ChiBound::Exact(2), "k={k}");
        assert_eq!(chi_cn(&g, &budget).unwrap(), ChiBound::Exact(2), "k={k}");
        // Partially: color the center and one leaf alike (open), or the
        // center alone (closed).
        assert_eq!(chi_on_star(&g, &budget).unwrap(), ChiBound::Exact(1), "k={k}");
        assert_eq!(chi_cn_star(&g, &budget).unwrap(), ChiBound::Exact(1), "k={k}");
    }
}

#[test]
fn discrete_intervals() {
    let budget = OracleBudget::default();
    // Doubling the ground set adds one color: 2, 3, 4 at n = 2, 4, 8.
    for (n, expected) in [(1, 1), (2, 2), (4, 3), (8, 4)] {
        let h = discrete_interval_hypergraph(n).unwrap();
        assert_eq!(
            chi_cf(&h, VerifyMode::Full, &budget),
            ChiBound::Exact(expected),
            "n={n}"
        );
    }
}

#[test]
fn subdivided_biclique_chromatic_numbers() {
    let budget = OracleBudget::default();
    let g = subdivided_biclique(2, 4).unwrap();
    let h = open_neighborhood_hypergraph(&g).unwrap();
    // Disjoint side palettes plus complementary columns settle both rows
    // with two colors, one short of the three the explicit coloring uses.
    assert_eq!(chi_cf(&h, VerifyMode::Full, &budget), ChiBound::Exact(2));
    // One color cannot witness all four columns: each row supports at most
    // one colored subdivision vertex before losing its own unique color.
    assert_eq!(chi_cf(&h, VerifyMode::Partial, &budget), ChiBound::Exact(2));
}

#[test]
fn partial_needs_at_most_one_color_less() {
    let budget = OracleBudget::default();
    let instances = vec![
        discrete_interval_hypergraph(5).unwrap(),
        discrete_interval_hypergraph(8).unwrap(),
        open_neighborhood_hypergraph(&subdivided_complete(4).unwrap()).unwrap(),
        open_neighborhood_hypergraph(&star(5).unwrap()).unwrap(),
    ];
    for h in &instances {
        let partial = chi_cf(h, VerifyMode::Partial, &budget).exact().unwrap();
        let full = chi_cf(h, VerifyMode::Full, &budget).exact().unwrap();
        assert!(partial <= full, "partial colorings subsume full ones");
        assert!(
            full <= partial + 1,
            "one fresh color on the uncolored vertices completes a partial coloring"
        );
    }
}
