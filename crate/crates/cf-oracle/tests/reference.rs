//! Cross-checks the search engine against blunt enumeration on tiny
//! instances. The engine breaks color symmetry and prunes; the reference
//! does neither, so agreement here validates both tricks.

use cf_core::{verify, Color, Hypergraph, ListAssignment, PartialColoring, VerifyMode};
use cf_oracle::{chi_cf, list_cf_color, ChiBound, ListColorOutcome, OracleBudget};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_hypergraph(n: usize, m: usize, seed: u64) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let size = rng.gen_range(2..=n.min(4));
        let mut vs: Vec<usize> = (0..n).collect();
        vs.shuffle(&mut rng);
        vs.truncate(size);
        edges.push(vs);
    }
    Hypergraph::new(n, edges).unwrap()
}

/// Every assignment of `values` to the n slots, as an odometer.
fn for_each_assignment<F: FnMut(&[usize]) -> bool>(n: usize, values: usize, mut found: F) -> bool {
    let mut digits = vec![0usize; n];
    loop {
        if found(&digits) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            digits[i] += 1;
            if digits[i] < values {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Smallest palette that admits a conflict-free coloring, by trying every
/// single coloring outright.
fn chi_by_enumeration(h: &Hypergraph, mode: VerifyMode) -> usize {
    let n = h.n();
    for k in 0..=n {
        // Digit k encodes "uncolored" in partial mode.
        let values = k + usize::from(mode == VerifyMode::Partial);
        let ok = for_each_assignment(n, values.max(1), |digits| {
            let slots: Vec<Option<Color>> = digits
                .iter()
                .map(|&d| (d < k).then_some(d as Color))
                .collect();
            verify(h, &PartialColoring::from_slots(slots), mode, None).ok
        });
        if ok {
            return k;
        }
    }
    unreachable!("a rainbow coloring always works");
}

fn list_color_by_enumeration(
    h: &Hypergraph,
    lists: &ListAssignment,
    mode: VerifyMode,
) -> bool {
    let n = h.n();
    let width = lists.min_len() + usize::from(mode == VerifyMode::Partial);
    for_each_assignment(n, width, |digits| {
        let slots: Vec<Option<Color>> = digits
            .iter()
            .enumerate()
            .map(|(v, &d)| lists.list(v).get(d).copied())
            .collect();
        verify(h, &PartialColoring::from_slots(slots), mode, Some(lists)).ok
    })
}

#[test]
fn chi_matches_enumeration() {
    let budget = OracleBudget::default();
    for seed in 0..60u64 {
        let n = 2 + (seed as usize) % 5;
        let m = 1 + (seed as usize) % 4;
        let h = random_hypergraph(n, m, seed);
        for mode in [VerifyMode::Full, VerifyMode::Partial] {
            let expected = chi_by_enumeration(&h, mode);
            assert_eq!(
                chi_cf(&h, mode, &budget),
                ChiBound::Exact(expected),
                "instance seed {seed}, mode {mode:?}"
            );
        }
    }
}

#[test]
fn list_coloring_matches_enumeration() {
    let budget = OracleBudget::default();
    for seed in 0..60u64 {
        let n = 2 + (seed as usize) % 5;
        let m = 1 + (seed as usize) % 4;
        let h = random_hypergraph(n, m, seed);
        let lists = ListAssignment::random(n, 2, 4, seed ^ 0xbeef).unwrap();
        for mode in [VerifyMode::Full, VerifyMode::Partial] {
            let expected = list_color_by_enumeration(&h, &lists, mode);
            match list_cf_color(&h, &lists, mode, &budget) {
                ListColorOutcome::Colored(c) => {
                    assert!(expected, "engine found a coloring enumeration missed");
                    assert!(verify(&h, &c, mode, Some(&lists)).ok);
                }
                ListColorOutcome::Unsat => {
                    assert!(!expected, "engine missed a coloring, seed {seed}");
                }
                ListColorOutcome::Indeterminate => panic!("budget ample, seed {seed}"),
            }
        }
    }
}

#[test]
fn enumeration_width_covers_all_lists() {
    // The odometer uses min list length; random(n, r, ..) makes all lists
    // exactly r long, so every choice is reachable.
    let lists = ListAssignment::random(5, 2, 4, 7).unwrap();
    assert!(lists.lists().iter().all(|l| l.len() == 2));
}
