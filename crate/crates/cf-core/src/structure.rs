use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{CoreError, Result};
use crate::graph::Graph;

const MIS_LIMIT: usize = 128;

/// Largest `k` such that the graph contains an induced star `K_{1,k}`,
/// i.e. the maximum independent-set size inside any vertex's neighborhood.
/// 0 for edgeless graphs. Exhaustive per neighborhood, so it expects
/// neighborhoods of at most 128 vertices.
pub fn claw_number(g: &Graph) -> Result<usize> {
    let mut best = 0usize;
    for v in 0..g.n() {
        let nbrs: Vec<usize> = g.neighbors(v).iter().copied().collect();
        let d = nbrs.len();
        if d <= best {
            continue;
        }
        if d > MIS_LIMIT {
            return Err(CoreError::NeighborhoodTooLarge { vertex: v, degree: d, limit: MIS_LIMIT });
        }
        // Adjacency among the neighbors, as bitmasks over 0..d.
        let masks: Vec<u128> = nbrs
            .iter()
            .map(|&a| {
                nbrs.iter()
                    .enumerate()
                    .filter(|&(_, &b)| g.has_edge(a, b))
                    .fold(0u128, |m, (j, _)| m | (1u128 << j))
            })
            .collect();
        let all = if d == 128 { u128::MAX } else { (1u128 << d) - 1 };
        best = best.max(independent_set_size(all, &masks, 0, best));
    }
    Ok(best)
}

/// Max independent set size within `cand`, branch and bound; `best` is the
/// largest size seen so far and is threaded through both branches.
fn independent_set_size(cand: u128, masks: &[u128], acc: usize, mut best: usize) -> usize {
    best = best.max(acc);
    if cand == 0 || acc + cand.count_ones() as usize <= best {
        return best;
    }
    let v = cand.trailing_zeros() as usize;
    let bit = 1u128 << v;
    // Take v, drop its neighbors; then try skipping v.
    best = independent_set_size(cand & !bit & !masks[v], masks, acc + 1, best);
    independent_set_size(cand & !bit, masks, acc, best)
}

/// Greedy maximal independent set over a seeded random vertex order.
pub fn maximal_independent_set(g: &Graph, seed: u64) -> BTreeSet<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut chosen = BTreeSet::new();
    for v in order {
        if g.neighbors(v).iter().all(|u| !chosen.contains(u)) {
            chosen.insert(v);
        }
    }
    chosen
}

/// Greedy proper coloring along `order`: each vertex takes the smallest
/// class index unused by its already-colored neighbors. Returns the classes
/// `S_1, S_2, ...` as vertex sets; each is independent, and every vertex in
/// `S_i` has a neighbor in every earlier class.
pub fn greedy_proper_color(g: &Graph, order: &[usize]) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(CoreError::BadOrder { n });
    }
    for &v in order {
        if v >= n || seen[v] {
            return Err(CoreError::BadOrder { n });
        }
        seen[v] = true;
    }
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in order {
        let used: BTreeSet<usize> = g.neighbors(v).iter().filter_map(|&u| class_of[u]).collect();
        let class = (0..).find(|i| !used.contains(i)).unwrap();
        if class == classes.len() {
            classes.push(Vec::new());
        }
        classes[class].push(v);
        class_of[v] = Some(class);
    }
    for class in &mut classes {
        class.sort_unstable();
    }
    Ok(classes)
}
