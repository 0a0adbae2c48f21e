use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{CoreError, Result};
use crate::lists::{Color, ListAssignment};

/// `⌈ln n⌉` as used throughout list-size arithmetic; 0 for n <= 1.
pub fn ceil_ln(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (n as f64).ln().ceil() as usize
    }
}

/// A random partition of the palette into `t` parts such that every vertex's
/// list meets its designated part in a controlled number of colors.
#[derive(Debug, Clone)]
pub struct PalettePartition {
    /// Disjoint color classes covering the palette.
    pub parts: Vec<BTreeSet<Color>>,
    /// Designated part index per vertex (0-based, < t).
    pub targets: Vec<usize>,
    /// Per vertex: its list restricted to its designated part, sorted.
    pub sublists: Vec<Vec<Color>>,
    pub z: usize,
    pub t: usize,
    /// Number of sampling rounds used, starting at 1.
    pub attempts: usize,
}

impl PalettePartition {
    /// The sublist bounds every accepted partition satisfies:
    /// `z + ⌈ln n⌉ <= |L_v ∩ part(v)| <= 9(z + ⌈ln n⌉)`.
    pub fn window(z: usize, n: usize) -> (usize, usize) {
        let unit = z + ceil_ln(n);
        (unit, 9 * unit)
    }

    /// `v`'s list restricted to an arbitrary part, not just its target.
    pub fn restricted_list(&self, lists: &ListAssignment, v: usize, part: usize) -> Vec<Color> {
        lists
            .list(v)
            .iter()
            .copied()
            .filter(|c| self.parts[part].contains(c))
            .collect()
    }
}

pub const PARTITION_RETRY_BUDGET: usize = 1000;

/// Splits the palette of a `5t(z + ⌈ln n⌉)`-assignment into `t` random parts
/// so that every vertex keeps between `z + ⌈ln n⌉` and `9(z + ⌈ln n⌉)` of its
/// own colors inside its designated part.
///
/// Each color lands in a uniformly random part, so a vertex's expected keep
/// is `5(z + ⌈ln n⌉)`; the window sits well inside the concentration range,
/// and a whole fresh partition is drawn on any miss. Budget exhaustion is an
/// error, never a partition violating the window.
pub fn palette_partition(
    lists: &ListAssignment,
    z: usize,
    t: usize,
    targets: &[usize],
    seed: u64,
    retry_budget: usize,
) -> Result<PalettePartition> {
    let n = lists.n();
    assert!(t >= 1, "need at least one part");
    assert_eq!(targets.len(), n, "one target part per vertex");
    for (vertex, &part) in targets.iter().enumerate() {
        if part >= t {
            return Err(CoreError::BadTarget { vertex, part, parts: t });
        }
    }
    let unit = z + ceil_ln(n);
    let r = 5 * t * unit;
    lists.require_exact(r)?;

    let palette: Vec<Color> = lists.palette().into_iter().collect();
    let (lo, hi) = PalettePartition::window(z, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for attempt in 1..=retry_budget {
        let mut part_of: std::collections::HashMap<Color, usize> =
            std::collections::HashMap::with_capacity(palette.len());
        for &c in &palette {
            part_of.insert(c, rng.gen_range(0..t));
        }
        let sublists: Vec<Vec<Color>> = (0..n)
            .map(|v| {
                lists
                    .list(v)
                    .iter()
                    .copied()
                    .filter(|c| part_of[c] == targets[v])
                    .collect()
            })
            .collect();
        if sublists.iter().any(|s| s.len() < lo || s.len() > hi) {
            continue;
        }
        let mut parts = vec![BTreeSet::new(); t];
        for (&c, &p) in &part_of {
            parts[p].insert(c);
        }
        return Ok(PalettePartition { parts, targets: targets.to_vec(), sublists, z, t, attempts: attempt });
    }
    Err(CoreError::RetriesExhausted {
        attempts: retry_budget,
        reason: format!("no palette partition kept every sublist within [{lo}, {hi}]"),
    })
}
