use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{CoreError, Result};

/// Colors are plain non-negative integers; there is no fixed palette.
pub type Color = u32;

/// One color list per vertex. Lists are sorted, deduplicated and non-empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<Color>>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(lists.len());
        for (vertex, mut list) in lists.into_iter().enumerate() {
            list.sort_unstable();
            list.dedup();
            if list.is_empty() {
                return Err(CoreError::EmptyList { vertex });
            }
            normalized.push(list);
        }
        Ok(ListAssignment { lists: normalized })
    }

    /// Every vertex gets the same list `0..k`.
    pub fn shared_palette(n: usize, k: usize) -> Result<Self> {
        let list: Vec<Color> = (0..k as Color).collect();
        ListAssignment::new(vec![list; n])
    }

    /// Seeded random r-assignment: each vertex draws `r` distinct colors
    /// from `0..palette`.
    pub fn random(n: usize, r: usize, palette: usize, seed: u64) -> Result<Self> {
        if palette < r {
            return Err(CoreError::ListTooSmall { vertex: 0, found: palette, required: r });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pool: Vec<Color> = (0..palette as Color).collect();
        let lists = (0..n)
            .map(|_| pool.choose_multiple(&mut rng, r).copied().collect())
            .collect();
        ListAssignment::new(lists)
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    pub fn min_len(&self) -> usize {
        self.lists.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// All colors appearing in any list.
    pub fn palette(&self) -> BTreeSet<Color> {
        self.lists.iter().flatten().copied().collect()
    }

    pub fn contains(&self, v: usize, c: Color) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }

    /// Checks that every list has exactly `r` colors.
    pub fn require_exact(&self, r: usize) -> Result<()> {
        for (vertex, list) in self.lists.iter().enumerate() {
            if list.len() != r {
                return Err(CoreError::NotAnRAssignment { vertex, found: list.len(), required: r });
            }
        }
        Ok(())
    }

    /// Checks that every list has at least `r` colors.
    pub fn require_min(&self, r: usize) -> Result<()> {
        for (vertex, list) in self.lists.iter().enumerate() {
            if list.len() < r {
                return Err(CoreError::ListTooSmall { vertex, found: list.len(), required: r });
            }
        }
        Ok(())
    }

    /// New assignment keeping only colors that pass `keep`; errors if a list
    /// would become empty.
    pub fn filtered<F: Fn(usize, Color) -> bool>(&self, keep: F) -> Result<Self> {
        let lists = self
            .lists
            .iter()
            .enumerate()
            .map(|(v, list)| list.iter().copied().filter(|&c| keep(v, c)).collect())
            .collect();
        ListAssignment::new(lists)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_and_rejects_empty() {
        let la = ListAssignment::new(vec![vec![3, 1, 3]]).unwrap();
        assert_eq!(la.list(0), &[1, 3]);
        assert!(ListAssignment::new(vec![vec![]]).is_err());
    }

    #[test]
    fn random_assignment_is_deterministic() {
        let a = ListAssignment::random(5, 3, 10, 7).unwrap();
        let b = ListAssignment::random(5, 3, 10, 7).unwrap();
        assert_eq!(a, b);
        a.require_exact(3).unwrap();
        assert!(a.palette().iter().all(|&c| c < 10));
    }

    #[test]
    fn exact_and_min_checks() {
        let la = ListAssignment::new(vec![vec![0, 1], vec![2, 3, 4]]).unwrap();
        assert!(la.require_exact(2).is_err());
        assert!(la.require_min(2).is_ok());
        assert!(la.require_min(3).is_err());
    }
}
