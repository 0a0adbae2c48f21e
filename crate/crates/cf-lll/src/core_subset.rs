use cf_core::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{ColorerError, Result};

/// How many independent samples to draw before giving up.
pub const SAMPLE_RETRY_BUDGET: u32 = 1_000;

/// Knobs for sampling a vertex subset whose picked-neighbor counts are
/// balanced: every vertex must see between `lo` and `hi` picked neighbors,
/// inclusive.
///
/// The stock choice for maximum degree `d` picks with probability
/// `350 ln^(1+eps)(4d) / (c d)` and demands counts strictly between
/// `291 ln(4d)` and `(409 / c) ln^(1+eps)(4d)`; concentration makes a
/// single sample land inside with high probability once `d` is in the
/// hundreds of thousands.  Desk instances instead aim for a target mean
/// `m` with the window `[m / 2, 2 m]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoreSubsetParams {
    pub pick_prob: f64,
    pub lo: usize,
    pub hi: usize,
    pub retry_budget: u32,
}

impl CoreSubsetParams {
    /// Stock parameters for maximum degree `delta` and constants `c`, `eps`.
    pub fn stock(delta: usize, c: f64, eps: f64) -> Result<Self> {
        if delta == 0 {
            return Err(ColorerError::BadParams { what: "need a positive maximum degree".into() });
        }
        if !(c > 0.0) || !(eps > 0.0) {
            return Err(ColorerError::BadParams { what: "c and eps must be positive".into() });
        }
        let d = delta as f64;
        let log = (4.0 * d).ln();
        let boosted = log.powf(1.0 + eps);
        let pick_prob = 350.0 * boosted / (c * d);
        if pick_prob > 1.0 {
            return Err(ColorerError::BadParams {
                what: format!(
                    "pick probability {pick_prob:.3} exceeds 1 at degree {delta}; \
                     this scale wants explicit desk parameters"
                ),
            });
        }
        // The stock window is open on both sides; shift to the nearest
        // integers strictly inside it.
        let lo = (291.0 * log).floor() as usize + 1;
        let hi = ((409.0 / c) * boosted).ceil() as usize - 1;
        Self::custom(pick_prob, lo, hi)
    }

    /// Desk parameters aiming for `target_mean` picked neighbors per
    /// vertex in a graph of maximum degree `delta`.
    pub fn desk(delta: usize, target_mean: usize) -> Result<Self> {
        if delta == 0 || target_mean == 0 {
            return Err(ColorerError::BadParams {
                what: "need a positive degree and target mean".into(),
            });
        }
        let pick_prob = (target_mean as f64 / delta as f64).min(1.0);
        Self::custom(pick_prob, target_mean / 2, 2 * target_mean)
    }

    /// Fully explicit parameters, checked for sanity.
    pub fn custom(pick_prob: f64, lo: usize, hi: usize) -> Result<Self> {
        if !(pick_prob > 0.0 && pick_prob <= 1.0) {
            return Err(ColorerError::BadParams {
                what: format!("pick probability {pick_prob} must lie in (0, 1]"),
            });
        }
        if lo > hi {
            return Err(ColorerError::BadParams {
                what: format!("degree window [{lo}, {hi}] is empty"),
            });
        }
        Ok(CoreSubsetParams { pick_prob, lo, hi, retry_budget: SAMPLE_RETRY_BUDGET })
    }

    pub fn with_retries(mut self, retry_budget: u32) -> Self {
        self.retry_budget = retry_budget;
        self
    }
}

/// A subset whose picked-neighbor counts all landed in the window, plus
/// the number of samples it took to find one.
#[derive(Debug, Clone)]
pub struct CoreSample {
    pub vertices: Vec<usize>,
    pub attempts: u32,
}

/// Draws independent Bernoulli picks over the vertex set and keeps the
/// first sample in which every vertex sees a windowed number of picked
/// neighbors.  Failed samples are thrown away whole; the run is a pure
/// function of `seed` and reports the worst offender when the budget runs
/// out.
pub fn sample_core_subset(g: &Graph, p: &CoreSubsetParams, seed: u64) -> Result<CoreSample> {
    // (worst distance outside the window, vertex, its count)
    let mut worst: Option<(usize, usize, usize)> = None;
    for attempt in 0..p.retry_budget {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt as u64);
        let picked: Vec<bool> = (0..g.n()).map(|_| rng.gen_bool(p.pick_prob)).collect();

        let mut ok = true;
        for v in 0..g.n() {
            let count = g.neighbors(v).iter().filter(|&&u| picked[u]).count();
            if count < p.lo || count > p.hi {
                ok = false;
                let dist = if count < p.lo { p.lo - count } else { count - p.hi };
                if worst.is_none_or(|(d, _, _)| dist > d) {
                    worst = Some((dist, v, count));
                }
            }
        }
        if ok {
            let vertices: Vec<usize> = (0..g.n()).filter(|&v| picked[v]).collect();
            // The whole point of the retry loop; check it really holds.
            for v in 0..g.n() {
                let count = g.neighbors(v).iter().filter(|&&u| picked[u]).count();
                assert!(
                    (p.lo..=p.hi).contains(&count),
                    "vertex {v} sees {count} picked neighbors outside [{}, {}]",
                    p.lo,
                    p.hi
                );
            }
            return Ok(CoreSample { vertices, attempts: attempt + 1 });
        }
    }
    let (_, worst_vertex, count) = worst.expect("a failed attempt names an offender");
    Err(ColorerError::RetriesExhausted {
        attempts: p.retry_budget,
        worst_vertex,
        count,
        lo: p.lo,
        hi: p.hi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_graph(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn stock_parameters_reject_small_degrees() {
        // 350 ln^(1+eps)(4d) / d stays above 1 until d is in the tens of
        // thousands, so desk scale must say so explicitly.
        assert!(CoreSubsetParams::stock(100, 1.0, 0.1).is_err());
        let p = CoreSubsetParams::stock(1_000_000, 1.0, 0.1).unwrap();
        assert!(p.pick_prob < 1.0);
        assert!(p.lo < p.hi);
    }

    #[test]
    fn complete_graph_with_wide_window_accepts_first_sample() {
        // Any sample with two or more picks puts every count in [1, n - 1].
        let g = complete_graph(8);
        let p = CoreSubsetParams::custom(0.5, 1, 7).unwrap();
        let sample = sample_core_subset(&g, &p, 4).unwrap();
        assert_eq!(sample.attempts, 1);
        assert!(!sample.vertices.is_empty());
        assert!(sample.vertices.len() < 8);
    }

    #[test]
    fn impossible_window_names_the_worst_vertex() {
        // A 4-cycle has degree 2, so no vertex can ever see 3 picks.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let p = CoreSubsetParams::custom(0.5, 3, 4).unwrap().with_retries(16);
        match sample_core_subset(&g, &p, 0) {
            Err(ColorerError::RetriesExhausted { attempts: 16, count, lo: 3, hi: 4, .. }) => {
                assert!(count < 3);
            }
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn samples_are_reproducible() {
        let g = complete_graph(10);
        let p = CoreSubsetParams::desk(9, 4).unwrap();
        let a = sample_core_subset(&g, &p, 33).unwrap();
        let b = sample_core_subset(&g, &p, 33).unwrap();
        assert_eq!(a.vertices, b.vertices);
        assert_eq!(a.attempts, b.attempts);
    }

    #[test]
    fn desk_window_brackets_the_mean() {
        let p = CoreSubsetParams::desk(20, 12).unwrap();
        assert!((p.pick_prob - 0.6).abs() < 1e-12);
        assert_eq!((p.lo, p.hi), (6, 24));
    }
}
