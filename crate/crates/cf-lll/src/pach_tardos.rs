use cf_core::{verify, Hypergraph, ListAssignment, PartialColoring, VerifyMode};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{AttemptLog, ColorerError, Result};
use crate::trim;

/// How many fresh attempts to make before giving up.
pub const RESTART_BUDGET: u32 = 1_000;

/// Knobs for the round-based colorer.
///
/// `q` is the per-round chance that an uncolored support vertex takes a
/// color, and `rounds` bounds how many list positions the process may use.
/// The stock choice is `q = 1 / (30 t g^(1/t))` with
/// `rounds = ceil(c * t * g^(1/t) * ln(g + 2))` for overlap bound `g`.
///
/// A vertex survives all rounds uncolored with probability
/// `(1 - q)^rounds`, roughly `(g + 2)^(-c / 30)`.  Pushing the per-edge
/// failure chance below `1 / (20 g^3)`, small enough for a union bound
/// over an edge's neighborhood, needs `c` in the hundred range; `c = 3`
/// keeps the rounds (and hence the demanded list length) an order of
/// magnitude smaller and leans on the verifier gate plus restarts instead.
/// Pass a larger factor when single-attempt success matters more than
/// list economy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PachTardosParams {
    pub t: usize,
    pub gamma: usize,
    pub q: f64,
    pub rounds: usize,
    pub restarts: u32,
}

impl PachTardosParams {
    pub const DEFAULT_ROUNDS_FACTOR: f64 = 3.0;

    /// Stock parameters for witness size `t` and overlap bound `gamma`.
    pub fn stock(t: usize, gamma: usize) -> Result<Self> {
        Self::with_rounds_factor(t, gamma, Self::DEFAULT_ROUNDS_FACTOR)
    }

    /// Stock parameters with an explicit rounds factor `c`.
    pub fn with_rounds_factor(t: usize, gamma: usize, c: f64) -> Result<Self> {
        if t == 0 {
            return Err(ColorerError::BadParams { what: "t must be at least 1".into() });
        }
        if !(c > 0.0) {
            return Err(ColorerError::BadParams { what: "rounds factor must be positive".into() });
        }
        // The formulas degenerate at zero overlap; disjoint edges behave
        // exactly like overlap 1.
        let g = gamma.max(1) as f64;
        let root = g.powf(1.0 / t as f64);
        let q = 1.0 / (30.0 * t as f64 * root);
        let rounds = (c * t as f64 * root * (g + 2.0).ln()).ceil() as usize;
        Self::custom(t, gamma, q, rounds)
    }

    /// Fully explicit parameters, checked for sanity.
    pub fn custom(t: usize, gamma: usize, q: f64, rounds: usize) -> Result<Self> {
        if t == 0 {
            return Err(ColorerError::BadParams { what: "t must be at least 1".into() });
        }
        if !(q > 0.0 && q < 1.0) {
            return Err(ColorerError::BadParams { what: format!("q = {q} must lie in (0, 1)") });
        }
        if rounds == 0 {
            return Err(ColorerError::BadParams { what: "need at least one round".into() });
        }
        Ok(PachTardosParams { t, gamma, q, rounds, restarts: RESTART_BUDGET })
    }

    pub fn with_restarts(mut self, restarts: u32) -> Self {
        self.restarts = restarts;
        self
    }
}

/// A successful run: the winning coloring plus enough bookkeeping to see
/// how hard it was to find.
#[derive(Debug, Clone)]
pub struct PachTardosRun {
    pub coloring: PartialColoring,
    /// Index of the attempt that produced the coloring; earlier attempts
    /// all failed.  Attempts use independent, seed-derived random streams,
    /// so the outcome does not depend on how they are scheduled.
    pub attempt: u32,
    /// Rounds actually played, possibly fewer than asked for.
    pub rounds: usize,
    /// True when the lists were too short for the requested rounds and the
    /// schedule was cut down to the shortest list.
    pub rounds_capped: bool,
    pub failures: Vec<AttemptLog>,
}

/// Colors part of the vertex set so every edge keeps a uniquely colored
/// vertex, drawing only from the given lists.
///
/// The instance is first trimmed to designated support; then each round
/// `i` offers every still-uncolored support vertex its `i`-th smallest
/// list color with probability `q`.  A full verification gates every
/// attempt, so a returned coloring is always sound regardless of how the
/// parameters were tuned.  The whole run is a pure function of `seed`.
pub fn pach_tardos_color(
    h: &Hypergraph,
    lists: &ListAssignment,
    p: &PachTardosParams,
    seed: u64,
) -> Result<PachTardosRun> {
    assert_eq!(h.n(), lists.n(), "lists must cover the vertex set");
    let found = h.stats().overlap;
    if found > p.gamma {
        return Err(ColorerError::OverlapExceedsBound { found, bound: p.gamma });
    }
    let (trimmed, support) = trim(h, p.t)?;

    let rounds = p.rounds.min(lists.min_len());
    let rounds_capped = rounds < p.rounds;

    let mut failures = Vec::new();
    for attempt in 0..p.restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt as u64);

        let mut slots: Vec<Option<cf_core::Color>> = vec![None; h.n()];
        for i in 0..rounds {
            for &v in &support {
                if slots[v].is_none() && rng.gen_bool(p.q) {
                    slots[v] = Some(lists.list(v)[i]);
                }
            }
        }
        let coloring = PartialColoring::from_slots(slots);

        let report = verify(h, &coloring, VerifyMode::Partial, Some(lists));
        if report.ok {
            return Ok(PachTardosRun { coloring, attempt, rounds, rounds_capped, failures });
        }
        failures.push(attempt_log(attempt, &trimmed, &coloring, report.violation_count()));
    }
    Err(ColorerError::RestartsExhausted { attempts: p.restarts, failures })
}

fn attempt_log(
    attempt: u32,
    trimmed: &Hypergraph,
    coloring: &PartialColoring,
    unwitnessed_edges: usize,
) -> AttemptLog {
    let mut overfull_edges = 0;
    let mut empty_edges = 0;
    for e in trimmed.edges() {
        let colored = e.iter().filter(|&&v| coloring.get(v).is_some()).count();
        if colored == 0 {
            empty_edges += 1;
        } else if colored > trimmed_target(e.len()) {
            overfull_edges += 1;
        }
    }
    AttemptLog { attempt, overfull_edges, empty_edges, unwitnessed_edges }
}

/// An edge of restricted size `2t - 1 + extra` wants about `t` colored
/// vertices; more than that and collisions start eating witnesses.
fn trimmed_target(len: usize) -> usize {
    len / 2 + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_edge() -> Hypergraph {
        Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap()
    }

    #[test]
    fn stock_parameters_land_where_expected() {
        let p = PachTardosParams::stock(2, 1).unwrap();
        assert!((p.q - 1.0 / 60.0).abs() < 1e-12);
        // ceil(3 * 2 * 1 * ln 3) = ceil(6.59...) = 7
        assert_eq!(p.rounds, 7);

        let p = PachTardosParams::stock(2, 0).unwrap();
        assert_eq!(p.rounds, 7, "zero overlap behaves like overlap one");
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(PachTardosParams::custom(0, 1, 0.5, 5).is_err());
        assert!(PachTardosParams::custom(2, 1, 0.0, 5).is_err());
        assert!(PachTardosParams::custom(2, 1, 1.0, 5).is_err());
        assert!(PachTardosParams::custom(2, 1, 0.5, 0).is_err());
    }

    #[test]
    fn single_edge_gets_witnessed() {
        let h = single_edge();
        let lists = ListAssignment::random(3, 8, 20, 11).unwrap();
        let p = PachTardosParams::custom(2, 1, 0.5, 8).unwrap();
        let run = pach_tardos_color(&h, &lists, &p, 7).unwrap();
        assert!(verify(&h, &run.coloring, VerifyMode::Partial, Some(&lists)).ok);
    }

    #[test]
    fn overlap_above_bound_is_rejected() {
        // Three pairwise overlapping edges: overlap 2, bound 1.
        let h = Hypergraph::new(
            7,
            vec![vec![0, 1, 2, 3], vec![2, 3, 4, 5], vec![0, 1, 4, 6]],
        )
        .unwrap();
        let lists = ListAssignment::random(7, 8, 20, 3).unwrap();
        let p = PachTardosParams::custom(2, 1, 0.5, 8).unwrap();
        match pach_tardos_color(&h, &lists, &p, 0) {
            Err(ColorerError::OverlapExceedsBound { found: 2, bound: 1 }) => {}
            other => panic!("expected an overlap rejection, got {other:?}"),
        }
    }

    #[test]
    fn short_lists_cap_the_schedule() {
        let h = single_edge();
        let lists = ListAssignment::random(3, 4, 20, 5).unwrap();
        let p = PachTardosParams::custom(2, 1, 0.5, 50).unwrap();
        let run = pach_tardos_color(&h, &lists, &p, 1).unwrap();
        assert_eq!(run.rounds, 4);
        assert!(run.rounds_capped);
    }

    #[test]
    fn hopeless_instance_reports_defects() {
        // One list color and q close to 1: both designated triples of each
        // round collapse to monochrome edges, so every attempt fails.
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let lists = ListAssignment::new(vec![vec![4]; 3]).unwrap();
        let p = PachTardosParams::custom(2, 1, 0.99, 1).unwrap().with_restarts(20);
        match pach_tardos_color(&h, &lists, &p, 9) {
            Err(ColorerError::RestartsExhausted { attempts: 20, failures }) => {
                assert_eq!(failures.len(), 20);
                assert!(failures.iter().all(|f| f.attempt < 20));
                // Each failure is either a monochrome edge or an empty one.
                assert!(failures
                    .iter()
                    .all(|f| f.overfull_edges + f.empty_edges + f.unwitnessed_edges > 0));
            }
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn runs_are_reproducible() {
        let h = Hypergraph::new(9, vec![vec![0, 1, 2, 3], vec![3, 4, 5], vec![5, 6, 7, 8]])
            .unwrap();
        let lists = ListAssignment::random(9, 8, 30, 21).unwrap();
        let p = PachTardosParams::custom(2, 2, 0.3, 8).unwrap();
        let a = pach_tardos_color(&h, &lists, &p, 42).unwrap();
        let b = pach_tardos_color(&h, &lists, &p, 42).unwrap();
        assert_eq!(a.coloring.slots(), b.coloring.slots());
        assert_eq!(a.attempt, b.attempt);
        let c = pach_tardos_color(&h, &lists, &p, 43).unwrap();
        assert!(verify(&h, &c.coloring, VerifyMode::Partial, Some(&lists)).ok);
    }
}
