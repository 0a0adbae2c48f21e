use cf_core::{verify, Color, Hypergraph, ListAssignment, PartialColoring, VerifyMode};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{ColorerError, Result};

/// How many single-edge resampling steps to allow before giving up.
pub const RESAMPLE_BUDGET: u64 = 100_000;

/// Knobs for the resampling colorer.
///
/// Edge sizes must lie in `[alpha, beta]` and every list must hold at
/// least `list_size` colors.  The stock choice for edge sizes in the
/// thousands is `alpha = max(4096, ceil(136 ln(16 g)))` and
/// `list_size = 32 beta`; at that scale a uniformly colored edge loses
/// all its witnesses so rarely that resampling terminates quickly with
/// high probability.  Desk instances can shrink all three freely, since
/// the verifier gate and the step budget keep the output sound either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NearUniformParams {
    pub alpha: usize,
    pub beta: usize,
    pub list_size: usize,
    pub resample_budget: u64,
}

impl NearUniformParams {
    /// Stock parameters for maximal edge size `beta` and overlap bound `gamma`.
    pub fn stock(beta: usize, gamma: usize) -> Result<Self> {
        let g = gamma.max(1) as f64;
        let alpha = 4096_usize.max((136.0 * (16.0 * g).ln()).ceil() as usize);
        Self::custom(alpha, beta, 32 * beta)
    }

    /// Fully explicit parameters, checked for sanity.
    pub fn custom(alpha: usize, beta: usize, list_size: usize) -> Result<Self> {
        if alpha == 0 || alpha > beta {
            return Err(ColorerError::BadParams {
                what: format!("edge size window [{alpha}, {beta}] is empty or starts at zero"),
            });
        }
        if list_size == 0 {
            return Err(ColorerError::BadParams { what: "lists must be nonempty".into() });
        }
        Ok(NearUniformParams { alpha, beta, list_size, resample_budget: RESAMPLE_BUDGET })
    }

    pub fn with_budget(mut self, resample_budget: u64) -> Self {
        self.resample_budget = resample_budget;
        self
    }
}

/// A successful run: a total coloring under which every edge has a
/// uniquely colored vertex, plus the number of resampling steps it took.
#[derive(Debug, Clone)]
pub struct NearUniformRun {
    pub coloring: PartialColoring,
    pub resamples: u64,
}

/// Colors every vertex by an independent uniform draw from its list, then
/// repairs violations one edge at a time: as long as some edge has no
/// uniquely colored vertex, the lowest-index such edge gets all of its
/// vertices redrawn.  Only the violated edge is touched, so any satisfied
/// edge disjoint from every violated one keeps its witness across a step.
/// The run is a pure function of `seed`.
pub fn near_uniform_color(
    h: &Hypergraph,
    lists: &ListAssignment,
    p: &NearUniformParams,
    seed: u64,
) -> Result<NearUniformRun> {
    assert_eq!(h.n(), lists.n(), "lists must cover the vertex set");
    for (i, e) in h.edges().iter().enumerate() {
        if e.len() < p.alpha || e.len() > p.beta {
            return Err(ColorerError::EdgeOutsideWindow {
                edge: i,
                size: e.len(),
                lo: p.alpha,
                hi: p.beta,
            });
        }
    }
    if lists.min_len() < p.list_size {
        return Err(ColorerError::ListsTooShort {
            found: lists.min_len(),
            required: p.list_size,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coloring = PartialColoring::from_slots(
        (0..h.n()).map(|v| Some(draw(lists, v, &mut rng))).collect(),
    );

    let mut resamples = 0;
    loop {
        let report = verify(h, &coloring, VerifyMode::Full, Some(lists));
        let violated = report.violating_edges();
        let Some(&edge) = violated.first() else {
            return Ok(NearUniformRun { coloring, resamples });
        };
        if resamples >= p.resample_budget {
            return Err(ColorerError::ResamplesExhausted {
                steps: resamples,
                violated: violated.len(),
                edges: violated,
            });
        }
        resample_edge(h, lists, &mut coloring, edge, &mut rng);
        resamples += 1;
    }
}

fn draw(lists: &ListAssignment, v: usize, rng: &mut ChaCha8Rng) -> Color {
    let list = lists.list(v);
    list[rng.gen_range(0..list.len())]
}

/// Redraws exactly the vertices of one edge, leaving the rest untouched.
fn resample_edge(
    h: &Hypergraph,
    lists: &ListAssignment,
    coloring: &mut PartialColoring,
    edge: usize,
    rng: &mut ChaCha8Rng,
) {
    for &v in &h.edges()[edge] {
        coloring.set(v, draw(lists, v, rng));
    }
}
