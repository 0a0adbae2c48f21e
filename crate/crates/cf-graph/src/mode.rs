/// Scale regime for the composite colorers.
///
/// The stock constants in the decompositions are tuned for instances far
/// beyond what fits on a desk: thresholds like `max(2^12, 272 ln(4d))`
/// only bite when the maximum degree has six digits.  `Paper` keeps them
/// verbatim and therefore only accepts very large instances; `Desk`
/// multiplies the bulk constants (class cutoffs, palette budgets, edge
/// windows) by one shrink factor in `(0, 1]`, which preserves every
/// relative inequality between them while bringing list sizes down to
/// something a test suite can afford.  Either way each stage is gated by
/// the verifier, so a returned coloring never depends on the regime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Mode {
    Paper,
    Desk { shrink: f64 },
}

impl Mode {
    /// The default desk shrink: turns `2^17` into `32` and `2^12` into `1`.
    pub const DESK_SHRINK: f64 = 1.0 / 4096.0;

    pub fn desk() -> Self {
        Mode::Desk { shrink: Self::DESK_SHRINK }
    }

    pub(crate) fn shrink(&self) -> f64 {
        match *self {
            Mode::Paper => 1.0,
            Mode::Desk { shrink } => shrink,
        }
    }

    pub fn is_paper(&self) -> bool {
        matches!(self, Mode::Paper)
    }

    /// `value`, shrunk and kept at least `floor`.
    pub(crate) fn scale(&self, value: f64, floor: usize) -> usize {
        ((value * self.shrink()).ceil() as usize).max(floor)
    }
}
