use cf_core::{
    palette_partition, verify, Hypergraph, ListAssignment, PartialColoring, VerifyMode,
    PARTITION_RETRY_BUDGET,
};

use crate::error::{GraphError, Result, StageFailure};

/// A total coloring produced by patching the holes of a partial one.
#[derive(Debug, Clone)]
pub struct LiftRun {
    pub coloring: PartialColoring,
    /// Vertices the patch stage colored, i.e. holes in the partial stage.
    pub filled: usize,
    pub partition_attempts: usize,
}

/// Turns any partial conflict-free colorer into a total one at the price
/// of a constant factor in list size.
///
/// The palette is split into two random parts.  The partial stage runs on
/// each vertex's list restricted to part one, which needs `z + ⌈ln n⌉`
/// colors there, hence lists of ten times that; the stage is handed those
/// sublists and its own seed.  Every vertex it left uncolored then takes
/// the smallest color its list keeps in part two.  Patch colors live in a
/// part no witness color belongs to, so no witness loses its uniqueness
/// and the result stays conflict-free, now with every vertex colored.
///
/// `z` is the list size the partial stage wants for `h`.
pub fn cf_full_from_partial_list<F>(
    h: &Hypergraph,
    lists: &ListAssignment,
    z: usize,
    partial_colorer: F,
    seed: u64,
) -> Result<LiftRun>
where
    F: FnOnce(&Hypergraph, &ListAssignment, u64) -> std::result::Result<PartialColoring, String>,
{
    assert_eq!(h.n(), lists.n(), "lists must cover the vertex set");
    let n = h.n();
    let partition =
        palette_partition(lists, z, 2, &vec![0; n], seed, PARTITION_RETRY_BUDGET)?;
    let sublists = ListAssignment::new(partition.sublists.clone())?;

    let partial = partial_colorer(h, &sublists, seed)
        .map_err(|msg| GraphError::stage("partial", StageFailure::Other(msg)))?;
    let report = verify(h, &partial, VerifyMode::Partial, Some(&sublists));
    if !report.ok {
        return Err(GraphError::stage(
            "partial",
            StageFailure::Other(format!(
                "stage output failed verification on {} of {} edges",
                report.violation_count(),
                h.edge_count()
            )),
        ));
    }

    let mut coloring = partial;
    let mut filled = 0;
    for u in 0..n {
        if coloring.get(u).is_none() {
            let spare = partition.restricted_list(lists, u, 1);
            // Part one keeps at most nine tenths of the list, so something
            // is always left over in part two.
            assert!(!spare.is_empty(), "vertex {u} has no colors outside the stage part");
            coloring.set(u, spare[0]);
            filled += 1;
        }
    }

    assert!(coloring.is_total());
    assert!(
        verify(h, &coloring, VerifyMode::Full, Some(lists)).ok,
        "patching uncolored vertices with part-two colors must preserve witnesses"
    );
    Ok(LiftRun { coloring, filled, partition_attempts: partition.attempts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use cf_core::ceil_ln;

    /// A stage that colors nothing at all: only valid when the hypergraph
    /// has no edges, but it exercises the patching of every vertex.
    #[test]
    fn patch_colors_everything_when_the_stage_does_nothing() {
        let h = Hypergraph::new(3, vec![]).unwrap();
        let z = 1;
        let r = 10 * (z + ceil_ln(3));
        let lists = ListAssignment::random(3, r, 3 * r, 4).unwrap();
        let run = cf_full_from_partial_list(
            &h,
            &lists,
            z,
            |h, _, _| Ok(PartialColoring::empty(h.n())),
            4,
        )
        .unwrap();
        assert_eq!(run.filled, 3);
        assert!(run.coloring.is_total());
    }

    /// A single edge, a stage that colors exactly one vertex: the other two
    /// take part-two colors that cannot collide with the witness.
    #[test]
    fn single_edge_keeps_its_witness() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let z = 1;
        let r = 10 * (z + ceil_ln(3));
        let lists = ListAssignment::random(3, r, 3 * r, 9).unwrap();
        let run = cf_full_from_partial_list(
            &h,
            &lists,
            z,
            |h, sub, _| {
                let mut c = PartialColoring::empty(h.n());
                c.set(0, sub.list(0)[0]);
                Ok(c)
            },
            9,
        )
        .unwrap();
        assert_eq!(run.filled, 2);
        assert!(verify(&h, &run.coloring, VerifyMode::Full, Some(&lists)).ok);
    }

    /// An already-total stage output leaves nothing to patch.
    #[test]
    fn total_stage_output_is_untouched() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let z = 2;
        let r = 10 * (z + ceil_ln(2));
        let lists = ListAssignment::random(2, r, 3 * r, 7).unwrap();
        let run = cf_full_from_partial_list(
            &h,
            &lists,
            z,
            |h, sub, _| {
                Ok(PartialColoring::from_slots(
                    (0..h.n()).map(|v| Some(sub.list(v)[v])).collect(),
                ))
            },
            7,
        )
        .unwrap();
        assert_eq!(run.filled, 0);
    }

    /// A stage whose output fails verification is rejected with its tag.
    #[test]
    fn bad_stage_output_is_rejected() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let z = 1;
        let r = 10 * (z + ceil_ln(2));
        let lists = ListAssignment::random(2, r, 3 * r, 3).unwrap();
        let out = cf_full_from_partial_list(
            &h,
            &lists,
            z,
            // Colors nothing: the edge has no witness.
            |h, _, _| Ok(PartialColoring::empty(h.n())),
            3,
        );
        match out {
            Err(GraphError::Stage { stage: "partial", .. }) => {}
            other => panic!("expected a tagged stage failure, got {other:?}"),
        }
    }
}
