//! Coverage scenarios: base stations and clients in the plane. Each client
//! must hear at least one station; the stations a client hears form one
//! hyperedge, so a conflict-free coloring hands every client an
//! interference-free frequency.

use cf_core::Hypergraph;

use crate::error::{GenError, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioSpec {
    pub stations: Vec<(f64, f64)>,
    pub clients: Vec<(f64, f64)>,
    pub radius: f64,
}

/// Hypergraph on the stations; edge `i` lists the stations within `radius`
/// (Euclidean, inclusive) of client `i`.
pub fn scenario_hypergraph(spec: &ScenarioSpec) -> Result<Hypergraph> {
    if !(spec.radius > 0.0) || !spec.radius.is_finite() {
        return Err(GenError::BadRadius { radius: spec.radius });
    }
    let r2 = spec.radius * spec.radius;
    let mut edges = Vec::with_capacity(spec.clients.len());
    for (index, &(cx, cy)) in spec.clients.iter().enumerate() {
        let edge: Vec<usize> = spec
            .stations
            .iter()
            .enumerate()
            .filter(|&(_, &(sx, sy))| {
                let (dx, dy) = (sx - cx, sy - cy);
                dx * dx + dy * dy <= r2
            })
            .map(|(s, _)| s)
            .collect();
        if edge.is_empty() {
            return Err(GenError::UncoveredClient { index, x: cx, y: cy });
        }
        edges.push(edge);
    }
    Ok(Hypergraph::new(spec.stations.len(), edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clients_collect_stations_in_range() {
        let spec = ScenarioSpec {
            stations: vec![(0.0, 0.0), (2.0, 0.0), (5.0, 0.0)],
            clients: vec![(1.0, 0.0), (4.8, 0.0)],
            radius: 1.5,
        };
        let h = scenario_hypergraph(&spec).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1], vec![2]]);
    }

    #[test]
    fn uncovered_client_is_an_error() {
        let spec = ScenarioSpec {
            stations: vec![(0.0, 0.0)],
            clients: vec![(10.0, 0.0)],
            radius: 1.0,
        };
        assert!(matches!(
            scenario_hypergraph(&spec),
            Err(GenError::UncoveredClient { index: 0, .. })
        ));
    }

    #[test]
    fn boundary_is_inclusive() {
        let spec = ScenarioSpec {
            stations: vec![(0.0, 0.0)],
            clients: vec![(3.0, 4.0)],
            radius: 5.0,
        };
        assert_eq!(scenario_hypergraph(&spec).unwrap().edges(), &[vec![0]]);
    }
}
