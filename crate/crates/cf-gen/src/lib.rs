//! Instance families used across the workspace: subdivided complete and
//! bipartite graphs, stars, discrete interval hypergraphs, seeded random
//! graphs and planar coverage scenarios.

mod error;
mod families;
mod scenario;
mod subdivided;

pub use error::{GenError, Result};
pub use families::{
    discrete_interval_hypergraph, line_graph, random_graph, random_graph_min_degree, star,
};
pub use scenario::{scenario_hypergraph, ScenarioSpec};
pub use subdivided::{
    biclique_cfon3_coloring, biclique_cfonstar_coloring, biclique_mid, subdivided_biclique,
    subdivided_complete,
};
