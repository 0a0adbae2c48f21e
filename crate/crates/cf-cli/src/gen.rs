use std::path::PathBuf;

use cf_core::format::{write_graph, write_hypergraph, write_lists};
use cf_core::ListAssignment;
use cf_gen::{
    discrete_interval_hypergraph, random_graph, random_graph_min_degree, scenario_hypergraph,
    star, subdivided_biclique, subdivided_complete, ScenarioSpec,
};
use clap::{Args, Subcommand};

use crate::io::write_text;
use crate::{CmdResult, Failure};

#[derive(Args)]
pub struct GenArgs {
    #[command(subcommand)]
    family: Family,
}

#[derive(Subcommand)]
enum Family {
    /// Complete graph on n branch vertices, every edge subdivided once
    Knhalf {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Complete bipartite graph K_{d,m}, every edge subdivided once
    Biclique {
        d: usize,
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Star K_{1,k}: center vertex 0, k leaves
    Star {
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// All dyadic intervals over n points, as a hypergraph
    Interval {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Erdos-Renyi graph G(n, p)
    Random {
        n: usize,
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random graph with every degree inside [min_deg, max_deg]
    RandomMindeg {
        n: usize,
        min_deg: usize,
        max_deg: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coverage hypergraph from a CSV of `x,y,kind` rows
    /// (kind is `station` or `client`); one edge per client,
    /// listing the stations within the radius
    Scenario {
        csv: PathBuf,
        #[arg(long)]
        radius: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random list assignment: n lists of r distinct colors drawn from
    /// a palette of the given size
    Lists {
        n: usize,
        r: usize,
        #[arg(long)]
        palette: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_scenario(path: &PathBuf, radius: f64) -> Result<ScenarioSpec, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let mut spec = ScenarioSpec { stations: Vec::new(), clients: Vec::new(), radius };
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |what: &str| {
            Failure::Usage(format!("{}: line {}: {what}", path.display(), i + 1))
        };
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 3 {
            return Err(bad("expected `x,y,kind`"));
        }
        let x: f64 = fields[0].parse().map_err(|_| bad("bad x coordinate"))?;
        let y: f64 = fields[1].parse().map_err(|_| bad("bad y coordinate"))?;
        match fields[2] {
            "station" => spec.stations.push((x, y)),
            "client" => spec.clients.push((x, y)),
            other => return Err(bad(&format!("unknown kind `{other}`"))),
        }
    }
    Ok(spec)
}

pub fn run(args: GenArgs) -> CmdResult {
    let (text, out) = match args.family {
        Family::Knhalf { n, out } => (write_graph(&subdivided_complete(n)?), out),
        Family::Biclique { d, m, out } => (write_graph(&subdivided_biclique(d, m)?), out),
        Family::Star { k, out } => (write_graph(&star(k)?), out),
        Family::Interval { n, out } => {
            (write_hypergraph(&discrete_interval_hypergraph(n)?), out)
        }
        Family::Random { n, p, seed, out } => (write_graph(&random_graph(n, p, seed)?), out),
        Family::RandomMindeg { n, min_deg, max_deg, seed, out } => {
            (write_graph(&random_graph_min_degree(n, min_deg, max_deg, seed)?), out)
        }
        Family::Scenario { csv, radius, out } => {
            let spec = parse_scenario(&csv, radius)?;
            (write_hypergraph(&scenario_hypergraph(&spec)?), out)
        }
        Family::Lists { n, r, palette, seed, out } => {
            (write_lists(&ListAssignment::random(n, r, palette, seed)?), out)
        }
    };
    write_text(out.as_deref(), &text)
}
