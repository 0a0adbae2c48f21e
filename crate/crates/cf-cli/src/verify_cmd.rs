use std::path::PathBuf;

use cf_core::format::{read_coloring, read_graph, read_hypergraph, read_lists};
use cf_core::{
    closed_neighborhood_hypergraph, open_neighborhood_hypergraph, verify, EdgeVerdict, VerifyMode,
};
use clap::{Args, ValueEnum};

use crate::io::read_text;
use crate::oracle::CoverArg;
use crate::{CmdResult, Failure};

const SHOWN_VIOLATIONS: usize = 20;

#[derive(Args)]
pub struct VerifyArgs {
    /// Hypergraph file; stdin when neither this nor --graph is given
    #[arg(long, conflicts_with = "graph")]
    input: Option<PathBuf>,
    /// Verify against a graph's neighborhood hypergraph instead
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Which neighborhoods of --graph to use
    #[arg(long, value_enum, default_value_t = GraphSide::On, requires = "graph")]
    variant: GraphSide,
    #[arg(long)]
    coloring: PathBuf,
    /// Also require every color to come from these lists
    #[arg(long)]
    lists: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = CoverArg::Partial)]
    cover: CoverArg,
}

#[derive(ValueEnum, Clone, Copy)]
enum GraphSide {
    On,
    Cn,
}

pub fn run(args: VerifyArgs) -> CmdResult {
    let h = match &args.graph {
        Some(path) => {
            let g = read_graph(&read_text(Some(path))?)?;
            match args.variant {
                GraphSide::On => open_neighborhood_hypergraph(&g)?,
                GraphSide::Cn => closed_neighborhood_hypergraph(&g)?,
            }
        }
        None => read_hypergraph(&read_text(args.input.as_ref())?)?,
    };
    let coloring = read_coloring(&read_text(Some(&args.coloring))?)?;
    let lists = match &args.lists {
        Some(path) => Some(read_lists(&read_text(Some(path))?)?),
        None => None,
    };
    let mode: VerifyMode = args.cover.into();

    let report = verify(&h, &coloring, mode, lists.as_ref());
    if report.ok {
        println!("OK: {} edges witnessed", h.edges().len());
        return Ok(());
    }

    let mut shown = 0;
    for (i, verdict) in report.edges.iter().enumerate() {
        if matches!(verdict, EdgeVerdict::Witness { .. }) {
            continue;
        }
        if shown == SHOWN_VIOLATIONS {
            println!("... more violations suppressed");
            break;
        }
        shown += 1;
        let members: Vec<String> = h.edges()[i]
            .iter()
            .map(|&v| match coloring.get(v) {
                Some(c) => format!("{v}={c}"),
                None => format!("{v}=-"),
            })
            .collect();
        println!("edge {i}: no unique color among {{{}}}", members.join(", "));
    }
    if report.list_ok == Some(false) {
        println!("some colors fall outside their vertex lists");
    }
    if mode == VerifyMode::Full && !report.uncolored.is_empty() {
        println!("{} vertices left uncolored in full mode", report.uncolored.len());
    }
    Err(Failure::Check(format!("{} violations", report.violation_count())))
}
