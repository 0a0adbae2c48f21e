use std::path::PathBuf;

use cf_core::format::{read_graph, read_hypergraph, read_lists, write_coloring};
use cf_graph::{
    cfcn_dense_min_degree, cfcn_general, cfcn_min_degree, cfcn_min_k, cfon_claw,
    cfon_dense_min_degree, cfon_min_degree, Mode,
};
use cf_lll::{
    near_uniform_color, pach_tardos_color, NearUniformParams, PachTardosParams,
};
use clap::{Args, Subcommand, ValueEnum};
use serde_json::json;

use crate::io::{read_text, write_text};
use crate::{CmdResult, Failure};

#[derive(Args)]
pub struct ColorArgs {
    #[command(subcommand)]
    which: ColorOp,
}

#[derive(Subcommand)]
enum ColorOp {
    /// Restart and resample colorers on a raw hypergraph
    Lll {
        #[arg(long, value_enum)]
        algo: LllAlgo,
        #[arg(long)]
        lists: PathBuf,
        /// Hypergraph file; stdin when omitted
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Desk)]
        mode: ModeArg,
        /// Designated witnesses per edge (pach-tardos; edges need 2t-1
        /// vertices)
        #[arg(long)]
        t: Option<usize>,
        /// Edge-overlap bound; measured from the instance when omitted
        #[arg(long)]
        gamma: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print per-restart defect counts as JSON on stderr
        #[arg(long)]
        json_diagnostics: bool,
    },
    /// Neighborhood colorers on a graph
    Graph {
        #[arg(long, value_enum)]
        algo: GraphAlgo,
        #[arg(long)]
        lists: PathBuf,
        /// Graph file; stdin when omitted
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Desk)]
        mode: ModeArg,
        /// List-size constant for cfcn-general; its computed minimum
        /// when omitted
        #[arg(long)]
        k: Option<usize>,
        /// Open or closed neighborhoods, for the algorithms that serve both
        #[arg(long, value_enum, default_value_t = NbArg::On)]
        variant: NbArg,
        /// Density constant for dense: min degree >= c d / ln^eps d
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, default_value_t = 0.5)]
        eps: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the JSON decomposition summary here instead of stderr
        #[arg(long)]
        summary: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum LllAlgo {
    PachTardos,
    NearUniform,
}

#[derive(ValueEnum, Clone, Copy)]
enum GraphAlgo {
    CfcnGeneral,
    CfonClaw,
    MinDegree,
    Dense,
}

#[derive(ValueEnum, Clone, Copy)]
pub enum ModeArg {
    Paper,
    Desk,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Paper => Mode::Paper,
            ModeArg::Desk => Mode::desk(),
        }
    }
}

#[derive(ValueEnum, Clone, Copy)]
pub enum NbArg {
    On,
    Cn,
}

fn check(e: impl std::fmt::Display) -> Failure {
    Failure::Check(e.to_string())
}

/// Multiplier that keeps composed stages succeeding within their restart
/// budgets; mirrors what the graph colorers use internally.
const DESK_ROUNDS_FACTOR: f64 = 90.0;

fn run_lll(
    algo: LllAlgo,
    lists: PathBuf,
    input: Option<PathBuf>,
    seed: u64,
    mode: ModeArg,
    t: Option<usize>,
    gamma: Option<usize>,
    out: Option<PathBuf>,
    json_diagnostics: bool,
) -> CmdResult {
    let la = read_lists(&read_text(Some(&lists))?)?;
    let h = read_hypergraph(&read_text(input.as_ref())?)?;
    let stats = h.stats();
    match algo {
        LllAlgo::PachTardos => {
            let t = t.ok_or_else(|| Failure::Usage("pach-tardos needs --t".into()))?;
            let gamma = gamma.unwrap_or(stats.overlap);
            let params = match mode {
                ModeArg::Paper => PachTardosParams::stock(t, gamma),
                ModeArg::Desk => {
                    PachTardosParams::with_rounds_factor(t, gamma, DESK_ROUNDS_FACTOR)
                }
            }
            .map_err(check)?;
            match pach_tardos_color(&h, &la, &params, seed) {
                Ok(run) => {
                    if json_diagnostics {
                        let failures: Vec<_> = run
                            .failures
                            .iter()
                            .map(|f| {
                                json!({
                                    "attempt": f.attempt,
                                    "overfull_edges": f.overfull_edges,
                                    "empty_edges": f.empty_edges,
                                    "unwitnessed_edges": f.unwitnessed_edges,
                                })
                            })
                            .collect();
                        eprintln!(
                            "{}",
                            json!({
                                "attempt": run.attempt,
                                "rounds": run.rounds,
                                "rounds_capped": run.rounds_capped,
                                "failures": failures,
                            })
                        );
                    }
                    write_text(out.as_deref(), &write_coloring(&run.coloring))
                }
                Err(e) => Err(check(e)),
            }
        }
        LllAlgo::NearUniform => {
            let params = match mode {
                ModeArg::Paper => {
                    NearUniformParams::stock(stats.max_edge_size, gamma.unwrap_or(stats.overlap))
                }
                ModeArg::Desk => NearUniformParams::custom(
                    stats.min_edge_size,
                    stats.max_edge_size,
                    (32 * stats.max_edge_size).min(la.min_len()),
                ),
            }
            .map_err(check)?;
            match near_uniform_color(&h, &la, &params, seed) {
                Ok(run) => {
                    if json_diagnostics {
                        eprintln!("{}", json!({ "resamples": run.resamples }));
                    }
                    write_text(out.as_deref(), &write_coloring(&run.coloring))
                }
                Err(e) => Err(check(e)),
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_graph(
    algo: GraphAlgo,
    lists: PathBuf,
    input: Option<PathBuf>,
    seed: u64,
    mode: ModeArg,
    k: Option<usize>,
    variant: NbArg,
    c: f64,
    eps: f64,
    out: Option<PathBuf>,
    summary: Option<PathBuf>,
) -> CmdResult {
    let la = read_lists(&read_text(Some(&lists))?)?;
    let g = read_graph(&read_text(input.as_ref())?)?;
    let m: Mode = mode.into();
    let (coloring, summary_json) = match algo {
        GraphAlgo::CfcnGeneral => {
            let k = match k {
                Some(k) => k,
                None => cfcn_min_k(&g, m).map_err(check)?,
            };
            let run = cfcn_general(&g, &la, k, m, seed).map_err(check)?;
            let s = run.summary;
            (
                run.coloring,
                json!({
                    "algo": "cfcn-general",
                    "theta": s.theta,
                    "k_min": s.k_min,
                    "core_deep": s.a1,
                    "core_fringe": s.a2,
                    "rest": s.b,
                    "round_stage_colors": s.round_stage_colors,
                    "exact_stage_colors": s.exact_stage_colors,
                    "round_stage_attempt": s.round_stage_attempt,
                    "rounds": s.rounds,
                }),
            )
        }
        GraphAlgo::CfonClaw => {
            let run = cfon_claw(&g, &la, m, seed).map_err(check)?;
            let s = run.summary;
            (
                run.coloring,
                json!({
                    "algo": "cfon-claw",
                    "k": s.k,
                    "b_cut": s.b_cut,
                    "z": s.z,
                    "classes": s.classes,
                    "parts": {
                        "dense": s.b, "high": s.a_h, "low": s.a_l, "joint": s.x, "late": s.c,
                    },
                    "stranded": s.stranded,
                    "stage_colors": s.stage_colors,
                    "partition_attempts": s.partition_attempts,
                    "uniform_resamples": s.uniform_resamples,
                }),
            )
        }
        GraphAlgo::MinDegree => {
            let run = match variant {
                NbArg::On => cfon_min_degree(&g, &la, m, seed),
                NbArg::Cn => cfcn_min_degree(&g, &la, m, seed),
            }
            .map_err(check)?;
            (
                run.coloring,
                json!({
                    "algo": "min-degree",
                    "t": run.t,
                    "rounds": run.rounds,
                    "attempt": run.attempt,
                }),
            )
        }
        GraphAlgo::Dense => {
            let run = match variant {
                NbArg::On => cfon_dense_min_degree(&g, &la, c, eps, m, seed),
                NbArg::Cn => cfcn_dense_min_degree(&g, &la, c, eps, m, seed),
            }
            .map_err(check)?;
            (
                run.coloring,
                json!({
                    "algo": "dense",
                    "core_size": run.core.as_ref().map(Vec::len),
                    "core_attempts": run.core_attempts,
                    "resamples": run.resamples,
                    "exact_fallback": run.core.is_none(),
                }),
            )
        }
    };

    let summary_text = format!("{summary_json}\n");
    match summary {
        Some(path) => write_text(Some(&path), &summary_text)?,
        None => eprint!("{summary_text}"),
    }
    write_text(out.as_deref(), &write_coloring(&coloring))
}

pub fn run(args: ColorArgs) -> CmdResult {
    match args.which {
        ColorOp::Lll { algo, lists, input, seed, mode, t, gamma, out, json_diagnostics } => {
            run_lll(algo, lists, input, seed, mode, t, gamma, out, json_diagnostics)
        }
        ColorOp::Graph {
            algo,
            lists,
            input,
            seed,
            mode,
            k,
            variant,
            c,
            eps,
            out,
            summary,
        } => run_graph(algo, lists, input, seed, mode, k, variant, c, eps, out, summary),
    }
}
