use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use cf_core::{
    closed_neighborhood_hypergraph, open_neighborhood_hypergraph, verify, Graph, Hypergraph,
    ListAssignment, VerifyMode,
};
use cf_gen::{
    discrete_interval_hypergraph, random_graph, random_graph_min_degree, star,
    subdivided_biclique, subdivided_complete,
};
use cf_graph::{
    cfcn_general, cfcn_list_size, cfcn_min_k, cfon_claw, cfon_claw_list_size, cfon_min_degree,
    cfon_dense_min_degree, witness_count, Mode,
};
use cf_lll::{near_uniform_color, pach_tardos_color, NearUniformParams, PachTardosParams};
use cf_oracle::{list_cf_color, ListColorOutcome, OracleBudget};
use clap::Args;

use crate::{CmdResult, Failure};

#[derive(Args)]
pub struct BenchArgs {
    /// Plan file: blocks of `key = value` lines separated by blank lines,
    /// `#` comments allowed.  Keys: family (+ its parameters), algo,
    /// seeds (`a..b`, comma list, or one number), mode, and optional
    /// r / palette / t overrides.
    plan: PathBuf,
    /// CSV to write; one row per (block, seed), in plan order
    #[arg(long)]
    csv: PathBuf,
    /// Add rows to an existing CSV instead of replacing it
    #[arg(long)]
    append: bool,
}

const CSV_HEADER: &str =
    "instance,algorithm,mode,seed,params,outcome,colors,wall_ms,restarts,resamples";

struct Block {
    first_line: usize,
    entries: Vec<(String, String)>,
}

impl Block {
    fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn require(&self, key: &str) -> Result<&str, Failure> {
        self.get(key).ok_or_else(|| {
            Failure::Usage(format!("plan block at line {}: missing `{key}`", self.first_line))
        })
    }

    fn parse<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, Failure> {
        match self.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse().map(Some).map_err(|_| {
                Failure::Usage(format!(
                    "plan block at line {}: bad value `{raw}` for `{key}`",
                    self.first_line
                ))
            }),
        }
    }

    fn parse_required<T: std::str::FromStr>(&self, key: &str) -> Result<T, Failure> {
        self.require(key)?;
        Ok(self.parse(key)?.expect("present"))
    }

    fn usage(&self, message: impl std::fmt::Display) -> Failure {
        Failure::Usage(format!("plan block at line {}: {message}", self.first_line))
    }
}

fn parse_plan(text: &str) -> Result<Vec<Block>, Failure> {
    let mut blocks: Vec<Block> = Vec::new();
    let mut current: Option<Block> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            if let Some(b) = current.take() {
                blocks.push(b);
            }
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Failure::Usage(format!("plan line {}: expected `key = value`", i + 1))
        })?;
        let block = current.get_or_insert(Block { first_line: i + 1, entries: Vec::new() });
        block.entries.push((key.trim().to_string(), value.trim().to_string()));
    }
    if let Some(b) = current.take() {
        blocks.push(b);
    }
    Ok(blocks)
}

fn parse_seeds(block: &Block) -> Result<Vec<u64>, Failure> {
    let raw = block.require("seeds")?;
    let bad = || block.usage(format!("bad seeds `{raw}`; use `a..b`, a comma list, or one number"));
    if let Some((a, b)) = raw.split_once("..") {
        let a: u64 = a.trim().parse().map_err(|_| bad())?;
        let b: u64 = b.trim().parse().map_err(|_| bad())?;
        if a >= b {
            return Err(bad());
        }
        return Ok((a..b).collect());
    }
    raw.split(',').map(|s| s.trim().parse().map_err(|_| bad())).collect()
}

enum Instance {
    G(Graph),
    H(Hypergraph),
}

impl Instance {
    fn n(&self) -> usize {
        match self {
            Instance::G(g) => g.n(),
            Instance::H(h) => h.n(),
        }
    }

    /// The hypergraph the raw colorers run on: graphs contribute their
    /// open neighborhoods.
    fn hypergraph(&self) -> Result<Hypergraph, Failure> {
        match self {
            Instance::G(g) => Ok(open_neighborhood_hypergraph(g)?),
            Instance::H(h) => Ok(h.clone()),
        }
    }

    fn graph<'a>(&'a self, block: &Block, algo: &str) -> Result<&'a Graph, Failure> {
        match self {
            Instance::G(g) => Ok(g),
            Instance::H(_) => Err(block.usage(format!("algorithm `{algo}` needs a graph family"))),
        }
    }
}

fn build_instance(block: &Block, seed: u64) -> Result<(String, Instance), Failure> {
    let family = block.require("family")?;
    Ok(match family {
        "knhalf" => {
            let n: usize = block.parse_required("n")?;
            (format!("knhalf-n{n}"), Instance::G(subdivided_complete(n)?))
        }
        "biclique" => {
            let d: usize = block.parse_required("d")?;
            let m: usize = block.parse_required("m")?;
            (format!("biclique-d{d}-m{m}"), Instance::G(subdivided_biclique(d, m)?))
        }
        "star" => {
            let k: usize = block.parse_required("k")?;
            (format!("star-k{k}"), Instance::G(star(k)?))
        }
        "interval" => {
            let n: usize = block.parse_required("n")?;
            (format!("interval-n{n}"), Instance::H(discrete_interval_hypergraph(n)?))
        }
        "random" => {
            let n: usize = block.parse_required("n")?;
            let p: f64 = block.parse_required("p")?;
            (format!("random-n{n}-p{p}"), Instance::G(random_graph(n, p, seed)?))
        }
        "random-mindeg" => {
            let n: usize = block.parse_required("n")?;
            let min_deg: usize = block.parse_required("min_deg")?;
            let max_deg: usize = block.parse_required("max_deg")?;
            (
                format!("random-mindeg-n{n}-min{min_deg}-max{max_deg}"),
                Instance::G(random_graph_min_degree(n, min_deg, max_deg, seed)?),
            )
        }
        other => return Err(block.usage(format!("unknown family `{other}`"))),
    })
}

struct Row {
    instance: String,
    algorithm: String,
    mode: &'static str,
    seed: u64,
    params: String,
    outcome: &'static str,
    colors: usize,
    wall_ms: u128,
    restarts: u64,
    resamples: u64,
}

/// One algorithm run: colors on success, or the outcome label that ends
/// the row.  The verification re-check happens in the caller.
struct RunOutput {
    coloring: Option<cf_core::PartialColoring>,
    check_h: Hypergraph,
    lists: ListAssignment,
    restarts: u64,
    resamples: u64,
    outcome_on_error: Option<&'static str>,
}

fn lists_for(
    block: &Block,
    n: usize,
    default_r: usize,
    seed: u64,
    params: &mut String,
) -> Result<ListAssignment, Failure> {
    let r = block.parse::<usize>("r")?.unwrap_or(default_r).max(1);
    let palette = block.parse::<usize>("palette")?.unwrap_or(3 * r).max(r);
    let _ = write!(params, "r={r};palette={palette}");
    Ok(ListAssignment::random(n, r, palette, seed)?)
}

fn indeterminate_error(message: &str) -> bool {
    message.contains("budget") || message.contains("indeterminate")
}

fn run_algo(
    block: &Block,
    algo: &str,
    inst: &Instance,
    mode: Mode,
    seed: u64,
    params: &mut String,
) -> Result<RunOutput, Failure> {
    let fail = |h: Hypergraph, lists: ListAssignment, label: &'static str| RunOutput {
        coloring: None,
        check_h: h,
        lists,
        restarts: 0,
        resamples: 0,
        outcome_on_error: Some(label),
    };
    match algo {
        "exact" => {
            let h = inst.hypergraph()?;
            let default_r = h.stats().max_vertex_degree + 1;
            let lists = lists_for(block, inst.n(), default_r, seed, params)?;
            match list_cf_color(&h, &lists, VerifyMode::Partial, &OracleBudget::default()) {
                ListColorOutcome::Colored(f) => Ok(RunOutput {
                    coloring: Some(f),
                    check_h: h,
                    lists,
                    restarts: 0,
                    resamples: 0,
                    outcome_on_error: None,
                }),
                ListColorOutcome::Unsat => Ok(fail(h, lists, "fail")),
                ListColorOutcome::Indeterminate => Ok(fail(h, lists, "indeterminate")),
            }
        }
        "pach-tardos" => {
            let h = inst.hypergraph()?;
            let t = block.parse::<usize>("t")?.unwrap_or(2);
            let gamma = h.stats().overlap;
            let p = match mode {
                Mode::Paper => PachTardosParams::stock(t, gamma),
                Mode::Desk { .. } => PachTardosParams::with_rounds_factor(t, gamma, 90.0),
            }
            .map_err(|e| block.usage(e))?;
            let lists = lists_for(block, inst.n(), p.rounds, seed, params)?;
            let _ = write!(params, ";t={t}");
            match pach_tardos_color(&h, &lists, &p, seed) {
                Ok(run) => Ok(RunOutput {
                    coloring: Some(run.coloring),
                    check_h: h,
                    lists,
                    restarts: run.attempt as u64,
                    resamples: 0,
                    outcome_on_error: None,
                }),
                Err(e) => {
                    let label =
                        if indeterminate_error(&e.to_string()) { "indeterminate" } else { "fail" };
                    Ok(fail(h, lists, label))
                }
            }
        }
        "near-uniform" => {
            let h = inst.hypergraph()?;
            let stats = h.stats();
            let default_r = 32 * stats.max_edge_size;
            let lists = lists_for(block, inst.n(), default_r, seed, params)?;
            let p = match mode {
                Mode::Paper => NearUniformParams::stock(stats.max_edge_size, stats.overlap),
                Mode::Desk { .. } => NearUniformParams::custom(
                    stats.min_edge_size,
                    stats.max_edge_size,
                    (32 * stats.max_edge_size).min(lists.min_len()),
                ),
            }
            .map_err(|e| block.usage(e))?;
            match near_uniform_color(&h, &lists, &p, seed) {
                Ok(run) => Ok(RunOutput {
                    coloring: Some(run.coloring),
                    check_h: h,
                    lists,
                    restarts: 0,
                    resamples: run.resamples,
                    outcome_on_error: None,
                }),
                Err(_) => Ok(fail(h, lists, "fail")),
            }
        }
        "cfcn-general" => {
            let g = inst.graph(block, algo)?;
            let k = match block.parse::<usize>("k")? {
                Some(k) => k,
                None => cfcn_min_k(g, mode).map_err(|e| block.usage(e))?,
            };
            let lists = lists_for(block, g.n(), cfcn_list_size(g, k), seed, params)?;
            let _ = write!(params, ";k={k}");
            let h = closed_neighborhood_hypergraph(g)?;
            match cfcn_general(g, &lists, k, mode, seed) {
                Ok(run) => Ok(RunOutput {
                    coloring: Some(run.coloring),
                    check_h: h,
                    lists,
                    restarts: run.summary.round_stage_attempt as u64,
                    resamples: 0,
                    outcome_on_error: None,
                }),
                Err(e) => {
                    let label =
                        if indeterminate_error(&e.to_string()) { "indeterminate" } else { "fail" };
                    Ok(fail(h, lists, label))
                }
            }
        }
        "cfon-claw" => {
            let g = inst.graph(block, algo)?;
            let r = cfon_claw_list_size(g, mode).map_err(|e| block.usage(e))?;
            let lists = lists_for(block, g.n(), r, seed, params)?;
            let h = open_neighborhood_hypergraph(g)?;
            match cfon_claw(g, &lists, mode, seed) {
                Ok(run) => Ok(RunOutput {
                    coloring: Some(run.coloring),
                    check_h: h,
                    lists,
                    restarts: run.summary.partition_attempts as u64,
                    resamples: run.summary.uniform_resamples.unwrap_or(0),
                    outcome_on_error: None,
                }),
                Err(e) => {
                    let label =
                        if indeterminate_error(&e.to_string()) { "indeterminate" } else { "fail" };
                    Ok(fail(h, lists, label))
                }
            }
        }
        "min-degree" => {
            let g = inst.graph(block, algo)?;
            let delta = g.max_degree();
            let t = witness_count(delta);
            let sizing = PachTardosParams::with_rounds_factor(t, delta * delta, 90.0)
                .map_err(|e| block.usage(e))?;
            let lists = lists_for(block, g.n(), sizing.rounds, seed, params)?;
            let h = open_neighborhood_hypergraph(g)?;
            match cfon_min_degree(g, &lists, mode, seed) {
                Ok(run) => Ok(RunOutput {
                    coloring: Some(run.coloring),
                    check_h: h,
                    lists,
                    restarts: run.attempt as u64,
                    resamples: 0,
                    outcome_on_error: None,
                }),
                Err(_) => Ok(fail(h, lists, "fail")),
            }
        }
        "dense" => {
            let g = inst.graph(block, algo)?;
            let default_r = 64 * (g.min_degree() / 4).max(4) + 64;
            let lists = lists_for(block, g.n(), default_r, seed, params)?;
            let h = open_neighborhood_hypergraph(g)?;
            match cfon_dense_min_degree(g, &lists, 1.0, 0.5, mode, seed) {
                Ok(run) => Ok(RunOutput {
                    coloring: Some(run.coloring),
                    check_h: h,
                    lists,
                    restarts: run.core_attempts as u64,
                    resamples: run.resamples,
                    outcome_on_error: None,
                }),
                Err(_) => Ok(fail(h, lists, "fail")),
            }
        }
        other => Err(block.usage(format!("unknown algo `{other}`"))),
    }
}

pub fn run(args: BenchArgs) -> CmdResult {
    let text = std::fs::read_to_string(&args.plan)
        .map_err(|e| Failure::Usage(format!("{}: {e}", args.plan.display())))?;
    let blocks = parse_plan(&text)?;
    if blocks.is_empty() {
        return Err(Failure::Usage("plan file has no blocks".into()));
    }

    let mut rows: Vec<Row> = Vec::new();
    for block in &blocks {
        let algo = block.require("algo")?.to_string();
        let mode = match block.get("mode").unwrap_or("desk") {
            "desk" => Mode::desk(),
            "paper" => Mode::Paper,
            other => return Err(block.usage(format!("unknown mode `{other}`"))),
        };
        let mode_label = if mode.is_paper() { "paper" } else { "desk" };
        for seed in parse_seeds(block)? {
            let (instance, inst) = build_instance(block, seed)?;
            let mut params = String::new();
            let start = Instant::now();
            let output = run_algo(block, &algo, &inst, mode, seed, &mut params)?;
            let wall_ms = start.elapsed().as_millis();
            let (outcome, colors) = match (&output.coloring, output.outcome_on_error) {
                (Some(f), _) => {
                    // The recorded verdict comes from a fresh verifier
                    // pass, not from the colorer's internal gate.
                    let ok =
                        verify(&output.check_h, f, VerifyMode::Partial, Some(&output.lists)).ok;
                    (if ok { "ok" } else { "fail" }, f.color_count())
                }
                (None, Some(label)) => (label, 0),
                (None, None) => unreachable!("error rows carry a label"),
            };
            rows.push(Row {
                instance,
                algorithm: algo.clone(),
                mode: mode_label,
                seed,
                params: std::mem::take(&mut params),
                outcome,
                colors,
                wall_ms,
                restarts: output.restarts,
                resamples: output.resamples,
            });
        }
    }

    let mut csv = String::new();
    let needs_header = !args.append
        || std::fs::metadata(&args.csv).map(|m| m.len() == 0).unwrap_or(true);
    if needs_header {
        let _ = writeln!(csv, "{CSV_HEADER}");
    }
    for r in &rows {
        let _ = writeln!(
            csv,
            "{},{},{},{},{},{},{},{},{},{}",
            r.instance,
            r.algorithm,
            r.mode,
            r.seed,
            r.params,
            r.outcome,
            r.colors,
            r.wall_ms,
            r.restarts,
            r.resamples
        );
    }
    if args.append {
        use std::io::Write as _;
        let mut f = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&args.csv)
            .map_err(|e| Failure::Usage(format!("{}: {e}", args.csv.display())))?;
        f.write_all(csv.as_bytes())
            .map_err(|e| Failure::Usage(format!("{}: {e}", args.csv.display())))?;
    } else {
        std::fs::write(&args.csv, &csv)
            .map_err(|e| Failure::Usage(format!("{}: {e}", args.csv.display())))?;
    }

    let bad = rows.iter().filter(|r| r.outcome != "ok").count();
    println!("{} rows, {} ok", rows.len(), rows.len() - bad);
    if bad > 0 {
        return Err(Failure::Check(format!("{bad} rows did not verify")));
    }
    Ok(())
}
