use std::path::PathBuf;
use std::time::Duration;

use cf_core::format::{read_graph, read_hypergraph, read_lists, write_coloring, write_lists};
use cf_core::{
    closed_neighborhood_hypergraph, open_neighborhood_hypergraph, verify, Hypergraph, VerifyMode,
};
use cf_oracle::{
    chi_cf, choice_probe, list_cf_color, ChiBound, ChoiceVerdict, ListColorOutcome, OracleBudget,
};
use clap::{Args, Subcommand, ValueEnum};

use crate::io::{read_text, write_text};
use crate::{CmdResult, Failure};

#[derive(Args)]
pub struct OracleArgs {
    #[command(subcommand)]
    op: OracleOp,
}

#[derive(Subcommand)]
enum OracleOp {
    /// Exact chromatic number of the chosen variant (prints the number;
    /// `>= k` and exit 1 when the budget ran out first)
    Chi {
        #[arg(long, value_enum)]
        variant: Variant,
        /// Instance file; stdin when omitted
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Find a conflict-free coloring inside the given lists, or prove
    /// there is none
    ListColor {
        #[arg(long)]
        lists: PathBuf,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Variant::CfStar)]
        variant: Variant,
        /// Write the coloring here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Decide whether every k-assignment admits a coloring; prints
    /// CHOOSABLE, or COUNTEREXAMPLE with the offending lists
    Choice {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

/// Which hypergraph to solve on, and whether vertices may stay uncolored.
#[derive(ValueEnum, Clone, Copy)]
pub enum Variant {
    /// The input hypergraph, every vertex colored
    Cf,
    /// The input hypergraph, gaps allowed
    CfStar,
    /// Open neighborhoods of the input graph
    On,
    OnStar,
    /// Closed neighborhoods of the input graph
    Cn,
    CnStar,
}

impl Variant {
    fn mode(self) -> VerifyMode {
        match self {
            Variant::Cf | Variant::On | Variant::Cn => VerifyMode::Full,
            Variant::CfStar | Variant::OnStar | Variant::CnStar => VerifyMode::Partial,
        }
    }

    /// Reads a hypergraph directly, or derives one from a graph.
    fn load(self, input: Option<&PathBuf>) -> Result<Hypergraph, Failure> {
        let text = read_text(input)?;
        Ok(match self {
            Variant::Cf | Variant::CfStar => read_hypergraph(&text)?,
            Variant::On | Variant::OnStar => open_neighborhood_hypergraph(&read_graph(&text)?)?,
            Variant::Cn | Variant::CnStar => closed_neighborhood_hypergraph(&read_graph(&text)?)?,
        })
    }
}

#[derive(ValueEnum, Clone, Copy)]
pub enum CoverArg {
    Full,
    Partial,
}

impl From<CoverArg> for VerifyMode {
    fn from(c: CoverArg) -> VerifyMode {
        match c {
            CoverArg::Full => VerifyMode::Full,
            CoverArg::Partial => VerifyMode::Partial,
        }
    }
}

#[derive(Args)]
pub struct BudgetArgs {
    /// Backtracking node cap; env CFC_BUDGET_NODES when omitted
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Wall-clock cap in seconds; env CFC_BUDGET_SECONDS when omitted
    #[arg(long)]
    budget_seconds: Option<u64>,
    /// Largest canonical palette a choosability probe may exhaust
    #[arg(long)]
    palette_cap: Option<usize>,
}

fn env_number<T: std::str::FromStr>(key: &str) -> Option<T> {
    std::env::var(key).ok().and_then(|s| s.parse().ok())
}

impl BudgetArgs {
    pub fn build(&self) -> OracleBudget {
        let mut b = OracleBudget::default();
        if let Some(n) = self.budget_nodes.or_else(|| env_number("CFC_BUDGET_NODES")) {
            b.max_nodes = n;
        }
        if let Some(s) = self.budget_seconds.or_else(|| env_number("CFC_BUDGET_SECONDS")) {
            b.time_limit = Duration::from_secs(s);
        }
        if let Some(p) = self.palette_cap {
            b.max_palette = p;
        }
        b
    }
}

pub fn run(args: OracleArgs) -> CmdResult {
    match args.op {
        OracleOp::Chi { variant, input, budget } => {
            let h = variant.load(input.as_ref())?;
            match chi_cf(&h, variant.mode(), &budget.build()) {
                ChiBound::Exact(k) => {
                    println!("{k}");
                    Ok(())
                }
                ChiBound::AtLeast(k) => {
                    println!(">= {k}");
                    Err(Failure::Check("chi search hit its budget before closing".into()))
                }
            }
        }
        OracleOp::ListColor { lists, input, variant, out, budget } => {
            let la = read_lists(&read_text(Some(&lists))?)?;
            let h = variant.load(input.as_ref())?;
            match list_cf_color(&h, &la, variant.mode(), &budget.build()) {
                ListColorOutcome::Colored(f) => {
                    assert!(verify(&h, &f, variant.mode(), Some(&la)).ok);
                    write_text(out.as_deref(), &write_coloring(&f))
                }
                ListColorOutcome::Unsat => {
                    println!("UNSAT");
                    Ok(())
                }
                ListColorOutcome::Indeterminate => {
                    println!("INDETERMINATE");
                    Err(Failure::Check("list coloring search hit its budget".into()))
                }
            }
        }
        OracleOp::Choice { k, variant, input, budget } => {
            let h = variant.load(input.as_ref())?;
            match choice_probe(&h, k, variant.mode(), &budget.build()) {
                ChoiceVerdict::Choosable => {
                    println!("CHOOSABLE");
                    Ok(())
                }
                ChoiceVerdict::Counterexample(bad) => {
                    println!("COUNTEREXAMPLE");
                    print!("{}", write_lists(&bad));
                    Ok(())
                }
                ChoiceVerdict::Indeterminate => {
                    println!("INDETERMINATE");
                    Err(Failure::Check("choosability probe hit its budget".into()))
                }
            }
        }
    }
}
