use std::time::{Duration, Instant};

/// Work limits for the exact searches. Every search that gives up reports
/// an indeterminate outcome rather than a wrong answer.
#[derive(Debug, Clone, Copy)]
pub struct OracleBudget {
    /// Backtracking nodes across the whole query, including sub-searches.
    pub max_nodes: u64,
    /// Cap on the canonical palette used by choosability probes. Probes
    /// that would need more colors than this stop claiming exhaustiveness.
    pub max_palette: usize,
    pub time_limit: Duration,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_nodes: 20_000_000,
            max_palette: usize::MAX,
            time_limit: Duration::from_secs(120),
        }
    }
}

impl OracleBudget {
    pub fn with_nodes(max_nodes: u64) -> Self {
        OracleBudget { max_nodes, ..Default::default() }
    }

    pub(crate) fn gas(&self) -> Gas {
        Gas { nodes_left: self.max_nodes, deadline: Instant::now() + self.time_limit }
    }
}

/// Mutable remainder of a budget, shared by the sub-searches of one query.
#[derive(Debug)]
pub(crate) struct Gas {
    nodes_left: u64,
    deadline: Instant,
}

impl Gas {
    /// Burns one node; false once the budget is gone.
    pub(crate) fn tick(&mut self) -> bool {
        if self.nodes_left == 0 {
            return false;
        }
        self.nodes_left -= 1;
        // Consult the clock sparingly.
        if self.nodes_left % 4096 == 0 && Instant::now() >= self.deadline {
            self.nodes_left = 0;
            return false;
        }
        true
    }

}
