//! Adversarial choosability probes.
//!
//! `choice_probe` decides whether every assignment of k-color lists admits
//! a conflict-free coloring; `graph_choice_probe` asks the same for proper
//! coloring. A counterexample involves at most k·n distinct colors, and
//! color names matter only relative to the lists already fixed, so it is
//! enough to enumerate assignments where each successive list introduces
//! its new colors as one contiguous block just above those seen so far.
//!
//! Enumeration runs over list prefixes along a fixed vertex order, deepening
//! iteratively, and is cut by two sound checks:
//!
//! * relaxation: suffix vertices get every seen color plus one private fresh
//!   color. A list can always be shrunk onto that set without creating
//!   colorings (fresh colors in disjoint lists never collide), so if even
//!   the relaxed instance is uncolorable, every completion of the prefix is
//!   a counterexample.
//! * certificate: a coloring of the prefix alone that already witnesses
//!   every edge, and pins few enough colors near each suffix vertex that any
//!   k-list leaves it a free choice, proves the whole subtree satisfiable.

use cf_core::{verify, Color, Graph, Hypergraph, ListAssignment, VerifyMode};

use crate::budget::{Gas, OracleBudget};
use crate::proper::{solve_proper, ProperCand};
use crate::solver::{solve, Candidates, SearchOutcome};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChoiceVerdict {
    /// Every k-assignment is colorable; returned only after exhaustive
    /// enumeration over the full canonical palette.
    Choosable,
    /// A concrete k-assignment with no valid coloring.
    Counterexample(ListAssignment),
    /// Budget or palette cap hit first. Never coerce this to a boolean.
    Indeterminate,
}

impl ChoiceVerdict {
    pub fn is_choosable(&self) -> bool {
        matches!(self, ChoiceVerdict::Choosable)
    }
}

/// Checks a probe domain offers about a list prefix. `None` means the
/// budget ran out mid-check.
trait ProbeChecks {
    /// Is the prefix plus wildcard suffix lists satisfiable? With an empty
    /// suffix this is exact satisfiability of the assignment.
    fn relaxed_sat(&self, prefix: &[Vec<Color>], used: usize, gas: &mut Gas) -> Option<bool>;
    /// Sound all-satisfiable certificate for every completion of the prefix.
    fn certified(&self, prefix: &[Vec<Color>], gas: &mut Gas) -> Option<bool>;
}

enum Step {
    Closed,
    Open,
    Refuted,
    GasOut,
}

struct Driver<'a, P: ProbeChecks> {
    checks: &'a P,
    n: usize,
    k: usize,
    palette_cap: usize,
    refuting_prefix: Option<Vec<Vec<Color>>>,
}

impl<'a, P: ProbeChecks> Driver<'a, P> {
    fn dfs(
        &mut self,
        prefix: &mut Vec<Vec<Color>>,
        used: usize,
        limit: usize,
        gas: &mut Gas,
    ) -> Step {
        if !gas.tick() {
            return Step::GasOut;
        }
        let d = prefix.len();
        if d == self.n {
            // No suffix left: the relaxation is the exact instance.
            return match self.checks.relaxed_sat(prefix, used, gas) {
                None => Step::GasOut,
                Some(true) => Step::Closed,
                Some(false) => {
                    self.refuting_prefix = Some(prefix.clone());
                    Step::Refuted
                }
            };
        }
        match self.checks.certified(prefix, gas) {
            None => return Step::GasOut,
            Some(true) => return Step::Closed,
            Some(false) => {}
        }
        if d > 0 {
            match self.checks.relaxed_sat(prefix, used, gas) {
                None => return Step::GasOut,
                Some(true) => {}
                Some(false) => {
                    self.refuting_prefix = Some(prefix.clone());
                    return Step::Refuted;
                }
            }
        }
        if d == limit {
            return Step::Open;
        }
        let mut all_closed = true;
        for opt in canonical_options(used, self.k, self.palette_cap) {
            let fresh = opt.iter().filter(|&&c| c as usize >= used).count();
            prefix.push(opt);
            let step = self.dfs(prefix, used + fresh, limit, gas);
            prefix.pop();
            match step {
                Step::Closed => {}
                Step::Open => all_closed = false,
                other => return other,
            }
        }
        if all_closed {
            Step::Closed
        } else {
            Step::Open
        }
    }

    fn run(&mut self, gas: &mut Gas) -> Step {
        for limit in 0..=self.n {
            let mut prefix = Vec::new();
            match self.dfs(&mut prefix, 0, limit, gas) {
                Step::Open => continue,
                done => return done,
            }
        }
        // The deepest iteration decides every leaf exactly.
        Step::GasOut
    }
}

/// All sorted `size`-subsets of `0..pool`, lexicographic.
fn combinations(pool: usize, size: usize) -> Vec<Vec<Color>> {
    let mut out = Vec::new();
    if size > pool {
        return out;
    }
    let mut cur: Vec<usize> = (0..size).collect();
    loop {
        out.push(cur.iter().map(|&x| x as Color).collect());
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + pool - size {
                break;
            }
        }
        cur[i] += 1;
        for j in i + 1..size {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Canonical k-lists available to the next vertex: any mix of already-seen
/// colors with a contiguous block of fresh ones, reusing colors first.
fn canonical_options(used: usize, k: usize, palette_cap: usize) -> Vec<Vec<Color>> {
    let max_new = k.min(palette_cap.saturating_sub(used));
    let mut out = Vec::new();
    for new in 0..=max_new {
        for mut combo in combinations(used, k - new) {
            combo.extend((used..used + new).map(|c| c as Color));
            out.push(combo);
        }
    }
    out
}

/// Exact minimum hitting set; instances here are tiny.
fn min_hitting_set(h: &Hypergraph) -> Vec<usize> {
    fn go(
        h: &Hypergraph,
        chosen: &mut Vec<usize>,
        best: &mut Option<Vec<usize>>,
    ) {
        if let Some(b) = best {
            if chosen.len() >= b.len() {
                return;
            }
        }
        let unhit = h
            .edges()
            .iter()
            .find(|e| !e.iter().any(|v| chosen.contains(v)));
        let Some(edge) = unhit else {
            *best = Some(chosen.clone());
            return;
        };
        for &v in edge {
            chosen.push(v);
            go(h, chosen, best);
            chosen.pop();
        }
    }
    let mut best = None;
    go(h, &mut Vec::new(), &mut best);
    let mut set = best.unwrap_or_default();
    set.sort_unstable();
    set
}

/// Vertex order for the prefix enumeration. Full mode leads with high
/// degrees, where refutations concentrate. Partial mode leads with a
/// minimum hitting set: once the prefix hits every edge, a certificate can
/// cover the rest, so the tree closes at that depth.
fn probe_order(h: &Hypergraph, mode: VerifyMode) -> Vec<usize> {
    let deg = h.vertex_degrees();
    let by_degree = |vs: &mut Vec<usize>| {
        vs.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
    };
    let mut head = match mode {
        VerifyMode::Full => Vec::new(),
        VerifyMode::Partial => min_hitting_set(h),
    };
    by_degree(&mut head);
    let mut tail: Vec<usize> = (0..h.n()).filter(|v| !head.contains(v)).collect();
    by_degree(&mut tail);
    head.extend(tail);
    head
}

struct HgProbe<'a> {
    h: &'a Hypergraph,
    order: Vec<usize>,
    /// Position of each vertex in `order`.
    pos: Vec<usize>,
    /// Edge indices containing each vertex.
    incidence: Vec<Vec<usize>>,
    k: usize,
    mode: VerifyMode,
}

impl HgProbe<'_> {
    fn candidates_with_suffix(
        &self,
        prefix: &[Vec<Color>],
        suffix: impl Fn(usize, usize) -> Vec<Color>,
    ) -> Vec<Vec<Color>> {
        let mut cand = vec![Vec::new(); self.h.n()];
        for (i, list) in prefix.iter().enumerate() {
            cand[self.order[i]] = list.clone();
        }
        for p in prefix.len()..self.h.n() {
            cand[self.order[p]] = suffix(p, prefix.len());
        }
        cand
    }
}

impl ProbeChecks for HgProbe<'_> {
    fn relaxed_sat(&self, prefix: &[Vec<Color>], used: usize, gas: &mut Gas) -> Option<bool> {
        let cand = self.candidates_with_suffix(prefix, |p, d| {
            let mut wild: Vec<Color> = (0..used as Color).collect();
            wild.push((used + p - d) as Color);
            wild
        });
        match solve(self.h, Candidates::PerVertex(cand), self.mode, gas) {
            SearchOutcome::Sat(_) => Some(true),
            SearchOutcome::Unsat => Some(false),
            SearchOutcome::Exhausted => None,
        }
    }

    fn certified(&self, prefix: &[Vec<Color>], gas: &mut Gas) -> Option<bool> {
        let d = prefix.len();
        match self.mode {
            VerifyMode::Partial => {
                // Can a coloring of the prefix alone witness every edge?
                // Suffix vertices stay uncolored: they neither witness nor
                // block, so the certificate survives any suffix lists.
                let cand = self.candidates_with_suffix(prefix, |_, _| Vec::new());
                match solve(self.h, Candidates::PerVertex(cand), VerifyMode::Partial, gas) {
                    SearchOutcome::Sat(_) => Some(true),
                    SearchOutcome::Unsat => Some(false),
                    SearchOutcome::Exhausted => None,
                }
            }
            VerifyMode::Full => {
                // Color the prefix so that every edge is witnessed among its
                // prefix members. A suffix vertex later picks any list color
                // outside the witness colors of its edges, which works as
                // soon as those pin fewer than k colors.
                let mut restricted = Vec::with_capacity(self.h.edge_count());
                for e in self.h.edges() {
                    let r: Vec<usize> =
                        e.iter().copied().filter(|&v| self.pos[v] < d).collect();
                    if r.is_empty() {
                        return Some(false);
                    }
                    restricted.push(r);
                }
                let hr = Hypergraph::new(self.h.n(), restricted)
                    .expect("restricted edges are nonempty");
                let cand = self.candidates_with_suffix(prefix, |_, _| vec![0]);
                let phi = match solve(&hr, Candidates::PerVertex(cand), VerifyMode::Full, gas) {
                    SearchOutcome::Sat(c) => c,
                    SearchOutcome::Unsat => return Some(false),
                    SearchOutcome::Exhausted => return None,
                };
                let report = verify(&hr, &phi, VerifyMode::Full, None);
                debug_assert!(report.ok);
                for p in d..self.h.n() {
                    let v = self.order[p];
                    let mut pinned: Vec<Color> = self.incidence[v]
                        .iter()
                        .map(|&i| report.witness(i).expect("all edges witnessed").1)
                        .collect();
                    pinned.sort_unstable();
                    pinned.dedup();
                    if pinned.len() >= self.k {
                        return Some(false);
                    }
                }
                Some(true)
            }
        }
    }
}

/// Does every assignment of k-color lists admit a conflict-free coloring
/// of `h` in the given mode? Exhaustive for instances within budget; the
/// palette cap must allow k·n colors for a `Choosable` verdict.
pub fn choice_probe(
    h: &Hypergraph,
    k: usize,
    mode: VerifyMode,
    budget: &OracleBudget,
) -> ChoiceVerdict {
    assert!(k >= 1, "lists must be nonempty");
    let n = h.n();
    if n == 0 {
        return ChoiceVerdict::Choosable;
    }
    let palette_cap = (k * n).min(budget.max_palette);
    let exhaustive = palette_cap >= k * n;
    let order = probe_order(h, mode);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut incidence = vec![Vec::new(); n];
    for (i, e) in h.edges().iter().enumerate() {
        for &v in e {
            incidence[v].push(i);
        }
    }
    let checks = HgProbe { h, order: order.clone(), pos, incidence, k, mode };
    let mut driver =
        Driver { checks: &checks, n, k, palette_cap, refuting_prefix: None };
    let mut gas = budget.gas();
    match driver.run(&mut gas) {
        Step::Closed => {
            if exhaustive {
                ChoiceVerdict::Choosable
            } else {
                ChoiceVerdict::Indeterminate
            }
        }
        Step::Refuted => {
            let lists = materialize(&order, &driver.refuting_prefix.unwrap(), k, n);
            debug_assert!({
                let mut check_gas = budget.gas();
                matches!(
                    solve(
                        h,
                        Candidates::PerVertex(lists.lists().to_vec()),
                        mode,
                        &mut check_gas,
                    ),
                    SearchOutcome::Unsat
                )
            });
            ChoiceVerdict::Counterexample(lists)
        }
        Step::Open | Step::GasOut => ChoiceVerdict::Indeterminate,
    }
}

struct GraphProbe<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    pos: Vec<usize>,
    k: usize,
}

impl ProbeChecks for GraphProbe<'_> {
    fn relaxed_sat(&self, prefix: &[Vec<Color>], used: usize, gas: &mut Gas) -> Option<bool> {
        let n = self.g.n();
        let mut cand = vec![Vec::new(); n];
        for (i, list) in prefix.iter().enumerate() {
            cand[self.order[i]] = list.clone();
        }
        for p in prefix.len()..n {
            let mut wild: Vec<Color> = (0..used as Color).collect();
            wild.push((used + p - prefix.len()) as Color);
            cand[self.order[p]] = wild;
        }
        match solve_proper(self.g, ProperCand::PerVertex(cand), gas) {
            SearchOutcome::Sat(_) => Some(true),
            SearchOutcome::Unsat => Some(false),
            SearchOutcome::Exhausted => None,
        }
    }

    fn certified(&self, prefix: &[Vec<Color>], gas: &mut Gas) -> Option<bool> {
        let n = self.g.n();
        let d = prefix.len();
        // Properly color the prefix from its lists; suffix vertices are
        // pinned to private placeholder colors no list contains.
        let base = (self.k * n) as Color;
        let mut cand = vec![Vec::new(); n];
        for (i, list) in prefix.iter().enumerate() {
            cand[self.order[i]] = list.clone();
        }
        for p in d..n {
            cand[self.order[p]] = vec![base + p as Color];
        }
        let phi = match solve_proper(self.g, ProperCand::PerVertex(cand), gas) {
            SearchOutcome::Sat(c) => c,
            SearchOutcome::Unsat => return Some(false),
            SearchOutcome::Exhausted => return None,
        };
        // Peel suffix vertices that keep fewer than k constraints: prefix
        // neighbors pin their colors, unpeeled suffix neighbors pin at most
        // one each. Coloring in reverse peel order then always has a free
        // list color, whatever the suffix lists are.
        let mut remaining: Vec<bool> = (0..n).map(|v| self.pos[v] >= d).collect();
        loop {
            let mut peeled = false;
            for p in d..n {
                let v = self.order[p];
                if !remaining[v] {
                    continue;
                }
                let mut pinned: Vec<Color> = self
                    .g
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| self.pos[u] < d)
                    .map(|&u| phi.get(u).expect("prefix is fully colored"))
                    .collect();
                pinned.sort_unstable();
                pinned.dedup();
                let loose = self.g.neighbors(v).iter().filter(|&&u| remaining[u]).count();
                if pinned.len() + loose < self.k {
                    remaining[v] = false;
                    peeled = true;
                }
            }
            if !peeled {
                break;
            }
        }
        Some(remaining.iter().all(|&r| !r))
    }
}

/// Graph counterpart of [`choice_probe`]: proper list coloring.
pub fn graph_choice_probe(g: &Graph, k: usize, budget: &OracleBudget) -> ChoiceVerdict {
    assert!(k >= 1, "lists must be nonempty");
    let n = g.n();
    if n == 0 {
        return ChoiceVerdict::Choosable;
    }
    let palette_cap = (k * n).min(budget.max_palette);
    let exhaustive = palette_cap >= k * n;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let checks = GraphProbe { g, order: order.clone(), pos, k };
    let mut driver =
        Driver { checks: &checks, n, k, palette_cap, refuting_prefix: None };
    let mut gas = budget.gas();
    match driver.run(&mut gas) {
        Step::Closed => {
            if exhaustive {
                ChoiceVerdict::Choosable
            } else {
                ChoiceVerdict::Indeterminate
            }
        }
        Step::Refuted => {
            let lists = materialize(&order, &driver.refuting_prefix.unwrap(), k, n);
            debug_assert!({
                let mut check_gas = budget.gas();
                matches!(
                    solve_proper(
                        g,
                        ProperCand::PerVertex(lists.lists().to_vec()),
                        &mut check_gas,
                    ),
                    SearchOutcome::Unsat
                )
            });
            ChoiceVerdict::Counterexample(lists)
        }
        Step::Open | Step::GasOut => ChoiceVerdict::Indeterminate,
    }
}

/// Turns a refuting prefix into a full k-assignment. Suffix vertices get
/// `{0..k}`: the prefix already uses at least k colors, so this stays
/// within the wildcard space the refutation covered.
fn materialize(order: &[usize], prefix: &[Vec<Color>], k: usize, n: usize) -> ListAssignment {
    let filler: Vec<Color> = (0..k as Color).collect();
    let mut lists = vec![filler; n];
    for (i, list) in prefix.iter().enumerate() {
        lists[order[i]] = list.clone();
    }
    ListAssignment::new(lists).expect("probe lists are nonempty and within range")
}
