//! Exact mutual-visibility colorability by backtracking.
//!
//! Each node branches on the unassigned vertex with the fewest admissible
//! colors, ties broken by a fixed order (descending degree, then id). Giving
//! vertex `v` color `c` is admissible when
//!
//! * every earlier vertex `u` of color `c` still has a `u`–`v` geodesic whose
//!   internal vertices are unassigned or colored differently, and
//! * every earlier same-colored pair whose geodesics pass through `v` still
//!   has such a geodesic.
//!
//! Both checks are sound because assigned colors never change along a branch,
//! so an inadmissible color stays inadmissible and a vertex left without
//! colors ends the branch. Together they make a complete assignment a valid
//! coloring. Color ids are introduced in increasing order and the first
//! vertex always gets 0.

pub mod nae;

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{DistanceOracle, Graph, UNREACHABLE};
use crate::visibility::{validate_mv_coloring, Coloring, ReportMode};

/// Node and wall-clock limits; whichever trips first ends the search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Self { max_nodes: Some(max_nodes), max_time: None }
    }

    pub fn time(max_time: Duration) -> Self {
        Self { max_nodes: None, max_time: Some(max_time) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStatus {
    Feasible(Coloring),
    Infeasible,
    BudgetExhausted,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl SearchOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self.status, SearchStatus::Feasible(_))
    }
}

struct Meter {
    budget: Budget,
    start: Instant,
    nodes: u64,
    tripped: bool,
}

impl Meter {
    fn new(budget: Budget) -> Self {
        Self { budget, start: Instant::now(), nodes: 0, tripped: false }
    }

    /// Counts one node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        if self.tripped {
            return false;
        }
        if self.budget.max_nodes.is_some_and(|cap| self.nodes >= cap) {
            self.tripped = true;
            return false;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(512) && self.budget.max_time.is_some_and(|t| self.start.elapsed() >= t) {
            self.tripped = true;
            return false;
        }
        true
    }
}

/// Descending degree, ties broken by smaller id.
pub fn vertex_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

const UNSET: usize = usize::MAX;

/// Partial coloring plus per-color member lists, shared by the exact search
/// and the greedy bound.
struct Partial<'a> {
    g: &'a Graph,
    o: &'a DistanceOracle,
    color: Vec<usize>,
    members: Vec<Vec<usize>>,
}

impl<'a> Partial<'a> {
    fn new(g: &'a Graph, o: &'a DistanceOracle) -> Self {
        Self { g, o, color: vec![UNSET; g.n()], members: Vec::new() }
    }

    fn sees(&self, x: usize, y: usize, c: usize) -> bool {
        match self.o.get(x, y) {
            UNREACHABLE => false,
            d => self.g.geodesic_exists_avoiding_unchecked(self.o, x, y, d, &|w: usize| self.color[w] == c),
        }
    }

    /// Assigns `c` to `v` and reports whether the partial coloring is still
    /// extendable as far as the pair checks can tell. The assignment stays in
    /// place either way; callers undo it with [`Partial::unassign`].
    fn assign(&mut self, v: usize, c: usize) -> bool {
        if self.members.len() <= c {
            self.members.resize_with(c + 1, Vec::new);
        }
        self.color[v] = c;
        let ok = self.members[c].iter().all(|&u| self.sees(u, v, c)) && {
            let class = &self.members[c];
            class.iter().enumerate().all(|(i, &x)| {
                class[i + 1..].iter().all(|&y| !(self.o.on_some_geodesic_unchecked(x, v, y)) || self.sees(x, y, c))
            })
        };
        self.members[c].push(v);
        ok
    }

    /// Whether `v` could take `c` right now; leaves `v` unassigned.
    fn admits(&mut self, v: usize, c: usize) -> bool {
        let ok = self.assign(v, c);
        self.unassign(v);
        ok
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        let popped = self.members[c].pop();
        debug_assert_eq!(popped, Some(v));
        self.color[v] = UNSET;
    }

    fn to_coloring(&self) -> Coloring {
        Coloring::from_dense(self.color.clone()).expect("search colors are dense")
    }
}

/// Exact decision procedure for "is there an MV coloring with at most `k`
/// colors". Reuses a precomputed distance oracle.
pub struct Solver<'a> {
    g: &'a Graph,
    o: &'a DistanceOracle,
    order: Vec<usize>,
}

impl<'a> Solver<'a> {
    pub fn new(g: &'a Graph, o: &'a DistanceOracle) -> Self {
        Self { g, o, order: vertex_order(g) }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn decide(&self, k: usize, budget: Budget) -> SearchOutcome {
        let mut meter = Meter::new(budget);
        let status = self.decide_metered(k, &mut meter);
        SearchOutcome { status, nodes_explored: meter.nodes, elapsed: meter.start.elapsed() }
    }

    fn decide_metered(&self, k: usize, meter: &mut Meter) -> SearchStatus {
        if self.g.n() == 0 {
            return SearchStatus::Feasible(Coloring::distinct(0));
        }
        if k == 0 {
            return SearchStatus::Infeasible;
        }
        let mut partial = Partial::new(self.g, self.o);
        match self.extend(&mut partial, self.g.n(), 0, k, meter) {
            Some(c) => SearchStatus::Feasible(c),
            None if meter.tripped => SearchStatus::BudgetExhausted,
            None => SearchStatus::Infeasible,
        }
    }

    /// Picks the unassigned vertex with the fewest admissible colors (ties by
    /// solver order) and returns it with those colors. A fresh color counts
    /// when one is left. `None` means some vertex has no admissible color.
    fn select(&self, partial: &mut Partial<'_>, used: usize, k: usize) -> Option<(usize, Vec<usize>)> {
        let mut best: Option<(usize, Vec<usize>)> = None;
        for &x in &self.order {
            if partial.color[x] != UNSET {
                continue;
            }
            let mut colors: Vec<usize> = (0..used).filter(|&c| partial.admits(x, c)).collect();
            if used < k {
                colors.push(used);
            }
            if colors.is_empty() {
                return None;
            }
            if best.as_ref().is_none_or(|(_, b)| colors.len() < b.len()) {
                best = Some((x, colors));
            }
        }
        best
    }

    fn extend(
        &self,
        partial: &mut Partial<'_>,
        remaining: usize,
        used: usize,
        k: usize,
        meter: &mut Meter,
    ) -> Option<Coloring> {
        if remaining == 0 {
            let c = partial.to_coloring();
            let report = validate_mv_coloring(self.g, self.o, &c, ReportMode::FailFast).expect("coloring is total");
            debug_assert!(report.valid, "pair pruning admitted an invalid coloring");
            return report.valid.then_some(c);
        }
        let (v, colors) = self.select(partial, used, k)?;
        for c in colors {
            if !meter.tick() {
                return None;
            }
            let ok = partial.assign(v, c);
            debug_assert!(ok, "selected colors are admissible");
            let found = self.extend(partial, remaining - 1, used.max(c + 1), k, meter);
            partial.unassign(v);
            if found.is_some() || meter.tripped {
                return found;
            }
        }
        None
    }
}

/// Backtracking decision for MV colorability with at most `k` colors.
pub fn mv_k_colorable(g: &Graph, k: usize, budget: Budget) -> SearchOutcome {
    let o = DistanceOracle::new(g);
    Solver::new(g, &o).decide(k, budget)
}

/// First-fit in solver order; each vertex takes the smallest color that
/// passes the pair checks. Always returns a valid MV coloring.
pub fn greedy_upper_bound(g: &Graph, o: &DistanceOracle) -> (usize, Coloring) {
    let mut partial = Partial::new(g, o);
    let mut used = 0;
    for v in vertex_order(g) {
        let mut c = 0;
        loop {
            if partial.assign(v, c) {
                break;
            }
            partial.unassign(v);
            c += 1;
        }
        used = used.max(c + 1);
    }
    let coloring = partial.to_coloring();
    (used, coloring)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepVerdict {
    Feasible,
    Infeasible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepStep {
    pub k: usize,
    pub verdict: StepVerdict,
    pub nodes: u64,
}

#[derive(Debug, Clone)]
pub struct ExactResult {
    pub chi: usize,
    pub coloring: Coloring,
    /// One entry per `k` tried, in increasing order.
    pub sweep: Vec<SweepStep>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Smallest `k` admitting an MV coloring, searched upward from 1. The budget
/// covers the whole sweep. The greedy bound caps the sweep, so budget
/// exhaustion reports `[lo, hi]` with `hi` from the greedy coloring.
pub fn chi_mu_exact(g: &Graph, o: &DistanceOracle, budget: Budget) -> Result<ExactResult> {
    let (hi, _) = greedy_upper_bound(g, o);
    let solver = Solver::new(g, o);
    let mut meter = Meter::new(budget);
    let mut sweep = Vec::new();
    if g.n() == 0 {
        return Ok(ExactResult {
            chi: 0,
            coloring: Coloring::distinct(0),
            sweep,
            nodes_explored: 0,
            elapsed: meter.start.elapsed(),
        });
    }
    for k in 1..=hi {
        let before = meter.nodes;
        match solver.decide_metered(k, &mut meter) {
            SearchStatus::Feasible(coloring) => {
                sweep.push(SweepStep { k, verdict: StepVerdict::Feasible, nodes: meter.nodes - before });
                return Ok(ExactResult {
                    chi: k,
                    coloring,
                    sweep,
                    nodes_explored: meter.nodes,
                    elapsed: meter.start.elapsed(),
                });
            }
            SearchStatus::Infeasible => {
                sweep.push(SweepStep { k, verdict: StepVerdict::Infeasible, nodes: meter.nodes - before });
            }
            SearchStatus::BudgetExhausted => return Err(Error::BudgetExhausted { lo: k, hi }),
        }
    }
    unreachable!("the greedy bound is always feasible")
}
