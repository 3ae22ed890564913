//! NAE3SAT to two-color mutual-visibility reduction.
//!
//! Vertex layout of a reduction graph for a formula with `q` variables and
//! `m` clauses:
//!
//! | ids                  | role                     |
//! |----------------------|--------------------------|
//! | 0, 1, 2, 3           | `p`, `c`, `z`, `z'`      |
//! | 4 + 4(i-1) + 0..4    | `u_i`, `ū_i`, `a_i`, `b_i` |
//! | 4 + 4q + 2(j-1) + 0..2 | `v_j`, `w_j`           |

pub mod formula;
mod verify;

use serde::Serialize;

pub use formula::{normalize, parse_nae_formula, write_nae_formula, Literal, NaeFormula, NormalizeOutcome};
pub use verify::{verify_reduction, MvVerdict, NaeVerdict, ReductionReport};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::nae::NaeAssignment;
use crate::visibility::Coloring;

/// Two stars on `n + 2` vertices with their `n` leaves identified.
#[derive(Debug, Clone)]
pub struct HGadget {
    pub graph: Graph,
    pub c: usize,
    pub p: usize,
    pub c_prime: usize,
    pub p_prime: usize,
    pub leaves: Vec<usize>,
}

/// Ids: `c = 0`, `p = 1`, `c' = 2`, `p' = 3`, leaves `4..n+4`.
pub fn build_h_gadget(n: usize) -> Result<HGadget> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("H_n needs n >= 2, got {n}")));
    }
    let leaves: Vec<usize> = (4..n + 4).collect();
    let mut edges = vec![(0, 1), (2, 3)];
    for &l in &leaves {
        edges.push((0, l));
        edges.push((2, l));
    }
    Ok(HGadget { graph: Graph::from_edges(n + 4, edges)?, c: 0, p: 1, c_prime: 2, p_prime: 3, leaves })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VariableGadget {
    pub u: usize,
    pub u_bar: usize,
    pub a: usize,
    pub b: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClauseGadget {
    pub v: usize,
    pub w: usize,
    /// Literal vertices of the clause, in clause order.
    pub t: [usize; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Legend {
    pub p: usize,
    pub c: usize,
    pub z: usize,
    pub z_prime: usize,
    pub vars: Vec<VariableGadget>,
    pub clauses: Vec<ClauseGadget>,
}

/// Legend with 1-based ids, matching the graph text format.
#[derive(Debug, Clone, Serialize)]
pub struct LegendFile {
    pub p: usize,
    pub c: usize,
    pub z: usize,
    pub zp: usize,
    pub vars: Vec<VarEntry>,
    pub clauses: Vec<ClauseEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VarEntry {
    pub u: usize,
    pub ubar: usize,
    pub a: usize,
    pub b: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClauseEntry {
    pub v: usize,
    pub w: usize,
    #[serde(rename = "T")]
    pub t: [usize; 3],
}

impl Legend {
    pub fn to_file(&self) -> LegendFile {
        LegendFile {
            p: self.p + 1,
            c: self.c + 1,
            z: self.z + 1,
            zp: self.z_prime + 1,
            vars: self
                .vars
                .iter()
                .map(|g| VarEntry { u: g.u + 1, ubar: g.u_bar + 1, a: g.a + 1, b: g.b + 1 })
                .collect(),
            clauses: self
                .clauses
                .iter()
                .map(|g| ClauseEntry { v: g.v + 1, w: g.w + 1, t: g.t.map(|x| x + 1) })
                .collect(),
        }
    }

    pub fn literal_vertex(&self, lit: Literal) -> usize {
        let g = &self.vars[lit.var - 1];
        if lit.positive {
            g.u
        } else {
            g.u_bar
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReductionGraph {
    pub graph: Graph,
    pub legend: Legend,
    pub formula: NaeFormula,
}

/// Builds the graph whose MV 2-colorings correspond to NAE assignments of a
/// normalized formula.
pub fn build_reduction(f: &NaeFormula) -> Result<ReductionGraph> {
    if let Some(idx) = f.first_unnormalized() {
        return Err(Error::NonNormalizedInput(idx));
    }
    let q = f.q;
    let (p, c, z, z_prime) = (0, 1, 2, 3);
    let vars: Vec<VariableGadget> = (0..q)
        .map(|i| {
            let base = 4 + 4 * i;
            VariableGadget { u: base, u_bar: base + 1, a: base + 2, b: base + 3 }
        })
        .collect();
    let mut legend = Legend { p, c, z, z_prime, vars, clauses: Vec::new() };
    legend.clauses = f
        .clauses
        .iter()
        .enumerate()
        .map(|(j, clause)| {
            let base = 4 + 4 * q + 2 * j;
            ClauseGadget { v: base, w: base + 1, t: clause.map(|l| legend.literal_vertex(l)) }
        })
        .collect();

    let mut edges = vec![(p, c)];
    for g in &legend.vars {
        edges.extend([(g.u, g.a), (g.u_bar, g.a), (g.u, c), (g.u_bar, c), (g.a, g.b)]);
        for hub in [z, z_prime] {
            edges.extend([(g.u, hub), (g.u_bar, hub), (g.a, hub)]);
        }
    }
    for g in &legend.clauses {
        edges.push((g.v, g.w));
        for &x in &g.t {
            edges.push((c, x));
            edges.push((g.v, x));
        }
        edges.extend([(g.v, z), (g.v, z_prime)]);
    }
    let n = 4 * q + 2 * f.clauses.len() + 4;
    Ok(ReductionGraph { graph: Graph::from_edges(n, edges)?, legend, formula: f.clone() })
}

pub const RED: usize = 0;
pub const WHITE: usize = 1;

/// The coloring used to show a satisfying assignment gives an MV 2-coloring:
/// `p, z, b_i, w_j` red, `c, z', a_i, v_j` white, `u_i` red iff `x_i` is true
/// and `ū_i` the other color.
pub fn assignment_to_coloring(rg: &ReductionGraph, a: &NaeAssignment) -> Result<Coloring> {
    let lg = &rg.legend;
    if a.values.len() != lg.vars.len() {
        return Err(Error::PartialAssignment { expected: lg.vars.len(), got: a.values.len() });
    }
    let mut colors = vec![RED; rg.graph.n()];
    colors[lg.c] = WHITE;
    colors[lg.z_prime] = WHITE;
    for (g, &value) in lg.vars.iter().zip(&a.values) {
        colors[g.a] = WHITE;
        let (u, u_bar) = if value { (RED, WHITE) } else { (WHITE, RED) };
        colors[g.u] = u;
        colors[g.u_bar] = u_bar;
    }
    for g in &lg.clauses {
        colors[g.v] = WHITE;
    }
    Ok(Coloring::from_dense(colors).expect("both colors are used"))
}

/// Reads an assignment off a 2-coloring: `x_i` is true iff `u_i` has the
/// color of `u_1`. NAE satisfaction is invariant under complementing every
/// variable, so the anchor choice does not matter.
pub fn coloring_to_assignment(rg: &ReductionGraph, c: &Coloring) -> Result<NaeAssignment> {
    if c.k() != 2 {
        return Err(Error::WrongColorCount(c.k()));
    }
    if c.n() != rg.graph.n() {
        return Err(Error::ColoringNotTotal { expected: rg.graph.n(), got: c.n() });
    }
    let vars = &rg.legend.vars;
    let Some(first) = vars.first() else {
        return Ok(NaeAssignment::new(Vec::new()));
    };
    let anchor = c.color(first.u);
    Ok(NaeAssignment::new(vars.iter().map(|g| c.color(g.u) == anchor).collect()))
}
