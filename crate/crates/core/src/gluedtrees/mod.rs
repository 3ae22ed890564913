//! Glued t-ary trees `GT(r, t)`: two perfect t-ary trees of depth `r` whose
//! leaves are identified pairwise into quasi-leaves.
//!
//! Internal vertices carry coordinates `(side, i, j)`: `side` picks the tree
//! copy, `i` is the level (depth `i - 1`, so the root is level 1) and `j` the
//! 1-based position from the left. Quasi-leaves are numbered `1..=t^r`.
//!
//! Vertex ids are laid out as side-1 internals in level order, then side-2
//! internals in level order, then the quasi-leaves.

mod construct;
mod formula;
mod theorem;

use std::fmt::Write as _;
use std::ops::Range;

pub use construct::{constructive_coloring, Construction, Interpretation};
pub use formula::{chi_mu_formula, FormulaResult, Regime};
pub use theorem::{verify_theorem, ExactSummary, FormulaSummary, TheoremOptions, TheoremReport};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on generated tree size.
pub const DEFAULT_SIZE_CAP: usize = 4_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn number(self) -> u8 {
        match self {
            Side::One => 1,
            Side::Two => 2,
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::One => Side::Two,
            Side::Two => Side::One,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeCoordinate {
    Internal { side: Side, level: u32, pos: usize },
    QuasiLeaf(usize),
}

/// `(t^e - 1) / (t - 1)`: vertices above level `e + 1` in one tree copy.
pub(crate) fn geometric_sum(t: u128, e: u32) -> Option<u128> {
    let p = t.checked_pow(e)?;
    Some((p - 1) / (t - 1))
}

#[derive(Debug, Clone)]
pub struct LabeledGluedTree {
    graph: Graph,
    r: u32,
    t: usize,
    per_side: usize,
    leaves: usize,
}

/// Builds `GT(r, t)` with at most `size_cap` vertices.
pub fn build_glued_tree(r: u32, t: usize, size_cap: usize) -> Result<LabeledGluedTree> {
    if r < 1 || t < 2 {
        return Err(Error::InvalidParams(format!("GT(r,t) needs r >= 1 and t >= 2, got r={r}, t={t}")));
    }
    let too_big = |n: u128| Error::SizeCapExceeded { n, cap: size_cap };
    let per_side = geometric_sum(t as u128, r).ok_or(too_big(u128::MAX))?;
    let leaves = (t as u128).checked_pow(r).ok_or(too_big(u128::MAX))?;
    let n = 2 * per_side + leaves;
    if n > size_cap as u128 {
        return Err(too_big(n));
    }
    let (per_side, leaves) = (per_side as usize, leaves as usize);

    let mut edges = Vec::with_capacity(2 * (per_side - 1) + 2 * leaves);
    for offset in [0, per_side] {
        // In level order the children of internal index x are t*x+1 ..= t*x+t.
        for child in 1..per_side {
            edges.push((offset + (child - 1) / t, offset + child));
        }
        let last_level = per_side - leaves / t;
        for a in 0..leaves {
            edges.push((offset + last_level + a / t, 2 * per_side + a));
        }
    }
    Ok(LabeledGluedTree { graph: Graph::from_edges(n as usize, edges)?, r, t, per_side, leaves })
}

impl LabeledGluedTree {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves
    }

    /// Internal vertices per tree copy.
    pub fn internal_per_side(&self) -> usize {
        self.per_side
    }

    /// Number of vertices at `level` in one copy: `t^(level-1)`.
    pub fn level_width(&self, level: u32) -> usize {
        self.t.pow(level - 1)
    }

    fn level_start(&self, level: u32) -> usize {
        (self.t.pow(level - 1) - 1) / (self.t - 1)
    }

    fn side_offset(&self, side: Side) -> usize {
        match side {
            Side::One => 0,
            Side::Two => self.per_side,
        }
    }

    /// Id of `v_{level,pos}` (side 1) or `v'_{level,pos}` (side 2).
    pub fn internal(&self, side: Side, level: u32, pos: usize) -> usize {
        self.id_of(TreeCoordinate::Internal { side, level, pos })
            .unwrap_or_else(|| panic!("no vertex at side {side:?}, level {level}, position {pos}"))
    }

    pub fn quasi_leaf(&self, a: usize) -> usize {
        assert!((1..=self.leaves).contains(&a), "quasi-leaf {a} out of range");
        2 * self.per_side + a - 1
    }

    pub fn id_of(&self, coord: TreeCoordinate) -> Option<usize> {
        match coord {
            TreeCoordinate::Internal { side, level, pos } => {
                if level < 1 || level > self.r || pos < 1 || pos > self.level_width(level) {
                    return None;
                }
                Some(self.side_offset(side) + self.level_start(level) + pos - 1)
            }
            TreeCoordinate::QuasiLeaf(a) => (1..=self.leaves).contains(&a).then(|| 2 * self.per_side + a - 1),
        }
    }

    pub fn coord_of(&self, id: usize) -> TreeCoordinate {
        assert!(id < self.n(), "vertex {id} out of range");
        if id >= 2 * self.per_side {
            return TreeCoordinate::QuasiLeaf(id - 2 * self.per_side + 1);
        }
        let (side, local) = if id < self.per_side { (Side::One, id) } else { (Side::Two, id - self.per_side) };
        let mut level = 1;
        while self.level_start(level + 1) <= local {
            level += 1;
        }
        TreeCoordinate::Internal { side, level, pos: local - self.level_start(level) + 1 }
    }

    /// Ids of one level of one copy, ascending by position.
    pub fn level(&self, side: Side, level: u32) -> Range<usize> {
        let start = self.side_offset(side) + self.level_start(level);
        start..start + self.level_width(level)
    }

    pub fn quasi_leaves(&self) -> Range<usize> {
        2 * self.per_side..self.n()
    }

    /// Quasi-leaf indices `a` below the internal vertex at `(level, pos)`.
    pub fn leaf_span(&self, level: u32, pos: usize) -> std::ops::RangeInclusive<usize> {
        let width = self.t.pow(self.r + 1 - level);
        (pos - 1) * width + 1..=pos * width
    }

    /// Parent position on level `r` of quasi-leaf `a` (the same on both sides).
    fn leaf_parent_pos(&self, a: usize) -> usize {
        a.div_ceil(self.t)
    }

    /// One `v_a`–`v_b` path through `side`, from `v_a` to `v_b`.
    fn side_path(&self, side: Side, a: usize, b: usize) -> Vec<usize> {
        let mut up = vec![self.quasi_leaf(a)];
        let mut down = vec![self.quasi_leaf(b)];
        let (mut pa, mut pb) = (self.leaf_parent_pos(a), self.leaf_parent_pos(b));
        let mut level = self.r;
        while pa != pb {
            up.push(self.internal(side, level, pa));
            down.push(self.internal(side, level, pb));
            pa = pa.div_ceil(self.t);
            pb = pb.div_ceil(self.t);
            level -= 1;
        }
        up.push(self.internal(side, level, pa));
        up.extend(down.into_iter().rev());
        up
    }

    /// `L <id> <side> <i> <j>` for internals and `Q <id> <a>` for quasi-leaves,
    /// 1-based ids, sorted by id.
    pub fn label_sidecar(&self) -> String {
        let mut out = String::with_capacity(16 * self.n());
        for id in 0..self.n() {
            let _ = match self.coord_of(id) {
                TreeCoordinate::Internal { side, level, pos } => {
                    writeln!(out, "L {} {} {} {}", id + 1, side.number(), level, pos)
                }
                TreeCoordinate::QuasiLeaf(a) => writeln!(out, "Q {} {}", id + 1, a),
            };
        }
        out
    }
}

/// The two tree-side geodesics between quasi-leaves `v_a` and `v_b`, and the
/// cycle they form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub a: usize,
    pub b: usize,
    /// Path through the side-1 copy, `v_a` first.
    pub p_side1: Vec<usize>,
    pub p_side2: Vec<usize>,
    /// The paths without their endpoints.
    pub q_side1: Vec<usize>,
    pub q_side2: Vec<usize>,
    /// Every cycle vertex, ascending.
    pub all_vertices: Vec<usize>,
}

pub fn cycle_vertices(tree: &LabeledGluedTree, a: usize, b: usize) -> Result<CycleDecomposition> {
    for x in [a, b] {
        if !(1..=tree.leaf_count()).contains(&x) {
            return Err(Error::InvalidQuasiLeaf(x));
        }
    }
    if a == b {
        return Err(Error::InvalidQuasiLeaf(b));
    }
    let p_side1 = tree.side_path(Side::One, a, b);
    let p_side2 = tree.side_path(Side::Two, a, b);
    let inner = |p: &[usize]| p[1..p.len() - 1].to_vec();
    let q_side1 = inner(&p_side1);
    let q_side2 = inner(&p_side2);
    let mut all_vertices: Vec<usize> = p_side1.iter().chain(&q_side2).copied().collect();
    all_vertices.sort_unstable();
    Ok(CycleDecomposition { a, b, p_side1, p_side2, q_side1, q_side2, all_vertices })
}
