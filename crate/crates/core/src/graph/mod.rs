//! Simple undirected graphs, hop distances and geodesic queries.
//!
//! Every other module works on a [`Graph`] plus its [`DistanceOracle`]. Both
//! are immutable once built. Vertices are dense `0..n` ids; the 1-based text
//! format lives in [`io`].

pub mod io;

use std::collections::VecDeque;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Distance value for pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// Immutable simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds the canonical graph on `n` vertices. Duplicate edges (in
    /// either orientation) collapse to one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::OutOfRangeVertex { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Self { adj, m: m / 2 })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|u| (u, (u + 1) % n))).expect("cycle edges are valid")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|u| (u - 1, u))).expect("path edges are valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::OutOfRangeVertex { vertex: v, n: self.n() })
        }
    }

    /// Hop distances from `source`; [`UNREACHABLE`] for other components.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<u32>> {
        self.check_vertex(source)?;
        let mut dist = vec![UNREACHABLE; self.n()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let next = dist[x] + 1;
            for &y in &self.adj[x] {
                if dist[y] == UNREACHABLE {
                    dist[y] = next;
                    queue.push_back(y);
                }
            }
        }
        Ok(dist)
    }

    pub fn is_connected(&self) -> bool {
        match self.n() {
            0 => true,
            _ => self.bfs_distances(0).map(|d| d.iter().all(|&x| x != UNREACHABLE)).unwrap_or(false),
        }
    }

    /// Longest shortest path. Fails on disconnected graphs.
    pub fn diameter(&self, oracle: &DistanceOracle) -> Result<u32> {
        let mut best = 0;
        for &d in &oracle.dist {
            if d == UNREACHABLE {
                return Err(Error::DisconnectedGraph);
            }
            best = best.max(d);
        }
        Ok(best)
    }

    /// Number of shortest `u`–`v` paths, by dynamic programming over the
    /// shortest-path DAG.
    pub fn geodesic_count(&self, oracle: &DistanceOracle, u: usize, v: usize) -> Result<BigUint> {
        let total = oracle.connected_distance(u, v)?;
        let mut layers: Vec<Vec<usize>> = vec![Vec::new(); total as usize + 1];
        for w in 0..self.n() {
            if oracle.on_some_geodesic_unchecked(u, w, v) {
                layers[oracle.get(u, w) as usize].push(w);
            }
        }
        let mut count = vec![BigUint::default(); self.n()];
        count[u] = BigUint::from(1u8);
        for layer in layers.iter().skip(1) {
            for &y in layer {
                let mut acc = BigUint::default();
                for &x in &self.adj[y] {
                    if oracle.get(u, x) + 1 == oracle.get(u, y) && oracle.on_some_geodesic_unchecked(u, x, v) {
                        acc += &count[x];
                    }
                }
                count[y] = acc;
            }
        }
        Ok(std::mem::take(&mut count[v]))
    }

    /// True iff some shortest `u`–`v` path has no internal vertex `w` with
    /// `blocked(w)`. Endpoints are never tested against the predicate.
    pub fn geodesic_exists_avoiding<F>(&self, oracle: &DistanceOracle, u: usize, v: usize, blocked: F) -> Result<bool>
    where
        F: Fn(usize) -> bool,
    {
        let total = oracle.connected_distance(u, v)?;
        Ok(self.geodesic_exists_avoiding_unchecked(oracle, u, v, total, &blocked))
    }

    pub(crate) fn geodesic_exists_avoiding_unchecked<F>(
        &self,
        oracle: &DistanceOracle,
        u: usize,
        v: usize,
        total: u32,
        blocked: &F,
    ) -> bool
    where
        F: Fn(usize) -> bool,
    {
        if total <= 1 {
            return true;
        }
        let row_u = oracle.row(u);
        let row_v = oracle.row(v);
        // Walk the shortest-path DAG layer by layer, keeping only admissible
        // internal vertices.
        let mut frontier = vec![u];
        let mut next = Vec::new();
        let mut seen = vec![false; self.n()];
        for depth in 1..total {
            for &x in &frontier {
                for &y in &self.adj[x] {
                    if !seen[y] && row_u[y] == depth && row_v[y] == total - depth && !blocked(y) {
                        seen[y] = true;
                        next.push(y);
                    }
                }
            }
            if next.is_empty() {
                return false;
            }
            std::mem::swap(&mut frontier, &mut next);
            next.clear();
        }
        frontier.iter().any(|&x| row_v[x] == 1)
    }
}

/// Dense all-pairs hop distance matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceOracle {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceOracle {
    /// One BFS per vertex. Rows are computed in parallel; the matrix is the
    /// same as a sequential run.
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut dist = vec![UNREACHABLE; n * n];
        if n > 0 {
            dist.par_chunks_mut(n).enumerate().for_each(|(s, row)| {
                let d = g.bfs_distances(s).expect("source in range");
                row.copy_from_slice(&d);
            });
        }
        Self { n, dist }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.dist.iter().copied().filter(|&d| d != UNREACHABLE).max()
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::OutOfRangeVertex { vertex: v, n: self.n })
        }
    }

    pub(crate) fn connected_distance(&self, u: usize, v: usize) -> Result<u32> {
        self.check(u)?;
        self.check(v)?;
        match self.get(u, v) {
            UNREACHABLE => Err(Error::UnreachablePair(u, v)),
            d => Ok(d),
        }
    }

    /// True iff `w` lies on some shortest `u`–`v` path (endpoints included).
    pub fn on_some_geodesic(&self, u: usize, w: usize, v: usize) -> Result<bool> {
        self.check(w)?;
        self.connected_distance(u, v)?;
        Ok(self.on_some_geodesic_unchecked(u, w, v))
    }

    #[inline]
    pub(crate) fn on_some_geodesic_unchecked(&self, u: usize, w: usize, v: usize) -> bool {
        let (a, b) = (self.get(u, w), self.get(w, v));
        a != UNREACHABLE && b != UNREACHABLE && a + b == self.get(u, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::cycle(4)
    }

    #[test]
    fn edge_list_canonical_form() {
        let g = c4();
        assert_eq!(g.m(), 4);
        assert_eq!(g.neighbors(0), &[1, 3]);
        let dup = Graph::from_edges(2, [(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(dup.m(), 1);
        assert_eq!(Graph::from_edges(3, [(0, 3)]), Err(Error::OutOfRangeVertex { vertex: 3, n: 3 }));
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn bfs_small() {
        assert_eq!(c4().bfs_distances(0).unwrap(), vec![0, 1, 2, 1]);
        assert_eq!(Graph::path(3).bfs_distances(0).unwrap(), vec![0, 1, 2]);
        assert!(c4().bfs_distances(4).is_err());
        let split = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(split.bfs_distances(0).unwrap()[2], UNREACHABLE);
    }

    #[test]
    fn oracle_and_diameter() {
        let g = c4();
        let o = DistanceOracle::new(&g);
        assert_eq!(o.max_entry(), Some(2));
        assert_eq!(g.diameter(&o), Ok(2));
        let k3 = Graph::complete(3);
        assert_eq!(k3.diameter(&DistanceOracle::new(&k3)), Ok(1));
        let single = Graph::from_edges(1, []).unwrap();
        let o1 = DistanceOracle::new(&single);
        assert_eq!(o1.row(0), &[0]);
        let split = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(split.diameter(&DistanceOracle::new(&split)), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn geodesic_membership() {
        let p = Graph::path(3);
        let o = DistanceOracle::new(&p);
        assert!(o.on_some_geodesic(0, 1, 2).unwrap());
        let g = c4();
        let o = DistanceOracle::new(&g);
        assert!(o.on_some_geodesic(0, 1, 2).unwrap());
        assert!(o.on_some_geodesic(0, 3, 2).unwrap());
        assert!(!o.on_some_geodesic(0, 2, 1).unwrap());
        let split = Graph::from_edges(3, [(0, 1)]).unwrap();
        let os = DistanceOracle::new(&split);
        assert_eq!(os.on_some_geodesic(0, 1, 2), Err(Error::UnreachablePair(0, 2)));
    }

    #[test]
    fn geodesic_counting_c4() {
        let g = c4();
        let o = DistanceOracle::new(&g);
        assert_eq!(g.geodesic_count(&o, 0, 2).unwrap(), BigUint::from(2u8));
        assert_eq!(g.geodesic_count(&o, 0, 1).unwrap(), BigUint::from(1u8));
        assert_eq!(g.geodesic_count(&o, 3, 3).unwrap(), BigUint::from(1u8));
    }

    #[test]
    fn avoiding_geodesics_c4() {
        let g = c4();
        let o = DistanceOracle::new(&g);
        assert!(g.geodesic_exists_avoiding(&o, 0, 2, |w| w == 1).unwrap());
        assert!(!g.geodesic_exists_avoiding(&o, 0, 2, |w| w == 1 || w == 3).unwrap());
        // adjacent endpoints have no internal vertices
        assert!(g.geodesic_exists_avoiding(&o, 0, 1, |_| true).unwrap());
        // endpoints are exempt from the predicate
        assert!(g.geodesic_exists_avoiding(&o, 0, 2, |w| w == 0 || w == 2).unwrap());
    }

    #[test]
    fn geodesic_count_does_not_overflow() {
        // A chain of 80 diamonds has 2^80 geodesics end to end.
        let blocks = 80;
        let mut edges = Vec::new();
        for b in 0..blocks {
            let s = 3 * b;
            edges.extend([(s, s + 1), (s, s + 2), (s + 1, s + 3), (s + 2, s + 3)]);
        }
        let g = Graph::from_edges(3 * blocks + 1, edges).unwrap();
        let o = DistanceOracle::new(&g);
        let count = g.geodesic_count(&o, 0, 3 * blocks).unwrap();
        assert_eq!(count, BigUint::from(1u8) << 80);
    }
}
