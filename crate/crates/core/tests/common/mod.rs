//! Brute-force oracles shared by the integration tests. Nothing here uses the
//! distance oracle or the geodesic walk of the library.

#![allow(dead_code)]

use mvchroma::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn seed_from_env(name: &str, default: u64) -> u64 {
    std::env::var(name).ok().and_then(|s| s.parse().ok()).unwrap_or(default)
}

/// Every simple `u`–`v` path, by DFS.
pub fn all_simple_paths(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, v: usize, path: &mut Vec<usize>, seen: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let x = *path.last().unwrap();
        if x == v {
            out.push(path.clone());
            return;
        }
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                path.push(y);
                go(g, v, path, seen, out);
                path.pop();
                seen[y] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut seen = vec![false; g.n()];
    seen[u] = true;
    go(g, v, &mut vec![u], &mut seen, &mut out);
    out
}

/// Shortest `u`–`v` paths, filtered from the full simple-path list.
pub fn all_geodesics(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
    let paths = all_simple_paths(g, u, v);
    let Some(best) = paths.iter().map(Vec::len).min() else { return paths };
    paths.into_iter().filter(|p| p.len() == best).collect()
}

pub fn naive_distance(g: &Graph, u: usize, v: usize) -> Option<usize> {
    all_simple_paths(g, u, v).iter().map(|p| p.len() - 1).min()
}

/// Precomputed geodesics for every ordered pair `u < v`.
pub struct GeodesicTable {
    n: usize,
    paths: Vec<Vec<Vec<usize>>>,
}

impl GeodesicTable {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut paths = vec![Vec::new(); n * n];
        for u in 0..n {
            for v in u + 1..n {
                paths[u * n + v] = all_geodesics(g, u, v);
            }
        }
        Self { n, paths }
    }

    pub fn get(&self, u: usize, v: usize) -> &[Vec<usize>] {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        &self.paths[a * self.n + b]
    }

    /// Some geodesic has no internal vertex with `blocked`.
    pub fn sees(&self, u: usize, v: usize, blocked: impl Fn(usize) -> bool) -> bool {
        self.get(u, v).iter().any(|p| p[1..p.len() - 1].iter().all(|&w| !blocked(w)))
    }

    pub fn mv_coloring_valid(&self, colors: &[usize]) -> bool {
        (0..self.n)
            .all(|u| (u + 1..self.n).all(|v| colors[u] != colors[v] || self.sees(u, v, |w| colors[w] == colors[u])))
    }
}

/// Enumerates all `k^n` colorings (not necessarily using every color).
pub fn naive_k_colorable(table: &GeodesicTable, n: usize, k: usize) -> bool {
    if n == 0 {
        return true;
    }
    let mut colors = vec![0usize; n];
    loop {
        if table.mv_coloring_valid(&colors) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Random connected graph: a random spanning tree plus independent extra edges.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, extra_p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(extra_p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random connected graph with `n` drawn from `sizes` and a random density.
pub fn random_graph(rng: &mut ChaCha8Rng, sizes: std::ops::RangeInclusive<usize>) -> Graph {
    let n = rng.gen_range(sizes);
    let p = rng.gen_range(0.0..0.5);
    random_connected_graph(rng, n, p)
}
