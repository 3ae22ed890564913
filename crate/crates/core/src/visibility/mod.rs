//! Mutual-visibility and general-position checks for vertex sets and colorings.
//!
//! A set `S` is mutual-visibility (MV) when every pair in `S` is joined by a
//! shortest path with no internal vertex in `S`. A set is in general position
//! (GP) when no member lies on a shortest path between two others. A coloring
//! is MV (GP) when each of its color classes is.

pub mod io;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceOracle, Graph, UNREACHABLE};

/// Total vertex coloring with dense color ids `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Accepts arbitrary color labels and renumbers them densely, keeping
    /// their relative order. Returns the coloring and, for every dense id,
    /// the label it replaced.
    pub fn from_labels(labels: &[usize]) -> (Self, Vec<usize>) {
        let mut distinct = labels.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let colors = labels.iter().map(|l| distinct.binary_search(l).expect("label present")).collect();
        (Self { colors, k: distinct.len() }, distinct)
    }

    /// Builds a coloring whose ids must already form `0..k`.
    pub fn from_dense(colors: Vec<usize>) -> Result<Self> {
        let (c, labels) = Self::from_labels(&colors);
        if labels.iter().enumerate().any(|(i, &l)| i != l) {
            return Err(Error::InvalidParams("color ids are not contiguous from 0".into()));
        }
        Ok(c)
    }

    /// Every vertex its own class.
    pub fn distinct(n: usize) -> Self {
        Self { colors: (0..n).collect(), k: n }
    }

    pub fn uniform(n: usize) -> Self {
        Self { colors: vec![0; n], k: usize::from(n > 0) }
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.colors
    }

    /// Color classes indexed by color id, each sorted ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    /// Relabels colors in order of first appearance, so two colorings that
    /// differ only by a renaming compare equal afterwards.
    pub fn canonical(&self) -> Self {
        let mut map = vec![usize::MAX; self.k];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c] == usize::MAX {
                    map[c] = next;
                    next += 1;
                }
                map[c]
            })
            .collect();
        Self { colors, k: self.k }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub color: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub valid: bool,
    /// Ordered by `(color, u, v)`.
    pub violations: Vec<Violation>,
    pub checked_pairs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportMode {
    /// Stop at the first violation.
    #[default]
    FailFast,
    /// Collect every violating pair.
    Exhaustive,
}

fn check_members(g_n: usize, s: &[usize]) -> Result<()> {
    match s.iter().find(|&&v| v >= g_n) {
        Some(&vertex) => Err(Error::OutOfRangeVertex { vertex, n: g_n }),
        None => Ok(()),
    }
}

fn check_total(g: &Graph, c: &Coloring) -> Result<()> {
    if c.n() != g.n() {
        return Err(Error::ColoringNotTotal { expected: g.n(), got: c.n() });
    }
    Ok(())
}

/// Whether `x` and `y` see each other when the vertices flagged in `member`
/// are opaque. Pairs in different components never see each other.
fn visible(g: &Graph, o: &DistanceOracle, x: usize, y: usize, member: &[bool]) -> bool {
    match o.get(x, y) {
        UNREACHABLE => false,
        d => g.geodesic_exists_avoiding_unchecked(o, x, y, d, &|w: usize| member[w]),
    }
}

pub fn is_mv_set(g: &Graph, o: &DistanceOracle, s: &[usize]) -> Result<bool> {
    check_members(g.n(), s)?;
    let mut member = vec![false; g.n()];
    for &v in s {
        member[v] = true;
    }
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    for (i, &x) in set.iter().enumerate() {
        for &y in &set[i + 1..] {
            if !visible(g, o, x, y, &member) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks every same-colored pair for visibility inside its class.
pub fn validate_mv_coloring(g: &Graph, o: &DistanceOracle, c: &Coloring, mode: ReportMode) -> Result<ValidationReport> {
    check_total(g, c)?;
    let mut violations = Vec::new();
    let mut checked_pairs = 0;
    for (color, class) in c.classes().into_iter().enumerate() {
        let member: Vec<bool> = c.as_slice().iter().map(|&x| x == color).collect();
        match mode {
            ReportMode::FailFast => {
                for (i, &x) in class.iter().enumerate() {
                    for &y in &class[i + 1..] {
                        checked_pairs += 1;
                        if !visible(g, o, x, y, &member) {
                            return Ok(ValidationReport {
                                valid: false,
                                violations: vec![Violation { u: x, v: y, color }],
                                checked_pairs,
                            });
                        }
                    }
                }
            }
            ReportMode::Exhaustive => {
                let rows: Vec<Vec<Violation>> = (0..class.len())
                    .into_par_iter()
                    .map(|i| {
                        let x = class[i];
                        class[i + 1..]
                            .iter()
                            .filter(|&&y| !visible(g, o, x, y, &member))
                            .map(|&y| Violation { u: x, v: y, color })
                            .collect()
                    })
                    .collect();
                checked_pairs += class.len() * class.len().saturating_sub(1) / 2;
                violations.extend(rows.into_iter().flatten());
            }
        }
    }
    Ok(ValidationReport { valid: violations.is_empty(), violations, checked_pairs })
}

/// First `(x, y)` with `x < y` in `s` that has some other member `z` of `s`
/// on a shortest `x`–`y` path.
fn gp_witnesses(o: &DistanceOracle, s: &[usize], fail_fast: bool) -> Vec<(usize, usize)> {
    let mut found = Vec::new();
    for (i, &x) in s.iter().enumerate() {
        for &y in &s[i + 1..] {
            let d = o.get(x, y);
            if d == UNREACHABLE {
                continue;
            }
            let collinear = s.iter().any(|&z| {
                z != x && z != y && {
                    let (a, b) = (o.get(x, z), o.get(z, y));
                    a != UNREACHABLE && b != UNREACHABLE && a + b == d
                }
            });
            if collinear {
                found.push((x, y));
                if fail_fast {
                    return found;
                }
            }
        }
    }
    found
}

pub fn is_gp_set(o: &DistanceOracle, s: &[usize]) -> Result<bool> {
    check_members(o.n(), s)?;
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    Ok(gp_witnesses(o, &set, true).is_empty())
}

/// GP check per color class. A violation names the two outer vertices of a
/// collinear triple.
pub fn validate_gp_coloring(g: &Graph, o: &DistanceOracle, c: &Coloring, mode: ReportMode) -> Result<ValidationReport> {
    check_total(g, c)?;
    let fail_fast = mode == ReportMode::FailFast;
    let mut violations = Vec::new();
    let mut checked_pairs = 0;
    for (color, class) in c.classes().into_iter().enumerate() {
        checked_pairs += class.len() * class.len().saturating_sub(1) / 2;
        violations.extend(gp_witnesses(o, &class, fail_fast).into_iter().map(|(u, v)| Violation { u, v, color }));
        if fail_fast && !violations.is_empty() {
            break;
        }
    }
    Ok(ValidationReport { valid: violations.is_empty(), violations, checked_pairs })
}

/// `|s ∩ cycle|`; duplicates in either input are ignored.
pub fn cycle_class_intersection(s: &[usize], cycle: &[usize]) -> usize {
    let mut a = s.to_vec();
    a.sort_unstable();
    a.dedup();
    let mut b = cycle.to_vec();
    b.sort_unstable();
    b.dedup();
    b.iter().filter(|x| a.binary_search(x).is_ok()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sets() {
        let g = Graph::cycle(4);
        let o = DistanceOracle::new(&g);
        assert!(is_mv_set(&g, &o, &[0, 2]).unwrap());
        assert!(is_mv_set(&g, &o, &[1]).unwrap());
        assert!(!is_mv_set(&g, &o, &[0, 1, 2, 3]).unwrap());
        assert!(is_mv_set(&g, &o, &[9]).is_err());

        let p = Graph::path(3);
        let op = DistanceOracle::new(&p);
        assert!(!is_gp_set(&op, &[0, 1, 2]).unwrap());
        assert!(is_gp_set(&op, &[0, 2]).unwrap());
        assert!(is_gp_set(&op, &[]).unwrap());
    }

    #[test]
    fn trivial_colorings() {
        let g = Graph::path(3);
        let o = DistanceOracle::new(&g);
        let all = Coloring::distinct(3);
        assert!(validate_mv_coloring(&g, &o, &all, ReportMode::Exhaustive).unwrap().valid);
        assert!(validate_gp_coloring(&g, &o, &all, ReportMode::Exhaustive).unwrap().valid);
        let one = Coloring::uniform(3);
        let mv = validate_mv_coloring(&g, &o, &one, ReportMode::Exhaustive).unwrap();
        assert_eq!(mv.violations, vec![Violation { u: 0, v: 2, color: 0 }]);
        assert_eq!(mv.checked_pairs, 3);
        let gp = validate_gp_coloring(&g, &o, &one, ReportMode::FailFast).unwrap();
        assert!(!gp.valid);
        assert_eq!(
            validate_mv_coloring(&g, &o, &Coloring::uniform(2), ReportMode::FailFast),
            Err(Error::ColoringNotTotal { expected: 3, got: 2 })
        );
    }

    #[test]
    fn disconnected_same_color_pair_is_a_violation() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let o = DistanceOracle::new(&g);
        let c = Coloring::from_dense(vec![0, 1, 0]).unwrap();
        assert!(!validate_mv_coloring(&g, &o, &c, ReportMode::Exhaustive).unwrap().valid);
    }

    #[test]
    fn renumbering() {
        let (c, labels) = Coloring::from_labels(&[7, 3, 7, 9]);
        assert_eq!(c.as_slice(), &[1, 0, 1, 2]);
        assert_eq!(labels, vec![3, 7, 9]);
        assert_eq!(c.canonical().as_slice(), &[0, 1, 0, 2]);
        assert!(Coloring::from_dense(vec![0, 2]).is_err());
        assert_eq!(c.classes(), vec![vec![1], vec![0, 2], vec![3]]);
    }

    #[test]
    fn intersection_counts() {
        assert_eq!(cycle_class_intersection(&[1, 2, 3], &[4, 5]), 0);
        assert_eq!(cycle_class_intersection(&[4, 5, 6], &[6, 5, 4]), 3);
        assert_eq!(cycle_class_intersection(&[1, 1, 2], &[1, 2, 2]), 2);
    }
}
