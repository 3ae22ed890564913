//! Explicit mutual-visibility colorings of `GT(r, t)` with exactly the
//! closed-form number of colors.
//!
//! Colors below are 1-based as in the usual drawings; the returned
//! [`Coloring`] uses `color - 1`.
//!
//! * Quasi-leaves get color 1.
//! * For `k = 1..=K`, color `2k` goes to every side-1 vertex at depth `r - k`
//!   and to the `k`-th vertex of the side-2 sequence (level order, positions
//!   ascending). Color `2k + 1` goes to every side-2 vertex at depth `r - k`
//!   and to the `k`-th vertex of the side-1 sequence (level order, positions
//!   descending within a level).
//! * What is left after that lies on level `i` (depth `i - 1`) and is colored
//!   according to the [`Regime`].

use serde::Serialize;

use super::formula::{chi_mu_formula, Regime};
use super::{LabeledGluedTree, Side};
use crate::error::{Error, Result};
use crate::graph::DistanceOracle;
use crate::visibility::{validate_mv_coloring, Coloring, ReportMode};

/// Reading used for the one vertex recolored to 1 in [`Regime::EvenFirst`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Interpretation {
    /// No recolored vertex in this regime.
    Standard,
    /// Side-1 vertex at level `i`, position `j + 1`.
    RecolorSide1,
    /// Side-2 vertex at level `i`, position `j + 1`.
    RecolorSide2,
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub coloring: Coloring,
    pub colors: usize,
    pub interpretation: Interpretation,
}

const UNSET: usize = usize::MAX;

/// Level-order prefix sequences of both sides, up to (and including) level
/// `last_level`.
fn prefix_sequences(tree: &LabeledGluedTree, last_level: u32) -> (Vec<usize>, Vec<usize>) {
    let mut side1 = Vec::new();
    let mut side2 = Vec::new();
    for level in 1..=last_level {
        side1.extend(tree.level(Side::One, level).rev());
        side2.extend(tree.level(Side::Two, level));
    }
    (side1, side2)
}

fn build(tree: &LabeledGluedTree, regime: Regime, i: u32, interpretation: Interpretation) -> Vec<usize> {
    let r = tree.r();
    let mut color = vec![UNSET; tree.n()];
    for q in tree.quasi_leaves() {
        color[q] = 1;
    }
    if regime == Regime::Base {
        for side in [Side::One, Side::Two] {
            color[tree.internal(side, 1, 1)] = 2;
        }
        return color;
    }

    let rounds = match regime {
        Regime::OddFirst => (r - i + 1) as usize,
        _ => (r - i) as usize,
    };
    let (seq1, seq2) = prefix_sequences(tree, i);
    for k in 1..=rounds {
        let level = r + 1 - k as u32;
        for v in tree.level(Side::One, level) {
            color[v] = 2 * k;
        }
        for v in tree.level(Side::Two, level) {
            color[v] = 2 * k + 1;
        }
        color[seq2[k - 1]] = 2 * k;
        color[seq1[k - 1]] = 2 * k + 1;
    }

    let (side1_fresh, side2_fresh) = match regime {
        Regime::OddFirst => return color,
        Regime::OddRest => (2 * rounds + 2, 2 * rounds + 3),
        Regime::EvenFirst | Regime::EvenRest => (2 * rounds + 2, 2 * rounds + 2),
        Regime::Base | Regime::Gap => unreachable!("handled by caller"),
    };
    if regime == Regime::EvenFirst {
        // j vertices of level i are already colored on each side.
        let covered_above = tree.level_start(i);
        let j = rounds - covered_above;
        let side = match interpretation {
            Interpretation::RecolorSide2 => Side::Two,
            _ => Side::One,
        };
        color[tree.internal(side, i, j + 1)] = 1;
    }
    for (side, fresh) in [(Side::One, side1_fresh), (Side::Two, side2_fresh)] {
        for v in tree.level(side, i) {
            if color[v] == UNSET {
                color[v] = fresh;
            }
        }
    }
    color
}

/// Colors `tree` with exactly `chi_mu_formula(r, t)` colors and checks the
/// result with the MV validator. In the one regime where the recolored
/// vertex is ambiguous, the side-1 reading is tried first, then side 2.
pub fn constructive_coloring(tree: &LabeledGluedTree, oracle: &DistanceOracle) -> Result<Construction> {
    let (r, t) = (tree.r(), tree.t());
    let formula = chi_mu_formula(r, t)?;
    let Some(value) = formula.value else {
        return Err(Error::GapInput { r, t: t as u32, candidates: formula.candidates });
    };
    let interpretations: &[Interpretation] = match formula.regime {
        Regime::EvenFirst => &[Interpretation::RecolorSide1, Interpretation::RecolorSide2],
        _ => &[Interpretation::Standard],
    };
    for &interpretation in interpretations {
        let raw = build(tree, formula.regime, formula.i, interpretation);
        debug_assert!(raw.iter().all(|&c| c != UNSET), "every vertex gets a color");
        let dense: Vec<usize> = raw.iter().map(|&c| c - 1).collect();
        let Ok(coloring) = Coloring::from_dense(dense) else { continue };
        if coloring.k() as u64 != value {
            continue;
        }
        if validate_mv_coloring(tree.graph(), oracle, &coloring, ReportMode::FailFast)?.valid {
            return Ok(Construction { colors: coloring.k(), coloring, interpretation });
        }
    }
    Err(Error::ConstructionFailed { r, t: t as u32 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gluedtrees::{build_glued_tree, DEFAULT_SIZE_CAP};

    fn construct(r: u32, t: usize) -> (LabeledGluedTree, Result<Construction>) {
        let tree = build_glued_tree(r, t, DEFAULT_SIZE_CAP).unwrap();
        let o = DistanceOracle::new(tree.graph());
        let c = constructive_coloring(&tree, &o);
        (tree, c)
    }

    #[test]
    fn gt2_matches_drawing() {
        let (tree, c) = construct(2, 2);
        let c = c.unwrap();
        let col = |side, i, j| c.coloring.color(tree.internal(side, i, j)) + 1;
        for a in 1..=4 {
            assert_eq!(c.coloring.color(tree.quasi_leaf(a)) + 1, 1);
        }
        assert_eq!(col(Side::One, 2, 1), 2);
        assert_eq!(col(Side::One, 2, 2), 2);
        assert_eq!(col(Side::Two, 1, 1), 2);
        assert_eq!(col(Side::Two, 2, 1), 3);
        assert_eq!(col(Side::Two, 2, 2), 3);
        assert_eq!(col(Side::One, 1, 1), 3);
    }

    #[test]
    fn gap_is_rejected() {
        let (_, c) = construct(3, 3);
        assert!(matches!(c, Err(Error::GapInput { .. })));
    }

    #[test]
    fn base_case() {
        for t in 2..5 {
            let (_, c) = construct(1, t);
            assert_eq!(c.unwrap().colors, 2);
        }
    }
}
