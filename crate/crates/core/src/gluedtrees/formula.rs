//! Closed-form mutual-visibility chromatic number of `GT(r, t)`.
//!
//! With `A_i = (t^(i-1) - 1) / (t - 1)`, the block index `i` is the unique
//! integer with `A_i + i - 1 <= r <= A_(i+1) + i - 1`. Inside the block the
//! split point is `B = A_i + t^(i-1) / 2`:
//!
//! * `r <= B + i - 2` gives `2(r - i) + 3`,
//! * `r >= B + i - 1` gives `2(r - i) + 2`.
//!
//! For odd `t`, `B` is a half-integer and the single `r = floor(B) + i - 1`
//! falls in neither range. That `r` is reported as a gap with both candidate
//! values.

use serde::Serialize;

use super::geometric_sum;
use crate::error::{Error, Result};

/// Which part of the block `r` falls in; selects the coloring recipe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `r = 1`, `GT(1, t) = K_{2,t}`.
    Base,
    /// First `r` of a block; every level is colored by the level rule.
    OddFirst,
    /// Remaining `2(r-i)+3` cases; leftover vertices get one fresh color per side.
    OddRest,
    /// Uncovered `r` for odd `t`.
    Gap,
    /// First `r` of the `2(r-i)+2` range; one leftover vertex joins color 1.
    EvenFirst,
    /// Remaining `2(r-i)+2` cases; leftovers share one fresh color.
    EvenRest,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub r: u32,
    pub t: usize,
    pub i: u32,
    pub value: Option<u64>,
    pub gap: bool,
    pub candidates: Vec<u64>,
    pub regime: Regime,
}

pub fn chi_mu_formula(r: u32, t: usize) -> Result<FormulaResult> {
    if r < 1 || t < 2 {
        return Err(Error::InvalidParams(format!("formula needs r >= 1 and t >= 2, got r={r}, t={t}")));
    }
    if r == 1 {
        return Ok(FormulaResult { r, t, i: 1, value: Some(2), gap: false, candidates: vec![], regime: Regime::Base });
    }
    let (r_big, t_big) = (r as u128, t as u128);
    let overflow = || Error::InvalidParams(format!("arithmetic overflow for r={r}, t={t}"));
    let a = |i: u32| geometric_sum(t_big, i - 1).ok_or_else(overflow);

    let mut i = 1u32;
    while a(i + 1)? + (i as u128) - 1 < r_big {
        i += 1;
    }
    let a_i = a(i)?;
    let width = t_big.pow(i - 1);
    let twice_b = 2 * a_i + width;
    let (floor_b, ceil_b) = (twice_b / 2, twice_b.div_ceil(2));
    let i_big = i as u128;

    let odd = 2 * (r_big - i_big) + 3;
    let even = 2 * (r_big - i_big) + 2;
    let (value, regime) = if r_big + 2 <= floor_b + i_big {
        let regime = if r_big == a_i + i_big - 1 { Regime::OddFirst } else { Regime::OddRest };
        (Some(odd), regime)
    } else if r_big + 1 >= ceil_b + i_big {
        let regime = if r_big + 1 == ceil_b + i_big { Regime::EvenFirst } else { Regime::EvenRest };
        (Some(even), regime)
    } else {
        (None, Regime::Gap)
    };
    Ok(match value {
        Some(v) => FormulaResult { r, t, i, value: Some(v as u64), gap: false, candidates: vec![], regime },
        None => FormulaResult { r, t, i, value: None, gap: true, candidates: vec![even as u64, odd as u64], regime },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_values() {
        assert_eq!(chi_mu_formula(1, 2).unwrap().value, Some(2));
        assert_eq!(chi_mu_formula(2, 2).unwrap().value, Some(3));
        assert_eq!(chi_mu_formula(3, 2).unwrap().value, Some(4));
        let five = chi_mu_formula(5, 2).unwrap();
        assert_eq!((five.i, five.value), (3, Some(7)));
        let six = chi_mu_formula(6, 2).unwrap();
        assert_eq!((six.i, six.value), (3, Some(9)));
    }

    #[test]
    fn ternary_gap() {
        let f = chi_mu_formula(3, 3).unwrap();
        assert!(f.gap);
        assert_eq!(f.i, 2);
        assert_eq!(f.candidates, vec![4, 5]);
        assert_eq!(f.value, None);
        assert_eq!(chi_mu_formula(2, 3).unwrap().value, Some(3));
    }

    #[test]
    fn rejects_bad_params() {
        assert!(chi_mu_formula(0, 2).is_err());
        assert!(chi_mu_formula(3, 1).is_err());
    }

    /// Direct transcription of the two binary ranges, for cross-checking.
    fn binary_reference(r: u32) -> u64 {
        let r = r as i64;
        for i in 1..40i64 {
            let p = |e: i64| 1i64 << e;
            let lo = p(i - 1) + i - 2;
            let mid = p(i - 1) + if i >= 2 { p(i - 2) } else { 0 } + i - 3;
            let hi = p(i) + i - 2;
            if lo <= r && r <= mid {
                return (2 * (r - i) + 3) as u64;
            }
            if mid < r && r <= hi {
                return (2 * (r - i) + 2) as u64;
            }
        }
        unreachable!()
    }

    #[test]
    fn binary_matches_reference_ranges() {
        for r in 2..=60 {
            assert_eq!(chi_mu_formula(r, 2).unwrap().value, Some(binary_reference(r)), "r={r}");
        }
    }
}
