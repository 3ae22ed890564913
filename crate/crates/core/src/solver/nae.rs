//! Brute-force NAE3SAT.

use crate::error::{Error, Result};
use crate::reduction::formula::NaeFormula;

pub const DEFAULT_VARIABLE_CAP: usize = 24;

/// Truth values indexed by variable, `values[i]` for `x_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NaeAssignment {
    pub values: Vec<bool>,
}

impl NaeAssignment {
    pub fn new(values: Vec<bool>) -> Self {
        Self { values }
    }

    /// The `index`-th assignment in enumeration order: `x_1` is the most
    /// significant bit, `x_q` the least.
    pub fn from_index(q: usize, index: u64) -> Self {
        Self { values: (0..q).map(|i| index >> (q - 1 - i) & 1 == 1).collect() }
    }

    pub fn complement(&self) -> Self {
        Self { values: self.values.iter().map(|v| !v).collect() }
    }

    /// Signed literals, e.g. `-1 -2 3`.
    pub fn to_literals(&self) -> String {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &v)| if v { format!("{}", i + 1) } else { format!("-{}", i + 1) })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Scans all `2^q` assignments in increasing binary order and returns the
/// first NAE-satisfying one.
pub fn nae_satisfiable(f: &NaeFormula, cap: usize) -> Result<Option<NaeAssignment>> {
    if f.q > cap || f.q >= 64 {
        return Err(Error::TooManyVariables { q: f.q, cap });
    }
    Ok((0..1u64 << f.q).map(|m| NaeAssignment::from_index(f.q, m)).find(|a| f.nae_satisfied_by(&a.values)))
}
