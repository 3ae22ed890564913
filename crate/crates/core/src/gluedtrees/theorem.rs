use serde::Serialize;

use super::build_glued_tree;
use super::construct::{constructive_coloring, Interpretation};
use super::formula::{chi_mu_formula, Regime};
use crate::error::{Error, Result};
use crate::graph::DistanceOracle;
use crate::solver::{chi_mu_exact, Budget};
use crate::visibility::{validate_gp_coloring, ReportMode};

#[derive(Debug, Clone, Copy)]
pub struct TheoremOptions {
    /// Also run the exact solver and compare.
    pub exact: bool,
    /// Also report whether the construction is a GP coloring.
    pub gp: bool,
    pub budget: Budget,
    pub size_cap: usize,
}

impl Default for TheoremOptions {
    fn default() -> Self {
        Self { exact: false, gp: false, budget: Budget::unlimited(), size_cap: super::DEFAULT_SIZE_CAP }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FormulaSummary {
    pub i: u32,
    pub value: Option<u64>,
    pub gap: bool,
    pub candidates: Vec<u64>,
    pub regime: Regime,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactSummary {
    /// `None` when the budget ran out.
    pub chi: Option<usize>,
    pub lo: usize,
    pub hi: usize,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub r: u32,
    pub t: usize,
    pub n: usize,
    pub formula: FormulaSummary,
    pub construction_colors: Option<usize>,
    pub interpretation: Option<Interpretation>,
    pub mv_valid: Option<bool>,
    pub gp_valid: Option<bool>,
    pub exact: Option<ExactSummary>,
}

impl TheoremReport {
    /// Formula value, construction and (if run) exact search all agree.
    pub fn agree(&self) -> bool {
        let Some(value) = self.formula.value else { return false };
        let constructed = self.construction_colors == Some(value as usize) && self.mv_valid == Some(true);
        let exact = match &self.exact {
            Some(e) => e.chi.is_none_or(|c| c == value as usize),
            None => true,
        };
        constructed && exact
    }
}

/// Builds `GT(r, t)`, evaluates the formula, colors the tree constructively
/// and optionally compares with exact search. Gap inputs are an error.
pub fn verify_theorem(r: u32, t: usize, opts: &TheoremOptions) -> Result<TheoremReport> {
    let formula = chi_mu_formula(r, t)?;
    if formula.gap {
        return Err(Error::GapInput { r, t: t as u32, candidates: formula.candidates });
    }
    let tree = build_glued_tree(r, t, opts.size_cap)?;
    let oracle = DistanceOracle::new(tree.graph());
    let construction = match constructive_coloring(&tree, &oracle) {
        Ok(c) => Some(c),
        Err(Error::ConstructionFailed { .. }) => None,
        Err(e) => return Err(e),
    };
    let gp_valid = match (&construction, opts.gp) {
        (Some(c), true) => Some(validate_gp_coloring(tree.graph(), &oracle, &c.coloring, ReportMode::FailFast)?.valid),
        _ => None,
    };
    let exact = if opts.exact {
        Some(match chi_mu_exact(tree.graph(), &oracle, opts.budget) {
            Ok(res) => {
                ExactSummary { chi: Some(res.chi), lo: res.chi, hi: res.chi, nodes_explored: res.nodes_explored }
            }
            Err(Error::BudgetExhausted { lo, hi }) => ExactSummary { chi: None, lo, hi, nodes_explored: 0 },
            Err(e) => return Err(e),
        })
    } else {
        None
    };
    Ok(TheoremReport {
        r,
        t,
        n: tree.n(),
        formula: FormulaSummary {
            i: formula.i,
            value: formula.value,
            gap: formula.gap,
            candidates: formula.candidates,
            regime: formula.regime,
        },
        construction_colors: construction.as_ref().map(|c| c.colors),
        interpretation: construction.as_ref().map(|c| c.interpretation),
        mv_valid: Some(construction.is_some()),
        gp_valid,
        exact,
    })
}
