use serde::Serialize;

use super::formula::{normalize, NaeFormula, NormalizeOutcome};
use super::{assignment_to_coloring, build_reduction, coloring_to_assignment};
use crate::error::Result;
use crate::graph::DistanceOracle;
use crate::solver::nae::nae_satisfiable;
use crate::solver::{Budget, SearchStatus, Solver};
use crate::visibility::{validate_mv_coloring, ReportMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NaeVerdict {
    Sat,
    Unsat,
    /// Too many variables for the brute-force scan.
    Skipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MvVerdict {
    Feasible,
    Infeasible,
    Budget,
    /// Not run because normalization already decided the instance.
    Skipped,
}

/// Both sides of the equivalence for one formula.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionReport {
    pub trivially_unsat: bool,
    pub q: usize,
    pub clauses: usize,
    pub vertices: usize,
    pub edges: usize,
    pub nae: NaeVerdict,
    /// First satisfying assignment as signed literals.
    pub assignment: Option<String>,
    pub mv2: MvVerdict,
    pub nodes_explored: u64,
    /// `None` when either side could not finish.
    pub agree: Option<bool>,
    pub by_normalization: bool,
    /// Whether the coloring built from the satisfying assignment validates.
    pub forward_coloring_valid: Option<bool>,
    /// Whether the assignment read off the solver's 2-coloring satisfies the
    /// normalized formula.
    pub backward_assignment_satisfying: Option<bool>,
}

/// Normalizes `f`, then decides NAE satisfiability by brute force and MV
/// 2-colorability of the reduction graph by exact search, and compares.
pub fn verify_reduction(f: &NaeFormula, budget: Budget, nae_cap: usize) -> Result<ReductionReport> {
    let normalized = match normalize(f) {
        NormalizeOutcome::TriviallyUnsat { .. } => {
            return Ok(ReductionReport {
                trivially_unsat: true,
                q: f.q,
                clauses: f.clauses.len(),
                vertices: 0,
                edges: 0,
                nae: NaeVerdict::Unsat,
                assignment: None,
                mv2: MvVerdict::Skipped,
                nodes_explored: 0,
                agree: Some(true),
                by_normalization: true,
                forward_coloring_valid: None,
                backward_assignment_satisfying: None,
            });
        }
        NormalizeOutcome::Normalized(g) => g,
    };

    // Without variables the reduction graph degenerates to p–c plus two
    // isolated hubs; the empty formula is satisfiable by definition.
    if normalized.q == 0 {
        return Ok(ReductionReport {
            trivially_unsat: false,
            q: 0,
            clauses: 0,
            vertices: 0,
            edges: 0,
            nae: NaeVerdict::Sat,
            assignment: Some(String::new()),
            mv2: MvVerdict::Skipped,
            nodes_explored: 0,
            agree: Some(true),
            by_normalization: true,
            forward_coloring_valid: None,
            backward_assignment_satisfying: None,
        });
    }

    let rg = build_reduction(&normalized)?;
    let oracle = DistanceOracle::new(&rg.graph);
    let (nae, search) =
        rayon::join(|| nae_satisfiable(&normalized, nae_cap), || Solver::new(&rg.graph, &oracle).decide(2, budget));
    let nae = nae.ok();

    let nae_verdict = match &nae {
        Some(Some(_)) => NaeVerdict::Sat,
        Some(None) => NaeVerdict::Unsat,
        None => NaeVerdict::Skipped,
    };
    let mv2 = match &search.status {
        SearchStatus::Feasible(_) => MvVerdict::Feasible,
        SearchStatus::Infeasible => MvVerdict::Infeasible,
        SearchStatus::BudgetExhausted => MvVerdict::Budget,
    };
    let agree = match (nae_verdict, mv2) {
        (NaeVerdict::Sat, MvVerdict::Feasible) | (NaeVerdict::Unsat, MvVerdict::Infeasible) => Some(true),
        (NaeVerdict::Sat, MvVerdict::Infeasible) | (NaeVerdict::Unsat, MvVerdict::Feasible) => Some(false),
        _ => None,
    };

    let witness = nae.flatten();
    let forward_coloring_valid = match &witness {
        Some(a) => {
            let c = assignment_to_coloring(&rg, a)?;
            Some(validate_mv_coloring(&rg.graph, &oracle, &c, ReportMode::FailFast)?.valid)
        }
        None => None,
    };
    let backward_assignment_satisfying = match &search.status {
        SearchStatus::Feasible(c) if c.k() == 2 => {
            let a = coloring_to_assignment(&rg, c)?;
            Some(normalized.nae_satisfied_by(&a.values))
        }
        _ => None,
    };

    Ok(ReductionReport {
        trivially_unsat: false,
        q: normalized.q,
        clauses: normalized.clauses.len(),
        vertices: rg.graph.n(),
        edges: rg.graph.m(),
        nae: nae_verdict,
        assignment: witness.map(|a| a.to_literals()),
        mv2,
        nodes_explored: search.nodes_explored,
        agree,
        by_normalization: false,
        forward_coloring_valid,
        backward_assignment_satisfying,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::formula::Literal;
    use crate::solver::nae::DEFAULT_VARIABLE_CAP;

    fn lit(x: i32) -> Literal {
        if x > 0 {
            Literal::pos(x as usize)
        } else {
            Literal::neg((-x) as usize)
        }
    }

    fn formula(q: usize, clauses: &[[i32; 3]]) -> NaeFormula {
        NaeFormula::new(q, clauses.iter().map(|c| c.map(lit)).collect()).unwrap()
    }

    #[test]
    fn single_clause_agrees() {
        let r = verify_reduction(&formula(3, &[[1, 2, 3]]), Budget::unlimited(), DEFAULT_VARIABLE_CAP).unwrap();
        assert_eq!(r.nae, NaeVerdict::Sat);
        assert_eq!(r.mv2, MvVerdict::Feasible);
        assert_eq!(r.agree, Some(true));
        assert_eq!(r.forward_coloring_valid, Some(true));
        assert_eq!(r.backward_assignment_satisfying, Some(true));
        assert_eq!(r.vertices, 18);
    }

    #[test]
    fn covering_formula_agrees_negatively() {
        let f = formula(3, &[[1, 2, 3], [1, -2, -3], [-1, 2, -3], [-1, -2, 3]]);
        let r = verify_reduction(&f, Budget::unlimited(), DEFAULT_VARIABLE_CAP).unwrap();
        assert_eq!(r.vertices, 24);
        assert_eq!(r.nae, NaeVerdict::Unsat);
        assert_eq!(r.mv2, MvVerdict::Infeasible);
        assert_eq!(r.agree, Some(true));
    }

    #[test]
    fn trivial_unsat_short_circuits() {
        let r = verify_reduction(&formula(1, &[[1, 1, 1]]), Budget::unlimited(), DEFAULT_VARIABLE_CAP).unwrap();
        assert!(r.trivially_unsat && r.by_normalization);
        assert_eq!(r.agree, Some(true));
    }

    #[test]
    fn budget_leaves_agreement_open() {
        let f = formula(3, &[[1, 2, 3], [1, -2, -3], [-1, 2, -3], [-1, -2, 3]]);
        let r = verify_reduction(&f, Budget::nodes(3), DEFAULT_VARIABLE_CAP).unwrap();
        assert_eq!(r.mv2, MvVerdict::Budget);
        assert_eq!(r.agree, None);
    }
}
