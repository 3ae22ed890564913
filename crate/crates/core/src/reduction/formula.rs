//! NAE3SAT formulas: parsing, normalization and evaluation.
//!
//! Text format, one clause per line, DIMACS style:
//!
//! ```text
//! c optional comments
//! p nae3 <q> <m>
//! <l1> <l2> <l3> 0
//! ```

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::graph::io::{content_lines, parse_number, syntax};

/// Largest variable count accepted from text input.
pub const MAX_PARSED_VARIABLES: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    /// 1-based variable index.
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Self { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Self { var, positive: false }
    }

    pub fn negated(self) -> Self {
        Self { positive: !self.positive, ..self }
    }

    /// Truth value under `values` (0-based by variable).
    pub fn eval(self, values: &[bool]) -> bool {
        values[self.var - 1] == self.positive
    }

    fn from_signed(line: usize, token: &str, q: usize) -> Result<Self> {
        let raw: i64 = token.parse().map_err(|_| syntax(line, format!("invalid literal `{token}`")))?;
        let var = raw.unsigned_abs() as usize;
        if var == 0 || var > q {
            return Err(Error::VariableOutOfRange { line, var, q });
        }
        Ok(Self { var, positive: raw > 0 })
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "{}", self.var)
        } else {
            write!(f, "-{}", self.var)
        }
    }
}

pub type Clause = [Literal; 3];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NaeFormula {
    pub q: usize,
    pub clauses: Vec<Clause>,
}

impl NaeFormula {
    pub fn new(q: usize, clauses: Vec<Clause>) -> Result<Self> {
        for clause in &clauses {
            for lit in clause {
                if lit.var == 0 || lit.var > q {
                    return Err(Error::VariableOutOfRange { line: 0, var: lit.var, q });
                }
            }
        }
        Ok(Self { q, clauses })
    }

    /// Every clause mentions three distinct variables.
    pub fn is_normalized(&self) -> bool {
        self.first_unnormalized().is_none()
    }

    pub(crate) fn first_unnormalized(&self) -> Option<usize> {
        self.clauses.iter().position(|[a, b, c]| a.var == b.var || a.var == c.var || b.var == c.var)
    }

    /// True iff no clause has all three literals equal under `values`.
    pub fn nae_satisfied_by(&self, values: &[bool]) -> bool {
        self.clauses.iter().all(|clause| {
            let first = clause[0].eval(values);
            clause[1..].iter().any(|l| l.eval(values) != first)
        })
    }
}

pub fn parse_nae_formula(text: &str) -> Result<NaeFormula> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| syntax(0, "missing `p nae3` header"))?;
    if header.len() != 4 || header[0] != "p" || header[1] != "nae3" {
        return Err(syntax(line, "expected `p nae3 <q> <m>`"));
    }
    let q = parse_number(line, header[2], "variable count")?;
    let m = parse_number(line, header[3], "clause count")?;
    if q > MAX_PARSED_VARIABLES {
        return Err(syntax(line, format!("variable count {q} exceeds {MAX_PARSED_VARIABLES}")));
    }

    let mut clauses = Vec::new();
    for (line, tokens) in lines {
        let (last, lits) = tokens.split_last().expect("content lines are non-empty");
        if *last != "0" {
            return Err(syntax(line, "clause must end with 0"));
        }
        if lits.len() != 3 {
            return Err(Error::ClauseArity { line, found: lits.len() });
        }
        let mut clause = [Literal::pos(1); 3];
        for (slot, tok) in clause.iter_mut().zip(lits) {
            *slot = Literal::from_signed(line, tok, q)?;
        }
        clauses.push(clause);
    }
    if clauses.len() != m {
        return Err(syntax(0, format!("header declares {m} clauses, found {}", clauses.len())));
    }
    Ok(NaeFormula { q, clauses })
}

pub fn write_nae_formula(f: &NaeFormula) -> String {
    let mut out = format!("p nae3 {} {}\n", f.q, f.clauses.len());
    for [a, b, c] in &f.clauses {
        let _ = writeln!(out, "{a} {b} {c} 0");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalizeOutcome {
    Normalized(NaeFormula),
    /// Some clause repeats one literal three times; no assignment works.
    TriviallyUnsat {
        clause: usize,
    },
}

/// Rewrites `f` so every clause has three distinct variables.
///
/// Per clause: three copies of one literal make the formula unsatisfiable; a
/// complementary pair makes the clause always satisfied, so it is dropped;
/// `{l1, l1, l2}` becomes `{l1, l2, a}` and `{l1, l2, ¬a}` with a fresh `a`.
/// Fresh variables are numbered after `q` in clause order.
pub fn normalize(f: &NaeFormula) -> NormalizeOutcome {
    if let Some(clause) = f.clauses.iter().position(|[a, b, c]| a == b && b == c) {
        return NormalizeOutcome::TriviallyUnsat { clause };
    }
    let mut q = f.q;
    let mut clauses = Vec::with_capacity(f.clauses.len());
    for clause in &f.clauses {
        let [a, b, c] = *clause;
        let complementary = [(a, b), (a, c), (b, c)].iter().any(|&(x, y)| x == y.negated());
        if complementary {
            continue;
        }
        let pair = if a == b {
            Some((a, c))
        } else if a == c || b == c {
            Some((a, b))
        } else {
            None
        };
        match pair {
            Some((l1, l2)) => {
                q += 1;
                clauses.push([l1, l2, Literal::pos(q)]);
                clauses.push([l1, l2, Literal::neg(q)]);
            }
            None => clauses.push(*clause),
        }
    }
    NormalizeOutcome::Normalized(NaeFormula { q, clauses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: usize) -> Literal {
        Literal::pos(v)
    }

    fn n(v: usize) -> Literal {
        Literal::neg(v)
    }

    #[test]
    fn parses_single_clause() {
        let f = parse_nae_formula("p nae3 3 1\n1 2 3 0\n").unwrap();
        assert_eq!(f.q, 3);
        assert_eq!(f.clauses, vec![[p(1), p(2), p(3)]]);
        let g = parse_nae_formula("c x\np nae3 3 1\n1 -2 3 0\n").unwrap();
        assert_eq!(g.clauses[0][1], n(2));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_nae_formula("p nae3 3 1\n1 2 0\n"), Err(Error::ClauseArity { line: 2, found: 2 })));
        assert!(matches!(parse_nae_formula("p nae3 3 1\n1 2 4 0\n"), Err(Error::VariableOutOfRange { var: 4, .. })));
        assert!(matches!(parse_nae_formula("p nae3 3 1\n1 2 3\n"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_nae_formula("p nae3 3 2\n1 2 3 0\n"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_nae_formula("p cnf 3 1\n1 2 3 0\n"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_nae_formula("p nae3 3 1\n1 x 3 0\n"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_nae_formula("p nae3 3 1\n1 0 3 0\n"), Err(Error::VariableOutOfRange { var: 0, .. })));
    }

    #[test]
    fn duplicate_clauses_are_kept() {
        let f = parse_nae_formula("p nae3 3 2\n1 2 3 0\n1 2 3 0\n").unwrap();
        assert_eq!(f.clauses.len(), 2);
    }

    #[test]
    fn normalization_cases() {
        let f = NaeFormula::new(1, vec![[p(1), p(1), p(1)]]).unwrap();
        assert_eq!(normalize(&f), NormalizeOutcome::TriviallyUnsat { clause: 0 });

        let f = NaeFormula::new(2, vec![[p(1), n(1), p(2)]]).unwrap();
        assert_eq!(normalize(&f), NormalizeOutcome::Normalized(NaeFormula { q: 2, clauses: vec![] }));

        let f = NaeFormula::new(2, vec![[p(1), p(1), p(2)]]).unwrap();
        assert_eq!(
            normalize(&f),
            NormalizeOutcome::Normalized(NaeFormula { q: 3, clauses: vec![[p(1), p(2), p(3)], [p(1), p(2), n(3)]] })
        );

        // {x, x, ¬x} is complementary, not trivially unsatisfiable
        let f = NaeFormula::new(1, vec![[p(1), p(1), n(1)]]).unwrap();
        assert_eq!(normalize(&f), NormalizeOutcome::Normalized(NaeFormula { q: 1, clauses: vec![] }));
    }

    fn any_formula() -> impl Strategy<Value = NaeFormula> {
        (1usize..5).prop_flat_map(|q| {
            let lit = (1..=q, any::<bool>()).prop_map(|(var, positive)| Literal { var, positive });
            proptest::collection::vec([lit.clone(), lit.clone(), lit], 0..5)
                .prop_map(move |clauses| NaeFormula { q, clauses })
        })
    }

    fn brute_sat(f: &NaeFormula) -> bool {
        (0u32..1 << f.q).any(|m| {
            let values: Vec<bool> = (0..f.q).map(|i| m >> i & 1 == 1).collect();
            f.nae_satisfied_by(&values)
        })
    }

    proptest! {
        #[test]
        fn normalization_preserves_satisfiability(f in any_formula()) {
            match normalize(&f) {
                NormalizeOutcome::TriviallyUnsat { .. } => prop_assert!(!brute_sat(&f)),
                NormalizeOutcome::Normalized(g) => {
                    prop_assert!(g.is_normalized());
                    prop_assert_eq!(brute_sat(&g), brute_sat(&f));
                }
            }
        }

        #[test]
        fn write_parse_round_trip(f in any_formula()) {
            prop_assert_eq!(parse_nae_formula(&write_nae_formula(&f)).unwrap(), f);
        }
    }
}
