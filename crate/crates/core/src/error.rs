use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    OutOfRangeVertex { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("graph is disconnected")]
    DisconnectedGraph,

    #[error("vertices {0} and {1} are not connected")]
    UnreachablePair(usize, usize),

    #[error("coloring covers {got} vertices, graph has {expected}")]
    ColoringNotTotal { expected: usize, got: usize },

    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("line {line}: clause has {found} literals, expected 3")]
    ClauseArity { line: usize, found: usize },

    #[error("line {line}: variable {var} out of range 1..={q}")]
    VariableOutOfRange { line: usize, var: usize, q: usize },

    #[error("{q} variables exceeds the brute-force cap of {cap}")]
    TooManyVariables { q: usize, cap: usize },

    #[error("graph would have {n} vertices, cap is {cap}")]
    SizeCapExceeded { n: u128, cap: usize },

    #[error("invalid quasi-leaf index {0}")]
    InvalidQuasiLeaf(usize),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("formula gap: candidates {}", join(candidates))]
    GapInput { r: u32, t: u32, candidates: Vec<u64> },

    #[error("no coloring interpretation validated for GT({r},{t})")]
    ConstructionFailed { r: u32, t: u32 },

    #[error("clause {0} does not have three distinct variables")]
    NonNormalizedInput(usize),

    #[error("assignment covers {got} variables, formula has {expected}")]
    PartialAssignment { expected: usize, got: usize },

    #[error("coloring uses {0} colors, expected exactly 2")]
    WrongColorCount(usize),

    #[error("budget exhausted; chromatic number in [{lo}, {hi}]")]
    BudgetExhausted { lo: usize, hi: usize },
}

fn join(values: &[u64]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}
