use thiserror::Error;

use crate::automaton::Diagnostic;

/// Errors raised by the analysis operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid automaton: {}", join_diagnostics(.0))]
    Invalid(Vec<Diagnostic>),

    #[error("machine is not invertible: output function of state `{state}` is not a permutation")]
    NotInvertible { state: String },

    #[error("unknown symbol {index} (id space has {size} symbols)")]
    UnknownSymbol { index: usize, size: usize },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("power would have {states} states, above the cap of {cap}")]
    BudgetExceeded { states: u128, cap: usize },

    #[error("not a cycle: {0}")]
    NotACycle(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("no states x != y with transitions into a common state")]
    NoSuchTriple,

    #[error("NoExitCycle: the automaton has no cycle with exit")]
    NoExitCycle,

    #[error("pruning left no state")]
    EmptyResult,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

fn join_diagnostics(diags: &[Diagnostic]) -> String {
    diags
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
