use thiserror::Error;

/// Errors raised by lattice construction and the computations built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a lattice: elements {0} and {1} have no unique {2}")]
    NotALattice(usize, usize, &'static str),
    #[error("poset has no unique minimum or maximum")]
    NoBoundedExtremes,
    #[error("cover relations contain a cycle through element {0}")]
    CycleDetected(usize),
    #[error("capacity exceeded: {what} = {got} (limit {limit})")]
    CapacityExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("element index {0} out of range for a lattice of size {1}")]
    IndexOutOfRange(usize, usize),
    #[error("elements {0} and {1} are not comparable as lo <= hi")]
    NotComparable(usize, usize),
    #[error("atom set must be nonempty")]
    EmptySet,
    #[error("lattice has {0} atoms; atom-set computations support at most {1}")]
    TooManyAtoms(usize, usize),
    #[error("atom order is not a strict partial order: {0}")]
    InvalidAtomOrder(String),
    #[error("atom order is not total")]
    NotTotalOrder,
    #[error("invalid atom selector at element {0}: {1}")]
    InvalidSelector(usize, String),
    #[error("condition (C') fails for circuit {0:?}")]
    ConditionCprimeViolated(Vec<usize>),
    #[error("search budget of {0} candidates exhausted")]
    BudgetExhausted(usize),
    #[error("exhaustive search found no perfect atom order")]
    ProvedNone,
    #[error("invalid bracket vector {0:?}")]
    InvalidBracketVector(Vec<usize>),
    #[error("invalid parenthesization: {0}")]
    InvalidParenthesization(String),
    #[error("partitions of different totals: {0} and {1}")]
    NotSameN(usize, usize),
    #[error("invalid partition or composition: {0}")]
    InvalidPartition(String),
    #[error("invalid shuffle word: {0}")]
    InvalidShuffleWord(String),
    #[error("not a maximal chain: {0}")]
    InvalidChain(String),
    #[error("left-modular and level conditions have not been verified for this chain")]
    PreconditionNotVerified,
    #[error("Möbius vector fails the Kronecker-sum check at element {0}")]
    MobiusInvariant(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown family specifier `{0}`")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
