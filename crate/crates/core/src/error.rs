use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("multiplication table is not a Latin square: {0}")]
    NotLatin(String),
    #[error("multiplication is not associative: ({0} * {1}) * {2} != {0} * ({1} * {2})")]
    NotAssociative(usize, usize, usize),
    #[error("invalid group data: {0}")]
    InvalidGroup(String),
    #[error("group order exceeds the size cap of {cap} (got at least {got})")]
    CapExceeded { cap: usize, got: usize },
    #[error("element index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("element {0} does not normalize the subgroup")]
    NotNormalizing(usize),
    #[error("cochain of degree {0} not supported here")]
    BadDegree(usize),
    #[error("cochain is not normalized: nonzero value at {0:?}")]
    NotNormalized(Vec<usize>),
    #[error("not a cocycle: coboundary is {value} at {args:?}")]
    NotCocycle { args: Vec<usize>, value: String },
    #[error("d(psi) differs from omega restricted to H at {args:?}: d(psi) = {dpsi}, omega = {omega}")]
    CoboundaryMismatch { args: Vec<usize>, dpsi: String, omega: String },
    #[error("unknown builtin {0:?}")]
    UnknownBuiltin(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("invalid representation: {0}")]
    InvalidRep(String),
    #[error("bimodule axiom fails: {0}")]
    BimoduleAxiom(String),
    #[error("not a based ring: {0}")]
    NotBasedRing(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
