use alloc::string::String;

/// Every fallible operation in this crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("variable count {0} outside 1..=32")]
    VarCount(usize),
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("no squarefree monomials of degree {d} in {n} variables")]
    EmptyClass { n: usize, d: u32 },
    #[error("{0} has no lex neighbor in that direction")]
    NoNeighbor(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("lexsegment ends out of order: {0}")]
    Order(String),
    #[error("squarefree input required: {0}")]
    Flavor(String),
    #[error("not a face of the complex: {0}")]
    Face(String),
    #[error("scale cap exceeded: {0}")]
    Scale(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("outside the hypotheses of the closed form: {0}")]
    Domain(String),
    #[error("independent checks disagree: {0}")]
    Disagreement(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = core::result::Result<T, Error>;
