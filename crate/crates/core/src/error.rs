use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(
        "cannot parse Lie type {0:?}: expected a series letter A-G followed by a decimal rank"
    )]
    ParseType(String),

    #[error("invalid rank {rank} for series {series}: {bound}")]
    InvalidRank {
        series: char,
        rank: usize,
        bound: &'static str,
    },

    #[error("{0:?} is not a root of {1}")]
    NotARoot(Vec<i64>, String),

    #[error("root string of {beta:?} through {alpha:?} is undefined for beta = ±alpha")]
    DegenerateString { alpha: Vec<i64>, beta: Vec<i64> },

    #[error(
        "{root:?} is not maximal: c = {cartan} against {witness:?} violates the |c| <= 2 criterion"
    )]
    NotMaximal {
        root: Vec<i64>,
        witness: Vec<i64>,
        cartan: i64,
    },

    #[error("operation requires type {expected}, got {found}")]
    WrongType { expected: String, found: String },

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("verification of `{check}` failed at {witness}")]
    Verification { check: String, witness: String },

    #[error("unclassifiable Dynkin component: {0}")]
    Unclassifiable(String),
}
