use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero ideal has no generators")]
    EmptyIdeal,
    #[error("negative exponent in generator ({u}, {v})")]
    NegativeExponent { u: i64, v: i64 },
    #[error("ideal is not m-primary: {0}")]
    NotMPrimary(String),
    #[error("ideal is not complete (integrally closed); pass --autoclose to replace it by its closure")]
    NotComplete,
    #[error("the unit ideal has no colength-type invariants")]
    UnitIdeal,
    #[error("degenerate polygon: {0}")]
    DegeneratePolygon(&'static str),
    #[error("polygon is not convex")]
    NonConvex,
    #[error("invalid block ideal ({p}, {q}): need p, q >= 1 and gcd(p, q) = 1")]
    InvalidBlock { p: i64, q: i64 },
    #[error("invalid edge ({c}, {d}): need c, d >= 1")]
    InvalidEdge { c: i64, d: i64 },
    #[error("ideal containment violated: generator ({u}, {v}) lies outside the larger ideal")]
    NotContained { u: i64, v: i64 },
    #[error("integer overflow")]
    Overflow,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
