use thiserror::Error;

use crate::algebra::{IdealViolation, MorphismViolation};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix has shape {found_rows}x{found_cols}, expected {rows}x{cols}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        found_rows: usize,
        found_cols: usize,
    },

    #[error("{0} is singular")]
    Singular(&'static str),

    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),

    #[error("map is not a morphism: {0}")]
    NotMorphism(MorphismViolation),

    #[error("subspace is not a two-sided Hom-ideal: {0}")]
    NotIdeal(IdealViolation),

    #[error("subspace is not invariant under the operator set")]
    NotInvariant,

    #[error("subspace is not a Hom-subalgebra")]
    NotSubalgebra,

    #[error("twist is not idempotent")]
    NotIdempotent,

    #[error("base algebra does not match: {0}")]
    BaseMismatch(String),

    #[error("incompatible module twist: {0}")]
    Incompatible(String),

    #[error("wrong argument kinds for the {0} slot pattern")]
    PatternMismatch(&'static str),

    #[error("malformed rational `{0}`")]
    MalformedRational(String),

    #[error("parse error at {locus}: {message}")]
    Parse { locus: String, message: String },

    #[error("index {index} out of range at {locus} (dimension {dim})")]
    IndexOutOfRange {
        locus: String,
        index: usize,
        dim: usize,
    },

    #[error("unknown fixture or file `{0}`")]
    UnknownInput(String),

    #[error("unknown command `{0}`")]
    UnknownCommand(String),

    #[error("bad arguments: {0}")]
    BadArguments(String),

    #[error("i/o error: {0}")]
    Io(String),
}
