//! Text formats: scalar expressions and algebra files.

pub mod expr;
mod format;

use thiserror::Error;

use crate::algebra::{LieReport, LsaReport};

pub use expr::{parse_scalar, ExprContext, Value};
pub use format::{
    emit_algebra, emit_lie, emit_lsa, linear_combination as format_vector, parse_algebra_file, Algebra, AlgebraKind,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}: `{key}` listed twice")]
    DuplicateEntry { line: usize, key: String },
    #[error("line {line}: `{second}` duplicates `{first}`; antisymmetry is implicit")]
    AntisymmetryDuplicate { line: usize, first: String, second: String },
    #[error("bracket fails the omega-Lie axioms: {0}")]
    NotOmegaLie(Box<LieReport>),
    #[error("product fails the omega-left-symmetric identity: {0}")]
    NotOmegaLsa(Box<LsaReport>),
}
