//! Exact-arithmetic workbench for ω-Lie algebras and ω-left-symmetric
//! algebras.
//!
//! The crate provides exact scalars ([`field`]), dense linear algebra
//! ([`linalg`]), the algebra model with its axiom checkers ([`algebra`]),
//! the built-in families ([`catalog`]), Gröbner bases ([`groebner`]), and a
//! decider for whether an ω-Lie algebra carries a compatible
//! ω-left-symmetric product ([`admissibility`]).

pub mod admissibility;
pub mod algebra;
pub mod catalog;
pub mod field;
pub mod groebner;
pub mod io;
pub mod linalg;

pub use algebra::{OmegaForm, OmegaLieAlgebra, OmegaLsaAlgebra, StructureTensor};
pub use field::{FieldElement, FieldKind};
pub use linalg::{AffineSpace, Matrix};
