//! Exact integer linear algebra for finitely generated abelian groups.
//!
//! Groups are kept in canonical form `Z^rank ⊕ Z/d1 ⊕ … ⊕ Z/dk` with
//! `d1 | d2 | … | dk` and every `di ≥ 2`, so equality of groups is
//! structural equality. Homomorphisms are integer matrices with respect to
//! the canonical generators (free generators first, then torsion generators
//! in invariant-factor order). Everything is computed through Smith normal
//! form over arbitrary-precision integers; no fixed-width arithmetic is used
//! anywhere in this module.

mod group;
mod hom;
mod lattice;
mod matrix;
mod smith;

pub use group::FgAbelianGroup;
pub use hom::{is_exact_at, GroupHom};
pub use matrix::IntMatrix;
pub use smith::{smith_normal_form, SmithDecomposition};

use thiserror::Error;

/// Errors from group/homomorphism constructions and exactness checks.
#[derive(Debug, Error)]
pub enum FgabError {
    #[error("matrix dimensions {rows}x{cols} do not match {expected_rows}x{expected_cols}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("homomorphism is not well defined on domain generator {generator}: its order does not annihilate the image")]
    IllDefinedHom { generator: usize },
    #[error("middle groups do not match: codomain of the first map differs from the domain of the second")]
    MiddleGroupMismatch,
    #[error("invalid matrix entry at ({row},{col}): {message}")]
    BadEntry {
        row: usize,
        col: usize,
        message: String,
    },
}
