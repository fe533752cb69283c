//! Exact integer linear algebra over arbitrary-precision integers.
//!
//! Everything downstream (boundary homology, variations, certificates) reduces
//! to Smith normal forms, kernels, cokernels and basis completions computed
//! here. No floats, no modular shortcuts: every identity is exact over `Z`.

mod abelian;
mod matrix;
mod snf;

pub use abelian::{
    column_hnf, complete_to_basis, cokernel, kernel_basis, right_inverse, row_hnf,
    unimodular_inverse, FGAbelianGroup,
};
pub use matrix::{bigint_vec, IntMatrix, IntVector};
pub use snf::{smith_normal_form, SmithDecomposition};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("vector is not primitive (content {0} != 1)")]
    NonPrimitive(num_bigint::BigInt),
    #[error("matrix entry at ({0}, {1}) does not fit in i64")]
    EntryOverflow(usize, usize),
    #[error("expected a {expected} matrix, got {rows}x{cols}")]
    ShapeMismatch {
        expected: &'static str,
        rows: usize,
        cols: usize,
    },
}
