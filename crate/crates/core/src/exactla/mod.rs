//! Exact linear algebra over the rationals and prime fields.
//!
//! Homology over different fields may differ (torsion in integral homology
//! shows up only in some characteristics), so every computation carries its
//! [`Field`] explicitly. [`Field::Rationals`] is the default; `Z/32003` is
//! the fast mode.

mod echelon;
mod matrix;
mod scalar;

pub use echelon::{RowEchelon, SparseRow};
pub use matrix::{homology_dim, kernel_basis, rank, SparseMatrix};
pub use scalar::{Field, Scalar, DEFAULT_PRIME};
