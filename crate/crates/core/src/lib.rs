//! Exact computations linking Helly-type statements for families of
//! complexes with multigraded free resolutions of ideals.
//!
//! Everything is exact: ranks are computed over `QQ` or `Z/p`, and every
//! degree-capped computation either proves completeness or says it could not.

pub mod betti;
pub mod cellular;
pub mod error;
pub mod exactla;
pub mod generate;
pub mod monomial;
pub mod multigraded;
pub mod simplicial;
pub mod text;
pub mod theorems;

pub use betti::{
    betti_squarefree_hochster, betti_table_koszul, eliahou_kervaire_complex, has_linear_resolution,
    projective_dimension, regularity, syzygy_piece_dim, verify_free_complex_is_resolution,
    BettiTable, FreeComplex, ScanDomain,
};
pub use cellular::{
    family_from_labeling, helly_bound_check, is_cellular_resolution, labeling_from_family,
    CellComplex, LabeledComplex,
};
pub use error::{Error, Result};
pub use exactla::{Field, Scalar, SparseMatrix};
pub use monomial::{ColoredRing, Monomial, MonomialIdeal, Multidegree};
pub use multigraded::{MultigradedIdeal, Polynomial};
pub use simplicial::{
    alexander_dual, is_leray, nerve, reduced_homology_dims, Face, FamilyMember, SimplicialComplex,
    SubcomplexFamily,
};
pub use theorems::{CheckReport, Lambda, TheoremId, Verdict};
