//! Difference bases of cyclic groups, dihedral groups and integer intervals.
//!
//! A subset `B` of a group `G` is a difference basis when every element of
//! `G` is a difference `a·b⁻¹` of two members of `B`; the least size of such a
//! set is the difference size `Δ[G]`. This crate computes `Δ` exactly by
//! search, builds explicit bases from finite-field difference sets and
//! subgroup products, and evaluates the closed-form bounds around them.

pub mod bounds;
pub mod cache;
pub mod constructions;
pub mod error;
pub mod field;
pub mod group;
pub mod search;
pub mod tables;

pub use error::{Error, Result};
pub use group::{
    difference_cover, is_difference_basis, split_dihedral_basis, Basis, CoverageMask, Element,
    GroupKind, GroupSpec,
};
pub use search::{
    find_basis_of_size, max_additional_coverage, min_difference_basis, min_interval_basis,
    SearchConfig, SearchOutcome,
};
pub use bounds::{
    bound_report, characteristic, dihedral_lower_bound, exact_by_theorem, interval_lower_bound,
    lower_bound_generic, BoundReport, Characteristic, DeltaSource, TheoremValue,
};
pub use cache::{CacheRecord, CacheStore};
pub use constructions::{
    bose_chowla_set, cyclic_basis_from_interval, dihedral_basis_from_cyclic, product_basis,
    singer_set, subgroup_transversal_basis, CertifiedBasis, Provenance, SidonSet,
};
pub use field::{dlog_table, make_field, primitive_element, DlogTable, FieldElement, FieldSpec};
