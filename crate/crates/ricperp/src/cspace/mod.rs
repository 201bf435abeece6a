//! Catalog of compact homogeneous Kähler spaces with second Betti number
//! one: root-system combinatorics, stored curvature constants, and the
//! sign classifications built from them.

pub mod classify;
pub mod roots;

pub use classify::{
    classify, classify_range, einstein_constant, nu_bound, qb_verdict, ricperp_verdict,
    CSpaceDescriptor, ClassificationRecord, PositiveReason, QbVerdict, RicperpVerdict,
};
pub use roots::{cartan_matrix, positive_roots, Family, RootVector};
