//! Numerical laboratory for curvature positivity conditions on Kähler manifolds.
//!
//! The central quantity is the orthogonal Ricci curvature
//! `Ric^⊥(X) = Ric(X,X̄) - R(X,X̄,X,X̄)/|X|²`, evaluated on algebraic Kähler
//! curvature tensors at a point. The crate provides:
//!
//! - [`curvature`]: tensor types, symmetry validation, Ricci / holomorphic
//!   sectional / quadratic bisectional forms, and the Hermitian operator `Q`
//!   on symmetric 2-tensors whose top eigenvalue bounds holomorphic sectional
//!   curvature.
//! - [`models`]: curvature tensors of standard model spaces (projective space,
//!   Grassmannians and their symmetric-matrix cousins, products of curves) and
//!   bundle curvature data for split and (co)tangent bundles over projective
//!   space.
//! - [`cspace`]: the catalog of compact simply connected homogeneous Kähler
//!   manifolds with `b₂ = 1`, driven by root-system combinatorics, with
//!   per-space positivity verdicts.
//! - [`projbundle`]: curvature of a projectivized vector bundle `P(E*)` at an
//!   adapted point for the metric `λ·π*ω + c₁(L, ĥ)`, plus the closed-form
//!   positivity condition for split bundles.
//! - [`certify`]: deterministic seeded optimizers that certify extremal
//!   curvature values over unit directions and frames, with machine-readable
//!   reports.
//! - [`io`]: a JSON tensor file format with validation on load and exact
//!   round-tripping.
//!
//! Runnable walkthroughs live in `examples/` (one per capability):
//!
//! ```text
//! cargo run -p ricperp --example model_spaces
//! cargo run -p ricperp --example certify_directions
//! cargo run -p ricperp --example homogeneous_catalog
//! cargo run -p ricperp --example projective_bundles
//! cargo run -p ricperp --example phi_pieces
//! cargo run -p ricperp --example rigidity_classify
//! cargo run -p ricperp --example tensor_files
//! ```
//!
//! The same functionality is reachable from the thin `ricperp` binary
//! (`model`, `cspace`, `certify`, `projbundle` subcommands); see the README.

pub mod certify;
pub mod cli;
pub mod cspace;
pub mod curvature;
pub mod error;
pub mod io;
pub mod models;
pub mod projbundle;
mod threads;

pub use error::{Error, Result};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
