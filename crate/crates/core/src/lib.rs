//! Exact integer and (0,1)-matrix toolkit around the operator
//! `theta(A) = (kappa - 1) I + J - A Aᵀ` and its fixed-point equation
//! `theta^m(A) = A`.
//!
//! The crate is organised around that operator:
//!
//! - [`matrix`] — dense exact matrices, the operator itself, and the
//!   class-membership predicates (constant sums, symmetry, zero diagonal,
//!   J₂-freeness).
//! - [`equiv`] — permutations acting by conjugation, an exact canonical
//!   form for (0,1)-matrices under simultaneous row/column permutation,
//!   and the equivalence decision built on it.
//! - [`geometry`] — graph and incidence-configuration views: the
//!   non-collinearity graph of a configuration, neighbourhood geometries,
//!   girth/diameter/centres, triangle census, Terwilliger test.
//! - [`standard_form`] — block decompositions `S(P)` of adjacency matrices
//!   anchored at a radius-2 centre, and their Hoffman–Singleton normal
//!   forms.
//! - [`corpus`] — the built-in named matrices (5-cycle and Petersen
//!   HS-forms, the Terwilliger graphs T₁ and T₂, configuration #1971).
//! - [`solver`] — orbit analysis under repeated `theta`, exhaustive
//!   classification of fixed points for small `kappa`, and the integer
//!   sweep for the deficiency fixed-point equation.
//! - [`format`] — the "mat v1" text encoding used for all matrix exchange.
//!
//! The crate is `no_std` (with `alloc`); file IO, the CLI, and the worker
//! pool live in the companion `theta-lab` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod corpus;
pub mod equiv;
pub mod format;
pub mod geometry;
pub mod matrix;
pub mod solver;
pub mod standard_form;
pub mod testgen;

pub use equiv::{canonical_form, conjugate, p_equivalent, CanonicalCertificate, Permutation};
pub use matrix::{
    classify_membership, delta, is_j2_free, row_col_sums, theta, theta_iterate, BinMatrix,
    ClassMembership, IntMatrix, MatrixError,
};
