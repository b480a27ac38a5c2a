//! Exact combinatorics of cyclotomic KLR algebras of affine types A and C.
//!
//! The crate computes, in exact arithmetic, the combinatorial shadow of the
//! cyclotomic KLR algebras attached to affine quivers of types A and C:
//! content systems on multipartitions, seminormal matrix representations of
//! the Specht modules, graded degrees and defects, Fock-space operators,
//! canonical bases and graded decomposition matrices, crystal graphs,
//! Kleshchev multipartitions and the Mullineux map.
//!
//! # Module map
//! - [`exactmath`] — Laurent polynomials in `q`, polynomials and rational
//!   functions in `x`, trivariate polynomials for the deformed relations
//! - [`cartan`] — quivers, Cartan data, charges, roots, defects
//! - [`tableaux`] — multipartitions, content systems, standard tableaux
//! - [`seminormal`] — seminormal representations and relation checking
//! - [`fock`] — Fock-space operators, canonical bases, decomposition matrices
//! - [`crystal`] — crystal operators, Kleshchev sets, the Mullineux map
//!
//! All computations are exact: no floating point anywhere.

pub mod cartan;
pub mod crystal;
pub mod error;
pub mod exactmath;
pub mod fock;
pub mod seminormal;
pub mod tableaux;

pub use error::{Error, Result};
