//! Seminormal matrix representations over ℚ(x): relation verification,
//! γ-coefficients, defect polynomials, ψ-basis matrices, weight-space
//! dimensions and q-characters.

pub mod basis;
pub mod gamma;
pub mod matrix;
pub mod rep;

pub use basis::{graded_weightspace_dim, psi_basis_matrix, specht_character, AlgebraRep};
pub use gamma::{defect_polynomial, gamma, gamma_closed, DefectPolynomial};
pub use matrix::Mat;
pub use rep::{beta, build_rep, q_m, verify_relations, RelationReport, SeminormalRep};
