//! Combinatorial Fock spaces over ℤ[q,q⁻¹]: quantum-group operator actions,
//! divided powers, canonical bases, graded decomposition and Cartan matrices.

pub mod basis;
pub mod vector;

pub use basis::{
    canonical_basis, cartan_matrix, decomposition_matrix, display_order, inverse_decomposition,
    DecompMatrix,
};
pub use vector::{divided_power_f, e_op, f_op, k_op, verify_commutator, FockVector};
