//! The ψ-basis elements as block matrices on the direct sum of all
//! seminormal modules of one size, graded weight-space dimensions, and
//! q-characters.
//!
//! # Key Operations
//! - `AlgebraRep` — the faithful module ⊕_μ V_μ with block-diagonal
//!   generator action
//! - `psi_basis_matrix` — ψ_{st} built from preferred reduced words
//! - `graded_weightspace_dim` / `specht_character` — tableau-degree sums
//!
//! # Design Notes
//! - All generators act block-diagonally, so ψ_{st} is stored as one matrix
//!   block per shape.

use super::matrix::Mat;
use super::rep::{build_rep, SeminormalRep};
use crate::error::{Error, Result};
use crate::exactmath::{LaurentPoly, RatFunc};
use crate::tableaux::multipartition::multipartitions;
use crate::tableaux::tableau::{initial_tableau, perm_d, standard_tableaux, Order, StandardTableau};
use crate::tableaux::{ContentSystem, Multipartition};
use std::collections::BTreeMap;

/// The direct sum ⊕_μ V_μ over all shapes of one size, with block-diagonal
/// generator matrices.
#[derive(Debug, Clone)]
pub struct AlgebraRep {
    n: usize,
    order: Order,
    reps: Vec<SeminormalRep>,
}

impl AlgebraRep {
    /// Build all blocks for size n.
    pub fn new(cs: &ContentSystem, n: usize, order: Order) -> Result<Self> {
        let reps: Result<Vec<SeminormalRep>> = multipartitions(n, cs.level())
            .iter()
            .map(|lam| build_rep(cs, lam, order))
            .collect();
        Ok(AlgebraRep {
            n,
            order,
            reps: reps?,
        })
    }

    /// The per-shape blocks.
    pub fn blocks(&self) -> &[SeminormalRep] {
        &self.reps
    }

    /// The chosen order.
    pub fn order(&self) -> Order {
        self.order
    }

    /// Total dimension Σ_μ |Std(μ)|.
    pub fn dim(&self) -> usize {
        self.reps.iter().map(SeminormalRep::dim).sum()
    }

    fn map_blocks(&self, f: impl Fn(&SeminormalRep) -> Result<Mat>) -> Result<Vec<Mat>> {
        self.reps.iter().map(f).collect()
    }

    /// The generator ψ_k on every block.
    pub fn psi(&self, k: usize) -> Result<Vec<Mat>> {
        self.map_blocks(|rep| Ok(rep.psi(k)?.clone()))
    }

    /// The idempotent e(i) on every block.
    pub fn idempotent(&self, i: &[usize]) -> Vec<Mat> {
        self.reps.iter().map(|rep| rep.idempotent(i)).collect()
    }

    /// Apply a word of ψ-generators (left to right) to a block matrix.
    pub fn psi_word(&self, word: &[usize], acc: Vec<Mat>) -> Result<Vec<Mat>> {
        let mut out = acc;
        for &k in word.iter().rev() {
            let psi = self.psi(k)?;
            out = psi
                .iter()
                .zip(out)
                .map(|(p, m)| p * &m)
                .collect();
        }
        Ok(out)
    }

    fn identity_blocks(&self) -> Vec<Mat> {
        self.reps.iter().map(|r| Mat::identity(r.dim())).collect()
    }

    /// The diagonal element Π_m Π_{A ∈ Add^D_m(t^D_λ)} (y_m − bc(A)) e(i^D_λ).
    fn y_lam_idempotent(&self, cs: &ContentSystem, lam: &Multipartition) -> Result<Vec<Mat>> {
        let t_init = initial_tableau(lam, self.order);
        let i_lam = t_init.residue_sequence(cs)?;
        self.map_blocks(|rep| {
            rep.diagonal_from(|j| {
                if rep.residue_sequence(j) != i_lam.as_slice() {
                    return Ok(RatFunc::zero());
                }
                let u = &rep.basis()[j];
                let mut value = RatFunc::one();
                for m in 1..=self.n {
                    let cm = cs.content_rf(u.position(m)?)?;
                    let (add, _) = t_init.add_rem_m(cs, m, self.order)?;
                    for a in add {
                        value = &value * &(&cm - &cs.content_rf(a)?);
                    }
                }
                Ok(value)
            })
        })
    }
}

/// The matrix of ψ_{st} on ⊕_μ V_μ, one block per shape, built from the
/// preferred (lexicographically smallest) reduced words.
pub fn psi_basis_matrix(
    alg: &AlgebraRep,
    cs: &ContentSystem,
    s: &StandardTableau,
    t: &StandardTableau,
) -> Result<Vec<Mat>> {
    if s.shape() != t.shape() {
        return Err(Error::SizeMismatch(format!(
            "ψ basis needs a common shape, got {} and {}",
            s.shape(),
            t.shape()
        )));
    }
    let lam = s.shape();
    let core = alg.y_lam_idempotent(cs, &lam)?;
    // Left factor ψ_{d(s)}, then the diagonal core, then ψ*_{d(t)} — the
    // star reverses the word.
    let word_s = perm_d(s, alg.order())?;
    let word_t: Vec<usize> = perm_d(t, alg.order())?.into_iter().rev().collect();
    let with_star = alg.psi_word(&word_t, alg.identity_blocks())?;
    let with_core: Vec<Mat> = core.iter().zip(&with_star).map(|(c, m)| c * m).collect();
    alg.psi_word(&word_s, with_core)
}

/// Σ_λ Σ_{s ∈ Std(λ, i)} Σ_{t ∈ Std(λ, j)} q^{deg(s) + deg(t)}.
pub fn graded_weightspace_dim(
    cs: &ContentSystem,
    i: &[usize],
    j: &[usize],
    order: Order,
) -> Result<LaurentPoly> {
    if i.len() != j.len() {
        return Err(Error::SizeMismatch(
            "weight-space residue sequences differ in length".into(),
        ));
    }
    let mut total = LaurentPoly::zero();
    for lam in multipartitions(i.len(), cs.level()) {
        let mut from_i = LaurentPoly::zero();
        let mut from_j = LaurentPoly::zero();
        for t in standard_tableaux(&lam) {
            let res = t.residue_sequence(cs)?;
            if res == i {
                from_i = &from_i + &LaurentPoly::q_pow(t.deg(cs, order)?);
            }
            if res == j {
                from_j = &from_j + &LaurentPoly::q_pow(t.deg(cs, order)?);
            }
        }
        total = &total + &(&from_i * &from_j);
    }
    Ok(total)
}

/// The q-character: residue sequences weighted by tableau degrees.
pub fn specht_character(
    cs: &ContentSystem,
    lam: &Multipartition,
    order: Order,
) -> Result<BTreeMap<Vec<usize>, LaurentPoly>> {
    let mut out: BTreeMap<Vec<usize>, LaurentPoly> = BTreeMap::new();
    for t in standard_tableaux(lam) {
        let res = t.residue_sequence(cs)?;
        let term = LaurentPoly::q_pow(t.deg(cs, order)?);
        let entry = out.entry(res).or_insert_with(LaurentPoly::zero);
        *entry = &*entry + &term;
    }
    Ok(out)
}
