//! Seminormal matrix representations: the scalars Q_m(t) and β_k(t), the
//! module matrices for each shape, and exhaustive verification of the
//! defining algebra relations.
//!
//! # Key Operations
//! - `q_m` — the quadratic-relation scalar; zero iff the swapped tableau is
//!   not standard
//! - `beta` — the order-adapted off-diagonal ψ-coefficients
//! - `build_rep` — matrices with diagonal y-action by contents
//! - `verify_relations` — all defining relations plus the cyclotomic one,
//!   checked as exact matrix identities over ℚ(x)
//!
//! # Design Notes
//! - The carrier field is ℚ(x): correction terms 1/(c_{k+1}−c_k) and the
//!   β-scalars need inverses.
//! - ψ-matrices have at most two nonzero entries per column (one off-diagonal
//!   β, one diagonal correction), so relation checking stays cheap.

use super::matrix::Mat;
use crate::error::{Error, Result};
use crate::exactmath::RatFunc;
use crate::tableaux::multipartition::multipartitions;
use crate::tableaux::tableau::{standard_tableaux, Order, StandardTableau};
use crate::tableaux::{ContentSystem, Multipartition};

/// Outcome of relation verification: pass, or the first violation with witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    /// True iff every relation held over the checked range.
    pub pass: bool,
    /// Human-readable witness of the first violation.
    pub failure: Option<String>,
}

/// The scalar Q_m(t): the two-variable Q-polynomial at the contents of m and
/// m+1, minus the same-residue correction 1/(c_{m+1}−c_m)².
pub fn q_m(cs: &ContentSystem, t: &StandardTableau, m: usize) -> Result<RatFunc> {
    if m == 0 || m >= t.size() {
        return Err(Error::IndexOutOfRange(format!(
            "position {m} not in 1..{}",
            t.size()
        )));
    }
    let ri = cs.residue(t.position(m)?)?;
    let rj = cs.residue(t.position(m + 1)?)?;
    let ci = cs.content_rf(t.position(m)?)?;
    let cj = cs.content_rf(t.position(m + 1)?)?;
    let mut value = cs.qpoly(ri, rj)?.eval2(&ci, &cj);
    if ri == rj {
        let diff = &cj - &ci;
        value = &value - &(&diff * &diff).inverse()?;
    }
    Ok(value)
}

/// The β-coefficient of ψ_m on v_t in the given order: 1 when t strictly
/// precedes σ_m t, otherwise Q_m(t).
pub fn beta(cs: &ContentSystem, t: &StandardTableau, m: usize, order: Order) -> Result<RatFunc> {
    let swapped = t
        .apply_transposition(m)
        .ok_or_else(|| Error::NonstandardNeighbor(format!("σ_{m} of {t}")))?;
    if t.precedes(&swapped, order)? {
        Ok(RatFunc::one())
    } else {
        q_m(cs, t, m)
    }
}

/// A seminormal representation: the module matrices on the standard-tableau
/// basis of one shape.
#[derive(Debug, Clone)]
pub struct SeminormalRep {
    lam: Multipartition,
    order: Order,
    basis: Vec<StandardTableau>,
    residues: Vec<Vec<usize>>,
    contents: Vec<Vec<RatFunc>>,
    psi: Vec<Mat>,
}

impl SeminormalRep {
    /// The shape λ.
    pub fn shape(&self) -> &Multipartition {
        &self.lam
    }

    /// The chosen order.
    pub fn order(&self) -> Order {
        self.order
    }

    /// Module dimension |Std(λ)|.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The ordered tableau basis.
    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    /// Residue sequence of the j-th basis tableau.
    pub fn residue_sequence(&self, j: usize) -> &[usize] {
        &self.residues[j]
    }

    /// The distinct residue sequences occurring in the basis.
    pub fn residue_classes(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for r in &self.residues {
            if !out.contains(r) {
                out.push(r.clone());
            }
        }
        out
    }

    /// The idempotent e(i) as a diagonal indicator matrix.
    pub fn idempotent(&self, i: &[usize]) -> Mat {
        Mat::diagonal(
            self.residues
                .iter()
                .map(|r| {
                    if r == i {
                        RatFunc::one()
                    } else {
                        RatFunc::zero()
                    }
                })
                .collect(),
        )
    }

    /// The generator y_m as a diagonal content matrix (1-based m).
    pub fn y(&self, m: usize) -> Result<Mat> {
        if m == 0 || m > self.lam.size() {
            return Err(Error::IndexOutOfRange(format!(
                "y index {m} not in 1..={}",
                self.lam.size()
            )));
        }
        Ok(Mat::diagonal(
            self.contents.iter().map(|c| c[m - 1].clone()).collect(),
        ))
    }

    /// The generator ψ_k (1-based k < n).
    pub fn psi(&self, k: usize) -> Result<&Mat> {
        if k == 0 || k >= self.lam.size() {
            return Err(Error::IndexOutOfRange(format!(
                "ψ index {k} not in 1..{}",
                self.lam.size()
            )));
        }
        Ok(&self.psi[k - 1])
    }

    /// Evaluate a polynomial-like diagonal: entries f(t) per basis tableau.
    pub fn diagonal_from(&self, f: impl Fn(usize) -> Result<RatFunc>) -> Result<Mat> {
        let entries: Result<Vec<RatFunc>> = (0..self.dim()).map(f).collect();
        Ok(Mat::diagonal(entries?))
    }
}

/// Build the seminormal representation of a shape in the given order.
pub fn build_rep(cs: &ContentSystem, lam: &Multipartition, order: Order) -> Result<SeminormalRep> {
    let basis = standard_tableaux(lam);
    let residues: Result<Vec<Vec<usize>>> =
        basis.iter().map(|t| t.residue_sequence(cs)).collect();
    let residues = residues?;
    let contents: Result<Vec<Vec<RatFunc>>> = basis
        .iter()
        .map(|t| {
            (1..=t.size())
                .map(|m| cs.content_rf(t.position(m)?))
                .collect()
        })
        .collect();
    let contents = contents?;
    let n = lam.size();
    let dim = basis.len();
    let mut psi = Vec::new();
    for k in 1..n.max(1) {
        let mut mat = Mat::zeros(dim);
        for (j, t) in basis.iter().enumerate() {
            if let Some(swapped) = t.apply_transposition(k) {
                let row = basis
                    .iter()
                    .position(|s| s == &swapped)
                    .expect("swap stays in the basis");
                mat.add_at(row, j, &beta(cs, t, k, order)?);
            }
            if residues[j][k - 1] == residues[j][k] {
                let diff = &contents[j][k] - &contents[j][k - 1];
                mat.add_at(j, j, &diff.inverse()?);
            }
        }
        psi.push(mat);
    }
    Ok(SeminormalRep {
        lam: lam.clone(),
        order,
        basis,
        residues,
        contents,
        psi,
    })
}

/// Check every defining relation, plus the cyclotomic relation, as exact
/// matrix identities on all shapes of size n.
pub fn verify_relations(cs: &ContentSystem, n: usize, order: Order) -> Result<RelationReport> {
    for lam in multipartitions(n, cs.level()) {
        if let Some(failure) = check_shape(cs, &lam, order)? {
            return Ok(RelationReport {
                pass: false,
                failure: Some(failure),
            });
        }
    }
    Ok(RelationReport {
        pass: true,
        failure: None,
    })
}

fn check_shape(cs: &ContentSystem, lam: &Multipartition, order: Order) -> Result<Option<String>> {
    let rep = build_rep(cs, lam, order)?;
    let n = lam.size();
    let dim = rep.dim();
    let classes = rep.residue_classes();
    let fail = |relation: &str, detail: String| Some(format!("λ = {lam}: {relation} ({detail})"));

    // Idempotent decomposition: orthogonality and completeness.
    let mut total = Mat::zeros(dim);
    for i in &classes {
        let ei = rep.idempotent(i);
        if &ei * &ei != ei {
            return Ok(fail("e(i)² = e(i)", format!("i = {i:?}")));
        }
        for j in &classes {
            if i != j && !(&ei * &rep.idempotent(j)).is_zero() {
                return Ok(fail("e(i)e(j) = 0", format!("i = {i:?}, j = {j:?}")));
            }
        }
        total = &total + &ei;
    }
    if total != Mat::identity(dim) {
        return Ok(fail("Σ e(i) = 1", String::new()));
    }

    // y-commutativity.
    for a in 1..=n {
        for b in (a + 1)..=n {
            let ya = rep.y(a)?;
            let yb = rep.y(b)?;
            if &ya * &yb != &yb * &ya {
                return Ok(fail("y_a y_b = y_b y_a", format!("a = {a}, b = {b}")));
            }
        }
    }

    for k in 1..n {
        let pk = rep.psi(k)?.clone();

        // ψ_k e(i) = e(σ_k i) ψ_k.
        for i in &classes {
            let mut swapped = i.clone();
            swapped.swap(k - 1, k);
            if &pk * &rep.idempotent(i) != &rep.idempotent(&swapped) * &pk {
                return Ok(fail("ψ_k e(i) = e(σ_k i) ψ_k", format!("k = {k}, i = {i:?}")));
            }
        }

        // ψ_k y_m = y_m ψ_k for m ∉ {k, k+1}.
        for m in 1..=n {
            if m == k || m == k + 1 {
                continue;
            }
            let ym = rep.y(m)?;
            if &pk * &ym != &ym * &pk {
                return Ok(fail("ψ_k y_m = y_m ψ_k", format!("k = {k}, m = {m}")));
            }
        }

        // ψ_k ψ_l = ψ_l ψ_k for |k − l| > 1.
        for l in (k + 2)..n {
            let pl = rep.psi(l)?;
            if &pk * pl != pl * &pk {
                return Ok(fail("ψ_k ψ_l = ψ_l ψ_k", format!("k = {k}, l = {l}")));
            }
        }

        // (ψ_k y_{k+1} − y_k ψ_k) e(i) = δ e(i) = (y_{k+1} ψ_k − ψ_k y_k) e(i).
        let yk = rep.y(k)?;
        let yk1 = rep.y(k + 1)?;
        for i in &classes {
            let ei = rep.idempotent(i);
            let delta = if i[k - 1] == i[k] {
                ei.clone()
            } else {
                Mat::zeros(dim)
            };
            let lhs = &(&(&pk * &yk1) - &(&yk * &pk)) * &ei;
            let rhs = &(&(&yk1 * &pk) - &(&pk * &yk)) * &ei;
            if lhs != delta || rhs != delta {
                return Ok(fail("ψ_k y − y ψ_k = δ", format!("k = {k}, i = {i:?}")));
            }
        }

        // ψ_k² e(i) = Q_{i_k,i_{k+1}}(y_k, y_{k+1}) e(i).
        for i in &classes {
            let q = cs.qpoly(i[k - 1], i[k])?;
            let rhs = rep.diagonal_from(|j| {
                if rep.residue_sequence(j) == i {
                    Ok(q.eval2(&rep.contents[j][k - 1], &rep.contents[j][k]))
                } else {
                    Ok(RatFunc::zero())
                }
            })?;
            if &(&pk * &pk) * &rep.idempotent(i) != rhs {
                return Ok(fail("ψ_k² = Q(y)", format!("k = {k}, i = {i:?}")));
            }
        }

        // Braid relation against the three-variable Q-polynomial.
        if k + 1 < n {
            let pk1 = rep.psi(k + 1)?;
            let lhs = &(&(pk1 * &pk) * pk1) - &(&(&pk * pk1) * &pk);
            for i in &classes {
                let q3 = cs.qpoly3(i[k - 1], i[k], i[k + 1])?;
                let rhs = rep.diagonal_from(|j| {
                    if rep.residue_sequence(j) == i {
                        Ok(q3.eval(
                            &rep.contents[j][k - 1],
                            &rep.contents[j][k],
                            &rep.contents[j][k + 1],
                        ))
                    } else {
                        Ok(RatFunc::zero())
                    }
                })?;
                if &lhs * &rep.idempotent(i) != rhs {
                    return Ok(fail("braid", format!("k = {k}, i = {i:?}")));
                }
            }
        }
    }

    // Cyclotomic relation: W_{i₁}(y₁) e(i) = 0.
    if n >= 1 {
        for j in 0..dim {
            let w = cs.wpoly(rep.residue_sequence(j)[0])?;
            let value = w.eval(&rep.contents[j][0], &RatFunc::zero(), &RatFunc::zero());
            if !value.is_zero() {
                return Ok(fail(
                    "W(y₁) e(i) = 0",
                    format!("t = {}", rep.basis[j]),
                ));
            }
        }
    }

    Ok(None)
}
