//! Fock-space vectors over ℤ[q,q⁻¹] and the quantum-group operator actions.
//!
//! # Key Operations
//! - `f_op` / `e_op` / `k_op` — the Chevalley actions on basis vectors s_λ:
//!   in the ◁ order F_i s_λ = Σ_A q^{−d^▷_A(λ)} s_{λ+A},
//!   E_i s_λ = Σ_B q^{d^◁_B(λ)} s_{λ−B}, K_i s_λ = q^{d_i(λ)} s_λ; the ▷
//!   order swaps the roles of the two one-sided statistics
//! - `divided_power_f` — F_i^{(r)} via the multi-node statistics, adding all
//!   r-subsets of addable i-nodes at once
//! - `verify_commutator` — exact check of [E_i,F_j] = δ_ij(K_i−K_i⁻¹)/(q_i−q_i⁻¹)
//!
//! # Design Notes
//! - Vectors are sparse maps Multipartition → LaurentPoly with no zero
//!   coefficients stored; operators act linearly term by term.

use crate::error::Result;
use crate::exactmath::LaurentPoly;
use crate::seminormal::RelationReport;
use crate::tableaux::multipartition::{Multipartition, Node};
use crate::tableaux::tableau::Order;
use crate::tableaux::ContentSystem;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

/// A sparse Fock-space vector in a fixed order's basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockVector {
    level: usize,
    order: Order,
    terms: BTreeMap<Multipartition, LaurentPoly>,
}

impl FockVector {
    /// The zero vector.
    pub fn zero(level: usize, order: Order) -> Self {
        FockVector {
            level,
            order,
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector s_λ.
    pub fn basis(lam: &Multipartition, order: Order) -> Self {
        let mut v = FockVector::zero(lam.level(), order);
        v.add_term(lam.clone(), LaurentPoly::one());
        v
    }

    /// The order whose basis this vector is expressed in.
    pub fn order(&self) -> Order {
        self.order
    }

    /// The level of the indexing multipartitions.
    pub fn level(&self) -> usize {
        self.level
    }

    /// True iff there are no terms.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of s_λ (zero when absent).
    pub fn coeff(&self, lam: &Multipartition) -> LaurentPoly {
        self.terms.get(lam).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// Iterate over the nonzero terms in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&Multipartition, &LaurentPoly)> {
        self.terms.iter()
    }

    /// The multipartitions with nonzero coefficient.
    pub fn support(&self) -> Vec<Multipartition> {
        self.terms.keys().cloned().collect()
    }

    /// Add c·s_λ, dropping the term if the total cancels.
    pub fn add_term(&mut self, lam: Multipartition, c: LaurentPoly) {
        debug_assert_eq!(lam.level(), self.level);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lam);
        let slot = entry.or_insert_with(LaurentPoly::zero);
        *slot = &*slot + &c;
        // `BTreeMap::entry` keeps the key; prune if the sum vanished.
        if slot.is_zero() {
            // Re-borrow immutably to find the key; simpler to retain-filter.
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// The vector with every coefficient multiplied by c.
    pub fn scaled(&self, c: &LaurentPoly) -> Self {
        let mut out = FockVector::zero(self.level, self.order);
        for (lam, a) in &self.terms {
            out.add_term(lam.clone(), a * c);
        }
        out
    }
}

impl Add for &FockVector {
    type Output = FockVector;

    fn add(self, other: &FockVector) -> FockVector {
        debug_assert_eq!(self.order, other.order);
        let mut out = self.clone();
        for (lam, c) in &other.terms {
            out.add_term(lam.clone(), c.clone());
        }
        out
    }
}

impl Sub for &FockVector {
    type Output = FockVector;

    fn sub(self, other: &FockVector) -> FockVector {
        debug_assert_eq!(self.order, other.order);
        let mut out = self.clone();
        for (lam, c) in &other.terms {
            out.add_term(lam.clone(), c * &LaurentPoly::from_int(-1));
        }
        out
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(lam, c)| format!("({c})·s{lam}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// F_i: add one i-node in all ways with the order's q-exponents.
pub fn f_op(cs: &ContentSystem, i: usize, v: &FockVector) -> Result<FockVector> {
    let mut out = FockVector::zero(v.level(), v.order());
    for (lam, c) in v.terms() {
        let (add, _) = cs.add_remove_nodes(lam, i)?;
        for a in add {
            let exp = match v.order() {
                Order::Lt => -cs.d_gt(lam, a)?,
                Order::Gt => -cs.d_lt(lam, a)?,
            };
            out.add_term(lam.add_node(a)?, c * &LaurentPoly::q_pow(exp));
        }
    }
    Ok(out)
}

/// E_i: remove one i-node in all ways with the order's q-exponents.
pub fn e_op(cs: &ContentSystem, i: usize, v: &FockVector) -> Result<FockVector> {
    let mut out = FockVector::zero(v.level(), v.order());
    for (lam, c) in v.terms() {
        let (_, rem) = cs.add_remove_nodes(lam, i)?;
        for b in rem {
            let exp = match v.order() {
                Order::Lt => cs.d_lt(lam, b)?,
                Order::Gt => cs.d_gt(lam, b)?,
            };
            out.add_term(lam.remove_node(b)?, c * &LaurentPoly::q_pow(exp));
        }
    }
    Ok(out)
}

/// K_i^{±1}: multiply the s_λ coefficient by q^{±d_i(λ)}.
pub fn k_op(cs: &ContentSystem, i: usize, v: &FockVector, inverse: bool) -> Result<FockVector> {
    let mut out = FockVector::zero(v.level(), v.order());
    for (lam, c) in v.terms() {
        let mut exp = cs.d_i_stat(lam, i)?;
        if inverse {
            exp = -exp;
        }
        out.add_term(lam.clone(), c * &LaurentPoly::q_pow(exp));
    }
    Ok(out)
}

/// The multi-node ◁-statistic of λ → μ = λ ∪ K along residue-i nodes K.
fn multi_stat_lt(
    cs: &ContentSystem,
    lam: &Multipartition,
    mu: &Multipartition,
    i: usize,
    chosen: &[Node],
) -> Result<i64> {
    let di = cs.cartan().symmetrizer(i)?;
    let (add_mu, _) = cs.add_remove_nodes(mu, i)?;
    let (_, rem_lam) = cs.add_remove_nodes(lam, i)?;
    let mut total = 0i64;
    for &a in chosen {
        total += add_mu.iter().filter(|&&b| b < a).count() as i64;
        total -= rem_lam.iter().filter(|&&b| b < a).count() as i64;
    }
    Ok(di * total)
}

/// The multi-node ▷-statistic of λ → μ = λ ∪ K along residue-i nodes K.
/// Like its ◁ twin this counts addable nodes of μ — equivalently the
/// addable i-nodes of λ outside K, since same-residue additions never create
/// or destroy other addable i-nodes — which is what the iterate-and-divide
/// identity [r]!·F^{(r)} = F^r forces.
fn multi_stat_gt(
    cs: &ContentSystem,
    lam: &Multipartition,
    mu: &Multipartition,
    i: usize,
    chosen: &[Node],
) -> Result<i64> {
    let di = cs.cartan().symmetrizer(i)?;
    let (add_mu, _) = cs.add_remove_nodes(mu, i)?;
    let (_, rem_lam) = cs.add_remove_nodes(lam, i)?;
    let mut total = 0i64;
    for &a in chosen {
        total += add_mu.iter().filter(|&&b| b > a).count() as i64;
        total -= rem_lam.iter().filter(|&&b| b > a).count() as i64;
    }
    Ok(di * total)
}

fn subsets_of_size(nodes: &[Node], r: usize) -> Vec<Vec<Node>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    if nodes.len() < r {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (k, &first) in nodes.iter().enumerate() {
        for mut rest in subsets_of_size(&nodes[k + 1..], r - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The divided power F_i^{(r)}: add r i-nodes at once, one term per r-subset
/// of addable i-nodes, with the multi-node q-exponents.
pub fn divided_power_f(
    cs: &ContentSystem,
    i: usize,
    r: usize,
    v: &FockVector,
) -> Result<FockVector> {
    let mut out = FockVector::zero(v.level(), v.order());
    for (lam, c) in v.terms() {
        let (add, _) = cs.add_remove_nodes(lam, i)?;
        for chosen in subsets_of_size(&add, r) {
            let mut mu = lam.clone();
            for &a in &chosen {
                mu = mu.add_node(a)?;
            }
            let exp = match v.order() {
                Order::Lt => -multi_stat_gt(cs, lam, &mu, i, &chosen)?,
                Order::Gt => -multi_stat_lt(cs, lam, &mu, i, &chosen)?,
            };
            out.add_term(mu, c * &LaurentPoly::q_pow(exp));
        }
    }
    Ok(out)
}

/// Check [E_i,F_j]v = δ_ij·(K_i−K_i⁻¹)/(q_i−q_i⁻¹)·v exactly, expanding the
/// right side through quantum integers acting diagonally.
pub fn verify_commutator(
    cs: &ContentSystem,
    i: usize,
    j: usize,
    v: &FockVector,
) -> Result<RelationReport> {
    let lhs = &e_op(cs, i, &f_op(cs, j, v)?)? - &f_op(cs, j, &e_op(cs, i, v)?)?;
    let mut rhs = FockVector::zero(v.level(), v.order());
    if i == j {
        let di = cs.cartan().symmetrizer(i)?;
        for (lam, c) in v.terms() {
            let weight = cs.d_i_stat(lam, i)?;
            debug_assert_eq!(weight % di, 0);
            rhs.add_term(
                lam.clone(),
                c * &LaurentPoly::quantum_int(weight / di, di as u32),
            );
        }
    }
    if lhs == rhs {
        Ok(RelationReport {
            pass: true,
            failure: None,
        })
    } else {
        Ok(RelationReport {
            pass: false,
            failure: Some(format!(
                "[E_{i},F_{j}] mismatch on {v}: lhs = {lhs}, rhs = {rhs}"
            )),
        })
    }
}
