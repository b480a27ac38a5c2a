//! γ-coefficients and defect polynomials.
//!
//! # Key Operations
//! - `gamma` — anchored at the initial tableau and propagated along a
//!   reduced word by the Q-scalar recurrence
//! - `defect_polynomial` — the shape invariant γ^◁_t·γ^▷_t, a homogeneous
//!   polynomial of degree twice the defect; its inverse is the trace of the
//!   seminormal projection
//!
//! # Design Notes
//! - The recurrence is the implementation; the closed per-entry product
//!   (`gamma_closed`) agrees only up to sign and is kept as a magnitude and
//!   degree cross-check.

use super::rep::q_m;
use crate::error::{Error, Result};
use crate::exactmath::{PolyX, RatFunc};
use crate::tableaux::tableau::{initial_tableau, perm_d, Order, StandardTableau};
use crate::tableaux::{ContentSystem, Multipartition};

/// The γ-coefficient of a standard tableau in the given order: anchored at
/// the initial tableau (where it is the product of addable-content
/// differences) and propagated by the recurrence γ_t = Q_k(s)·γ_s along a
/// reduced word. The recurrence is forced by the quadratic relation, so this
/// is the self-consistent normalisation; see `gamma_closed`.
pub fn gamma(cs: &ContentSystem, t: &StandardTableau, order: Order) -> Result<RatFunc> {
    let initial = initial_tableau(&t.shape(), order);
    let mut value = RatFunc::one();
    for m in 1..=initial.size() {
        let cm = cs.content_rf(initial.position(m)?)?;
        let (add, rem) = initial.add_rem_m(cs, m, order)?;
        debug_assert!(rem.is_empty());
        for a in add {
            value = &value * &(&cm - &cs.content_rf(a)?);
        }
    }
    let word = perm_d(t, order)?;
    let mut cur = initial;
    for &a in word.iter().rev() {
        value = &q_m(cs, &cur, a)? * &value;
        cur = cur
            .apply_transposition(a)
            .expect("reduced-word steps stay standard");
    }
    debug_assert_eq!(&cur, t);
    Ok(value)
}

/// The closed product over the per-entry addable/removable sets. It agrees
/// with `gamma` up to sign (the removable factors can flip signs when they
/// cross between numerator and denominator), so it serves as a magnitude and
/// degree cross-check.
pub fn gamma_closed(cs: &ContentSystem, t: &StandardTableau, order: Order) -> Result<RatFunc> {
    let mut value = RatFunc::one();
    for m in 1..=t.size() {
        let cm = cs.content_rf(t.position(m)?)?;
        let (add, rem) = t.add_rem_m(cs, m, order)?;
        for a in add {
            value = &value * &(&cm - &cs.content_rf(a)?);
        }
        for b in rem {
            let factor = &cm - &cs.content_rf(b)?;
            value = &value * &factor.inverse()?;
        }
    }
    Ok(value)
}

/// The defect polynomial of a shape: γ^◁_t·γ^▷_t for any t, homogeneous of
/// degree twice the defect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectPolynomial {
    /// The polynomial value.
    pub value: PolyX,
}

impl DefectPolynomial {
    /// x-degree (twice the defect).
    pub fn degree(&self) -> usize {
        self.value.degree().unwrap_or(0)
    }

    /// The trace of a seminormal projection: 1 over the polynomial.
    pub fn tau(&self) -> Result<RatFunc> {
        RatFunc::from_poly(self.value.clone()).inverse()
    }
}

/// Compute the defect polynomial of λ, certifying polynomiality and
/// homogeneity of the expected degree.
pub fn defect_polynomial(cs: &ContentSystem, lam: &Multipartition) -> Result<DefectPolynomial> {
    let t = initial_tableau(lam, Order::Gt);
    let product = &gamma(cs, &t, Order::Lt)? * &gamma(cs, &t, Order::Gt)?;
    let value = product.as_polynomial()?;
    let defect = cs.defect_of(lam)?;
    match value.as_monomial() {
        Some((_, d)) if d as i64 == 2 * defect => Ok(DefectPolynomial { value }),
        Some((_, d)) => Err(Error::NotHomogeneous(format!(
            "defect polynomial of {lam} has degree {d}, expected {}",
            2 * defect
        ))),
        None => Err(Error::NotHomogeneous(format!(
            "defect polynomial of {lam} is not a monomial: {value}"
        ))),
    }
}
