//! Trivariate polynomials in formal `u`, `v`, `w` with `PolyX` coefficients —
//! the home of the deformed Q-polynomials and their three-variable braid
//! companions.
//!
//! # Key Operations
//! - ring arithmetic via operator traits on references
//! - `exact_div_uw` — exact division by (u−w)
//! - `eval` — evaluation at rational-function arguments
//!
//! # Design Notes
//! - Sparse BTreeMap keyed by the exponent triple (u, v, w); zero coefficients
//!   are never stored, so equality is structural.

use super::polyx::PolyX;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial in `u`, `v`, `w` over ℚ[x].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<(u32, u32, u32), PolyX>,
}

impl MultiPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(PolyX::one())
    }

    /// A constant (PolyX-valued) polynomial.
    pub fn constant(c: PolyX) -> Self {
        let mut p = Self::zero();
        p.add_term((0, 0, 0), c);
        p
    }

    /// The variable `u`.
    pub fn var_u() -> Self {
        let mut p = Self::zero();
        p.add_term((1, 0, 0), PolyX::one());
        p
    }

    /// The variable `v`.
    pub fn var_v() -> Self {
        let mut p = Self::zero();
        p.add_term((0, 1, 0), PolyX::one());
        p
    }

    /// The variable `w`.
    pub fn var_w() -> Self {
        let mut p = Self::zero();
        p.add_term((0, 0, 1), PolyX::one());
        p
    }

    /// True iff zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate over the nonzero terms as (exponent triple, coefficient).
    pub fn terms_iter(&self) -> impl Iterator<Item = ((u32, u32, u32), &PolyX)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    /// Add `c·u^a v^b w^d` in place.
    pub fn add_term(&mut self, key: (u32, u32, u32), c: PolyX) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(PolyX::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Substitute `u ↦ v, v ↦ u` (the symmetry Q_{ji}(u,v) = Q_{ij}(v,u)).
    pub fn swap_uv(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b, c), coeff) in &self.terms {
            out.add_term((b, a, c), coeff.clone());
        }
        out
    }

    /// Substitute `v ↦ u, w ↦ v` — reinterprets a (u,v)-polynomial in the
    /// variable pair (v,w).
    pub fn shift_uv_to_vw(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b, c), coeff) in &self.terms {
            debug_assert_eq!(c, 0);
            out.add_term((0, a, b), coeff.clone());
        }
        out
    }

    /// `self^n`.
    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Exact division by `(u − w)`.
    pub fn exact_div_uw(&self) -> Result<Self> {
        let mut rem = self.clone();
        let mut quot = Self::zero();
        loop {
            // Pick the term with the largest u-exponent still present.
            let key = rem
                .terms
                .keys()
                .filter(|(a, _, _)| *a > 0)
                .max_by_key(|(a, _, _)| *a)
                .copied();
            match key {
                None => {
                    if rem.is_zero() {
                        return Ok(quot);
                    }
                    return Err(Error::NotDivisible(
                        "remainder nonzero in (u-w) division".into(),
                    ));
                }
                Some((a, b, c)) => {
                    let coeff = rem.terms[&(a, b, c)].clone();
                    let mut t = Self::zero();
                    t.add_term((a - 1, b, c), coeff);
                    let uw = &Self::var_u() - &Self::var_w();
                    rem = &rem - &(&uw * &t);
                    quot = &quot + &t;
                }
            }
        }
    }

    /// Evaluate at rational-function arguments.
    pub fn eval(&self, u: &RatFunc, v: &RatFunc, w: &RatFunc) -> RatFunc {
        let mut out = RatFunc::zero();
        for (&(a, b, c), coeff) in &self.terms {
            let mut term = RatFunc::from_poly(coeff.clone());
            for _ in 0..a {
                term = &term * u;
            }
            for _ in 0..b {
                term = &term * v;
            }
            for _ in 0..c {
                term = &term * w;
            }
            out = &out + &term;
        }
        out
    }

    /// Evaluate a two-variable polynomial (no `w`) at `(u, v)`.
    pub fn eval2(&self, u: &RatFunc, v: &RatFunc) -> RatFunc {
        self.eval(u, v, &RatFunc::zero())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: Self) -> MultiPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: Self) -> MultiPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: Self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (&(a1, b1, c1), p1) in &self.terms {
            for (&(a2, b2, c2), p2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2, c1 + c2), p1 * p2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (k, c) in &self.terms {
            out.add_term(*k, -c);
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b, c), coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", coeff)?;
            for (var, e) in [("u", a), ("v", b), ("w", c)] {
                match e {
                    0 => {}
                    1 => write!(f, "*{}", var)?,
                    _ => write!(f, "*{}^{}", var, e)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_div_examples() {
        let u = MultiPoly::var_u();
        let w = MultiPoly::var_w();
        let v = MultiPoly::var_v();
        // u^2 − w^2 → u + w.
        let p = &(&u * &u) - &(&w * &w);
        assert_eq!(p.exact_div_uw().unwrap(), &u + &w);
        // (u − w)·v → v.
        let q = &(&u - &w) * &v;
        assert_eq!(q.exact_div_uw().unwrap(), v);
        // (u − v − x²) − (w − v − x²) → 1.
        let x2 = MultiPoly::constant(PolyX::x_pow(2));
        let a = &(&u - &v) - &x2;
        let b = &(&w - &v) - &x2;
        assert_eq!((&a - &b).exact_div_uw().unwrap(), MultiPoly::one());
        // v alone is not divisible.
        assert!(v.exact_div_uw().is_err());
    }

    #[test]
    fn eval_and_symmetry() {
        let u = MultiPoly::var_u();
        let v = MultiPoly::var_v();
        let x2 = MultiPoly::constant(PolyX::x_pow(2));
        let q = &(&u + &x2) - &v; // u + x² − v
        let a = RatFunc::from_poly(PolyX::x_pow(2));
        let b = RatFunc::from_poly(-&PolyX::x_pow(2));
        // x² + x² − (−x²) = 3x².
        let val = q.eval2(&a, &b);
        assert_eq!(
            val,
            RatFunc::from_poly(PolyX::x_pow(2).scale(&num_rational::BigRational::from(
                num_bigint::BigInt::from(3)
            )))
        );
        let qs = q.swap_uv();
        assert_eq!(qs.eval2(&b, &a), val);
    }
}
