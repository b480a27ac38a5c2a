//! Sparse Laurent polynomials in `q` with arbitrary-precision integer
//! coefficients — the exact scalar ring for graded multiplicities.
//!
//! # Key Operations
//! - `bar` — the involution q ↦ q⁻¹
//! - `quantum_int` / `quantum_factorial` — balanced quantum integers [k] at q^d
//! - ring arithmetic via operator traits on references
//!
//! # Design Notes
//! - BTreeMap from exponent to coefficient; zero coefficients are never stored,
//!   so equal values compare equal structurally.
//! - Exponents are `i64` (negative powers allowed).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A Laurent polynomial in `q` over the integers.
#[derive(Debug, Clone, PartialEq, Eq, Default, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// A single term `c·q^k`.
    pub fn monomial(c: BigInt, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    /// The monomial `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(BigInt::one(), k)
    }

    /// Constant polynomial from an integer.
    pub fn from_int(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0)
    }

    /// True iff this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff this is the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    /// Coefficient of `q^k` (zero if absent).
    pub fn coeff(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterate over `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    /// Smallest exponent with nonzero coefficient.
    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Largest exponent with nonzero coefficient.
    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Add the term `c·q^k` in place.
    pub fn add_term(&mut self, c: BigInt, k: i64) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// The bar involution `q ↦ q⁻¹`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// `Some(k)` iff the polynomial is exactly `q^k`.
    pub fn as_monomial_exponent(&self) -> Option<i64> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&k, c) = self.terms.iter().next().unwrap();
        if c == &BigInt::from(1) {
            Some(k)
        } else {
            None
        }
    }

    /// True iff every nonzero exponent is ≥ `min` (used for qℤ[q] membership
    /// with `min = 1`).
    pub fn min_exponent_at_least(&self, min: i64) -> bool {
        self.min_degree().map_or(true, |d| d >= min)
    }

    /// The quantum integer `[k]` at `q_i = q^d`:
    /// `(q_i^k − q_i^{−k})/(q_i − q_i^{−1})`, an odd function of `k`.
    pub fn quantum_int(k: i64, d: u32) -> Self {
        let d = d as i64;
        if k == 0 {
            return Self::zero();
        }
        if k < 0 {
            return -&Self::quantum_int(-k, d as u32);
        }
        let mut p = Self::zero();
        for j in 0..k {
            p.add_term(BigInt::one(), d * (k - 1 - 2 * j));
        }
        p
    }

    /// The quantum factorial `[k]! = [k][k−1]···[1]` at `q_i = q^d`.
    pub fn quantum_factorial(k: u32, d: u32) -> Self {
        let mut p = Self::one();
        for j in 1..=k {
            p = &p * &Self::quantum_int(j as i64, d);
        }
        p
    }

    /// Exact division, available only when `self = q·other` for some Laurent
    /// polynomial `q`. Returns `None` when the division is not exact.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Any exact quotient has exponents ≥ min(self) − min(other); going
        // below that bound means the division is not exact.
        let min_q = self.min_degree().unwrap() - other.min_degree().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let (dk, dc) = {
            let (k, c) = other.terms.iter().next_back().unwrap();
            (*k, c.clone())
        };
        loop {
            let (rk, rc) = match rem.terms.iter().next_back() {
                Some((k, c)) => (*k, c.clone()),
                None => return Some(quot),
            };
            let qc = &rc / &dc;
            if rk - dk < min_q || qc.is_zero() || &qc * &dc != rc {
                return None;
            }
            let t = Self::monomial(qc, rk - dk);
            rem = &rem - &(&t * other);
            quot = &quot + &t;
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms.iter() {
            out.add_term(c.clone(), *k);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms.iter() {
            out.add_term(-c.clone(), *k);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (k1, c1) in self.terms.iter() {
            for (k2, c2) in rhs.terms.iter() {
                out.add_term(c1 * c2, k1 + k2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Render highest powers first: "3*q^2 + 1 + q^-2".
        for (k, c) in self.terms.iter().rev() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = c.magnitude();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one();
            match (*k, unit_coeff) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{}*q", mag)?,
                (_, true) => write!(f, "q^{}", k)?,
                (_, false) => write!(f, "{}*q^{}", mag, k)?,
            }
        }
        Ok(())
    }
}
