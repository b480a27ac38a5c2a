//! Dense univariate polynomials in `x` with exact rational coefficients —
//! the graded coefficient ring housing contents and defect polynomials.
//!
//! # Key Operations
//! - ring arithmetic via operator traits on references
//! - `divrem` / `gcd` — Euclidean structure over ℚ[x]
//! - `as_monomial` — graded (homogeneity) inspection
//!
//! # Design Notes
//! - Coefficients stored low-degree-first; the leading coefficient is nonzero
//!   unless the polynomial is zero, so equality is structural.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial in `x` over ℚ, dense representation.
#[derive(Debug, Clone, PartialEq, Eq, Default, PartialOrd, Ord, Hash)]
pub struct PolyX {
    coeffs: Vec<BigRational>,
}

impl PolyX {
    /// The zero polynomial.
    pub fn zero() -> Self {
        PolyX { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// A constant polynomial.
    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// Constant polynomial from an integer.
    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from(BigInt::from(c)))
    }

    /// The monomial `c·x^d`.
    pub fn monomial(c: BigRational, d: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); d + 1];
        coeffs[d] = c;
        Self::from_coeffs(coeffs)
    }

    /// The monomial `x^d`.
    pub fn x_pow(d: usize) -> Self {
        Self::monomial(BigRational::one(), d)
    }

    /// Build from a low-degree-first coefficient list, trimming zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PolyX { coeffs }
    }

    /// True iff zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True iff the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^d`.
    pub fn coeff(&self, d: usize) -> BigRational {
        self.coeffs.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    /// If this is a single term `c·x^d` (or zero), return it.
    pub fn as_monomial(&self) -> Option<(BigRational, usize)> {
        let nonzero: Vec<usize> = (0..self.coeffs.len())
            .filter(|&d| !self.coeffs[d].is_zero())
            .collect();
        match nonzero.len() {
            0 => Some((BigRational::zero(), 0)),
            1 => Some((self.coeffs[nonzero[0]].clone(), nonzero[0])),
            _ => None,
        }
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PolyX {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divide with remainder: `self = q·div + r` with `deg r < deg div`.
    /// Returns `None` when `div` is zero.
    pub fn divrem(&self, div: &Self) -> Option<(Self, Self)> {
        let dd = div.degree()?;
        let lead = div.leading();
        let mut rem = self.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading() / &lead;
            quot[rd - dd] = c.clone();
            let t = Self::monomial(c, rd - dd);
            rem = &rem - &(&t * div);
        }
        Some((Self::from_coeffs(quot), rem))
    }

    /// Monic greatest common divisor (Euclid).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).unwrap();
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let inv = a.leading().recip();
            a.scale(&inv)
        }
    }

    /// `self^n` by repeated multiplication.
    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }
}

impl Add for &PolyX {
    type Output = PolyX;
    fn add(self, rhs: Self) -> PolyX {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for d in 0..n {
            coeffs.push(self.coeff(d) + rhs.coeff(d));
        }
        PolyX::from_coeffs(coeffs)
    }
}

impl Sub for &PolyX {
    type Output = PolyX;
    fn sub(self, rhs: Self) -> PolyX {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for d in 0..n {
            coeffs.push(self.coeff(d) - rhs.coeff(d));
        }
        PolyX::from_coeffs(coeffs)
    }
}

impl Mul for &PolyX {
    type Output = PolyX;
    fn mul(self, rhs: Self) -> PolyX {
        if self.is_zero() || rhs.is_zero() {
            return PolyX::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyX::from_coeffs(coeffs)
    }
}

impl Neg for &PolyX {
    type Output = PolyX;
    fn neg(self) -> PolyX {
        PolyX {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for PolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Highest powers first: "2*x^2 - 1".
        for d in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[d];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (d, mag.is_one()) {
                (0, _) => write!(f, "{}", fmt_rational(&mag))?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{}*x", fmt_rational(&mag))?,
                (_, true) => write!(f, "x^{}", d)?,
                (_, false) => write!(f, "{}*x^{}", fmt_rational(&mag), d)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xp(d: usize) -> PolyX {
        PolyX::x_pow(d)
    }

    #[test]
    fn arithmetic_and_display() {
        let p = &xp(2).scale(&BigRational::from(BigInt::from(2))) - &PolyX::one();
        assert_eq!(p.to_string(), "2*x^2 - 1");
        assert_eq!((&p - &p), PolyX::zero());
        assert_eq!(p.degree(), Some(2));
        let q = &p * &xp(3);
        assert_eq!(q.degree(), Some(5));
        assert_eq!(q.coeff(3), BigRational::from(BigInt::from(-1)));
    }

    #[test]
    fn divrem_exact_and_inexact() {
        // (x^2 - 1) = (x - 1)(x + 1).
        let p = &xp(2) - &PolyX::one();
        let d = &xp(1) - &PolyX::one();
        let (q, r) = p.divrem(&d).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, &xp(1) + &PolyX::one());
        let (_, r2) = xp(1).divrem(&p).unwrap();
        assert_eq!(r2, xp(1));
    }

    #[test]
    fn gcd_is_monic() {
        let a = &(&xp(1) - &PolyX::one()) * &(&xp(1) + &PolyX::one());
        let b = &(&xp(1) - &PolyX::one()) * &xp(3).scale(&BigRational::from(BigInt::from(7)));
        let g = a.gcd(&b);
        assert_eq!(g, &xp(1) - &PolyX::one());
        assert_eq!(PolyX::zero().gcd(&PolyX::zero()), PolyX::zero());
    }

    #[test]
    fn monomial_inspection() {
        assert_eq!(
            xp(4).scale(&BigRational::from(BigInt::from(3))).as_monomial(),
            Some((BigRational::from(BigInt::from(3)), 4))
        );
        assert!((&xp(2) + &PolyX::one()).as_monomial().is_none());
        assert_eq!(
            PolyX::zero().as_monomial(),
            Some((BigRational::zero(), 0))
        );
    }
}
