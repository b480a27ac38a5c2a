//! Rational functions in `x` over ℚ — the scalar field carrying seminormal
//! matrix entries and γ-coefficients.
//!
//! # Key Operations
//! - field arithmetic via operator traits on references, plus `inverse`
//! - `as_polynomial` — extraction when the denominator is trivial
//! - `homogeneous_degree` — graded degree of a monomial-over-monomial value
//!
//! # Design Notes
//! - Always stored reduced (gcd 1) with a monic denominator, so equal values
//!   compare equal structurally.

use super::polyx::PolyX;
use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::One;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A reduced rational function `num/den` with monic `den`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatFunc {
    num: PolyX,
    den: PolyX,
}

impl RatFunc {
    /// Build and normalize `num/den`.
    pub fn new(num: PolyX, den: PolyX) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: PolyX::zero(),
                den: PolyX::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, _) = num.divrem(&g).unwrap();
        let (den, _) = den.divrem(&g).unwrap();
        let lead_inv = den.leading().recip();
        Ok(RatFunc {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        })
    }

    /// Embed a polynomial.
    pub fn from_poly(p: PolyX) -> Self {
        RatFunc {
            num: p,
            den: PolyX::one(),
        }
    }

    /// The zero value.
    pub fn zero() -> Self {
        Self::from_poly(PolyX::zero())
    }

    /// The value 1.
    pub fn one() -> Self {
        Self::from_poly(PolyX::one())
    }

    /// Constant from an integer.
    pub fn from_int(c: i64) -> Self {
        Self::from_poly(PolyX::from_int(c))
    }

    /// True iff zero.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True iff 1.
    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Numerator (reduced form).
    pub fn numer(&self) -> &PolyX {
        &self.num
    }

    /// Denominator (reduced, monic).
    pub fn denom(&self) -> &PolyX {
        &self.den
    }

    /// Multiplicative inverse.
    pub fn inverse(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Extract the polynomial value, failing when the denominator is nontrivial.
    pub fn as_polynomial(&self) -> Result<PolyX> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotPolynomial(format!("{}", self)))
        }
    }

    /// Graded degree of a homogeneous (monomial/monomial) value.
    pub fn homogeneous_degree(&self) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::NotHomogeneous("zero has no degree".into()));
        }
        let (_, dn) = self
            .num
            .as_monomial()
            .ok_or_else(|| Error::NotHomogeneous(format!("{}", self.num)))?;
        let (_, dd) = self
            .den
            .as_monomial()
            .ok_or_else(|| Error::NotHomogeneous(format!("{}", self.den)))?;
        Ok(dn as i64 - dd as i64)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: Self) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).unwrap()
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: Self) -> RatFunc {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).unwrap()
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: Self) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // Rescale so the denominator has coprime integer coefficients,
        // e.g. x^4/(2*x^2 - 1) rather than a monic denominator with halves.
        let mut mult = BigRational::one();
        if let Some(d) = self.den.degree() {
            let mut lcm = num_bigint::BigInt::from(1);
            for k in 0..=d {
                let c = self.den.coeff(k);
                if !num_traits::Zero::is_zero(&c) {
                    lcm = num_integer::lcm(lcm, c.denom().clone());
                }
            }
            let mut gcd = num_bigint::BigInt::from(0);
            for k in 0..=d {
                let c = self.den.coeff(k) * BigRational::from(lcm.clone());
                gcd = num_integer::gcd(gcd, c.numer().clone());
            }
            if !num_traits::Zero::is_zero(&gcd) {
                mult = BigRational::new(lcm, gcd);
            }
        }
        let num = self.num.scale(&mult);
        let den = self.den.scale(&mult);
        if num.as_monomial().is_none() {
            write!(f, "({})/({})", num, den)
        } else {
            write!(f, "{}/({})", num, den)
        }
    }
}

/// Scalar used when evaluating Q-polynomials: a rational multiple of a power
/// of x, as a `RatFunc`.
pub fn monomial_rf(c: BigRational, d: usize) -> RatFunc {
    RatFunc::from_poly(PolyX::monomial(c, d))
}
