//! Dense square matrices over ℚ(x) — the carriers of seminormal
//! representations and ψ-basis elements.
//!
//! # Design Notes
//! - Exactness over speed: entries are reduced rational functions and all
//!   products are exact, so equality checks certify algebra relations.

use crate::exactmath::RatFunc;
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// A square matrix over ℚ(x).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    dim: usize,
    rows: Vec<Vec<RatFunc>>,
}

impl Mat {
    /// The zero matrix.
    pub fn zeros(dim: usize) -> Self {
        Mat {
            dim,
            rows: vec![vec![RatFunc::zero(); dim]; dim],
        }
    }

    /// The identity matrix.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.rows[i][i] = RatFunc::one();
        }
        m
    }

    /// A diagonal matrix from its entries.
    pub fn diagonal(entries: Vec<RatFunc>) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, e) in entries.into_iter().enumerate() {
            m.rows[i][i] = e;
        }
        m
    }

    /// Side length.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at (row, col).
    pub fn get(&self, row: usize, col: usize) -> &RatFunc {
        &self.rows[row][col]
    }

    /// Overwrite an entry.
    pub fn set(&mut self, row: usize, col: usize, value: RatFunc) {
        self.rows[row][col] = value;
    }

    /// Add into an entry.
    pub fn add_at(&mut self, row: usize, col: usize, value: &RatFunc) {
        self.rows[row][col] = &self.rows[row][col] + value;
    }

    /// True iff every entry vanishes.
    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(RatFunc::is_zero))
    }

    /// Flatten the entries row-major (for rank computations).
    pub fn flatten(&self) -> Vec<RatFunc> {
        self.rows.iter().flatten().cloned().collect()
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: Self) -> Mat {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (r, row) in rhs.rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                out.add_at(r, c, v);
            }
        }
        out
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: Self) -> Mat {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (r, row) in rhs.rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                out.add_at(r, c, &-v);
            }
        }
        out
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: Self) -> Mat {
        assert_eq!(self.dim, rhs.dim);
        let mut out = Mat::zeros(self.dim);
        for r in 0..self.dim {
            for k in 0..self.dim {
                if self.rows[r][k].is_zero() {
                    continue;
                }
                for c in 0..self.dim {
                    if rhs.rows[k][c].is_zero() {
                        continue;
                    }
                    let prod = &self.rows[r][k] * &rhs.rows[k][c];
                    out.add_at(r, c, &prod);
                }
            }
        }
        out
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
