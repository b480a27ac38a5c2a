//! Quiver and Cartan data for the two affine families: symmetrizers, Cartan
//! matrices, the invariant bilinear form, charges/dominant weights, root
//! elements, defect, and the sign automorphism on vertices.
//!
//! # Key Operations
//! - `CartanData::new` — validated construction with derived Cartan matrix
//! - `bilinear` — (α_i|α_j) = d_i·c_ij
//! - `defect` — (Λ|α) − ½(α|α) for α ∈ Q⁺
//! - `sign_vertex` — the diagram involution ε
//!
//! # Design Notes
//! - The Cartan matrices are generated from the diagrams: a cycle for affine A
//!   (doubled edge when e = 2) and a path for affine C with asymmetric end
//!   edges; both are pinned by the null-root condition (δ|α_i) = 0, which the
//!   tests check for all e up to 12.

use crate::error::{Error, Result};

/// The two supported affine families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuiverKind {
    /// Affine type A (cyclic quiver), e ≥ 2.
    AffineA,
    /// Affine type C (folded path), e ≥ 3.
    AffineC,
}

/// Vertex set, symmetrizer and Cartan matrix of a quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    kind: QuiverKind,
    e: usize,
    d: Vec<i64>,
    c: Vec<Vec<i64>>,
}

impl CartanData {
    /// Build the Cartan datum for the given kind and vertex count.
    pub fn new(kind: QuiverKind, e: usize) -> Result<Self> {
        match kind {
            QuiverKind::AffineA if e < 2 => {
                return Err(Error::InvalidConfig(format!("affine A needs e >= 2, got {e}")))
            }
            QuiverKind::AffineC if e < 3 => {
                return Err(Error::InvalidConfig(format!("affine C needs e >= 3, got {e}")))
            }
            _ => {}
        }
        let mut c = vec![vec![0i64; e]; e];
        for i in 0..e {
            c[i][i] = 2;
        }
        let d = match kind {
            QuiverKind::AffineA => {
                if e == 2 {
                    c[0][1] = -2;
                    c[1][0] = -2;
                } else {
                    for i in 0..e {
                        let j = (i + 1) % e;
                        c[i][j] = -1;
                        c[j][i] = -1;
                    }
                }
                vec![1; e]
            }
            QuiverKind::AffineC => {
                for i in 0..e - 1 {
                    c[i][i + 1] = -1;
                    c[i + 1][i] = -1;
                }
                c[1][0] = -2;
                c[e - 2][e - 1] = -2;
                let mut d = vec![1; e];
                d[0] = 2;
                d[e - 1] = 2;
                d
            }
        };
        Ok(CartanData { kind, e, d, c })
    }

    /// The quiver family.
    pub fn kind(&self) -> QuiverKind {
        self.kind
    }

    /// Number of vertices |I|.
    pub fn e(&self) -> usize {
        self.e
    }

    fn check_vertex(&self, i: usize) -> Result<()> {
        if i < self.e {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(format!("vertex {i} not in I = 0..{}", self.e)))
        }
    }

    /// Symmetrizer entry d_i.
    pub fn symmetrizer(&self, i: usize) -> Result<i64> {
        self.check_vertex(i)?;
        Ok(self.d[i])
    }

    /// Cartan matrix entry c_ij.
    pub fn cartan(&self, i: usize, j: usize) -> Result<i64> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        Ok(self.c[i][j])
    }

    /// The invariant bilinear form (α_i|α_j) = d_i·c_ij.
    pub fn bilinear(&self, i: usize, j: usize) -> Result<i64> {
        Ok(self.d[i] * self.cartan(i, j)?)
    }

    /// True iff distinct vertices i and j are joined by an edge.
    pub fn adjacent(&self, i: usize, j: usize) -> Result<bool> {
        Ok(i != j && self.cartan(i, j)? != 0)
    }

    /// Multiplicities of the null root δ.
    pub fn null_root(&self) -> Vec<i64> {
        match self.kind {
            QuiverKind::AffineA => vec![1; self.e],
            QuiverKind::AffineC => {
                let mut m = vec![2; self.e];
                m[0] = 1;
                m[self.e - 1] = 1;
                m
            }
        }
    }

    /// The sign-automorphism vertex involution ε.
    pub fn sign_vertex(&self, i: usize) -> Result<usize> {
        self.check_vertex(i)?;
        Ok(match self.kind {
            QuiverKind::AffineA => (self.e - i) % self.e,
            QuiverKind::AffineC => self.e - 1 - i,
        })
    }
}

/// An ℓ-charge κ = (ρ₁,…,ρ_ℓ); determines Λ = Σ_l Λ_{ρ_l}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Charge {
    entries: Vec<usize>,
}

impl Charge {
    /// Build a charge, validating entries against the vertex set.
    pub fn new(entries: Vec<usize>, cartan: &CartanData) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidConfig("charge must have level >= 1".into()));
        }
        for &r in &entries {
            cartan.check_vertex(r)?;
        }
        Ok(Charge { entries })
    }

    /// The level ℓ.
    pub fn level(&self) -> usize {
        self.entries.len()
    }

    /// The component charges ρ_1,…,ρ_ℓ.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// The pairing (Λ|α_i) = d_i·#{l : ρ_l = i}.
    pub fn weight_pairing(&self, cartan: &CartanData, i: usize) -> Result<i64> {
        let count = self.entries.iter().filter(|&&r| r == i).count() as i64;
        Ok(cartan.symmetrizer(i)? * count)
    }
}

/// An element of the positive root lattice Q⁺: vertex multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RootElement {
    mult: Vec<i64>,
}

impl RootElement {
    /// The zero element over a vertex set of size e.
    pub fn zero(e: usize) -> Self {
        RootElement { mult: vec![0; e] }
    }

    /// Build from multiplicities.
    pub fn from_mult(mult: Vec<i64>) -> Self {
        RootElement { mult }
    }

    /// Vertex multiplicity m_i.
    pub fn mult(&self, i: usize) -> i64 {
        self.mult.get(i).copied().unwrap_or(0)
    }

    /// Add α_i in place.
    pub fn add_simple(&mut self, i: usize) {
        self.mult[i] += 1;
    }

    /// The height Σ m_i.
    pub fn height(&self) -> i64 {
        self.mult.iter().sum()
    }
}

/// The defect (Λ|α) − ½(α|α); an integer because the form is even on Q⁺.
pub fn defect(cartan: &CartanData, charge: &Charge, alpha: &RootElement) -> Result<i64> {
    let e = cartan.e();
    let mut lam_alpha = 0i64;
    for i in 0..e {
        lam_alpha += charge.weight_pairing(cartan, i)? * alpha.mult(i);
    }
    let mut norm = 0i64;
    for i in 0..e {
        for j in 0..e {
            norm += alpha.mult(i) * alpha.mult(j) * cartan.bilinear(i, j)?;
        }
    }
    debug_assert_eq!(norm % 2, 0);
    Ok(lam_alpha - norm / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetrizer_examples() {
        let c3 = CartanData::new(QuiverKind::AffineC, 3).unwrap();
        assert_eq!(c3.symmetrizer(0).unwrap(), 2);
        let a4 = CartanData::new(QuiverKind::AffineA, 4).unwrap();
        assert_eq!(a4.symmetrizer(2).unwrap(), 1);
        let c5 = CartanData::new(QuiverKind::AffineC, 5).unwrap();
        assert_eq!(c5.symmetrizer(2).unwrap(), 1);
        assert!(c5.symmetrizer(5).is_err());
        assert!(CartanData::new(QuiverKind::AffineC, 2).is_err());
        assert!(CartanData::new(QuiverKind::AffineA, 1).is_err());
    }

    #[test]
    fn bilinear_examples() {
        let a3 = CartanData::new(QuiverKind::AffineA, 3).unwrap();
        assert_eq!(a3.bilinear(0, 1).unwrap(), -1);
        let a2 = CartanData::new(QuiverKind::AffineA, 2).unwrap();
        assert_eq!(a2.bilinear(0, 1).unwrap(), -2);
        let c3 = CartanData::new(QuiverKind::AffineC, 3).unwrap();
        assert_eq!(c3.bilinear(0, 1).unwrap(), -2);
        assert_eq!(c3.bilinear(1, 0).unwrap(), -2);
        assert_eq!(c3.bilinear(0, 0).unwrap(), 4);
    }

    #[test]
    fn null_root_is_isotropic() {
        for e in 2..=12 {
            let a = CartanData::new(QuiverKind::AffineA, e).unwrap();
            let delta = a.null_root();
            for i in 0..e {
                let pairing: i64 = (0..e).map(|j| delta[j] * a.bilinear(i, j).unwrap()).sum();
                assert_eq!(pairing, 0, "A e={e} i={i}");
            }
        }
        for e in 3..=12 {
            let c = CartanData::new(QuiverKind::AffineC, e).unwrap();
            let delta = c.null_root();
            for i in 0..e {
                let pairing: i64 = (0..e).map(|j| delta[j] * c.bilinear(i, j).unwrap()).sum();
                assert_eq!(pairing, 0, "C e={e} i={i}");
            }
        }
    }

    #[test]
    fn symmetry_of_bilinear_form() {
        for (kind, emin) in [(QuiverKind::AffineA, 2), (QuiverKind::AffineC, 3)] {
            for e in emin..=8 {
                let cd = CartanData::new(kind, e).unwrap();
                for i in 0..e {
                    for j in 0..e {
                        assert_eq!(cd.bilinear(i, j).unwrap(), cd.bilinear(j, i).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn sign_vertex_examples() {
        let a3 = CartanData::new(QuiverKind::AffineA, 3).unwrap();
        assert_eq!(a3.sign_vertex(1).unwrap(), 2);
        let c3 = CartanData::new(QuiverKind::AffineC, 3).unwrap();
        assert_eq!(c3.sign_vertex(0).unwrap(), 2);
        let a2 = CartanData::new(QuiverKind::AffineA, 2).unwrap();
        assert_eq!(a2.sign_vertex(0).unwrap(), 0);
        // ε preserves the Cartan matrix.
        for (kind, emin) in [(QuiverKind::AffineA, 2), (QuiverKind::AffineC, 3)] {
            for e in emin..=8 {
                let cd = CartanData::new(kind, e).unwrap();
                for i in 0..e {
                    for j in 0..e {
                        let (si, sj) = (cd.sign_vertex(i).unwrap(), cd.sign_vertex(j).unwrap());
                        assert_eq!(cd.cartan(i, j).unwrap(), cd.cartan(si, sj).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn defect_examples() {
        let a3 = CartanData::new(QuiverKind::AffineA, 3).unwrap();
        let kappa = Charge::new(vec![0], &a3).unwrap();
        assert_eq!(defect(&a3, &kappa, &RootElement::zero(3)).unwrap(), 0);
        // α = δ: (Λ₀|δ) = 1 and (δ|δ) = 0.
        let delta = RootElement::from_mult(vec![1, 1, 1]);
        assert_eq!(defect(&a3, &kappa, &delta).unwrap(), 1);
    }
}
