//! Canonical bases, graded decomposition matrices and Cartan matrices.
//!
//! # Key Operations
//! - `canonical_basis` — for each Kleshchev μ, the bar-invariant vector G_μ
//!   with coefficient 1 on s_μ and all other coefficients in qℤ[q]
//! - `decomposition_matrix` — the matrix of canonical-basis coefficients over
//!   all multipartitions of n, with text/CSV rendering
//! - `inverse_decomposition` / `cartan_matrix` — the Kleshchev-restricted
//!   inverse and the Gram-style product Dᵀ·D
//!
//! # Design Notes
//! - First approximations are crystal monomials: peel μ through its preferred
//!   good node, taking the full ε-string at each residue, and apply the
//!   matching divided powers to s_∅. Gaussian elimination then strips the
//!   degree-≤0 parts of Kleshchev coefficients by subtracting bar-symmetric
//!   multiples of already-computed columns; `EliminationStuck` flags any
//!   residue the symmetrization cannot clear.
//! - Row order mirrors the printed tables: ◁ lists shapes by descending
//!   cumulative-sum key, ▷ by ascending. Elimination itself runs in ascending
//!   precedence, the reverse of the display order.
//! - Entries are canonical-basis coefficients. Their equality with graded
//!   decomposition numbers is a theorem for type A in characteristic zero;
//!   elsewhere they are the canonical upper approximation. `DecompMatrix`
//!   carries this caveat explicitly.

use super::vector::{divided_power_f, FockVector};
use crate::crystal::{e_tilde, eps, kleshchev, preferred_good_node};
use crate::error::{Error, Result};
use crate::exactmath::LaurentPoly;
use crate::tableaux::multipartition::{multipartitions, Multipartition};
use crate::tableaux::tableau::Order;
use crate::tableaux::ContentSystem;
use std::collections::BTreeMap;
use std::fmt;

/// Sort shapes the way the printed tables list rows: ◁ by descending
/// cumulative-sum key, ▷ by ascending.
pub fn display_order(shapes: &mut [Multipartition], order: Order) {
    match order {
        Order::Lt => shapes.sort_by(|a, b| b.cumsum_key().cmp(&a.cumsum_key())),
        Order::Gt => shapes.sort_by_key(Multipartition::cumsum_key),
    }
}

/// The crystal-monomial first approximation A_μ = F_{i_1}^{(a_1)}···s_∅.
fn first_approximation(
    cs: &ContentSystem,
    mu: &Multipartition,
    order: Order,
) -> Result<FockVector> {
    let mut steps = Vec::new();
    let mut lam = mu.clone();
    while lam.size() > 0 {
        let Some((i, _)) = preferred_good_node(cs, &lam, order)? else {
            return Err(Error::NotKleshchev(format!("{mu} is not Kleshchev")));
        };
        let a = eps(cs, &lam, i, order)?;
        for _ in 0..a {
            lam = e_tilde(cs, &lam, i, order)?.expect("ε counts good-node removals");
        }
        steps.push((i, a));
    }
    let mut v = FockVector::basis(&Multipartition::empty(cs.level()), order);
    for &(i, a) in steps.iter().rev() {
        v = divided_power_f(cs, i, a, &v)?;
    }
    // The monomial hits s_μ with a single power of q; rescale so the
    // diagonal coefficient is exactly 1.
    let diagonal = v.coeff(mu);
    match diagonal.as_monomial_exponent() {
        Some(m) => Ok(v.scaled(&LaurentPoly::q_pow(-m))),
        None => Err(Error::EliminationStuck(format!(
            "A_{mu} has diagonal coefficient {diagonal}, not a power of q"
        ))),
    }
}

/// The bar-symmetric part sharing the degree-≤0 terms of α:
/// β = α₀ + Σ_{k<0} α_k(q^k + q^{−k}).
fn symmetrize_low_part(alpha: &LaurentPoly) -> LaurentPoly {
    let mut beta = LaurentPoly::zero();
    beta.add_term(alpha.coeff(0), 0);
    for (&k, c) in alpha.iter() {
        if k < 0 {
            beta.add_term(c.clone(), k);
            beta.add_term(c.clone(), -k);
        }
    }
    beta
}

/// The canonical basis in degree n: a map μ → G_μ over the Kleshchev
/// multipartitions of n.
pub fn canonical_basis(
    cs: &ContentSystem,
    n: usize,
    order: Order,
) -> Result<BTreeMap<Multipartition, FockVector>> {
    // Ascending precedence: everything that can occur in the support of A_μ
    // other than μ itself must be processed before μ.
    let mut pending = kleshchev(cs, n, order)?;
    display_order(&mut pending, order);
    pending.reverse();
    let mut done: Vec<Multipartition> = Vec::new();
    let mut basis: BTreeMap<Multipartition, FockVector> = BTreeMap::new();
    for mu in pending {
        let mut v = first_approximation(cs, &mu, order)?;
        // One sweep from the highest precedence down: fixing ν only disturbs
        // coefficients on strict predecessors of ν, which come later.
        for nu in done.iter().rev() {
            let alpha = v.coeff(nu);
            if alpha.is_zero() || alpha.min_exponent_at_least(1) {
                continue;
            }
            let beta = symmetrize_low_part(&alpha);
            v = &v - &basis[nu].scaled(&beta);
        }
        // Certify the result; any residue means bar-invariance was violated
        // upstream, i.e. an implementation bug.
        if !v.coeff(&mu).is_one() {
            return Err(Error::EliminationStuck(format!(
                "G_{mu} has diagonal coefficient {} ≠ 1",
                v.coeff(&mu)
            )));
        }
        for (lam, c) in v.terms() {
            if lam != &mu && !c.min_exponent_at_least(1) {
                return Err(Error::EliminationStuck(format!(
                    "G_{mu} keeps a degree-≤0 coefficient {c} on {lam}"
                )));
            }
        }
        basis.insert(mu.clone(), v);
        done.push(mu);
    }
    Ok(basis)
}

/// A matrix of canonical-basis coefficients: rows over all multipartitions of
/// n, columns over the Kleshchev labels, both in display order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompMatrix {
    order: Order,
    rows: Vec<Multipartition>,
    cols: Vec<Multipartition>,
    entries: Vec<Vec<LaurentPoly>>,
}

impl DecompMatrix {
    /// The order whose canonical basis the columns expand.
    pub fn order(&self) -> Order {
        self.order
    }

    /// Row labels in display order.
    pub fn rows(&self) -> &[Multipartition] {
        &self.rows
    }

    /// Column labels (Kleshchev) in display order.
    pub fn cols(&self) -> &[Multipartition] {
        &self.cols
    }

    /// The entry at (row r, column c).
    pub fn entry(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r][c]
    }

    /// The coefficient of s_λ in G_μ, zero when the labels are absent.
    pub fn coeff(&self, lam: &Multipartition, mu: &Multipartition) -> LaurentPoly {
        match (
            self.rows.iter().position(|r| r == lam),
            self.cols.iter().position(|c| c == mu),
        ) {
            (Some(r), Some(c)) => self.entries[r][c].clone(),
            _ => LaurentPoly::zero(),
        }
    }

    /// The standing caveat on interpreting entries as decomposition numbers.
    pub fn caveat(&self) -> &'static str {
        "entries are canonical-basis coefficients; they are graded \
         decomposition numbers in type A over characteristic-zero fields and \
         upper-bound approximations otherwise"
    }

    /// Aligned plain-text table with dots for zeros.
    pub fn render_text(&self) -> String {
        let mut cells: Vec<Vec<String>> = Vec::with_capacity(self.rows.len() + 1);
        let mut header = vec![String::new()];
        header.extend(self.cols.iter().map(|c| c.to_string()));
        cells.push(header);
        for (r, lam) in self.rows.iter().enumerate() {
            let mut row = vec![lam.to_string()];
            for c in 0..self.cols.len() {
                let e = &self.entries[r][c];
                row.push(if e.is_zero() { ".".into() } else { e.to_string() });
            }
            cells.push(row);
        }
        let widths: Vec<usize> = (0..cells[0].len())
            .map(|j| cells.iter().map(|row| row[j].chars().count()).max().unwrap())
            .collect();
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(j, cell)| {
                    let pad = widths[j] - cell.chars().count();
                    format!("{}{}", " ".repeat(pad), cell)
                })
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    /// CSV with a header row; zero entries are written as 0.
    pub fn render_csv(&self) -> String {
        let quote = |s: &str| format!("\"{s}\"");
        let mut out = String::new();
        let mut header = vec![quote("row")];
        header.extend(self.cols.iter().map(|c| quote(&c.to_string())));
        out.push_str(&header.join(","));
        out.push('\n');
        for (r, lam) in self.rows.iter().enumerate() {
            let mut row = vec![quote(&lam.to_string())];
            row.extend(self.entries[r].iter().map(|e| quote(&e.to_string())));
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for DecompMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_text())
    }
}

/// The canonical-basis matrix of degree n: all shapes by Kleshchev labels.
pub fn decomposition_matrix(cs: &ContentSystem, n: usize, order: Order) -> Result<DecompMatrix> {
    let basis = canonical_basis(cs, n, order)?;
    let mut rows = multipartitions(n, cs.level());
    display_order(&mut rows, order);
    let mut cols: Vec<Multipartition> = basis.keys().cloned().collect();
    display_order(&mut cols, order);
    let entries = rows
        .iter()
        .map(|lam| cols.iter().map(|mu| basis[mu].coeff(lam)).collect())
        .collect();
    Ok(DecompMatrix {
        order,
        rows,
        cols,
        entries,
    })
}

/// Invert the Kleshchev-restricted square of the matrix over ℤ[q,q⁻¹].
/// Returns the inverse indexed by the column labels in display order.
pub fn inverse_decomposition(m: &DecompMatrix) -> Result<Vec<Vec<LaurentPoly>>> {
    let k = m.cols().len();
    let mut square = Vec::with_capacity(k);
    for mu in m.cols() {
        let Some(r) = m.rows().iter().position(|lam| lam == mu) else {
            return Err(Error::NotSquare(format!(
                "Kleshchev label {mu} is missing from the rows"
            )));
        };
        square.push(m.entries[r].clone());
    }
    // The restriction is lower unitriangular in display order.
    for (r, row) in square.iter().enumerate() {
        if !row[r].is_one() {
            return Err(Error::NotSquare(format!(
                "diagonal entry at {} is {}, not 1",
                m.cols()[r],
                row[r]
            )));
        }
        for (c, entry) in row.iter().enumerate().skip(r + 1) {
            if !entry.is_zero() {
                return Err(Error::NotSquare(format!(
                    "entry ({}, {}) = {} above the diagonal",
                    m.cols()[r],
                    m.cols()[c],
                    entry
                )));
            }
        }
    }
    // Forward substitution: X[r][c] = −Σ_{c ≤ s < r} A[r][s]·X[s][c].
    let mut inv = vec![vec![LaurentPoly::zero(); k]; k];
    for c in 0..k {
        inv[c][c] = LaurentPoly::one();
        for r in c + 1..k {
            let mut acc = LaurentPoly::zero();
            for s in c..r {
                acc = &acc + &(&square[r][s] * &inv[s][c]);
            }
            inv[r][c] = &acc * &LaurentPoly::from_int(-1);
        }
    }
    Ok(inv)
}

/// The Gram-style product Dᵀ·D over the full matrix, indexed by the
/// Kleshchev labels; with `bar_left` the transposed factor is
/// bar-conjugated, the sesquilinear convention.
pub fn cartan_matrix(m: &DecompMatrix, bar_left: bool) -> Vec<Vec<LaurentPoly>> {
    let k = m.cols().len();
    let mut out = vec![vec![LaurentPoly::zero(); k]; k];
    for (mu, row_out) in out.iter_mut().enumerate() {
        for (nu, slot) in row_out.iter_mut().enumerate() {
            let mut acc = LaurentPoly::zero();
            for row in &m.entries {
                let left = if bar_left { row[mu].bar() } else { row[mu].clone() };
                acc = &acc + &(&left * &row[nu]);
            }
            *slot = acc;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::Variant;
    use num_bigint::Sign;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn sys(variant: Variant, e: usize, charge: Vec<usize>, n: usize) -> ContentSystem {
        ContentSystem::new(variant, e, charge, n).unwrap()
    }

    fn q(k: i64) -> LaurentPoly {
        LaurentPoly::q_pow(k)
    }

    #[test]
    fn golden_columns_c3_n6() {
        let c3 = sys(Variant::CClassical, 3, vec![0], 10);
        let basis = canonical_basis(&c3, 6, Order::Gt).unwrap();
        // The maximal column is a bare basis vector.
        assert_eq!(
            basis[&mp("(3,2,1)")],
            FockVector::basis(&mp("(3,2,1)"), Order::Gt)
        );
        // The full column at (1,1,1,1,1,1).
        let g = &basis[&mp("(1,1,1,1,1,1)")];
        let expected: &[(&str, i64)] = &[
            ("(1,1,1,1,1,1)", 0),
            ("(2,1,1,1,1)", 1),
            ("(2,2,1,1)", 1),
            ("(2,2,2)", 2),
            ("(3,3)", 1),
            ("(4,2)", 2),
            ("(5,1)", 2),
            ("(6)", 3),
        ];
        assert_eq!(g.support().len(), expected.len());
        for &(lam, k) in expected {
            assert_eq!(g.coeff(&mp(lam)), q(k), "coefficient at {lam}");
        }
    }

    #[test]
    fn golden_matrices_c3_n6() {
        let c3 = sys(Variant::CClassical, 3, vec![0], 10);

        let lt = decomposition_matrix(&c3, 6, Order::Lt).unwrap();
        let lt_rows = [
            "(6)", "(5,1)", "(4,2)", "(4,1,1)", "(3,3)", "(3,2,1)", "(3,1,1,1)", "(2,2,2)",
            "(2,2,1,1)", "(2,1,1,1,1)", "(1,1,1,1,1,1)",
        ];
        let lt_cols = ["(6)", "(5,1)", "(4,2)", "(4,1,1)", "(3,2,1)"];
        // Entries as q-exponents; None is a zero.
        let n = None::<i64>;
        let lt_table: [[Option<i64>; 5]; 11] = [
            [Some(0), n, n, n, n],
            [Some(1), Some(0), n, n, n],
            [Some(1), Some(2), Some(0), n, n],
            [n, n, n, Some(0), n],
            [Some(2), n, Some(1), n, n],
            [n, n, n, n, Some(0)],
            [n, n, n, Some(1), n],
            [Some(1), n, Some(2), n, n],
            [Some(2), Some(1), Some(3), n, n],
            [Some(2), Some(3), n, n, n],
            [Some(3), n, n, n, n],
        ];
        assert_eq!(
            lt.rows().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            lt_rows
        );
        assert_eq!(
            lt.cols().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            lt_cols
        );
        for (r, row) in lt_table.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                let expected = cell.map(q).unwrap_or_else(LaurentPoly::zero);
                assert_eq!(lt.entry(r, c), &expected, "◁ entry ({r},{c})");
            }
        }

        let gt = decomposition_matrix(&c3, 6, Order::Gt).unwrap();
        let gt_rows = [
            "(1,1,1,1,1,1)", "(2,1,1,1,1)", "(2,2,1,1)", "(2,2,2)", "(3,1,1,1)", "(3,2,1)",
            "(3,3)", "(4,1,1)", "(4,2)", "(5,1)", "(6)",
        ];
        let gt_cols = ["(1,1,1,1,1,1)", "(2,1,1,1,1)", "(2,2,1,1)", "(3,1,1,1)", "(3,2,1)"];
        let gt_table: [[Option<i64>; 5]; 11] = [
            [Some(0), n, n, n, n],
            [Some(1), Some(0), n, n, n],
            [Some(1), Some(2), Some(0), n, n],
            [Some(2), n, Some(1), n, n],
            [n, n, n, Some(0), n],
            [n, n, n, n, Some(0)],
            [Some(1), n, Some(2), n, n],
            [n, n, n, Some(1), n],
            [Some(2), Some(1), Some(3), n, n],
            [Some(2), Some(3), n, n, n],
            [Some(3), n, n, n, n],
        ];
        assert_eq!(
            gt.rows().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            gt_rows
        );
        assert_eq!(
            gt.cols().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            gt_cols
        );
        for (r, row) in gt_table.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                let expected = cell.map(q).unwrap_or_else(LaurentPoly::zero);
                assert_eq!(gt.entry(r, c), &expected, "▷ entry ({r},{c})");
            }
        }
    }

    #[test]
    fn degree_zero_and_small_matrices() {
        let a2 = sys(Variant::AClassical, 2, vec![0], 6);
        for order in [Order::Lt, Order::Gt] {
            let m0 = decomposition_matrix(&a2, 0, order).unwrap();
            assert_eq!(m0.rows().len(), 1);
            assert_eq!(m0.cols().len(), 1);
            assert!(m0.entry(0, 0).is_one());
            // n = 2: unitriangular with entries in δ + qℕ[q].
            let m2 = decomposition_matrix(&a2, 2, order).unwrap();
            for (c, mu) in m2.cols().iter().enumerate() {
                for (r, lam) in m2.rows().iter().enumerate() {
                    let e = m2.entry(r, c);
                    if lam == mu {
                        assert!(e.is_one());
                    } else if !e.is_zero() {
                        assert!(e.min_exponent_at_least(1));
                        for (_, coeff) in e.iter() {
                            assert_ne!(coeff.sign(), Sign::Minus);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_degree_bounds() {
        // For λ ∉ {μ, m(μ)}: 0 < deg G_{λμ} < defect(μ); and
        // G_{m(μ),μ} = q^{defect(μ)}.
        let c3 = sys(Variant::CClassical, 3, vec![0], 10);
        for order in [Order::Lt, Order::Gt] {
            for n in 0..=6 {
                let basis = canonical_basis(&c3, n, order).unwrap();
                for (mu, g) in &basis {
                    let letters = crate::crystal::good_sequence(&c3, mu, order).unwrap();
                    let image = crate::crystal::replay(&c3, &letters, order.flip())
                        .unwrap()
                        .unwrap();
                    let defect = c3.defect_of(mu).unwrap();
                    for (lam, coeff) in g.terms() {
                        if lam == mu {
                            continue;
                        }
                        let deg = coeff.max_degree().unwrap();
                        if lam == &image {
                            assert_eq!(coeff, &q(defect), "G at mirror of {mu}");
                        } else {
                            assert!(0 < deg && deg < defect, "G_({lam},{mu}) = {coeff}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn mullineux_symmetry_of_columns() {
        for (variant, e) in [(Variant::CClassical, 3), (Variant::AClassical, 2)] {
            let cs = sys(variant, e, vec![0], 8);
            for n in 0..=4 {
                let lt = canonical_basis(&cs, n, Order::Lt).unwrap();
                let gt = canonical_basis(&cs, n, Order::Gt).unwrap();
                for (mu, g_lt) in &lt {
                    let image = crate::crystal::mullineux(&cs, mu).unwrap();
                    let g_gt = &gt[&image];
                    for lam in multipartitions(n, 1) {
                        let defect = cs.defect_of(&lam).unwrap();
                        assert_eq!(
                            g_lt.coeff(&lam),
                            &q(defect) * &g_gt.coeff(&lam).bar(),
                            "λ = {lam}, μ = {mu}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_and_cartan_matrices() {
        let c3 = sys(Variant::CClassical, 3, vec![0], 10);
        for order in [Order::Lt, Order::Gt] {
            let m = decomposition_matrix(&c3, 6, order).unwrap();
            let inv = inverse_decomposition(&m).unwrap();
            let k = m.cols().len();
            // Multiply the restriction back against the inverse.
            for r in 0..k {
                let row_r = m
                    .rows()
                    .iter()
                    .position(|lam| lam == &m.cols()[r])
                    .unwrap();
                for c in 0..k {
                    let mut acc = LaurentPoly::zero();
                    for s in 0..k {
                        acc = &acc + &(&m.entry(row_r, s).clone() * &inv[s][c]);
                    }
                    let expected = if r == c {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    };
                    assert_eq!(acc, expected);
                }
            }
            // Cartan matrix: the sesquilinear convention is symmetric under
            // simultaneous bar + transpose, the plain one under transpose
            // alone; diagonals have constant term ≥ 1 and nonnegative
            // coefficients in both.
            for bar_left in [false, true] {
                let car = cartan_matrix(&m, bar_left);
                for r in 0..k {
                    assert!(car[r][r].coeff(0) >= 1.into());
                    for (_, coeff) in car[r][r].iter() {
                        assert_ne!(coeff.sign(), Sign::Minus);
                    }
                    for c in 0..k {
                        if bar_left {
                            assert_eq!(car[r][c], car[c][r].bar());
                        } else {
                            assert_eq!(car[r][c], car[c][r]);
                        }
                    }
                }
            }
        }
        // n = 0 gives the 1×1 identity in both roles.
        let m0 = decomposition_matrix(&c3, 0, Order::Lt).unwrap();
        assert_eq!(inverse_decomposition(&m0).unwrap()[0][0], LaurentPoly::one());
        assert_eq!(cartan_matrix(&m0, true)[0][0], LaurentPoly::one());
    }

    #[test]
    fn rendering_formats() {
        let c3 = sys(Variant::CClassical, 3, vec![0], 8);
        let m = decomposition_matrix(&c3, 6, Order::Lt).unwrap();
        let text = m.render_text();
        assert!(text.contains("(6)"));
        assert!(text.contains('.'));
        let csv = m.render_csv();
        assert!(csv.starts_with("\"row\""));
        assert_eq!(csv.lines().count(), m.rows().len() + 1);
        assert!(!m.caveat().is_empty());
    }
}
