//! Standard tableaux: enumeration, residue/content sequences, the per-entry
//! addable/removable sets, degree functions, dominance, conjugation, initial
//! tableaux and the permutations relating a tableau to them.
//!
//! # Key Operations
//! - `standard_tableaux` — exhaustive enumeration
//! - `residue_sequence` / `content_sequence`
//! - `deg` — the ◁/▷ degree; the two degrees sum to the defect of the shape
//! - `initial_tableau` / `perm_d` — extremal tableaux and reduced words
//!
//! # Design Notes
//! - A tableau is stored as the list of node positions of 1,…,n; standardness
//!   is certified on construction by replaying the growth sequence.
//! - "Above"/"below" comparisons are lexicographic on (component, row,
//!   column); the ◁ statistics count strictly smaller nodes, the ▷ statistics
//!   strictly larger ones.
//! - Reduced words are the lexicographically smallest ones, found by
//!   repeatedly taking the smallest left descent.

use crate::error::{Error, Result};
use crate::exactmath::PolyX;
use crate::tableaux::content::ContentSystem;
use crate::tableaux::multipartition::{Multipartition, Node};
use std::fmt;

/// The two dominance orders indexing the dual families of structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    /// The reverse dominance order ◁.
    Lt,
    /// The dominance order ▷.
    Gt,
}

impl Order {
    /// The opposite order.
    pub fn flip(self) -> Order {
        match self {
            Order::Lt => Order::Gt,
            Order::Gt => Order::Lt,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Lt => write!(f, "lt"),
            Order::Gt => write!(f, "gt"),
        }
    }
}

/// A standard tableau: a growth sequence of nodes filling a multipartition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    level: usize,
    /// `positions[m-1]` is the node containing the entry m.
    positions: Vec<Node>,
}

impl StandardTableau {
    /// Build from the positions of 1,…,n, certifying standardness.
    pub fn from_positions(level: usize, positions: Vec<Node>) -> Result<Self> {
        let mut shape = Multipartition::empty(level);
        for (m, &node) in positions.iter().enumerate() {
            shape = shape.add_node(node).map_err(|_| {
                Error::InvalidConfig(format!(
                    "entry {} at {node} does not grow a diagram",
                    m + 1
                ))
            })?;
        }
        Ok(StandardTableau { level, positions })
    }

    /// The empty tableau with ℓ components.
    pub fn empty(level: usize) -> Self {
        StandardTableau {
            level,
            positions: Vec::new(),
        }
    }

    /// Number of entries n.
    pub fn size(&self) -> usize {
        self.positions.len()
    }

    /// Number of components ℓ.
    pub fn level(&self) -> usize {
        self.level
    }

    /// The node containing entry m (1-based).
    pub fn position(&self, m: usize) -> Result<Node> {
        self.positions
            .get(m.wrapping_sub(1))
            .copied()
            .ok_or_else(|| Error::IndexOutOfRange(format!("entry {m} not in 1..={}", self.size())))
    }

    /// The entry at a node, if the node is in the diagram.
    pub fn entry(&self, node: Node) -> Option<usize> {
        self.positions.iter().position(|&p| p == node).map(|i| i + 1)
    }

    /// The shape λ.
    pub fn shape(&self) -> Multipartition {
        self.shape_at(self.size())
    }

    /// The shape of the restriction t↓m to entries 1,…,m.
    pub fn shape_at(&self, m: usize) -> Multipartition {
        let mut shape = Multipartition::empty(self.level);
        for &node in &self.positions[..m] {
            shape = shape.add_node(node).expect("certified growth sequence");
        }
        shape
    }

    /// The residue sequence (br at the node of each entry).
    pub fn residue_sequence(&self, cs: &ContentSystem) -> Result<Vec<usize>> {
        self.positions.iter().map(|&node| cs.residue(node)).collect()
    }

    /// The content sequence (bc at the node of each entry).
    pub fn content_sequence(&self, cs: &ContentSystem) -> Result<Vec<PolyX>> {
        self.positions.iter().map(|&node| cs.content(node)).collect()
    }

    /// The addable/removable same-residue nodes of shape(t↓m) on the ◁ side
    /// (strictly above the node of m) or ▷ side (strictly below).
    pub fn add_rem_m(
        &self,
        cs: &ContentSystem,
        m: usize,
        order: Order,
    ) -> Result<(Vec<Node>, Vec<Node>)> {
        let node = self.position(m)?;
        let i = cs.residue(node)?;
        let shape = self.shape_at(m);
        let (add, rem) = cs.add_remove_nodes(&shape, i)?;
        let keep = |b: &Node| match order {
            Order::Lt => *b < node,
            Order::Gt => *b > node,
        };
        Ok((
            add.into_iter().filter(keep).collect(),
            rem.into_iter().filter(keep).collect(),
        ))
    }

    /// The degree of the tableau in the given order.
    pub fn deg(&self, cs: &ContentSystem, order: Order) -> Result<i64> {
        let mut total = 0i64;
        for m in 1..=self.size() {
            let i = cs.residue(self.position(m)?)?;
            let di = cs.cartan().symmetrizer(i)?;
            let (add, rem) = self.add_rem_m(cs, m, order)?;
            total += di * (add.len() as i64 - rem.len() as i64);
        }
        Ok(total)
    }

    /// The ◁ degree.
    pub fn deg_lt(&self, cs: &ContentSystem) -> Result<i64> {
        self.deg(cs, Order::Lt)
    }

    /// The ▷ degree.
    pub fn deg_gt(&self, cs: &ContentSystem) -> Result<i64> {
        self.deg(cs, Order::Gt)
    }

    /// Tableau dominance: `self ⊵ other` iff every restriction dominates.
    pub fn dominance_geq(&self, other: &StandardTableau) -> Result<bool> {
        if self.size() != other.size() || self.level() != other.level() {
            return Err(Error::SizeMismatch(
                "tableau dominance needs equal size and level".into(),
            ));
        }
        for m in 1..=self.size() {
            if !self.shape_at(m).dominance_geq(&other.shape_at(m))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Strict tableau dominance `self ⊳ other`.
    pub fn dominance_gt(&self, other: &StandardTableau) -> Result<bool> {
        Ok(self != other && self.dominance_geq(other)?)
    }

    /// `self` strictly precedes `other` in the given order (◁: reverse
    /// dominance, so smaller means more dominant restrictions on the flip).
    pub fn precedes(&self, other: &StandardTableau, order: Order) -> Result<bool> {
        match order {
            Order::Lt => other.dominance_gt(self),
            Order::Gt => self.dominance_gt(other),
        }
    }

    /// The conjugate tableau t′(k,r,c) = t(ℓ−k+1,c,r).
    pub fn conjugate(&self) -> StandardTableau {
        let positions = self
            .positions
            .iter()
            .map(|&p| Node::new(self.level - p.k + 1, p.c, p.r))
            .collect();
        StandardTableau {
            level: self.level,
            positions,
        }
    }

    /// Swap the entries k and k+1; `None` if the result is not standard.
    pub fn apply_transposition(&self, k: usize) -> Option<StandardTableau> {
        if k == 0 || k >= self.size() {
            return None;
        }
        let mut positions = self.positions.clone();
        positions.swap(k - 1, k);
        StandardTableau::from_positions(self.level, positions).ok()
    }

    /// Render as row lists per component.
    fn rows(&self) -> Vec<Vec<Vec<usize>>> {
        let shape = self.shape();
        let mut out = Vec::with_capacity(self.level);
        for (ki, comp) in shape.components().iter().enumerate() {
            let mut rows = Vec::with_capacity(comp.len());
            for (ri, &len) in comp.iter().enumerate() {
                let row: Vec<usize> = (1..=len as usize)
                    .map(|c| self.entry(Node::new(ki + 1, ri + 1, c)).unwrap())
                    .collect();
                rows.push(row);
            }
            out.push(rows);
        }
        out
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comp = |rows: &[Vec<usize>]| -> String {
            let body: Vec<String> = rows
                .iter()
                .map(|r| {
                    let cells: Vec<String> = r.iter().map(|e| e.to_string()).collect();
                    format!("[{}]", cells.join(","))
                })
                .collect();
            format!("[{}]", body.join(","))
        };
        let rows = self.rows();
        if self.level == 1 {
            write!(f, "{}", comp(&rows[0]))
        } else {
            let body: Vec<String> = rows.iter().map(|r| comp(r)).collect();
            write!(f, "({})", body.join("|"))
        }
    }
}

/// All standard tableaux of shape λ.
pub fn standard_tableaux(lam: &Multipartition) -> Vec<StandardTableau> {
    fn go(shape: &Multipartition, out: &mut Vec<Vec<Node>>) {
        if shape.size() == 0 {
            out.push(Vec::new());
            return;
        }
        for node in shape.removable_nodes() {
            let smaller = shape.remove_node(node).expect("removable");
            let mut seqs = Vec::new();
            go(&smaller, &mut seqs);
            for mut seq in seqs {
                seq.push(node);
                out.push(seq);
            }
        }
    }
    let mut seqs = Vec::new();
    go(lam, &mut seqs);
    seqs.into_iter()
        .map(|positions| StandardTableau {
            level: lam.level(),
            positions,
        })
        .collect()
}

/// The extremal tableau t^D_λ: row reading for ▷, down columns of the
/// components in reverse order for ◁.
pub fn initial_tableau(lam: &Multipartition, order: Order) -> StandardTableau {
    match order {
        Order::Gt => {
            let mut positions = Vec::with_capacity(lam.size());
            for (ki, comp) in lam.components().iter().enumerate() {
                for (ri, &len) in comp.iter().enumerate() {
                    for c in 1..=len as usize {
                        positions.push(Node::new(ki + 1, ri + 1, c));
                    }
                }
            }
            StandardTableau {
                level: lam.level(),
                positions,
            }
        }
        Order::Lt => initial_tableau(&lam.conjugate(), Order::Gt).conjugate(),
    }
}

/// The permutation d^D(t) with d^D(t)·t^D_λ = t, as the lexicographically
/// smallest reduced word (repeatedly taking the smallest left descent).
pub fn perm_d(t: &StandardTableau, order: Order) -> Result<Vec<usize>> {
    let initial = initial_tableau(&t.shape(), order);
    let n = t.size();
    // w(initial entry at node) = t entry at the same node.
    let mut w = vec![0usize; n];
    for m in 1..=n {
        let node = initial.position(m)?;
        w[m - 1] = t
            .entry(node)
            .ok_or_else(|| Error::InvalidConfig("shape mismatch".into()))?;
    }
    Ok(reduced_word(&mut w))
}

/// Lexicographically smallest reduced word of a permutation given by images.
fn reduced_word(w: &mut [usize]) -> Vec<usize> {
    let n = w.len();
    let mut word = Vec::new();
    loop {
        // Positions of values: inv[v-1] = index of v.
        let mut inv = vec![0usize; n];
        for (i, &v) in w.iter().enumerate() {
            inv[v - 1] = i;
        }
        // Smallest left descent a: w⁻¹(a) > w⁻¹(a+1).
        let descent = (1..n).find(|&a| inv[a - 1] > inv[a]);
        match descent {
            None => return word,
            Some(a) => {
                word.push(a);
                w.swap(inv[a - 1], inv[a]);
            }
        }
    }
}

/// Apply a word of simple transpositions (left action) to a tableau; `None`
/// if any intermediate step leaves the standard tableaux.
pub fn apply_word(t: &StandardTableau, word: &[usize]) -> Option<StandardTableau> {
    let mut out = t.clone();
    for &a in word.iter().rev() {
        out = out.apply_transposition(a)?;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::content::{ContentSystem, Variant};
    use crate::tableaux::multipartition::multipartitions;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn cs(variant: Variant, e: usize, charge: Vec<usize>, n: usize) -> ContentSystem {
        ContentSystem::new(variant, e, charge, n).unwrap()
    }

    /// Independent count: multinomial × hook-length formula per component.
    fn count_oracle(lam: &Multipartition) -> u64 {
        fn factorial(n: u64) -> u64 {
            (1..=n).product::<u64>().max(1)
        }
        fn hook_count(p: &[u32]) -> u64 {
            let n: u64 = p.iter().map(|&r| r as u64).sum();
            let mut hooks: u64 = 1;
            let conj: Vec<u32> = {
                let cols = p.first().copied().unwrap_or(0) as usize;
                (1..=cols)
                    .map(|c| p.iter().filter(|&&len| len as usize >= c).count() as u32)
                    .collect()
            };
            for (ri, &len) in p.iter().enumerate() {
                for c in 1..=len as usize {
                    let arm = len as u64 - c as u64;
                    let leg = conj[c - 1] as u64 - ri as u64 - 1;
                    hooks *= arm + leg + 1;
                }
            }
            factorial(n) / hooks
        }
        let sizes: Vec<u64> = lam
            .components()
            .iter()
            .map(|p| p.iter().map(|&r| r as u64).sum())
            .collect();
        let n: u64 = sizes.iter().sum();
        let mut multinomial = factorial(n);
        for &s in &sizes {
            multinomial /= factorial(s);
        }
        multinomial * lam.components().iter().map(|p| hook_count(p)).product::<u64>()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(standard_tableaux(&Multipartition::empty(1)).len(), 1);
        assert_eq!(standard_tableaux(&mp("(2,1)")).len(), 2);
        assert_eq!(
            standard_tableaux(&mp("(5,3,2)")).len() as u64,
            count_oracle(&mp("(5,3,2)"))
        );
        for n in 0..=6 {
            for lam in multipartitions(n, 1) {
                let got = standard_tableaux(&lam).len() as u64;
                assert_eq!(got, count_oracle(&lam), "λ = {lam}");
            }
        }
        for n in 0..=4 {
            for lam in multipartitions(n, 2) {
                let got = standard_tableaux(&lam).len() as u64;
                assert_eq!(got, count_oracle(&lam), "λ = {lam}");
            }
        }
    }

    #[test]
    fn residue_and_content_sequences() {
        let t = initial_tableau(&mp("(5,3,2)"), Order::Gt);
        let a3 = cs(Variant::AClassical, 3, vec![0], 10);
        assert_eq!(
            t.residue_sequence(&a3).unwrap(),
            vec![0, 1, 2, 0, 1, 2, 0, 1, 1, 2]
        );
        let c3 = cs(Variant::CClassical, 3, vec![0], 10);
        assert_eq!(
            t.residue_sequence(&c3).unwrap(),
            vec![0, 1, 2, 1, 0, 1, 0, 1, 2, 1]
        );
        assert!(StandardTableau::empty(1).residue_sequence(&a3).unwrap().is_empty());
        // Row reading of (5,3,2): entry 6 sits at (1,2,1), content −x².
        let contents = t.content_sequence(&a3).unwrap();
        assert!(contents[0].is_zero());
        assert_eq!(contents[5], -&PolyX::x_pow(2));
    }

    #[test]
    fn separation_of_tableaux() {
        // (content, residue) sequences separate standard tableaux.
        for (variant, e) in [(Variant::AClassical, 2usize), (Variant::CClassical, 3)] {
            let sys = cs(variant, e, vec![0], 7);
            for n in 0..=5usize {
                let mut seen: Vec<(Vec<PolyX>, Vec<usize>)> = Vec::new();
                for lam in multipartitions(n, 1) {
                    for t in standard_tableaux(&lam) {
                        let key = (
                            t.content_sequence(&sys).unwrap(),
                            t.residue_sequence(&sys).unwrap(),
                        );
                        assert!(!seen.contains(&key), "collision at {t}");
                        seen.push(key);
                    }
                }
            }
        }
    }

    #[test]
    fn degree_examples() {
        let a3 = cs(Variant::AClassical, 3, vec![0], 8);
        let empty = StandardTableau::empty(1);
        assert_eq!(empty.deg_lt(&a3).unwrap(), 0);
        assert_eq!(empty.deg_gt(&a3).unwrap(), 0);
        let t = initial_tableau(&mp("(3)"), Order::Gt);
        assert_eq!(t.deg_lt(&a3).unwrap(), 0);
        assert_eq!(t.deg_gt(&a3).unwrap(), 1);
        assert_eq!(a3.defect_of(&mp("(3)")).unwrap(), 1);
    }

    #[test]
    fn degree_sum_is_defect() {
        for (variant, e) in [
            (Variant::AClassical, 2usize),
            (Variant::AClassical, 3),
            (Variant::CClassical, 3),
        ] {
            for charge in [vec![0usize], vec![0, 1]] {
                let sys = cs(variant, e, charge, 7);
                for n in 0..=5usize {
                    for lam in multipartitions(n, sys.level()) {
                        let defect = sys.defect_of(&lam).unwrap();
                        for t in standard_tableaux(&lam) {
                            assert_eq!(
                                t.deg_lt(&sys).unwrap() + t.deg_gt(&sys).unwrap(),
                                defect,
                                "t = {t}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn initial_tableaux_examples() {
        let g = initial_tableau(&mp("(2,1)"), Order::Gt);
        assert_eq!(g.to_string(), "[[1,2],[3]]");
        let l = initial_tableau(&mp("(2,1)"), Order::Lt);
        assert_eq!(l.to_string(), "[[1,3],[2]]");
        // t^◁_λ = (t^▷_{λ′})′.
        for lam in multipartitions(4, 2) {
            assert_eq!(
                initial_tableau(&lam, Order::Lt),
                initial_tableau(&lam.conjugate(), Order::Gt).conjugate()
            );
        }
    }

    #[test]
    fn initial_tableaux_are_extremal() {
        for n in 0..=4 {
            for lam in multipartitions(n, 2) {
                let g = initial_tableau(&lam, Order::Gt);
                let l = initial_tableau(&lam, Order::Lt);
                for t in standard_tableaux(&lam) {
                    assert!(g.dominance_geq(&t).unwrap());
                    assert!(t.dominance_geq(&l).unwrap());
                }
            }
        }
    }

    #[test]
    fn perm_d_examples() {
        let g = initial_tableau(&mp("(2,1)"), Order::Gt);
        assert_eq!(perm_d(&g, Order::Gt).unwrap(), Vec::<usize>::new());
        let l = initial_tableau(&mp("(2,1)"), Order::Lt);
        assert_eq!(perm_d(&l, Order::Gt).unwrap(), vec![2]);
        // Reconstruction and length additivity L(d◁)+L(d▷) = L(w◁).
        for n in 0..=4 {
            for lam in multipartitions(n, 2) {
                let wlam = perm_d(&initial_tableau(&lam, Order::Lt), Order::Gt)
                    .unwrap()
                    .len();
                for t in standard_tableaux(&lam) {
                    let dl = perm_d(&t, Order::Lt).unwrap();
                    let dg = perm_d(&t, Order::Gt).unwrap();
                    assert_eq!(
                        apply_word(&initial_tableau(&lam, Order::Lt), &dl).unwrap(),
                        t
                    );
                    assert_eq!(
                        apply_word(&initial_tableau(&lam, Order::Gt), &dg).unwrap(),
                        t
                    );
                    assert_eq!(dl.len() + dg.len(), wlam, "t = {t}");
                    // d◁(t) = d▷(t′).
                    assert_eq!(dl, perm_d(&t.conjugate(), Order::Gt).unwrap());
                }
            }
        }
    }

    #[test]
    fn conjugation_duality() {
        let a3 = cs(Variant::AClassical, 3, vec![0], 8);
        let twisted = a3.sign_twist().unwrap();
        let c3 = cs(Variant::CClassical, 3, vec![0], 8);
        let c3t = c3.sign_twist().unwrap();
        for n in 0..=5 {
            for lam in multipartitions(n, 1) {
                for t in standard_tableaux(&lam) {
                    let tc = t.conjugate();
                    assert_eq!(tc.conjugate(), t);
                    for (sys, tw) in [(&a3, &twisted), (&c3, &c3t)] {
                        // r(t′) = ε(r(t)) and deg twists swap the orders.
                        let r: Vec<usize> = t
                            .residue_sequence(sys)
                            .unwrap()
                            .iter()
                            .map(|&i| sys.cartan().sign_vertex(i).unwrap())
                            .collect();
                        assert_eq!(tc.residue_sequence(tw).unwrap(), r);
                        assert_eq!(tc.deg_lt(tw).unwrap(), t.deg_gt(sys).unwrap());
                        assert_eq!(tc.deg_gt(tw).unwrap(), t.deg_lt(sys).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn transposition_behaviour() {
        let g = initial_tableau(&mp("(2,1)"), Order::Gt); // [[1,2],[3]]
        // Swapping 1,2 breaks row-standardness.
        assert!(g.apply_transposition(1).is_none());
        let swapped = g.apply_transposition(2).unwrap();
        assert_eq!(swapped.to_string(), "[[1,3],[2]]");
        assert_eq!(swapped.apply_transposition(2).unwrap(), g);
    }
}
