//! Multipartitions, nodes, addable/removable combinatorics, the dominance
//! orders, conjugation, and enumeration.
//!
//! # Key Operations
//! - `Multipartition::new` / parsing / `Display` — "(5,3,2)" and "((2,1)|(1))"
//! - `addable_nodes` / `removable_nodes` / `add_node` / `remove_node`
//! - `dominance_geq` — the cumulative-sum dominance order ⊵
//! - `cumsum_key` — a deterministic total refinement of dominance
//! - `partitions` / `multipartitions` — exhaustive enumeration
//!
//! # Design Notes
//! - Nodes carry 1-based (component, row, column) and order lexicographically,
//!   component first.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// A box of a multipartition diagram: (component, row, column), all 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    /// Component index k ∈ [1, ℓ].
    pub k: usize,
    /// Row index r ≥ 1.
    pub r: usize,
    /// Column index c ≥ 1.
    pub c: usize,
}

impl Node {
    /// Construct a node.
    pub fn new(k: usize, r: usize, c: usize) -> Self {
        Node { k, r, c }
    }

    /// The diagonal offset c − r used by content systems.
    pub fn diagonal(&self) -> i64 {
        self.c as i64 - self.r as i64
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.k, self.r, self.c)
    }
}

/// An ordered tuple of ℓ partitions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multipartition {
    parts: Vec<Vec<u32>>,
}

impl Multipartition {
    /// Build a multipartition, validating each component.
    pub fn new(parts: Vec<Vec<u32>>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidConfig("need at least one component".into()));
        }
        for p in &parts {
            for w in p.windows(2) {
                if w[0] < w[1] {
                    return Err(Error::InvalidConfig(format!(
                        "component {:?} is not weakly decreasing",
                        p
                    )));
                }
            }
            if p.iter().any(|&r| r == 0) {
                return Err(Error::InvalidConfig("zero row length not allowed".into()));
            }
        }
        Ok(Multipartition { parts })
    }

    /// The empty multipartition with ℓ components.
    pub fn empty(level: usize) -> Self {
        Multipartition {
            parts: vec![Vec::new(); level],
        }
    }

    /// Level-1 convenience constructor.
    pub fn from_partition(p: Vec<u32>) -> Result<Self> {
        Self::new(vec![p])
    }

    /// Number of components ℓ.
    pub fn level(&self) -> usize {
        self.parts.len()
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|p| p.iter().sum::<u32>() as usize).sum()
    }

    /// Component partitions.
    pub fn components(&self) -> &[Vec<u32>] {
        &self.parts
    }

    /// Row length of row r (1-based) in component k (1-based); 0 if absent.
    pub fn row_len(&self, k: usize, r: usize) -> u32 {
        self.parts
            .get(k - 1)
            .and_then(|p| p.get(r - 1))
            .copied()
            .unwrap_or(0)
    }

    /// True iff the node lies in the diagram.
    pub fn contains(&self, node: Node) -> bool {
        node.k >= 1 && node.r >= 1 && node.c >= 1 && node.c as u32 <= self.row_len(node.k, node.r)
    }

    /// All nodes in lexicographic order.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size());
        for (ki, p) in self.parts.iter().enumerate() {
            for (ri, &len) in p.iter().enumerate() {
                for c in 1..=len as usize {
                    out.push(Node::new(ki + 1, ri + 1, c));
                }
            }
        }
        out
    }

    /// Addable nodes (lex order).
    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (ki, p) in self.parts.iter().enumerate() {
            for r in 1..=p.len() + 1 {
                let len = self.row_len(ki + 1, r);
                let above = if r == 1 { u32::MAX } else { self.row_len(ki + 1, r - 1) };
                if len < above {
                    out.push(Node::new(ki + 1, r, len as usize + 1));
                }
            }
        }
        out
    }

    /// Removable nodes (lex order).
    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (ki, p) in self.parts.iter().enumerate() {
            for (ri, &len) in p.iter().enumerate() {
                let below = self.row_len(ki + 1, ri + 2);
                if len > below {
                    out.push(Node::new(ki + 1, ri + 1, len as usize));
                }
            }
        }
        out
    }

    /// Add an addable node.
    pub fn add_node(&self, node: Node) -> Result<Self> {
        if !self.addable_nodes().contains(&node) {
            return Err(Error::NotAnINode(format!("{node} is not addable")));
        }
        let mut parts = self.parts.clone();
        let comp = &mut parts[node.k - 1];
        if node.r > comp.len() {
            comp.push(1);
        } else {
            comp[node.r - 1] += 1;
        }
        Ok(Multipartition { parts })
    }

    /// Remove a removable node.
    pub fn remove_node(&self, node: Node) -> Result<Self> {
        if !self.removable_nodes().contains(&node) {
            return Err(Error::NotAnINode(format!("{node} is not removable")));
        }
        let mut parts = self.parts.clone();
        let comp = &mut parts[node.k - 1];
        comp[node.r - 1] -= 1;
        if comp[node.r - 1] == 0 {
            comp.pop();
        }
        Ok(Multipartition { parts })
    }

    /// The conjugate: component order reversed, each component transposed.
    pub fn conjugate(&self) -> Self {
        let parts = self
            .parts
            .iter()
            .rev()
            .map(|p| transpose_partition(p))
            .collect();
        Multipartition { parts }
    }

    /// Cumulative sums indexed by (component, row) against a fixed row bound,
    /// the quantity defining dominance.
    fn cumsums(&self, rows: usize) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.level() * rows);
        let mut before: u64 = 0;
        for p in &self.parts {
            let mut acc = before;
            for r in 0..rows {
                acc += p.get(r).copied().unwrap_or(0) as u64;
                out.push(acc);
            }
            before = acc;
        }
        out
    }

    /// The dominance order: `self ⊵ other`.
    pub fn dominance_geq(&self, other: &Multipartition) -> Result<bool> {
        if self.size() != other.size() || self.level() != other.level() {
            return Err(Error::SizeMismatch(format!(
                "cannot compare {self} with {other}"
            )));
        }
        let rows = self
            .parts
            .iter()
            .chain(other.parts.iter())
            .map(|p| p.len())
            .max()
            .unwrap_or(0);
        let a = self.cumsums(rows);
        let b = other.cumsums(rows);
        Ok(a.iter().zip(b.iter()).all(|(x, y)| x >= y))
    }

    /// Strict dominance `self ⊳ other`.
    pub fn dominance_gt(&self, other: &Multipartition) -> Result<bool> {
        Ok(self != other && self.dominance_geq(other)?)
    }

    /// A total-order key refining dominance: lexicographic comparison of the
    /// cumulative-sum sequence (larger key = more dominant).
    pub fn cumsum_key(&self) -> Vec<u64> {
        let rows = self.size().max(1);
        self.cumsums(rows)
    }
}

fn transpose_partition(p: &[u32]) -> Vec<u32> {
    let cols = p.first().copied().unwrap_or(0) as usize;
    (1..=cols)
        .map(|c| p.iter().filter(|&&len| len as usize >= c).count() as u32)
        .collect()
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comp = |p: &[u32]| -> String {
            let body: Vec<String> = p.iter().map(|r| r.to_string()).collect();
            format!("({})", body.join(","))
        };
        if self.level() == 1 {
            write!(f, "{}", comp(&self.parts[0]))
        } else {
            let body: Vec<String> = self.parts.iter().map(|p| comp(p)).collect();
            write!(f, "({})", body.join("|"))
        }
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::ParseError(format!("expected parentheses: {s}")))?;
        let parse_comp = |t: &str| -> Result<Vec<u32>> {
            let t = t.trim();
            let t = t.strip_prefix('(').and_then(|u| u.strip_suffix(')')).unwrap_or(t);
            if t.trim().is_empty() {
                return Ok(Vec::new());
            }
            t.split(',')
                .map(|w| {
                    w.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::ParseError(format!("bad row length: {w}")))
                })
                .collect()
        };
        let parts: Vec<Vec<u32>> = if inner.contains('|') {
            inner
                .split('|')
                .map(parse_comp)
                .collect::<Result<Vec<_>>>()?
        } else {
            vec![parse_comp(inner)?]
        };
        if parts.iter().all(|p| p.is_empty()) && parts.len() == 1 {
            return Ok(Multipartition::empty(1));
        }
        Multipartition::new(parts)
    }
}

/// All partitions of n, in descending lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        let hi = max.min(n);
        for first in (1..=hi).rev() {
            prefix.push(first);
            go(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, n.max(1) as u32, &mut Vec::new(), &mut out);
    out
}

/// All ℓ-component multipartitions of n.
pub fn multipartitions(n: usize, level: usize) -> Vec<Multipartition> {
    fn go(n: usize, level: usize, acc: &mut Vec<Vec<u32>>, out: &mut Vec<Multipartition>) {
        if level == 0 {
            if n == 0 {
                out.push(Multipartition { parts: acc.clone() });
            }
            return;
        }
        for m in 0..=n {
            for p in partitions(m) {
                acc.push(p);
                go(n - m, level - 1, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, level, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for s in ["(5,3,2)", "(4,3,1)", "((2,1)|(1))", "()"] {
            assert_eq!(mp(s).to_string(), s);
        }
        assert!("(1,2)".parse::<Multipartition>().is_err());
    }

    #[test]
    fn addable_removable() {
        let lam = mp("(2,1)");
        assert_eq!(
            lam.addable_nodes(),
            vec![Node::new(1, 1, 3), Node::new(1, 2, 2), Node::new(1, 3, 1)]
        );
        assert_eq!(
            lam.removable_nodes(),
            vec![Node::new(1, 1, 2), Node::new(1, 2, 1)]
        );
        let bigger = lam.add_node(Node::new(1, 2, 2)).unwrap();
        assert_eq!(bigger.to_string(), "(2,2)");
        assert_eq!(bigger.remove_node(Node::new(1, 2, 2)).unwrap(), lam);
        assert!(lam.add_node(Node::new(1, 1, 2)).is_err());
    }

    #[test]
    fn dominance_examples() {
        let a = mp("(2,1)");
        assert!(a.dominance_geq(&a).unwrap());
        assert!(a.dominance_geq(&mp("(1,1,1)")).unwrap());
        assert!(!mp("(1,1,1)").dominance_geq(&a).unwrap());
        assert!(mp("((2)|(1))").dominance_geq(&mp("((1)|(2))")).unwrap());
        assert!(!mp("(2,2)").dominance_geq(&mp("(3,1)")).unwrap());
        assert!(mp("(3,1)").dominance_geq(&mp("(2,2)")).unwrap());
        assert!(a.dominance_geq(&mp("((1)|(2))")).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(mp("(2,1)").conjugate(), mp("(2,1)"));
        assert_eq!(mp("(6)").conjugate(), mp("(1,1,1,1,1,1)"));
        assert_eq!(mp("((2)|(1,1))").conjugate(), mp("((2)|(1,1))"));
        // λ ⊵ μ ⇔ λ′ ⊴ μ′.
        for lam in multipartitions(4, 1) {
            for mu in multipartitions(4, 1) {
                assert_eq!(
                    lam.dominance_geq(&mu).unwrap(),
                    mu.conjugate().dominance_geq(&lam.conjugate()).unwrap()
                );
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(partitions(6).len(), 11);
        assert_eq!(partitions(0).len(), 1);
        assert_eq!(multipartitions(2, 2).len(), 5);
        assert_eq!(multipartitions(6, 2).len(), 65);
        // Descending lexicographic: (6) first, (1^6) last.
        let p6 = partitions(6);
        assert_eq!(p6.first().unwrap(), &vec![6]);
        assert_eq!(p6.last().unwrap(), &vec![1; 6]);
    }

    #[test]
    fn cumsum_key_refines_dominance() {
        for n in 0..=6 {
            let all = multipartitions(n, 2);
            for a in &all {
                for b in &all {
                    if a.dominance_gt(b).unwrap() {
                        assert!(a.cumsum_key() > b.cumsum_key(), "{a} vs {b}");
                    }
                }
            }
        }
    }
}
