//! Crystal combinatorics: normal/conormal nodes, Kashiwara operators,
//! Kleshchev multipartitions, good sequences and the Mullineux map.
//!
//! # Key Operations
//! - `normal_nodes` / `conormal_nodes` — d-statistic chains on removable and
//!   addable nodes (equivalently: survivors of the bracket-cancellation scan)
//! - `e_tilde` / `f_tilde` — remove the good node / add the cogood node
//! - `kleshchev` — the vertices reachable from the empty multipartition
//! - `good_sequence` / `mullineux` — residue paths and their replay through
//!   the opposite crystal
//!
//! # Design Notes
//! - "Above" means lexicographically smaller on (component, row, column).
//!   In the ◁ order, normality of a removable node is governed by the
//!   ◁-statistic against removable nodes above it, and conormality of an
//!   addable node by the ▷-statistic against addable nodes below it; the ▷
//!   order mirrors both. Every function cross-checks against the bracket
//!   scan in debug builds.
//! - `good_sequence` peels the normal node with the smallest d-statistic
//!   (breaking ties towards the initial side), which reproduces the worked
//!   residue chains; replaying any good path yields the same endpoint, which
//!   is tested separately.

use crate::error::{Error, Result};
use crate::tableaux::multipartition::{Multipartition, Node};
use crate::tableaux::tableau::Order;
use crate::tableaux::ContentSystem;
use std::collections::BTreeSet;

fn d_stat(cs: &ContentSystem, lam: &Multipartition, a: Node, order: Order) -> Result<i64> {
    match order {
        Order::Lt => cs.d_lt(lam, a),
        Order::Gt => cs.d_gt(lam, a),
    }
}

/// The normal removable i-nodes, top to bottom.
pub fn normal_nodes(
    cs: &ContentSystem,
    lam: &Multipartition,
    i: usize,
    order: Order,
) -> Result<Vec<Node>> {
    let (_, rem) = cs.add_remove_nodes(lam, i)?;
    let mut out = Vec::new();
    for &a in &rem {
        let da = d_stat(cs, lam, a, order)?;
        if da > 0 {
            continue;
        }
        let mut chain_ok = true;
        for &b in &rem {
            let competes = match order {
                Order::Lt => b < a,
                Order::Gt => b > a,
            };
            if competes && d_stat(cs, lam, b, order)? <= da {
                chain_ok = false;
                break;
            }
        }
        if chain_ok {
            out.push(a);
        }
    }
    debug_assert_eq!(out, bracket_normal(cs, lam, i, order)?.0);
    Ok(out)
}

/// The conormal addable i-nodes, top to bottom.
pub fn conormal_nodes(
    cs: &ContentSystem,
    lam: &Multipartition,
    i: usize,
    order: Order,
) -> Result<Vec<Node>> {
    let (add, _) = cs.add_remove_nodes(lam, i)?;
    let opposite = order.flip();
    let mut out = Vec::new();
    for &a in &add {
        let da = d_stat(cs, lam, a, opposite)?;
        if da < 0 {
            continue;
        }
        let mut chain_ok = true;
        for &b in &add {
            let competes = match order {
                Order::Lt => b > a,
                Order::Gt => b < a,
            };
            if competes && d_stat(cs, lam, b, opposite)? >= da {
                chain_ok = false;
                break;
            }
        }
        if chain_ok {
            out.push(a);
        }
    }
    debug_assert_eq!(out, bracket_normal(cs, lam, i, order)?.1);
    Ok(out)
}

/// Bracket-cancellation scan: list addable and removable i-nodes top to
/// bottom and repeatedly delete adjacent cancelling pairs (addable before
/// removable for ◁, removable before addable for ▷). Returns the surviving
/// (removable, addable) nodes — the normal and conormal nodes.
pub fn bracket_normal(
    cs: &ContentSystem,
    lam: &Multipartition,
    i: usize,
    order: Order,
) -> Result<(Vec<Node>, Vec<Node>)> {
    let (add, rem) = cs.add_remove_nodes(lam, i)?;
    let mut seq: Vec<(Node, bool)> = add
        .iter()
        .map(|&a| (a, true))
        .chain(rem.iter().map(|&b| (b, false)))
        .collect();
    seq.sort();
    loop {
        let cancel = (0..seq.len().saturating_sub(1)).find(|&k| match order {
            Order::Lt => seq[k].1 && !seq[k + 1].1,
            Order::Gt => !seq[k].1 && seq[k + 1].1,
        });
        match cancel {
            Some(k) => {
                seq.drain(k..k + 2);
            }
            None => break,
        }
    }
    let normal = seq.iter().filter(|(_, a)| !a).map(|&(n, _)| n).collect();
    let conormal = seq.iter().filter(|(_, a)| *a).map(|&(n, _)| n).collect();
    Ok((normal, conormal))
}

/// ε_i: the number of normal removable i-nodes.
pub fn eps(cs: &ContentSystem, lam: &Multipartition, i: usize, order: Order) -> Result<usize> {
    Ok(normal_nodes(cs, lam, i, order)?.len())
}

/// φ_i: the number of conormal addable i-nodes.
pub fn phi(cs: &ContentSystem, lam: &Multipartition, i: usize, order: Order) -> Result<usize> {
    Ok(conormal_nodes(cs, lam, i, order)?.len())
}

/// The good i-node: the normal node with the smallest d-statistic.
pub fn good_node(
    cs: &ContentSystem,
    lam: &Multipartition,
    i: usize,
    order: Order,
) -> Result<Option<Node>> {
    let mut best: Option<(i64, Node)> = None;
    for a in normal_nodes(cs, lam, i, order)? {
        let da = d_stat(cs, lam, a, order)?;
        if best.map_or(true, |(db, _)| da < db) {
            best = Some((da, a));
        }
    }
    Ok(best.map(|(_, a)| a))
}

/// The cogood i-node: the conormal node with the largest opposite-side
/// d-statistic.
pub fn cogood_node(
    cs: &ContentSystem,
    lam: &Multipartition,
    i: usize,
    order: Order,
) -> Result<Option<Node>> {
    let opposite = order.flip();
    let mut best: Option<(i64, Node)> = None;
    for a in conormal_nodes(cs, lam, i, order)? {
        let da = d_stat(cs, lam, a, opposite)?;
        if best.map_or(true, |(db, _)| da > db) {
            best = Some((da, a));
        }
    }
    Ok(best.map(|(_, a)| a))
}

/// Kashiwara ẽ_i: remove the good i-node, or `None` when ε_i = 0.
pub fn e_tilde(
    cs: &ContentSystem,
    lam: &Multipartition,
    i: usize,
    order: Order,
) -> Result<Option<Multipartition>> {
    match good_node(cs, lam, i, order)? {
        Some(a) => Ok(Some(lam.remove_node(a)?)),
        None => Ok(None),
    }
}

/// Kashiwara f̃_i: add the cogood i-node, or `None` when φ_i = 0.
pub fn f_tilde(
    cs: &ContentSystem,
    lam: &Multipartition,
    i: usize,
    order: Order,
) -> Result<Option<Multipartition>> {
    match cogood_node(cs, lam, i, order)? {
        Some(a) => Ok(Some(lam.add_node(a)?)),
        None => Ok(None),
    }
}

/// The Kleshchev multipartitions of size n: vertices reachable from the
/// empty multipartition by f̃-arrows, sorted by the cumulative-sum key.
pub fn kleshchev(cs: &ContentSystem, n: usize, order: Order) -> Result<Vec<Multipartition>> {
    let mut frontier: BTreeSet<Multipartition> = BTreeSet::new();
    frontier.insert(Multipartition::empty(cs.level()));
    for _ in 0..n {
        let mut next = BTreeSet::new();
        for lam in &frontier {
            for i in 0..cs.e() {
                if let Some(mu) = f_tilde(cs, lam, i, order)? {
                    next.insert(mu);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Multipartition> = frontier.into_iter().collect();
    out.sort_by_key(Multipartition::cumsum_key);
    Ok(out)
}

/// The preferred good node of a nonempty multipartition, as (residue, node):
/// over all residues, the normal node with the smallest d-statistic, ties
/// broken towards the initial side (topmost for ◁, bottommost for ▷).
/// Returns `None` when no residue has a good node.
pub fn preferred_good_node(
    cs: &ContentSystem,
    lam: &Multipartition,
    order: Order,
) -> Result<Option<(usize, Node)>> {
    let mut best: Option<(i64, Node, usize)> = None;
    for i in 0..cs.e() {
        for a in normal_nodes(cs, lam, i, order)? {
            let da = d_stat(cs, lam, a, order)?;
            let better = match best {
                None => true,
                Some((db, b, _)) => {
                    da < db
                        || (da == db
                            && match order {
                                Order::Lt => a < b,
                                Order::Gt => a > b,
                            })
                }
            };
            if better {
                best = Some((da, a, i));
            }
        }
    }
    Ok(best.map(|(_, a, i)| (i, a)))
}

/// The residue letters of a good path ∅ → μ: peel the preferred good node,
/// then reverse.
pub fn good_sequence(cs: &ContentSystem, mu: &Multipartition, order: Order) -> Result<Vec<usize>> {
    let mut letters = Vec::with_capacity(mu.size());
    let mut lam = mu.clone();
    while lam.size() > 0 {
        let Some((i, a)) = preferred_good_node(cs, &lam, order)? else {
            return Err(Error::NotKleshchev(format!("{mu} has no good path to ∅")));
        };
        letters.push(i);
        lam = lam.remove_node(a)?;
    }
    letters.reverse();
    // Round trip: replaying the letters must reproduce μ.
    debug_assert_eq!(&replay(cs, &letters, order)?.expect("good path"), mu);
    Ok(letters)
}

/// Replay residue letters from the empty multipartition through f̃.
pub fn replay(
    cs: &ContentSystem,
    letters: &[usize],
    order: Order,
) -> Result<Option<Multipartition>> {
    let mut lam = Multipartition::empty(cs.level());
    for &i in letters {
        match f_tilde(cs, &lam, i, order)? {
            Some(next) => lam = next,
            None => return Ok(None),
        }
    }
    Ok(Some(lam))
}

/// The Mullineux map: replay a ◁-good path of μ through the ▷ crystal.
pub fn mullineux(cs: &ContentSystem, mu: &Multipartition) -> Result<Multipartition> {
    let letters = good_sequence(cs, mu, Order::Lt)?;
    replay(cs, &letters, Order::Gt)?.ok_or_else(|| {
        Error::ReplayFailed(format!("◁-good path of {mu} is not a ▷-good path"))
    })
}
