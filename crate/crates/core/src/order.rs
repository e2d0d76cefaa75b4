//! Irreducible connected parts and the connectivity order.

use serde::Serialize;

use crate::space::{generate, Space};
use crate::subset::{self, is_subset, Family, Subset};

/// `k` is connected and is not generated by the other connected parts.
pub fn is_irreducible(x: &Space, k: Subset) -> bool {
    if k == 0 || !x.is_connected(k) {
        return false;
    }
    // only proper connected subsets of k can be combined into k
    let below: Family = x.connected().iter().filter(|&&l| l != k && is_subset(l, k)).copied().collect();
    let gen = generate(x.points(), &below, false).expect("subsets of a valid space");
    !gen.is_connected(k)
}

pub fn irreducibles(x: &Space) -> Vec<Subset> {
    x.connected().iter().copied().filter(|&k| is_irreducible(x, k)).collect()
}

/// Number of elements in a longest chain of strict inclusions.
pub fn longest_chain(sets: &[Subset]) -> usize {
    let mut sorted = sets.to_vec();
    sorted.sort_by_key(|&s| subset::len(s));
    let mut best = vec![1usize; sorted.len()];
    for i in 0..sorted.len() {
        for j in 0..i {
            if sorted[j] != sorted[i] && is_subset(sorted[j], sorted[i]) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderReport {
    pub irreducibles: Vec<Vec<usize>>,
    pub chain_length: usize,
    /// Height of the irreducible poset, one more than the chain length.
    pub height: usize,
    /// Chains of at least two irreducibles, minus one.
    pub order: usize,
    /// The predecessor of the height, equal to the chain length.
    pub order_def13: usize,
}

pub fn connectivity_order(x: &Space) -> usize {
    longest_chain(&irreducibles(x)).saturating_sub(1)
}

pub fn order_report(x: &Space) -> OrderReport {
    let irr = irreducibles(x);
    let l = longest_chain(&irr);
    let fam: Family = irr.iter().copied().collect();
    OrderReport {
        irreducibles: subset::canonical(&fam),
        chain_length: l,
        height: l + 1,
        order: l.saturating_sub(1),
        order_def13: l,
    }
}
