//! Separation devices: sets of pairs of disjoint subsets.

use crate::error::{input, Result};
use crate::space::Space;
use crate::subset::{self, check_enumerable, check_points, full, is_subset, submasks, Family, Subset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationDevice {
    n: usize,
    /// Unordered pairs stored with the smaller mask first.
    pairs: Vec<(Subset, Subset)>,
}

impl SeparationDevice {
    pub fn new(n: usize, pairs: &[(Vec<usize>, Vec<usize>)]) -> Result<SeparationDevice> {
        check_points(n)?;
        let mut out = Vec::with_capacity(pairs.len());
        for (s, t) in pairs {
            let (s, t) = (subset::from_indices(n, s)?, subset::from_indices(n, t)?);
            if s & t != 0 {
                return input("the two sides of a separating pair must be disjoint");
            }
            out.push((s.min(t), s.max(t)));
        }
        out.sort_unstable();
        out.dedup();
        Ok(SeparationDevice { n, pairs: out })
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(Subset, Subset)] {
        &self.pairs
    }

    /// Some pair covers `a` and meets it on both sides.
    pub fn separates(&self, a: Subset) -> bool {
        self.pairs.iter().any(|&(s, t)| is_subset(a, s | t) && a & s != 0 && a & t != 0)
    }
}

/// Parts separated by no pair. Always an integral structure.
pub fn space_from_device(dev: &SeparationDevice) -> Result<Space> {
    check_enumerable(dev.n)?;
    let fam: Family = submasks(full(dev.n)).filter(|&a| !dev.separates(a)).collect();
    Ok(Space::from_trusted(dev.n, fam))
}

/// Pairs of disjoint nonempty parts `(A, B)` such that each component of the
/// structure induced on `A ∪ B` lies in `A` or in `B`.
pub fn canonical_device(x: &Space) -> Result<SeparationDevice> {
    let n = x.points();
    if n > 12 {
        return Err(crate::error::Error::Capacity(format!("canonical device on {n} points, at most 12 supported")));
    }
    let mut pairs = Vec::new();
    for u in submasks(full(n)) {
        if subset::len(u) < 2 {
            continue;
        }
        let comps: Vec<Subset> = x
            .connected()
            .iter()
            .filter(|&&k| k != 0 && is_subset(k, u))
            .copied()
            .collect();
        // split u = a + b with the lowest point in a, so each unordered pair appears once
        let low = u & u.wrapping_neg();
        let rest = u & !low;
        for extra in submasks(rest) {
            let a = low | extra;
            let b = u & !a;
            if b == 0 {
                continue;
            }
            if comps.iter().all(|&k| is_subset(k, a) || is_subset(k, b)) {
                pairs.push((a.min(b), a.max(b)));
            }
        }
    }
    pairs.sort_unstable();
    Ok(SeparationDevice { n, pairs })
}
