//! Subsets of a finite point set `{0, .., n-1}` as `u64` bitmasks.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub type Subset = u64;
pub type Family = BTreeSet<Subset>;

/// Largest supported number of points.
pub const MAX_POINTS: usize = 63;

/// Largest support on which operations enumerating all `2^n` subsets are allowed.
pub const ENUM_LIMIT: usize = 20;

pub fn check_points(n: usize) -> Result<()> {
    if n > MAX_POINTS {
        return Err(Error::Capacity(format!("{n} points, at most {MAX_POINTS} supported")));
    }
    Ok(())
}

pub fn check_enumerable(n: usize) -> Result<()> {
    if n > ENUM_LIMIT {
        return Err(Error::Capacity(format!(
            "enumerating subsets of {n} points, at most {ENUM_LIMIT} supported"
        )));
    }
    Ok(())
}

#[inline]
pub fn full(n: usize) -> Subset {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn singleton(x: usize) -> Subset {
    1u64 << x
}

#[inline]
pub fn len(s: Subset) -> usize {
    s.count_ones() as usize
}

#[inline]
pub fn contains(s: Subset, x: usize) -> bool {
    s >> x & 1 == 1
}

#[inline]
pub fn is_subset(a: Subset, b: Subset) -> bool {
    a & !b == 0
}

/// Least element, if any.
#[inline]
pub fn min(s: Subset) -> Option<usize> {
    (s != 0).then(|| s.trailing_zeros() as usize)
}

pub fn elements(s: Subset) -> Elements {
    Elements(s)
}

pub struct Elements(Subset);

impl Iterator for Elements {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }
}

pub fn to_vec(s: Subset) -> Vec<usize> {
    elements(s).collect()
}

/// Builds a mask, rejecting indices outside `0..n`.
pub fn from_indices(n: usize, xs: &[usize]) -> Result<Subset> {
    let mut s = 0;
    for &x in xs {
        if x >= n {
            return Err(Error::Input(format!("point {x} out of range for {n} points")));
        }
        s |= singleton(x);
    }
    Ok(s)
}

/// All submasks of `s`, including `0` and `s`.
pub fn submasks(s: Subset) -> Submasks {
    Submasks { set: s, next: Some(0) }
}

pub struct Submasks {
    set: Subset,
    next: Option<Subset>,
}

impl Iterator for Submasks {
    type Item = Subset;
    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.set { None } else { Some((cur | !self.set).wrapping_add(1) & self.set) };
        Some(cur)
    }
}

/// Image of `s` under a point map.
pub fn image(f: &[usize], s: Subset) -> Subset {
    elements(s).fold(0, |acc, x| acc | singleton(f[x]))
}

/// Re-indexes the elements of `s` lying in `within` to their rank inside `within`.
pub fn compress(s: Subset, within: Subset) -> Subset {
    let mut out = 0;
    for (i, x) in elements(within).enumerate() {
        if contains(s, x) {
            out |= singleton(i);
        }
    }
    out
}

/// Inverse of [`compress`].
pub fn expand(s: Subset, within: Subset) -> Subset {
    let mut out = 0;
    for (i, x) in elements(within).enumerate() {
        if contains(s, i) {
            out |= singleton(x);
        }
    }
    out
}

/// Canonical listing: by size, then lexicographically on the sorted elements.
pub fn canonical(fam: &Family) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = fam.iter().map(|&s| to_vec(s)).collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submasks_enumerates_powerset() {
        let all: Vec<_> = submasks(0b1011).collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|&m| is_subset(m, 0b1011)));
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn compress_expand_roundtrip() {
        let within = 0b110100;
        for s in submasks(within) {
            assert_eq!(expand(compress(s, within), within), s);
        }
        assert_eq!(compress(0b100100, within), 0b101);
    }

    #[test]
    fn canonical_order() {
        let fam: Family = [0b11, 0b1, 0b100, 0].into_iter().collect();
        assert_eq!(canonical(&fam), vec![vec![], vec![0], vec![2], vec![0, 1]]);
    }

    #[test]
    fn indices_out_of_range() {
        assert!(from_indices(3, &[0, 3]).is_err());
        assert_eq!(from_indices(3, &[0, 2]).unwrap(), 0b101);
        assert_eq!(full(63), u64::MAX >> 1);
    }
}
