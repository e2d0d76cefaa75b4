//! Finite connectivity spaces and the constructions on them.

use std::collections::{HashSet, VecDeque};

use crate::error::{input, invalid, Result};
use crate::subset::{
    self, check_enumerable, check_points, compress, contains, elements, full, image, is_subset,
    singleton, submasks, Family, Subset,
};

/// A finite set of points `0..n` with its family of connected parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Space {
    n: usize,
    connected: Family,
}

/// True when `fam` contains the empty set and is closed under unions of
/// intersecting pairs. Members outside `0..n` make the family invalid.
pub fn is_valid_structure(n: usize, fam: &Family) -> bool {
    if n > subset::MAX_POINTS || !fam.contains(&0) {
        return false;
    }
    let all = full(n);
    if fam.iter().any(|&k| !is_subset(k, all)) {
        return false;
    }
    let members: Vec<Subset> = fam.iter().copied().collect();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if a & b != 0 && !fam.contains(&(a | b)) {
                return false;
            }
        }
    }
    true
}

/// Smallest structure containing `fam` (and every singleton when `integral`).
pub fn generate(n: usize, fam: &Family, integral: bool) -> Result<Space> {
    check_points(n)?;
    let all = full(n);
    if let Some(k) = fam.iter().find(|&&k| !is_subset(k, all)) {
        return input(format!("subset {:?} exceeds {n} points", subset::to_vec(*k)));
    }
    let mut seen: HashSet<Subset> = HashSet::new();
    let mut members: Vec<Subset> = Vec::new();
    let mut queue: VecDeque<Subset> = VecDeque::new();
    let seeds = fam
        .iter()
        .copied()
        .chain(std::iter::once(0))
        .chain((0..n).filter(|_| integral).map(singleton));
    for k in seeds {
        if seen.insert(k) {
            members.push(k);
            queue.push_back(k);
        }
    }
    while let Some(k) = queue.pop_front() {
        let mut i = 0;
        while i < members.len() {
            let m = members[i];
            let u = k | m;
            if k & m != 0 && seen.insert(u) {
                members.push(u);
                queue.push_back(u);
            }
            i += 1;
        }
    }
    Ok(Space { n, connected: members.into_iter().collect() })
}

impl Space {
    /// Checks range and the structure axiom.
    pub fn new(n: usize, connected: Family) -> Result<Space> {
        check_points(n)?;
        let all = full(n);
        if let Some(k) = connected.iter().find(|&&k| !is_subset(k, all)) {
            return input(format!("subset {:?} exceeds {n} points", subset::to_vec(*k)));
        }
        if !is_valid_structure(n, &connected) {
            return invalid("family is not closed under unions of intersecting members or lacks the empty set");
        }
        Ok(Space { n, connected })
    }

    /// Builds from index lists; the empty set is added implicitly.
    pub fn from_lists(n: usize, lists: &[Vec<usize>]) -> Result<Space> {
        check_points(n)?;
        let mut fam = Family::new();
        fam.insert(0);
        for l in lists {
            fam.insert(subset::from_indices(n, l)?);
        }
        Space::new(n, fam)
    }

    pub(crate) fn from_trusted(n: usize, connected: Family) -> Space {
        debug_assert!(is_valid_structure(n, &connected));
        Space { n, connected }
    }

    /// Only the empty set is connected.
    pub fn desintegrated(n: usize) -> Result<Space> {
        check_points(n)?;
        Ok(Space { n, connected: [0].into_iter().collect() })
    }

    /// Empty set and singletons.
    pub fn discrete(n: usize) -> Result<Space> {
        generate(n, &Family::new(), true)
    }

    /// Every subset is connected.
    pub fn grossier(n: usize) -> Result<Space> {
        check_points(n)?;
        check_enumerable(n)?;
        Ok(Space { n, connected: submasks(full(n)).collect() })
    }

    /// Graph structure: a subset is connected when it induces a connected subgraph.
    pub fn graph(n: usize, edges: &[(usize, usize)]) -> Result<Space> {
        check_points(n)?;
        let mut fam = Family::new();
        for &(a, b) in edges {
            if a >= n || b >= n {
                return input(format!("edge ({a},{b}) out of range"));
            }
            fam.insert(singleton(a) | singleton(b));
        }
        generate(n, &fam, true)
    }

    /// Path graph `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Result<Space> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Space::graph(n, &edges)
    }

    /// Initial segments `{0..k}` are the connected parts.
    pub fn chain(n: usize) -> Result<Space> {
        check_points(n)?;
        Ok(Space { n, connected: (0..=n).map(full).collect() })
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn connected(&self) -> &Family {
        &self.connected
    }

    pub fn is_connected(&self, a: Subset) -> bool {
        self.connected.contains(&a)
    }

    pub fn is_integral(&self) -> bool {
        (0..self.n).all(|x| self.connected.contains(&singleton(x)))
    }

    /// Points whose singleton is connected.
    pub fn connected_points(&self) -> Subset {
        (0..self.n).filter(|&x| self.connected.contains(&singleton(x))).fold(0, |a, x| a | singleton(x))
    }

    /// Points lying in no connected part.
    pub fn absent(&self) -> Subset {
        full(self.n) & !self.connected.iter().fold(0, |a, &k| a | k)
    }

    /// Maximal nonempty connected parts, ordered by least member.
    pub fn components(&self) -> Vec<Subset> {
        let mut comps: Vec<Subset> = Vec::new();
        for x in 0..self.n {
            let c = self.connected.iter().filter(|&&k| contains(k, x)).fold(0, |a, &k| a | k);
            if c != 0 && !comps.contains(&c) {
                comps.push(c);
            }
        }
        comps.sort_by_key(|&c| c.trailing_zeros());
        comps
    }

    /// Structure induced on `a`, points re-indexed in ascending order.
    pub fn induce(&self, a: Subset) -> Result<Space> {
        if !is_subset(a, full(self.n)) {
            return input("subset exceeds the support");
        }
        let fam = self.connected.iter().filter(|&&k| is_subset(k, a)).map(|&k| compress(k, a)).collect();
        Ok(Space::from_trusted(subset::len(a), fam))
    }

    /// Connected parts of `self` are connected in `other`.
    pub fn is_finer_than(&self, other: &Space) -> bool {
        self.n == other.n && self.connected.is_subset(&other.connected)
    }
}

fn check_map(f: &[usize], n: usize, m: usize) -> Result<()> {
    if f.len() != n {
        return input(format!("map has {} entries, expected {n}", f.len()));
    }
    if let Some(&y) = f.iter().find(|&&y| y >= m) {
        return input(format!("map value {y} out of range for {m} points"));
    }
    Ok(())
}

/// `f` sends connected parts of `x` to connected parts of `y`.
pub fn is_morphism(x: &Space, y: &Space, f: &[usize]) -> Result<bool> {
    check_map(f, x.n, y.n)?;
    Ok(x.connected.iter().all(|&k| y.is_connected(image(f, k))))
}

/// Coarsest structure on `0..n` making `f` connective into `y`.
pub fn initial(n: usize, f: &[usize], y: &Space) -> Result<Space> {
    check_points(n)?;
    check_map(f, n, y.n)?;
    check_enumerable(n)?;
    let fam = submasks(full(n)).filter(|&k| y.is_connected(image(f, k))).collect();
    Ok(Space::from_trusted(n, fam))
}

/// Finest structure on `0..m` making `f` connective from `x`.
pub fn final_structure(x: &Space, f: &[usize], m: usize, integral: bool) -> Result<Space> {
    check_points(m)?;
    check_map(f, x.n, m)?;
    let fam = x.connected.iter().map(|&k| image(f, k)).collect();
    generate(m, &fam, integral)
}

/// Checks the classes are nonempty, disjoint and inside `0..n`; returns them
/// as masks ordered by least member.
fn normalize_classes(n: usize, classes: &[Vec<usize>]) -> Result<Vec<Subset>> {
    let mut masks = Vec::with_capacity(classes.len());
    let mut seen = 0;
    for c in classes {
        let m = subset::from_indices(n, c)?;
        if m == 0 {
            return input("empty class");
        }
        if m & seen != 0 {
            return input("classes overlap");
        }
        seen |= m;
        masks.push(m);
    }
    masks.sort_by_key(|&c| c.trailing_zeros());
    Ok(masks)
}

fn class_map(classes: &[Subset], n: usize) -> Vec<usize> {
    let mut s = vec![usize::MAX; n];
    for (i, &c) in classes.iter().enumerate() {
        for x in elements(c) {
            s[x] = i;
        }
    }
    s
}

/// Quotient by a partition of all points; classes are re-indexed by least member.
pub fn quotient(x: &Space, classes: &[Vec<usize>]) -> Result<Space> {
    let masks = normalize_classes(x.n, classes)?;
    if masks.iter().fold(0, |a, &c| a | c) != full(x.n) {
        return input("classes do not cover every point");
    }
    final_structure(x, &class_map(&masks, x.n), masks.len(), false)
}

/// Quotient by classes covering only part of the points: the structure is
/// first induced on the union of the classes.
pub fn quotient_partial(x: &Space, classes: &[Vec<usize>]) -> Result<Space> {
    let masks = normalize_classes(x.n, classes)?;
    let domain = masks.iter().fold(0, |a, &c| a | c);
    let sub = x.induce(domain)?;
    let reindexed: Vec<Vec<usize>> =
        masks.iter().map(|&c| subset::to_vec(compress(c, domain))).collect();
    quotient(&sub, &reindexed)
}

/// Pullback of the quotient structure along the canonical surjection.
pub fn structural_quotient(x: &Space, classes: &[Vec<usize>]) -> Result<Space> {
    let q = quotient(x, classes)?;
    let masks = normalize_classes(x.n, classes)?;
    initial(x.n, &class_map(&masks, x.n), &q)
}

/// Every subset of a connected part is connected.
pub fn saturate(x: &Space) -> Result<Space> {
    let mut fam = Family::new();
    for &c in &x.components() {
        check_enumerable(subset::len(c))?;
        fam.extend(submasks(c));
    }
    fam.insert(0);
    Ok(Space::from_trusted(x.n, fam))
}

/// Intersection of structures on the same points; the empty meet is the grossier structure.
pub fn meet(n: usize, spaces: &[Space]) -> Result<Space> {
    if let Some(s) = spaces.iter().find(|s| s.n != n) {
        return input(format!("space on {} points in a meet over {n}", s.n));
    }
    match spaces.split_first() {
        None => Space::grossier(n),
        Some((first, rest)) => {
            let fam = first.connected.iter().filter(|k| rest.iter().all(|s| s.connected.contains(k))).copied().collect();
            Ok(Space::from_trusted(n, fam))
        }
    }
}

/// Disjoint nonempty classes on `0..n`, kept ordered by least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialEquivalence {
    n: usize,
    classes: Vec<Subset>,
}

impl PartialEquivalence {
    pub fn new(n: usize, classes: &[Vec<usize>]) -> Result<PartialEquivalence> {
        check_points(n)?;
        Ok(PartialEquivalence { n, classes: normalize_classes(n, classes)? })
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[Subset] {
        &self.classes
    }

    pub fn class_lists(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(|&c| subset::to_vec(c)).collect()
    }

    pub fn domain(&self) -> Subset {
        self.classes.iter().fold(0, |a, &c| a | c)
    }

    /// Parts lying inside a single class.
    pub fn structure(&self) -> Result<Space> {
        let mut fam = Family::new();
        fam.insert(0);
        for &c in &self.classes {
            check_enumerable(subset::len(c))?;
            fam.extend(submasks(c));
        }
        Ok(Space::from_trusted(self.n, fam))
    }
}

/// Classes are the connected components.
pub fn pe_of_structure(x: &Space) -> PartialEquivalence {
    PartialEquivalence { n: x.n, classes: x.components() }
}

impl std::fmt::Display for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Space({}, {:?})", self.n, subset::canonical(&self.connected))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::fixtures::{b3, x3};

    fn fam(lists: &[&[usize]]) -> Family {
        lists.iter().map(|l| subset::from_indices(64, l).unwrap()).collect()
    }

    #[test]
    fn generate_two_edges() {
        let g = generate(3, &fam(&[&[0, 1], &[1, 2]]), false).unwrap();
        assert_eq!(g.connected(), &fam(&[&[], &[0, 1], &[1, 2], &[0, 1, 2]]));
    }

    #[test]
    fn zero_points_space() {
        let s = Space::from_lists(0, &[]).unwrap();
        assert_eq!(s.connected().len(), 1);
        assert!(s.components().is_empty());
    }

    #[test]
    fn rejects_unclosed_family() {
        assert!(!is_valid_structure(3, &fam(&[&[], &[0, 1], &[1, 2]])));
        assert!(!is_valid_structure(3, &fam(&[&[0]])));
        assert!(matches!(Space::from_lists(64, &[]), Err(Error::Capacity(_))));
    }

    #[test]
    fn x3_components_and_absent() {
        let x = x3();
        assert_eq!(x.components(), vec![0b111]);
        assert_eq!(x.absent(), 0);
        let d = Space::from_lists(3, &[vec![0, 1]]).unwrap();
        assert_eq!(d.components(), vec![0b011]);
        assert_eq!(d.absent(), 0b100);
    }

    #[test]
    fn initial_into_x3_is_desintegrated() {
        let s = initial(2, &[2, 2], &x3()).unwrap();
        assert_eq!(s, Space::desintegrated(2).unwrap());
    }

    #[test]
    fn final_of_chain() {
        let s = final_structure(&Space::chain(3).unwrap(), &[0, 0, 1], 2, false).unwrap();
        assert_eq!(s.connected(), &fam(&[&[], &[0], &[0, 1]]));
    }

    #[test]
    fn quotients() {
        let g2 = Space::grossier(2).unwrap();
        assert_eq!(quotient(&b3(), &[vec![0, 1], vec![2]]).unwrap(), g2);
        assert_eq!(quotient(&Space::path(3).unwrap(), &[vec![0, 2], vec![1]]).unwrap(), g2);
        assert_eq!(
            quotient_partial(&x3(), &[vec![0, 1]]).unwrap(),
            Space::from_lists(1, &[vec![0]]).unwrap()
        );
        assert!(quotient(&b3(), &[vec![0, 1]]).is_err());
        assert!(quotient(&b3(), &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn structural_quotient_of_b3_is_grossier() {
        let s = structural_quotient(&b3(), &[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(s, Space::grossier(3).unwrap());
    }

    #[test]
    fn meet_of_b3_and_path() {
        let p3 = Space::path(3).unwrap();
        assert_eq!(meet(3, &[b3(), p3]).unwrap(), b3());
        assert_eq!(meet(3, &[]).unwrap(), Space::grossier(3).unwrap());
    }

    #[test]
    fn induce_reindexes() {
        let p = Space::path(4).unwrap();
        let s = p.induce(0b1101).unwrap();
        // points 0, 2, 3 become 0, 1, 2; only the edge 2-3 survives
        assert_eq!(s, Space::graph(3, &[(1, 2)]).unwrap());
    }

    #[test]
    fn pe_classes_are_components() {
        let pe = pe_of_structure(&Space::graph(5, &[(0, 1), (3, 4)]).unwrap());
        assert_eq!(pe.class_lists(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(PartialEquivalence::new(3, &[vec![0, 1], vec![1]]).is_err());
    }
}
