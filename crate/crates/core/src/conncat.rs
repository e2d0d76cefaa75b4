//! Connectivity structures on the arrows of a finite category that are
//! stable under composition.

use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::fincat::{FinCat, Monoid};
use crate::order::connectivity_order;
use crate::space::{generate, is_valid_structure, Space};
use crate::subset::{self, elements, full, singleton, Family, Subset};

fn check_arrows(cat: &FinCat) -> Result<()> {
    if cat.arrow_count() > subset::MAX_POINTS {
        return Err(Error::Capacity(format!("{} arrows, at most {} supported", cat.arrow_count(), subset::MAX_POINTS)));
    }
    Ok(())
}

/// `{b . a : a in A, b in B, cod a = dom b}`.
pub fn compose_sets(cat: &FinCat, b: Subset, a: Subset) -> Subset {
    let mut out = 0;
    for x in elements(a) {
        for y in elements(b) {
            if let Some(h) = cat.compose(y, x) {
                out |= singleton(h);
            }
        }
    }
    out
}

/// Valid structure on the arrows, closed under composition of connected parts.
pub fn is_connective(cat: &FinCat, fam: &Family) -> bool {
    if cat.arrow_count() > subset::MAX_POINTS || !is_valid_structure(cat.arrow_count(), fam) {
        return false;
    }
    fam.iter().all(|&a| fam.iter().all(|&b| fam.contains(&compose_sets(cat, b, a))))
}

/// Least connective structure containing `fam`.
pub fn conncat_generate(cat: &FinCat, fam: &Family, integral: bool) -> Result<Space> {
    check_arrows(cat)?;
    let n = cat.arrow_count();
    let mut current = generate(n, fam, integral)?;
    loop {
        let members: Vec<Subset> = current.connected().iter().copied().collect();
        let mut next: Family = current.connected().clone();
        for &a in &members {
            for &b in &members {
                next.insert(compose_sets(cat, b, a));
            }
        }
        if next.len() == members.len() {
            return Ok(current);
        }
        current = generate(n, &next, integral)?;
    }
}

/// Order of the integral connective structure generated by the set of all arrows.
pub fn brunnian_order(cat: &FinCat) -> Result<usize> {
    check_arrows(cat)?;
    let all: Family = [full(cat.arrow_count())].into_iter().collect();
    Ok(connectivity_order(&conncat_generate(cat, &all, true)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MonoidReport {
    pub connective: bool,
    /// Translates `xK` and `Kx` connected; only reported for integral structures.
    pub via_translations: Option<bool>,
    pub group: bool,
    pub semi_connective_group: bool,
    /// Also stable under inversion.
    pub connective_group: bool,
}

fn product(m: &Monoid, a: Subset, b: Subset) -> Subset {
    let mut out = 0;
    for x in elements(a) {
        for y in elements(b) {
            out |= singleton(m.mul(x, y));
        }
    }
    out
}

/// Connectivity of a structure on a monoid's elements under the product.
pub fn monoid_check(m: &Monoid, fam: &Family) -> Result<MonoidReport> {
    if !m.is_valid() {
        return input("table is not a monoid");
    }
    let n = m.len();
    subset::check_points(n)?;
    let valid = is_valid_structure(n, fam);
    let connective = valid && fam.iter().all(|&a| fam.iter().all(|&b| fam.contains(&product(m, a, b))));
    let integral = valid && (0..n).all(|x| fam.contains(&singleton(x)));
    let via_translations = integral.then(|| {
        fam.iter().all(|&k| (0..n).all(|x| fam.contains(&product(m, singleton(x), k)) && fam.contains(&product(m, k, singleton(x)))))
    });
    let group = m.is_group();
    let semi = group && connective;
    let inverse_closed = fam.iter().all(|&k| {
        let inv = elements(k).fold(0, |acc, x| acc | singleton(m.inverse(x).unwrap_or(x)));
        fam.contains(&inv)
    });
    Ok(MonoidReport {
        connective,
        via_translations,
        group,
        semi_connective_group: semi,
        connective_group: semi && inverse_closed,
    })
}

/// Objects connected when their identities are connected in the structure
/// generated by `{id_A, id_B}` for each arrow `A -> B`.
pub fn object_connectivity(cat: &FinCat) -> Result<Space> {
    check_arrows(cat)?;
    let fam: Family = cat
        .arrows()
        .iter()
        .map(|a| singleton(cat.identity(a.dom)) | singleton(cat.identity(a.cod)))
        .collect();
    let on_arrows = generate(cat.arrow_count(), &fam, false)?;
    let ids: Vec<usize> = cat.identities().to_vec();
    let objs: Family = on_arrows
        .connected()
        .iter()
        .map(|&k| (0..ids.len()).filter(|&o| subset::contains(k, ids[o])).fold(0, |acc, o| acc | singleton(o)))
        .collect();
    Space::new(cat.object_count(), objs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::arr2;

    #[test]
    fn group_orders() {
        for m in [Monoid::cyclic(2), Monoid::cyclic(3), Monoid::symmetric3()] {
            assert_eq!(brunnian_order(&m.to_category()).unwrap(), 1);
        }
        assert_eq!(brunnian_order(&Monoid::cyclic(1).to_category()).unwrap(), 0);
    }

    #[test]
    fn saturating_intervals() {
        let m = Monoid::saturating(5);
        let p6 = Space::path(6).unwrap();
        let r = monoid_check(&m, p6.connected()).unwrap();
        assert!(r.connective && r.via_translations == Some(true) && !r.group);
    }

    #[test]
    fn cyclic_cycle_graph_is_connective_group() {
        let m = Monoid::cyclic(4);
        let cycle = Space::graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let r = monoid_check(&m, cycle.connected()).unwrap();
        assert!(r.connective_group);
        // a path on Z/4 is not stable under translation
        let r = monoid_check(&m, Space::path(4).unwrap().connected()).unwrap();
        assert!(!r.connective && r.via_translations == Some(false));
    }

    #[test]
    fn arr2_objects_connected() {
        assert_eq!(object_connectivity(&arr2()).unwrap(), Space::grossier(2).unwrap());
        let d = FinCat::discrete(2);
        assert_eq!(object_connectivity(&d).unwrap(), Space::discrete(2).unwrap());
    }

    #[test]
    fn generated_is_connective() {
        let c = arr2();
        let f = c.arrow_index("f").unwrap();
        let g = conncat_generate(&c, &[singleton(f)].into_iter().collect(), false).unwrap();
        assert!(is_connective(&c, g.connected()));
    }
}
