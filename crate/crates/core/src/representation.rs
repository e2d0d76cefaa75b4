//! Representations: each point of an object space is sent to a nonempty part
//! of an ambient space, connected parts going to connected parts.

use crate::error::{domain, input, Error, Result};
use crate::foliation::{is_foliation_morphism, leaf_map, Foliation};
use crate::space::{generate, is_morphism, Space};
use crate::subset::{self, check_enumerable, elements, full, is_subset, singleton, submasks, Family, Subset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    object: Space,
    ambient: Space,
    map: Vec<Subset>,
}

impl Representation {
    /// Checks only the shape of `map`; see [`Representation::is_valid`].
    pub fn new(object: Space, ambient: Space, map: Vec<Subset>) -> Result<Representation> {
        if map.len() != object.points() {
            return input(format!("map has {} entries, object has {} points", map.len(), object.points()));
        }
        if map.iter().any(|&m| !is_subset(m, full(ambient.points()))) {
            return input("map value exceeds the ambient support");
        }
        Ok(Representation { object, ambient, map })
    }

    pub fn from_lists(object: Space, ambient: Space, map: &[Vec<usize>]) -> Result<Representation> {
        let m = ambient.points();
        let map = map.iter().map(|l| subset::from_indices(m, l)).collect::<Result<Vec<_>>>()?;
        Representation::new(object, ambient, map)
    }

    /// Identity representation `a -> {a}`.
    pub fn unit(x: &Space) -> Representation {
        Representation { object: x.clone(), ambient: x.clone(), map: (0..x.points()).map(singleton).collect() }
    }

    pub fn object(&self) -> &Space {
        &self.object
    }

    pub fn ambient(&self) -> &Space {
        &self.ambient
    }

    pub fn map(&self) -> &[Subset] {
        &self.map
    }

    pub fn map_lists(&self) -> Vec<Vec<usize>> {
        self.map.iter().map(|&m| subset::to_vec(m)).collect()
    }

    /// Union of the images of the points of `a`.
    pub fn mu(&self, a: Subset) -> Subset {
        elements(a).fold(0, |u, x| u | self.map[x])
    }

    /// Nonempty images and connected parts sent to connected parts.
    pub fn is_valid(&self) -> bool {
        self.map.iter().all(|&m| m != 0) && self.object.connected().iter().all(|&k| self.ambient.is_connected(self.mu(k)))
    }

    /// Non-connected parts are sent to non-connected parts.
    pub fn is_clear(&self) -> Result<bool> {
        check_enumerable(self.object.points())?;
        Ok(submasks(full(self.object.points()))
            .filter(|&a| !self.object.is_connected(a))
            .all(|a| !self.ambient.is_connected(self.mu(a))))
    }

    /// Images pairwise disjoint.
    pub fn is_distinct(&self) -> bool {
        let mut seen = 0;
        for &m in &self.map {
            if m & seen != 0 {
                return false;
            }
            seen |= m;
        }
        true
    }
}

/// Kleisli composite `x -> union of tau(y) for y in rho(x)`; requires the
/// ambient of `rho` to be the object of `tau`.
pub fn compose(tau: &Representation, rho: &Representation) -> Result<Representation> {
    if rho.ambient != tau.object {
        return input("ambient of the first representation differs from the object of the second");
    }
    let map = rho.map.iter().map(|&m| tau.mu(m)).collect();
    Ok(Representation { object: rho.object.clone(), ambient: tau.ambient.clone(), map })
}

/// Doubles every point: `x -> {x, x + n}`, on the integral structure whose
/// larger connected parts are the doubled connected parts of `x`.
pub fn canonical_double(x: &Space) -> Result<Representation> {
    let n = x.points();
    subset::check_points(2 * n)?;
    let map: Vec<Subset> = (0..n).map(|i| singleton(i) | singleton(i + n)).collect();
    let fam: Family = x.connected().iter().map(|&k| k | k << n).collect();
    let ambient = generate(2 * n, &fam, true)?;
    Ok(Representation { object: x.clone(), ambient, map })
}

/// Pair `(object map, ambient map)` between two representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RepMorphism {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl RepMorphism {
    pub fn identity(rho: &Representation) -> RepMorphism {
        RepMorphism { alpha: (0..rho.object.points()).collect(), beta: (0..rho.ambient.points()).collect() }
    }

    /// `self` after `first`.
    pub fn after(&self, first: &RepMorphism) -> RepMorphism {
        RepMorphism {
            alpha: first.alpha.iter().map(|&a| self.alpha[a]).collect(),
            beta: first.beta.iter().map(|&b| self.beta[b]).collect(),
        }
    }
}

/// Both maps connective and `beta(rho(a))` inside `rho2(alpha(a))`.
pub fn is_rep_morphism(rho: &Representation, rho2: &Representation, m: &RepMorphism) -> Result<bool> {
    if !is_morphism(&rho.object, &rho2.object, &m.alpha)? || !is_morphism(&rho.ambient, &rho2.ambient, &m.beta)? {
        return Ok(false);
    }
    Ok((0..rho.object.points()).all(|a| is_subset(subset::image(&m.beta, rho.map[a]), rho2.map[m.alpha[a]])))
}

/// Morphism between canonical doubles induced by a connective map.
pub fn double_on_morphism(x: &Space, y: &Space, f: &[usize]) -> Result<RepMorphism> {
    if !is_morphism(x, y, f)? {
        return domain("map is not connective");
    }
    let (n, m) = (x.points(), y.points());
    let beta = (0..2 * n).map(|p| if p < n { f[p] } else { f[p - n] + m }).collect();
    Ok(RepMorphism { alpha: f.to_vec(), beta })
}

/// Selects, for each ambient part `rho(a)`, which of its subsets are
/// declared internally connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    /// Nothing but the empty set.
    Desintegrated,
    /// The ambient's own connected parts.
    Own,
    /// Every subset.
    Grossier,
}

impl std::str::FromStr for Selector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Selector> {
        match s {
            "D" | "d" | "desintegrated" => Ok(Selector::Desintegrated),
            "K" | "k" | "own" => Ok(Selector::Own),
            "G" | "g" | "grossier" => Ok(Selector::Grossier),
            _ => input(format!("unknown selector {s:?}, expected D, K or G")),
        }
    }
}

fn selected(sel: Selector, ambient: &Space, part: Subset) -> Result<Vec<Subset>> {
    Ok(match sel {
        Selector::Desintegrated => vec![0],
        Selector::Own => ambient.connected().iter().copied().filter(|&k| is_subset(k, part)).collect(),
        Selector::Grossier => {
            check_enumerable(subset::len(part))?;
            submasks(part).collect()
        }
    })
}

/// Foliation on the ambient: external structure is the ambient's, internal
/// structure is generated inside each `rho(a)` by `gamma1` when `a` is a
/// connected point of the object and by `gamma0` otherwise.
pub fn phi(rho: &Representation, gamma0: Selector, gamma1: Selector) -> Result<Foliation> {
    let points = rho.object.connected_points();
    let mut fam = Family::new();
    for (a, &part) in rho.map.iter().enumerate() {
        let sel = if subset::contains(points, a) { gamma1 } else { gamma0 };
        fam.extend(selected(sel, &rho.ambient, part)?);
    }
    let internal = generate(rho.ambient.points(), &fam, false)?;
    Foliation::new(internal, rho.ambient.clone())
}

/// Both selectors set to the ambient's own structure.
pub fn phi_own(rho: &Representation) -> Result<Foliation> {
    phi(rho, Selector::Own, Selector::Own)
}

/// The ambient map of a representation morphism is a foliation morphism
/// between the images under [`phi`].
pub fn phi_on_morphism(m: &RepMorphism) -> Vec<usize> {
    m.beta.clone()
}

/// Each leaf represented by itself, over the induced leaf space.
pub fn r_down(z: &Foliation) -> Result<Representation> {
    let leaves = z.leaves();
    Representation::new(z.leaf_space_induced()?, z.external().clone(), leaves)
}

/// Each leaf represented by itself, over the quotient leaf space, inside the
/// structure generated by both structures.
pub fn r_up(z: &Foliation) -> Result<Representation> {
    let leaves = z.leaves();
    let fam: Family = z.internal().connected().union(z.external().connected()).copied().collect();
    let ambient = generate(z.points(), &fam, false)?;
    Representation::new(z.leaf_space_quotient()?, ambient, leaves)
}

fn morphism_pair(z: &Foliation, z2: &Foliation, f: &[usize]) -> Result<RepMorphism> {
    if !is_foliation_morphism(z, z2, f, false)? {
        return domain("map is not a foliation morphism");
    }
    Ok(RepMorphism { alpha: leaf_map(z, z2, f)?, beta: f.to_vec() })
}

/// Leaf `F` goes to the leaf containing `f(F)`; the ambient map is `f`.
pub fn r_down_on_morphism(z: &Foliation, z2: &Foliation, f: &[usize]) -> Result<RepMorphism> {
    morphism_pair(z, z2, f)
}

/// Same pair of maps as [`r_down_on_morphism`], read between the quotient
/// leaf representations.
pub fn r_up_on_morphism(z: &Foliation, z2: &Foliation, f: &[usize]) -> Result<RepMorphism> {
    morphism_pair(z, z2, f)
}

/// Isomorphism from a clear distinct representation to the leaf
/// representation of its grossier foliation, with its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafIso {
    pub target: Representation,
    pub forward: RepMorphism,
    pub backward: RepMorphism,
}

pub fn leaf_iso(rho: &Representation) -> Result<LeafIso> {
    if !rho.is_valid() || !rho.is_distinct() || !rho.is_clear()? {
        return domain("representation must be valid, clear and distinct");
    }
    let z = phi(rho, Selector::Grossier, Selector::Grossier)?;
    let target = r_down(&z)?;
    let leaves = z.leaves();
    let alpha = rho
        .map
        .iter()
        .map(|m| leaves.iter().position(|l| l == m).ok_or_else(|| Error::Domain("image is not a leaf".into())))
        .collect::<Result<Vec<_>>>()?;
    let mut inv = vec![0; alpha.len()];
    for (a, &f) in alpha.iter().enumerate() {
        inv[f] = a;
    }
    let id: Vec<usize> = (0..rho.ambient.points()).collect();
    let forward = RepMorphism { alpha, beta: id.clone() };
    let backward = RepMorphism { alpha: inv, beta: id };
    if !is_rep_morphism(rho, &target, &forward)? || !is_rep_morphism(&target, rho, &backward)? {
        return domain("leaf correspondence is not an isomorphism");
    }
    Ok(LeafIso { target, forward, backward })
}
