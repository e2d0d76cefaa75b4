//! Foliations: two structures on the same points, the internal one cutting the
//! support into leaves.

use crate::error::{input, Result};
use crate::space::{is_morphism, pe_of_structure, quotient_partial, Space};
use crate::subset::{self, check_enumerable, elements, full, image, submasks, Family, Subset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Foliation {
    internal: Space,
    external: Space,
}

impl Foliation {
    pub fn new(internal: Space, external: Space) -> Result<Foliation> {
        if internal.points() != external.points() {
            return input(format!(
                "internal structure on {} points, external on {}",
                internal.points(),
                external.points()
            ));
        }
        Ok(Foliation { internal, external })
    }

    pub fn from_lists(n: usize, internal: &[Vec<usize>], external: &[Vec<usize>]) -> Result<Foliation> {
        Foliation::new(Space::from_lists(n, internal)?, Space::from_lists(n, external)?)
    }

    pub fn points(&self) -> usize {
        self.internal.points()
    }

    pub fn internal(&self) -> &Space {
        &self.internal
    }

    pub fn external(&self) -> &Space {
        &self.external
    }

    /// Internally connected parts are externally connected.
    pub fn is_regular(&self) -> bool {
        self.internal.is_finer_than(&self.external)
    }

    /// Components of the internal structure, ordered by least member.
    pub fn leaves(&self) -> Vec<Subset> {
        self.internal.components()
    }

    /// Leaf space where a set of leaves is connected when its union is
    /// externally connected.
    pub fn leaf_space_induced(&self) -> Result<Space> {
        let leaves = self.leaves();
        check_enumerable(leaves.len())?;
        let fam: Family = submasks(full(leaves.len()))
            .filter(|&a| self.external.is_connected(union_of_leaves(&leaves, a)))
            .collect();
        Ok(Space::new(leaves.len(), fam).expect("union of leaves preserves the axiom"))
    }

    /// External structure on the leafed part, quotiented by the leaves.
    pub fn leaf_space_quotient(&self) -> Result<Space> {
        let classes = pe_of_structure(&self.internal).class_lists();
        quotient_partial(&self.external, &classes)
    }

    /// Index of the leaf containing point `x`.
    pub fn leaf_of(&self, x: usize) -> Option<usize> {
        self.leaves().iter().position(|&l| subset::contains(l, x))
    }

    pub fn leaf_lists(&self) -> Vec<Vec<usize>> {
        self.leaves().iter().map(|&l| subset::to_vec(l)).collect()
    }
}

/// `phi` is connective for both structures; with `strict`, every leaf is
/// sent exactly onto a leaf.
pub fn is_foliation_morphism(z: &Foliation, z2: &Foliation, phi: &[usize], strict: bool) -> Result<bool> {
    if !is_morphism(&z.internal, &z2.internal, phi)? || !is_morphism(&z.external, &z2.external, phi)? {
        return Ok(false);
    }
    if strict {
        let target = z2.leaves();
        return Ok(z.leaves().iter().all(|&l| target.contains(&image(phi, l))));
    }
    Ok(true)
}

/// Leaf index map induced by a foliation morphism.
pub fn leaf_map(z: &Foliation, z2: &Foliation, phi: &[usize]) -> Result<Vec<usize>> {
    let target = z2.leaves();
    z.leaves()
        .iter()
        .map(|&l| {
            let img = image(phi, l);
            target
                .iter()
                .position(|&t| subset::is_subset(img, t))
                .ok_or_else(|| crate::error::Error::Domain("a leaf is not mapped into a leaf".into()))
        })
        .collect()
}

/// Union of the leaves with indices in `a`.
pub fn union_of_leaves(leaves: &[Subset], a: Subset) -> Subset {
    elements(a).fold(0, |u, i| u | leaves[i])
}
