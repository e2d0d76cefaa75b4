//! Brute-force check of the correspondence between representation morphisms
//! out of a leaf representation and foliation morphisms into [`phi_own`].

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::foliation::{is_foliation_morphism, Foliation};
use crate::representation::{is_rep_morphism, phi_own, r_down, r_down_on_morphism, RepMorphism, Representation};
use crate::space::is_morphism;
use crate::subset::{self, is_subset};

/// Largest support enumerated when listing all maps.
pub const HOM_LIMIT: usize = 6;

/// Every map `0..n -> 0..m`, in lexicographic order.
fn all_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    loop {
        out.push(cur.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < m {
                break;
            }
            cur[i] = 0;
        }
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > HOM_LIMIT {
        return Err(Error::Capacity(format!("hom enumeration on {n} points, at most {HOM_LIMIT} supported")));
    }
    Ok(())
}

/// All representation morphisms `rho -> rho2`.
pub fn hom_rep(rho: &Representation, rho2: &Representation) -> Result<Vec<RepMorphism>> {
    check_size(rho.object().points())?;
    check_size(rho.ambient().points())?;
    let mut out = Vec::new();
    for beta in all_maps(rho.ambient().points(), rho2.ambient().points()) {
        if !is_morphism(rho.ambient(), rho2.ambient(), &beta)? {
            continue;
        }
        for alpha in all_maps(rho.object().points(), rho2.object().points()) {
            let m = RepMorphism { alpha, beta: beta.clone() };
            if is_rep_morphism(rho, rho2, &m)? {
                out.push(m);
            }
        }
    }
    Ok(out)
}

/// All foliation morphisms `z -> z2`.
pub fn hom_foliation(z: &Foliation, z2: &Foliation) -> Result<Vec<Vec<usize>>> {
    check_size(z.points())?;
    let mut out = Vec::new();
    for f in all_maps(z.points(), z2.points()) {
        if is_foliation_morphism(z, z2, &f, false)? {
            out.push(f);
        }
    }
    Ok(out)
}

/// Object map forced by an ambient map: each leaf goes to the unique point
/// whose image contains the image of the leaf.
pub fn transpose_left(z: &Foliation, rho: &Representation, beta: &[usize]) -> Result<RepMorphism> {
    let alpha = z
        .leaves()
        .iter()
        .map(|&leaf| {
            let img = subset::image(beta, leaf);
            let hits: Vec<usize> = (0..rho.object().points()).filter(|&a| is_subset(img, rho.map()[a])).collect();
            match hits.as_slice() {
                [a] => Ok(*a),
                _ => domain(format!("leaf image lies in {} represented points, expected one", hits.len())),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RepMorphism { alpha, beta: beta.to_vec() })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjunctionReport {
    pub hom_left: usize,
    pub hom_right: usize,
    pub bijection: bool,
}

fn check_pre(z: &Foliation, rho: &Representation) -> Result<()> {
    if !z.is_regular() {
        return domain("foliation is not regular");
    }
    if !rho.is_valid() || !rho.is_distinct() || !rho.is_clear()? || !rho.object().is_integral() {
        return domain("representation must be valid, clear, distinct, with integral object");
    }
    Ok(())
}

/// Enumerates both hom-sets and checks that keeping the ambient map is a
/// bijection whose inverse is [`transpose_left`].
pub fn adjunction_verify(z: &Foliation, rho: &Representation) -> Result<AdjunctionReport> {
    check_pre(z, rho)?;
    let down = r_down(z)?;
    let target = phi_own(rho)?;
    let left = hom_rep(&down, rho)?;
    let right = hom_foliation(z, &target)?;
    let mut bijection = left.len() == right.len();
    for m in &left {
        bijection &= right.contains(&m.beta) && transpose_left(z, rho, &m.beta).as_ref() == Ok(m);
    }
    for beta in &right {
        bijection &= match transpose_left(z, rho, beta) {
            Ok(m) => is_rep_morphism(&down, rho, &m)? && left.contains(&m),
            Err(_) => false,
        };
    }
    Ok(AdjunctionReport { hom_left: left.len(), hom_right: right.len(), bijection })
}

/// Naturality in both variables: for a foliation morphism `f: z0 -> z` and a
/// representation morphism `g: rho -> rho2`, transposing `g . m . down(f)`
/// agrees with `beta(g) . beta(m) . f` for every `m: down(z) -> rho`.
pub fn naturality_check(
    z0: &Foliation,
    z: &Foliation,
    f: &[usize],
    rho: &Representation,
    rho2: &Representation,
    g: &RepMorphism,
) -> Result<bool> {
    check_pre(z0, rho)?;
    check_pre(z, rho)?;
    check_pre(z, rho2)?;
    if !is_rep_morphism(rho, rho2, g)? {
        return domain("second morphism is not a representation morphism");
    }
    let down_f = r_down_on_morphism(z0, z, f)?;
    for m in hom_rep(&r_down(z)?, rho)? {
        let composite = g.after(&m).after(&down_f);
        let beta: Vec<usize> = f.iter().map(|&x| g.beta[m.beta[x]]).collect();
        if composite.beta != beta || transpose_left(z0, rho2, &beta)? != composite {
            return Ok(false);
        }
        if !is_foliation_morphism(z0, &phi_own(rho2)?, &beta, false)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::Space;

    #[test]
    fn all_maps_counts() {
        assert_eq!(all_maps(3, 2).len(), 8);
        assert_eq!(all_maps(0, 0).len(), 1);
        assert_eq!(all_maps(2, 0).len(), 0);
    }

    #[test]
    fn small_adjunction() {
        let z = Foliation::from_lists(3, &[vec![0, 1]], &[vec![0, 1], vec![0, 1, 2]]).unwrap();
        let rho = crate::representation::canonical_double(&Space::discrete(2).unwrap()).unwrap();
        let r = adjunction_verify(&z, &rho).unwrap();
        assert!(r.bijection);
        assert_eq!(r.hom_left, r.hom_right);
    }

    #[test]
    fn irregular_rejected() {
        let rho = Representation::unit(&Space::discrete(1).unwrap());
        assert!(adjunction_verify(&crate::fixtures::z6(), &rho).is_err());
    }
}
