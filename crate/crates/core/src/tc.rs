//! Category of transitions of a dynamics, and the constructions built on it.

use std::collections::HashMap;

use crate::dynamics::{xi, zeta, Dynamics, Rel};
use crate::dynamorphism::{check, zeta_on_functor, Dynamorphism};
use crate::error::{domain, Result};
use crate::fincat::{Arrow, FinCat, Functor};

/// Objects are the states; an arrow `(a, f, b)` for each `b` in `f(a)`.
pub fn tc(alpha: &Dynamics) -> Result<FinCat> {
    Ok(TcIndex::build(alpha)?.cat)
}

struct TcIndex {
    cat: FinCat,
    /// Position of each state among the objects.
    object: HashMap<usize, usize>,
    arrow: HashMap<(usize, usize, usize), usize>,
}

impl TcIndex {
    fn build(alpha: &Dynamics) -> Result<TcIndex> {
        alpha.require_proper()?;
        alpha.require_valid()?;
        let c = alpha.category();
        let states: Vec<usize> = alpha.state_lists().iter().flatten().copied().collect();
        let object: HashMap<usize, usize> = states.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut arrows = Vec::new();
        let mut triples = Vec::new();
        let mut arrow = HashMap::new();
        for f in 0..c.arrow_count() {
            for &a in alpha.states(c.dom(f)) {
                for b in alpha.step(f, a) {
                    arrow.insert((a, f, b), arrows.len());
                    triples.push((a, f, b));
                    arrows.push(Arrow {
                        name: format!("({},{},{})", alpha.names()[a], c.arrows()[f].name, alpha.names()[b]),
                        dom: object[&a],
                        cod: object[&b],
                    });
                }
            }
        }
        let owner = alpha.owner();
        let identities = states.iter().map(|&s| arrow[&(s, c.identity(owner[&s]), s)]).collect();
        let mut comps = Vec::new();
        for &(a, f, b) in &triples {
            for &(b2, g, c2) in &triples {
                if b2 == b {
                    let gf = c.compose(g, f).expect("composable");
                    comps.push((arrow[&(a, f, b)], arrow[&(b, g, c2)], arrow[&(a, gf, c2)]));
                }
            }
        }
        let names = states.iter().map(|&s| alpha.names()[s].clone()).collect();
        let cat = FinCat::new(names, arrows, identities, &comps)?;
        Ok(TcIndex { cat, object, arrow })
    }
}

/// Functor between transition categories induced by a deterministic dynamorphism.
pub fn tc_on_morphism(alpha: &Dynamics, beta: &Dynamics, d: &Dynamorphism) -> Result<Functor> {
    let r = check(alpha, beta, d)?;
    if !r.valid || !r.deterministic {
        return domain("dynamorphism must be valid and deterministic");
    }
    let (src, dst) = (TcIndex::build(alpha)?, TcIndex::build(beta)?);
    let owner = alpha.owner();
    let image = |s: usize| {
        let o = owner[&s];
        let local = alpha.local(o, s).unwrap();
        beta.states(d.functor.objects[o])[d.delta[o].value(local).unwrap()]
    };
    let mut objects = vec![0; src.cat.object_count()];
    for (&s, &i) in &src.object {
        objects[i] = dst.object[&image(s)];
    }
    let mut arrows = vec![0; src.cat.arrow_count()];
    for (&(a, f, b), &i) in &src.arrow {
        let key = (image(a), d.functor.arrows[f], image(b));
        arrows[i] = *dst.arrow.get(&key).ok_or_else(|| crate::error::Error::Domain("image transition missing".into()))?;
    }
    Ok(Functor { objects, arrows })
}

/// `f -> (dom f, f, cod f)` from a category to the transitions of its
/// single-state dynamics.
pub fn zeta_tc_witness(e: &FinCat) -> Result<Functor> {
    let index = TcIndex::build(&zeta(e))?;
    let objects = (0..e.object_count()).map(|o| index.object[&o]).collect();
    let arrows = (0..e.arrow_count()).map(|f| index.arrow[&(e.dom(f), f, e.cod(f))]).collect();
    Ok(Functor { objects, arrows })
}

/// Single-state dynamics over the transition category.
pub fn essentialize(alpha: &Dynamics) -> Result<Dynamics> {
    Ok(zeta(&tc(alpha)?))
}

/// Isomorphism from the essential dynamics to its own essential dynamics,
/// with its inverse.
pub fn essentialize_idempotent(alpha: &Dynamics) -> Result<(Dynamorphism, Dynamorphism)> {
    let t = tc(alpha)?;
    let w = zeta_tc_witness(&t)?;
    let tt = tc(&zeta(&t))?;
    if !w.is_functor(&t, &tt) || !w.is_bijective(&tt) {
        return domain("transition witness is not an isomorphism");
    }
    Ok((zeta_on_functor(&t, &tt, &w)?, zeta_on_functor(&tt, &t, &w.inverse())?))
}

/// Projection of the transitions back to the dynamics: each state `s` of
/// the essential dynamics is sent to `s` itself.
pub fn av(alpha: &Dynamics) -> Result<(Dynamics, Dynamorphism)> {
    let index = TcIndex::build(alpha)?;
    let owner = alpha.owner();
    let mut objects = vec![0; index.cat.object_count()];
    let mut delta = vec![Rel::empty(1, 0); index.cat.object_count()];
    for (&s, &i) in &index.object {
        let o = owner[&s];
        objects[i] = o;
        delta[i] = Rel::function(&[alpha.local(o, s).unwrap()], alpha.states(o).len());
    }
    let mut arrows = vec![0; index.cat.arrow_count()];
    for (&(_, f, _), &i) in &index.arrow {
        arrows[i] = f;
    }
    Ok((zeta(&index.cat), Dynamorphism { functor: Functor { objects, arrows }, delta }))
}

/// Transition category of the arrow dynamics.
pub fn verticalize(e: &FinCat) -> Result<FinCat> {
    tc(&xi(e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::Monoid;
    use crate::fixtures::arr2;

    #[test]
    fn tc_of_zeta_is_isomorphic() {
        for e in [arr2(), Monoid::cyclic(3).to_category(), FinCat::chain(3)] {
            let t = tc(&zeta(&e)).unwrap();
            assert!(t.is_valid());
            let w = zeta_tc_witness(&e).unwrap();
            assert!(w.is_functor(&e, &t) && w.is_bijective(&t));
        }
    }

    #[test]
    fn tc_of_xi_arr2() {
        let v = verticalize(&arr2()).unwrap();
        assert!(v.is_valid());
        // states id_S, id_T, f; transitions: ids on each, plus f: id_S -> f
        assert_eq!(v.object_count(), 3);
        assert_eq!(v.arrow_count(), 4);
    }

    #[test]
    fn av_is_deterministic_and_onto() {
        let alpha = xi(&Monoid::symmetric3().to_category());
        let (ess, proj) = av(&alpha).unwrap();
        let r = check(&ess, &alpha, &proj).unwrap();
        assert!(r.valid && r.deterministic);
    }

    #[test]
    fn ess_idempotent() {
        let alpha = xi(&arr2());
        let (fwd, back) = essentialize_idempotent(&alpha).unwrap();
        let ess = essentialize(&alpha).unwrap();
        let ess2 = essentialize(&ess).unwrap();
        assert!(check(&ess, &ess2, &fwd).unwrap().deterministic);
        assert!(check(&ess2, &ess, &back).unwrap().deterministic);
        assert_eq!(back.after(&fwd), Dynamorphism::identity(&ess));
    }

    #[test]
    fn improper_is_domain_error() {
        let d = Dynamics::new(FinCat::discrete(2), vec!["a".into()], vec![vec![0], vec![0]], vec![Rel::identity(1), Rel::identity(1)]).unwrap();
        assert!(matches!(tc(&d), Err(crate::error::Error::Domain(_))));
    }
}
