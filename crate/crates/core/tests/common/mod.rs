//! Seeded generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use connectivity::dynamics::{Dynamics, Rel};
use connectivity::fincat::{enumerate_functors, FinCat, Functor, Monoid};
use connectivity::foliation::Foliation;
use connectivity::representation::Representation;
use connectivity::space::{generate, Space};
use connectivity::subset::{elements, full, is_subset, singleton, submasks, Family, Subset};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

// ---------------------------------------------------------------- spaces

/// Each nonempty subset of `0..n` kept with probability `p`.
pub fn random_family(r: &mut StdRng, n: usize, p: f64) -> Family {
    submasks(full(n)).filter(|&k| k != 0 && r.gen_bool(p)).collect()
}

/// A few random generators, closed.
pub fn random_space(r: &mut StdRng, n: usize) -> Space {
    let count = r.gen_range(0..=n + 1);
    let fam: Family = (0..count).map(|_| r.gen_range(1..=full(n).max(1)) & full(n)).collect();
    generate(n, &fam, r.gen_bool(0.5)).unwrap()
}

pub fn random_integral_space(r: &mut StdRng, n: usize) -> Space {
    let count = r.gen_range(0..=n + 1);
    let fam: Family = (0..count).map(|_| r.gen_range(1..=full(n).max(1)) & full(n)).collect();
    generate(n, &fam, true).unwrap()
}

/// Every family of subsets of `0..n` (the empty set included or not).
pub fn all_families(n: usize) -> impl Iterator<Item = Family> {
    let sets: Vec<Subset> = (0..=full(n)).collect();
    (0u64..1 << sets.len()).map(move |pick| elements(pick).map(|i| sets[i]).collect())
}

/// Def-1 closure checked literally: the union of every subfamily with a
/// nonempty common intersection is a member; the empty subfamily forces `{}`.
pub fn axiom_oracle(n: usize, fam: &Family) -> bool {
    if fam.iter().any(|&k| !is_subset(k, full(n))) || !fam.contains(&0) {
        return false;
    }
    let members: Vec<Subset> = fam.iter().copied().collect();
    let m = members.len();
    (1u64..1 << m).all(|pick| {
        let (mut meet, mut join) = (full(n), 0);
        for i in elements(pick) {
            meet &= members[i];
            join |= members[i];
        }
        meet == 0 || fam.contains(&join)
    })
}

/// Structures on `0..n` by filtering families that contain the empty set.
pub fn all_structures(n: usize) -> Vec<Space> {
    let sets: Vec<Subset> = (1..=full(n)).collect();
    (0u64..1 << sets.len())
        .filter_map(|pick| {
            let mut fam: Family = elements(pick).map(|i| sets[i]).collect();
            fam.insert(0);
            Space::new(n, fam).ok()
        })
        .collect()
}

/// Integral structures on `0..n`: singletons always present, larger sets free.
pub fn integral_structures(n: usize) -> Vec<Space> {
    let base: Family = std::iter::once(0).chain((0..n).map(singleton)).collect();
    let big: Vec<Subset> = (1..=full(n)).filter(|k| k.count_ones() >= 2).collect();
    (0u64..1 << big.len())
        .filter_map(|pick| {
            let mut fam = base.clone();
            fam.extend(elements(pick).map(|i| big[i]));
            Space::new(n, fam).ok()
        })
        .collect()
}

/// Least structure containing `fam`: intersection of all valid supersets.
pub fn generate_oracle(fam: &Family, integral: bool, universe: &[Space]) -> Family {
    let mut out: Option<Family> = None;
    for s in universe {
        let c = s.connected();
        if fam.is_subset(c) && (!integral || s.is_integral()) {
            out = Some(match out {
                None => c.clone(),
                Some(o) => o.intersection(c).copied().collect(),
            });
        }
    }
    out.expect("the grossier structure contains everything")
}

/// Not the union of two intersecting connected proper parts.
pub fn irreducible_oracle(x: &Space, k: Subset) -> bool {
    let parts: Vec<Subset> = x.connected().iter().copied().filter(|&a| a != k && is_subset(a, k)).collect();
    !parts.iter().any(|&a| parts.iter().any(|&b| a & b != 0 && a | b == k))
}

/// Longest strictly increasing chain by depth-first search.
pub fn longest_chain_oracle(sets: &[Subset]) -> usize {
    fn from(sets: &[Subset], top: Subset) -> usize {
        1 + sets.iter().filter(|&&s| s != top && is_subset(top, s)).map(|&s| from(sets, s)).max().unwrap_or(0)
    }
    sets.iter().map(|&s| from(sets, s)).max().unwrap_or(0)
}

pub fn random_permutation(r: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(r);
    p
}

pub fn permute_space(x: &Space, p: &[usize]) -> Space {
    let fam = x.connected().iter().map(|&k| connectivity::subset::image(p, k)).collect();
    Space::new(x.points(), fam).unwrap()
}

/// Random partition of `0..n` into classes; every class nonempty.
pub fn random_partition(r: &mut StdRng, n: usize) -> Vec<Vec<usize>> {
    let k = r.gen_range(1..=n.max(1));
    let mut classes = vec![Vec::new(); k];
    for x in 0..n {
        classes[r.gen_range(0..k)].push(x);
    }
    classes.retain(|c| !c.is_empty());
    classes
}

pub fn random_foliation(r: &mut StdRng, n: usize) -> Foliation {
    Foliation::new(random_space(r, n), random_space(r, n)).unwrap()
}

/// Every pair of structures on `0..n` with internal finer than external.
pub fn regular_foliations(n: usize) -> Vec<Foliation> {
    let all = all_structures(n);
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            if a.is_finer_than(b) {
                out.push(Foliation::new(a.clone(), b.clone()).unwrap());
            }
        }
    }
    out
}

// ---------------------------------------------------------- representations

/// Valid representation with nonempty images into a random ambient.
pub fn random_representation(r: &mut StdRng, k: usize, m: usize) -> Representation {
    loop {
        let x = random_space(r, k);
        let map: Vec<Subset> = (0..k).map(|_| r.gen_range(1..=full(m))).collect();
        let fam: Family = x.connected().iter().map(|&a| elements(a).fold(0, |u, i| u | map[i])).collect();
        let mut extra = random_family(r, m, 0.1);
        extra.extend(fam);
        let y = generate(m, &extra, r.gen_bool(0.5)).unwrap();
        let rho = Representation::new(x, y, map).unwrap();
        if rho.is_valid() {
            return rho;
        }
    }
}

/// Valid, clear and distinct, with an integral object: disjoint blocks
/// carrying the images of the object's connected parts, plus noise inside
/// blocks and a few straddling sets, kept only when still clear.
pub fn random_clear_distinct(r: &mut StdRng, k: usize, m: usize) -> Representation {
    assert!(m >= k);
    loop {
        let x = random_integral_space(r, k);
        let mut owner: Vec<usize> = (0..k).collect();
        owner.extend((k..m).map(|_| r.gen_range(0..=k)));
        owner.shuffle(r);
        let mut map = vec![0; k];
        for (p, &o) in owner.iter().enumerate() {
            if o < k {
                map[o] |= singleton(p);
            }
        }
        let mu = |a: Subset| elements(a).fold(0, |u, i| u | map[i]);
        let mut fam: Family = x.connected().iter().map(|&a| mu(a)).collect();
        for &b in &map {
            fam.extend(submasks(b).filter(|_| r.gen_bool(0.3)));
        }
        if r.gen_bool(0.3) {
            fam.insert(r.gen_range(1..=full(m)));
        }
        let y = generate(m, &fam, r.gen_bool(0.3)).unwrap();
        let rho = Representation::new(x, y, map).unwrap();
        if rho.is_valid() && rho.is_distinct() && rho.is_clear().unwrap() {
            return rho;
        }
    }
}

// ------------------------------------------------------------- categories

/// Random preorder on up to `objects` points with at most `max_arrows` arrows.
pub fn random_preorder(r: &mut StdRng, objects: usize, max_arrows: usize) -> FinCat {
    loop {
        let n = r.gen_range(1..=objects);
        let names: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let rel: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| a != b && r.gen_bool(0.25)).collect();
        let c = FinCat::preorder(&refs, &rel, |a, b| format!("{a}<={b}")).unwrap();
        if c.arrow_count() <= max_arrows {
            return c;
        }
    }
}

/// Transformation monoid on `points` generated by random maps, elements act
/// as `(a * b)(x) = b(a(x))`. Returns the monoid and the maps.
pub fn random_transformation_monoid(r: &mut StdRng, points: usize, max: usize) -> (Monoid, Vec<Vec<usize>>) {
    loop {
        let id: Vec<usize> = (0..points).collect();
        let gens: Vec<Vec<usize>> =
            (0..r.gen_range(1..=2)).map(|_| (0..points).map(|_| r.gen_range(0..points)).collect()).collect();
        let mut elems = vec![id];
        let mut i = 0;
        while i < elems.len() && elems.len() <= max {
            for g in &gens {
                let next: Vec<usize> = elems[i].iter().map(|&x| g[x]).collect();
                if !elems.contains(&next) {
                    elems.push(next);
                }
            }
            i += 1;
        }
        if elems.len() > max {
            continue;
        }
        let idx = |f: &Vec<usize>| elems.iter().position(|g| g == f).unwrap();
        let table = elems
            .iter()
            .map(|a| elems.iter().map(|b| idx(&a.iter().map(|&x| b[x]).collect())).collect())
            .collect();
        let names = elems.iter().map(|e| e.iter().map(|d| d.to_string()).collect::<String>()).collect();
        let m = Monoid::new(names, 0, table).unwrap();
        assert!(m.is_valid());
        return (m, elems);
    }
}

/// Preorders, cyclic and saturating monoids, transformation monoids and
/// disjoint unions; at most 4 objects and 8 arrows.
pub fn random_category(r: &mut StdRng) -> FinCat {
    loop {
        let c = match r.gen_range(0..6) {
            0 | 1 => random_preorder(r, 4, 8),
            2 => Monoid::cyclic(r.gen_range(1..=8)).to_category(),
            3 => Monoid::saturating(r.gen_range(1..=7)).to_category(),
            4 => random_transformation_monoid(r, 3, 8).0.to_category(),
            _ => {
                let a = random_preorder(r, 2, 4);
                let b = if r.gen_bool(0.5) { random_preorder(r, 2, 4) } else { Monoid::cyclic(r.gen_range(1..=4)).to_category() };
                a.disjoint_union(&b)
            }
        };
        if c.object_count() <= 4 && c.arrow_count() <= 8 {
            return c;
        }
    }
}

// --------------------------------------------------------------- dynamics

/// Side by side over the same category, states renamed apart.
pub fn coproduct(a: &Dynamics, b: &Dynamics) -> Dynamics {
    let c = a.category();
    let off = a.names().len();
    let mut names: Vec<String> = a.names().iter().map(|s| format!("{s}.0")).collect();
    names.extend(b.names().iter().map(|s| format!("{s}.1")));
    let states = (0..c.object_count())
        .map(|o| a.states(o).iter().copied().chain(b.states(o).iter().map(|s| s + off)).collect())
        .collect();
    let trans = (0..c.arrow_count())
        .map(|f| {
            let (ta, tb) = (a.transition(f), b.transition(f));
            let rows = ta
                .rows()
                .iter()
                .cloned()
                .chain(tb.rows().iter().map(|r| r.iter().map(|t| t + ta.targets()).collect()))
                .collect();
            Rel::new(rows, ta.targets() + tb.targets()).unwrap()
        })
        .collect();
    Dynamics::new(c.clone(), names, states, trans).unwrap()
}

/// Restriction to `keep` (global ids) after closing it backwards: a state
/// is kept when one of its steps lands in the kept set.
pub fn restrict(a: &Dynamics, keep: &BTreeSet<usize>) -> Dynamics {
    let c = a.category();
    let mut keep = keep.clone();
    loop {
        let before = keep.len();
        for f in 0..c.arrow_count() {
            for &s in a.states(c.dom(f)) {
                if a.step(f, s).iter().any(|t| keep.contains(t)) {
                    keep.insert(s);
                }
            }
        }
        if keep.len() == before {
            break;
        }
    }
    let ids: Vec<usize> = keep.iter().copied().collect();
    let new_id: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let names = ids.iter().map(|&s| a.names()[s].clone()).collect();
    let states: Vec<Vec<usize>> =
        (0..c.object_count()).map(|o| a.states(o).iter().filter_map(|s| new_id.get(s).copied()).collect()).collect();
    let trans = (0..c.arrow_count())
        .map(|f| {
            let (dom, cod) = (&states[c.dom(f)], &states[c.cod(f)]);
            let rows = dom
                .iter()
                .map(|&s| {
                    a.step(f, ids[s]).into_iter().filter_map(|t| new_id.get(&t)).map(|t| cod.iter().position(|x| x == t).unwrap()).collect()
                })
                .collect();
            Rel::new(rows, cod.len()).unwrap()
        })
        .collect();
    Dynamics::new(c.clone(), names, states, trans).unwrap()
}

/// Over the chain `0 -> .. -> n-1`: arbitrary relations on the generating
/// steps, composites by composition.
pub fn free_chain_dynamics(r: &mut StdRng, n: usize, max_states: usize) -> Dynamics {
    let c = FinCat::chain(n);
    let sizes: Vec<usize> = (0..n).map(|_| r.gen_range(0..=max_states)).collect();
    let steps: Vec<Rel> = (1..n)
        .map(|k| {
            let rows = (0..sizes[k - 1]).map(|_| (0..sizes[k]).filter(|_| r.gen_bool(0.4)).collect()).collect();
            Rel::new(rows, sizes[k]).unwrap()
        })
        .collect();
    let mut names = Vec::new();
    let mut states = Vec::new();
    for (o, &s) in sizes.iter().enumerate() {
        states.push((names.len()..names.len() + s).collect());
        names.extend((0..s).map(|i| format!("{o}:{i}")));
    }
    let trans = c
        .arrows()
        .iter()
        .map(|a| (a.dom..a.cod).fold(Rel::identity(sizes[a.dom]), |acc, k| steps[k].after(&acc)))
        .collect();
    Dynamics::new(c, names, states, trans).unwrap()
}

/// Action of a transformation monoid on its points.
pub fn monoid_action(m: &Monoid, maps: &[Vec<usize>]) -> Dynamics {
    let k = maps[0].len();
    let trans = maps.iter().map(|f| Rel::function(f, k)).collect();
    Dynamics::new(m.to_category(), (0..k).map(|i| format!("p{i}")).collect(), vec![(0..k).collect()], trans).unwrap()
}

/// Proper dynamics over `c` built from single-state and arrow dynamics by
/// coproducts and backward-closed restrictions.
pub fn random_dynamics_over(r: &mut StdRng, c: &FinCat) -> Dynamics {
    let pieces = r.gen_range(1..=2);
    let mut d = piece(r, c);
    for _ in 1..pieces {
        d = coproduct(&d, &piece(r, c));
    }
    if r.gen_bool(0.5) {
        let keep = (0..d.state_count()).filter(|_| r.gen_bool(0.5)).collect();
        d = restrict(&d, &keep);
    }
    d
}

fn piece(r: &mut StdRng, c: &FinCat) -> Dynamics {
    if r.gen_bool(0.5) {
        connectivity::dynamics::zeta(c)
    } else {
        connectivity::dynamics::xi(c)
    }
}

/// Random proper dynamics with at most 4 objects and a handful of states
/// per object, including nondeterministic chains and monoid actions.
pub fn random_proper_dynamics(r: &mut StdRng) -> Dynamics {
    loop {
        let d = match r.gen_range(0..4) {
            0 => {
                let n = r.gen_range(1..=4);
                free_chain_dynamics(r, n, 3)
            }
            1 => {
                let k = r.gen_range(1..=4);
                let (m, maps) = random_transformation_monoid(r, k, 8);
                monoid_action(&m, &maps)
            }
            _ => {
                let c = random_category(r);
                random_dynamics_over(r, &c)
            }
        };
        let c = d.category();
        if (0..c.object_count()).all(|o| d.states(o).len() <= 5) {
            assert!(d.is_valid() && d.is_proper());
            return d;
        }
    }
}

/// Same dynamics with some states of different objects sharing an id.
pub fn merge_states(r: &mut StdRng, d: &Dynamics) -> Dynamics {
    let n = d.state_count();
    let mut target: Vec<usize> = (0..n).collect();
    for s in 0..n {
        if r.gen_bool(0.3) {
            target[s] = r.gen_range(0..n);
        }
    }
    let c = d.category();
    // only merge across objects
    let owner = d.owner();
    for s in 0..n {
        let t = target[s];
        if t != s && (owner[&s] == owner[&t] || target[t] != t) {
            target[s] = s;
        }
    }
    let mut states: Vec<Vec<usize>> = Vec::new();
    for o in 0..c.object_count() {
        let list: Vec<usize> = d.states(o).iter().map(|&s| target[s]).collect();
        let uniq: BTreeSet<_> = list.iter().collect();
        if uniq.len() != list.len() {
            return d.clone();
        }
        states.push(list);
    }
    let used: BTreeSet<usize> = states.iter().flatten().copied().collect();
    let ids: Vec<usize> = used.into_iter().collect();
    let pos: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let names = ids.iter().map(|&s| d.names()[s].clone()).collect();
    let states = states.into_iter().map(|l| l.into_iter().map(|s| pos[&s]).collect()).collect();
    Dynamics::new(c.clone(), names, states, d.transitions().to_vec()).unwrap()
}

pub fn random_functor(r: &mut StdRng, e: &FinCat, f: &FinCat) -> Option<Functor> {
    let all = enumerate_functors(e, f, 200);
    all.choose(r).cloned()
}

/// Random subset of `0..n` as a sorted set of indices.
pub fn random_indices(r: &mut StdRng, n: usize, p: f64) -> BTreeSet<usize> {
    (0..n).filter(|_| r.gen_bool(p)).collect()
}
