//! Finite categories given by an explicit composition table, and functors.

use std::collections::HashMap;

use crate::error::{input, invalid, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub dom: usize,
    pub cod: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identities: Vec<usize>,
    /// `table[g * len + f]` is `g . f` when defined.
    table: Vec<Option<usize>>,
}

impl FinCat {
    /// Builds the table from triples `(f, g, h)` meaning `g . f = h`.
    /// Composites with an identity are filled in when absent. The category
    /// laws are not checked here; see [`FinCat::violation`].
    pub fn new(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<usize>,
        composites: &[(usize, usize, usize)],
    ) -> Result<FinCat> {
        let m = arrows.len();
        if has_duplicates(objects.iter()) || has_duplicates(arrows.iter().map(|a| &a.name)) {
            return input("object and arrow names must be unique");
        }
        if identities.len() != objects.len() {
            return input("one identity arrow per object is required");
        }
        if let Some(a) = arrows.iter().find(|a| a.dom >= objects.len() || a.cod >= objects.len()) {
            return input(format!("arrow {} has an unknown endpoint", a.name));
        }
        if identities.iter().any(|&i| i >= m) {
            return input("identity index out of range");
        }
        let mut table = vec![None; m * m];
        for &(f, g, h) in composites {
            if f >= m || g >= m || h >= m {
                return input("composite index out of range");
            }
            if let Some(old) = table[g * m + f] {
                if old != h {
                    return input(format!("conflicting composites for {} . {}", arrows[g].name, arrows[f].name));
                }
            }
            table[g * m + f] = Some(h);
        }
        for (o, &id) in identities.iter().enumerate() {
            for (f, a) in arrows.iter().enumerate() {
                if a.cod == o && table[id * m + f].is_none() {
                    table[id * m + f] = Some(f);
                }
                if a.dom == o && table[f * m + id].is_none() {
                    table[f * m + id] = Some(f);
                }
            }
        }
        Ok(FinCat { objects, arrows, identities, table })
    }

    /// Description of the first broken law, if any.
    pub fn violation(&self) -> Option<String> {
        let m = self.arrows.len();
        for (o, &id) in self.identities.iter().enumerate() {
            if self.arrows[id].dom != o || self.arrows[id].cod != o {
                return Some(format!("identity of {} is not an endo-arrow on it", self.objects[o]));
            }
        }
        for g in 0..m {
            for f in 0..m {
                let composable = self.arrows[f].cod == self.arrows[g].dom;
                match (composable, self.table[g * m + f]) {
                    (true, None) => {
                        return Some(format!("{} . {} is undefined", self.arrows[g].name, self.arrows[f].name))
                    }
                    (false, Some(_)) => {
                        return Some(format!("{} . {} given for non-composable arrows", self.arrows[g].name, self.arrows[f].name))
                    }
                    (true, Some(h)) if self.arrows[h].dom != self.arrows[f].dom || self.arrows[h].cod != self.arrows[g].cod => {
                        return Some(format!("{} . {} has the wrong endpoints", self.arrows[g].name, self.arrows[f].name))
                    }
                    _ => {}
                }
            }
        }
        for (f, a) in self.arrows.iter().enumerate() {
            if self.table[self.identities[a.cod] * m + f] != Some(f) || self.table[f * m + self.identities[a.dom]] != Some(f) {
                return Some(format!("identity law fails at {}", a.name));
            }
        }
        for f in 0..m {
            for g in self.out_of(self.arrows[f].cod) {
                let gf = self.table[g * m + f].unwrap();
                for h in self.out_of(self.arrows[g].cod) {
                    let left = self.table[h * m + g].and_then(|hg| self.table[hg * m + f]);
                    let right = self.table[h * m + gf];
                    if left != right {
                        return Some(format!(
                            "associativity fails at {}, {}, {}",
                            self.arrows[h].name, self.arrows[g].name, self.arrows[f].name
                        ));
                    }
                }
            }
        }
        None
    }

    pub fn is_valid(&self) -> bool {
        self.violation().is_none()
    }

    pub fn require_valid(&self) -> Result<()> {
        match self.violation() {
            Some(v) => invalid(format!("not a category: {v}")),
            None => Ok(()),
        }
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn dom(&self, f: usize) -> usize {
        self.arrows[f].dom
    }

    pub fn cod(&self, f: usize) -> usize {
        self.arrows[f].cod
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identities[o]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.arrows[f].dom] == f
    }

    /// `g . f`, defined when `cod f = dom g`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.table[g * self.arrows.len() + f]
    }

    pub fn hom(&self, a: usize, b: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&f| self.arrows[f].dom == a && self.arrows[f].cod == b)
    }

    pub fn out_of(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&f| self.arrows[f].dom == a)
    }

    pub fn into(&self, b: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&f| self.arrows[f].cod == b)
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// All composites as `(f, g, g . f)` triples, identities included.
    pub fn composites(&self) -> Vec<(usize, usize, usize)> {
        let m = self.arrows.len();
        let mut out = Vec::new();
        for g in 0..m {
            for f in 0..m {
                if let Some(h) = self.table[g * m + f] {
                    out.push((f, g, h));
                }
            }
        }
        out
    }

    /// `g . f = id` for some `g`.
    pub fn is_left_invertible(&self, f: usize) -> bool {
        self.hom(self.cod(f), self.dom(f)).any(|g| self.compose(g, f) == Some(self.identity(self.dom(f))))
    }

    pub fn is_isomorphism(&self, f: usize) -> bool {
        self.hom(self.cod(f), self.dom(f)).any(|g| {
            self.compose(g, f) == Some(self.identity(self.dom(f))) && self.compose(f, g) == Some(self.identity(self.cod(f)))
        })
    }

    /// `f . g = f . h` implies `g = h`.
    pub fn is_left_cancellable(&self, f: usize) -> bool {
        let into: Vec<usize> = self.into(self.dom(f)).collect();
        into.iter().all(|&g| into.iter().all(|&h| self.dom(g) != self.dom(h) || g == h || self.compose(f, g) != self.compose(f, h)))
    }

    /// `g . f = h . f` implies `g = h`.
    pub fn is_right_cancellable(&self, f: usize) -> bool {
        let out: Vec<usize> = self.out_of(self.cod(f)).collect();
        out.iter().all(|&g| out.iter().all(|&h| self.cod(g) != self.cod(h) || g == h || self.compose(g, f) != self.compose(h, f)))
    }

    /// Thin category of a preorder: reflexive-transitive closure of `relation`.
    /// `name(a, b)` names the arrow `a <= b`.
    pub fn preorder(objects: &[&str], relation: &[(usize, usize)], name: impl Fn(usize, usize) -> String) -> Result<FinCat> {
        let n = objects.len();
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in relation {
            if a >= n || b >= n {
                return input(format!("relation pair ({a},{b}) out of range"));
            }
            le[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if le[i][k] && le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
        let mut arrows = Vec::new();
        let mut index = HashMap::new();
        for a in 0..n {
            for b in 0..n {
                if le[a][b] {
                    index.insert((a, b), arrows.len());
                    arrows.push(Arrow { name: name(a, b), dom: a, cod: b });
                }
            }
        }
        let identities = (0..n).map(|a| index[&(a, a)]).collect();
        let mut comps = Vec::new();
        for (&(a, b), &f) in &index {
            for c in 0..n {
                if let Some(&g) = index.get(&(b, c)) {
                    comps.push((f, g, index[&(a, c)]));
                }
            }
        }
        FinCat::new(objects.iter().map(|s| s.to_string()).collect(), arrows, identities, &comps)
    }

    /// Total order `0 -> 1 -> .. -> n-1`.
    pub fn chain(n: usize) -> FinCat {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let rel: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        FinCat::preorder(&refs, &rel, |a, b| if a == b { format!("id_{a}") } else { format!("{a}<={b}") }).unwrap()
    }

    /// Objects only.
    pub fn discrete(n: usize) -> FinCat {
        let arrows = (0..n).map(|i| Arrow { name: format!("id_{i}"), dom: i, cod: i }).collect();
        FinCat::new((0..n).map(|i| i.to_string()).collect(), arrows, (0..n).collect(), &[]).unwrap()
    }

    /// Side by side, arrows of `other` renamed with a `'` suffix on clashes.
    pub fn disjoint_union(&self, other: &FinCat) -> FinCat {
        let (no, na) = (self.objects.len(), self.arrows.len());
        let mut objects = self.objects.clone();
        for o in &other.objects {
            let mut name = o.clone();
            while objects.contains(&name) {
                name.push('\'');
            }
            objects.push(name);
        }
        let mut arrows = self.arrows.clone();
        for a in &other.arrows {
            let mut name = a.name.clone();
            while arrows.iter().any(|b| b.name == name) {
                name.push('\'');
            }
            arrows.push(Arrow { name, dom: a.dom + no, cod: a.cod + no });
        }
        let mut identities = self.identities.clone();
        identities.extend(other.identities.iter().map(|&i| i + na));
        let mut comps = self.composites();
        comps.extend(other.composites().into_iter().map(|(f, g, h)| (f + na, g + na, h + na)));
        FinCat::new(objects, arrows, identities, &comps).unwrap()
    }
}

fn has_duplicates<'a>(names: impl Iterator<Item = &'a String>) -> bool {
    let mut seen = std::collections::HashSet::new();
    names.into_iter().any(|n| !seen.insert(n))
}

/// A finite monoid by multiplication table, `table[a][b] = a * b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monoid {
    pub elements: Vec<String>,
    pub identity: usize,
    pub table: Vec<Vec<usize>>,
}

impl Monoid {
    pub fn new(elements: Vec<String>, identity: usize, table: Vec<Vec<usize>>) -> Result<Monoid> {
        let n = elements.len();
        if identity >= n || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return input("monoid table has the wrong shape");
        }
        Ok(Monoid { elements, identity, table })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn is_valid(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| self.mul(self.identity, a) == a && self.mul(a, self.identity) == a)
            && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))))
    }

    pub fn is_group(&self) -> bool {
        (0..self.len()).all(|a| self.inverse(a).is_some())
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.len()).find(|&b| self.mul(a, b) == self.identity && self.mul(b, a) == self.identity)
    }

    /// `Z/n` under addition.
    pub fn cyclic(n: usize) -> Monoid {
        Monoid {
            elements: (0..n).map(|i| i.to_string()).collect(),
            identity: 0,
            table: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
        }
    }

    /// `{0..=cap}` under addition truncated at `cap`.
    pub fn saturating(cap: usize) -> Monoid {
        Monoid {
            elements: (0..=cap).map(|i| i.to_string()).collect(),
            identity: 0,
            table: (0..=cap).map(|a| (0..=cap).map(|b| (a + b).min(cap)).collect()).collect(),
        }
    }

    /// Permutations of three letters, `(p * q)(x) = p(q(x))`.
    pub fn symmetric3() -> Monoid {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|p| perms.iter().map(|q| idx([p[q[0]], p[q[1]], p[q[2]]])).collect())
            .collect();
        let elements = perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect();
        Monoid { elements, identity: 0, table }
    }

    /// One-object category with `g . f = f * g`.
    pub fn to_category(&self) -> FinCat {
        let arrows = self.elements.iter().map(|e| Arrow { name: e.clone(), dom: 0, cod: 0 }).collect();
        let n = self.len();
        let mut comps = Vec::with_capacity(n * n);
        for f in 0..n {
            for g in 0..n {
                comps.push((f, g, self.mul(f, g)));
            }
        }
        FinCat::new(vec!["*".into()], arrows, vec![self.identity], &comps).unwrap()
    }
}

/// Object and arrow maps between two finite categories.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Functor {
    pub objects: Vec<usize>,
    pub arrows: Vec<usize>,
}

impl Functor {
    pub fn identity(c: &FinCat) -> Functor {
        Functor { objects: (0..c.object_count()).collect(), arrows: (0..c.arrow_count()).collect() }
    }

    /// `self` after `first`.
    pub fn after(&self, first: &Functor) -> Functor {
        Functor {
            objects: first.objects.iter().map(|&o| self.objects[o]).collect(),
            arrows: first.arrows.iter().map(|&a| self.arrows[a]).collect(),
        }
    }

    /// Shape, endpoints, identities and composites all preserved.
    pub fn is_functor(&self, e: &FinCat, f: &FinCat) -> bool {
        if self.objects.len() != e.object_count() || self.arrows.len() != e.arrow_count() {
            return false;
        }
        if self.objects.iter().any(|&o| o >= f.object_count()) || self.arrows.iter().any(|&a| a >= f.arrow_count()) {
            return false;
        }
        for (a, &fa) in self.arrows.iter().enumerate() {
            if f.dom(fa) != self.objects[e.dom(a)] || f.cod(fa) != self.objects[e.cod(a)] {
                return false;
            }
        }
        if (0..e.object_count()).any(|o| self.arrows[e.identity(o)] != f.identity(self.objects[o])) {
            return false;
        }
        e.composites().into_iter().all(|(x, y, h)| f.compose(self.arrows[y], self.arrows[x]) == Some(self.arrows[h]))
    }

    /// Injective on arrows.
    pub fn is_faithful(&self) -> bool {
        let mut seen = self.arrows.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Bijective on objects and on arrows.
    pub fn is_bijective(&self, target: &FinCat) -> bool {
        let bij = |v: &[usize], n: usize| {
            let mut s = v.to_vec();
            s.sort_unstable();
            s == (0..n).collect::<Vec<_>>()
        };
        bij(&self.objects, target.object_count()) && bij(&self.arrows, target.arrow_count())
    }

    pub fn inverse(&self) -> Functor {
        let mut objects = vec![0; self.objects.len()];
        for (i, &o) in self.objects.iter().enumerate() {
            objects[o] = i;
        }
        let mut arrows = vec![0; self.arrows.len()];
        for (i, &a) in self.arrows.iter().enumerate() {
            arrows[a] = i;
        }
        Functor { objects, arrows }
    }
}

/// Every functor `e -> f`, found by backtracking over object maps and
/// arrow assignments; `limit` caps the number returned.
pub fn enumerate_functors(e: &FinCat, f: &FinCat, limit: usize) -> Vec<Functor> {
    let mut out = Vec::new();
    let no = e.object_count();
    let mut objects = vec![0; no];
    if no > 0 && f.object_count() == 0 {
        return out;
    }
    loop {
        let mut arrows = vec![usize::MAX; e.arrow_count()];
        for o in 0..no {
            arrows[e.identity(o)] = f.identity(objects[o]);
        }
        extend_arrows(e, f, &objects, &mut arrows, 0, &mut out, limit);
        if out.len() >= limit {
            out.truncate(limit);
            return out;
        }
        let mut i = no;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            objects[i] += 1;
            if objects[i] < f.object_count() {
                break;
            }
            objects[i] = 0;
        }
    }
}

fn extend_arrows(e: &FinCat, f: &FinCat, objects: &[usize], arrows: &mut Vec<usize>, next: usize, out: &mut Vec<Functor>, limit: usize) {
    if out.len() >= limit {
        return;
    }
    if next == arrows.len() {
        let cand = Functor { objects: objects.to_vec(), arrows: arrows.clone() };
        if cand.is_functor(e, f) {
            out.push(cand);
        }
        return;
    }
    if arrows[next] != usize::MAX {
        extend_arrows(e, f, objects, arrows, next + 1, out, limit);
        return;
    }
    let (d, c) = (objects[e.dom(next)], objects[e.cod(next)]);
    let candidates: Vec<usize> = f.hom(d, c).collect();
    for t in candidates {
        arrows[next] = t;
        // prune on composites whose three arrows are already assigned
        let consistent = e.composites().into_iter().all(|(x, y, h)| {
            let (ax, ay, ah) = (arrows[x], arrows[y], arrows[h]);
            ax == usize::MAX || ay == usize::MAX || ah == usize::MAX || f.compose(ay, ax) == Some(ah)
        });
        if consistent {
            extend_arrows(e, f, objects, arrows, next + 1, out, limit);
        }
    }
    arrows[next] = usize::MAX;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::arr2;

    #[test]
    fn arr2_shape() {
        let c = arr2();
        assert!(c.is_valid());
        assert_eq!(c.arrow_count(), 3);
        let f = c.arrow_index("f").unwrap();
        assert_eq!((c.objects()[c.dom(f)].as_str(), c.objects()[c.cod(f)].as_str()), ("S", "T"));
        assert!(!c.is_isomorphism(f));
        assert!(c.is_left_cancellable(f) && c.is_right_cancellable(f));
    }

    #[test]
    fn groups_are_valid_categories() {
        for m in [Monoid::cyclic(3), Monoid::symmetric3(), Monoid::saturating(4)] {
            assert!(m.is_valid());
            let c = m.to_category();
            assert!(c.is_valid(), "{:?}", c.violation());
        }
        assert!(Monoid::symmetric3().is_group());
        assert!(!Monoid::saturating(2).is_group());
    }

    #[test]
    fn monoid_composition_order() {
        // in S3, g . f is f * g
        let m = Monoid::symmetric3();
        let c = m.to_category();
        for f in 0..6 {
            for g in 0..6 {
                assert_eq!(c.compose(g, f), Some(m.mul(f, g)));
            }
        }
    }

    #[test]
    fn broken_associativity_detected() {
        // two-element "monoid" where the table is not associative
        let arrows = vec![
            Arrow { name: "e".into(), dom: 0, cod: 0 },
            Arrow { name: "a".into(), dom: 0, cod: 0 },
            Arrow { name: "b".into(), dom: 0, cod: 0 },
        ];
        let comps = [(1, 1, 2), (2, 2, 1), (1, 2, 1), (2, 1, 2)];
        let c = FinCat::new(vec!["*".into()], arrows, vec![0], &comps).unwrap();
        assert!(c.violation().unwrap().contains("associativity"));
    }

    #[test]
    fn functor_enumeration() {
        let c3 = Monoid::cyclic(3).to_category();
        // endomorphisms of Z/3
        assert_eq!(enumerate_functors(&c3, &c3, usize::MAX).len(), 3);
        // functors from the arrow category into a chain of three: pairs i <= j
        assert_eq!(enumerate_functors(&arr2(), &FinCat::chain(3), usize::MAX).len(), 6);
        assert!(enumerate_functors(&arr2(), &FinCat::discrete(0), 10).is_empty());
    }

    #[test]
    fn disjoint_union_is_category() {
        let u = arr2().disjoint_union(&Monoid::cyclic(2).to_category());
        assert!(u.is_valid());
        assert_eq!(u.object_count(), 3);
        assert_eq!(u.arrow_count(), 5);
    }
}
