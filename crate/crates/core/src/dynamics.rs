//! Nondeterministic dynamics: functors from a finite category into sets and
//! transitions.

use std::collections::{BTreeSet, HashMap};

use crate::error::{domain, input, invalid, Result};
use crate::fincat::FinCat;

/// Transition from `0..rows.len()` to `0..cols`: each source state goes to a
/// set of target states.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rel {
    rows: Vec<BTreeSet<usize>>,
    cols: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct RelKind {
    pub quasi_deterministic: bool,
    pub complete: bool,
    pub deterministic: bool,
    pub reversible: bool,
}

impl Rel {
    pub fn new(rows: Vec<BTreeSet<usize>>, cols: usize) -> Result<Rel> {
        if rows.iter().flatten().any(|&t| t >= cols) {
            return input(format!("transition target out of range for {cols} states"));
        }
        Ok(Rel { rows, cols })
    }

    pub fn identity(n: usize) -> Rel {
        Rel { rows: (0..n).map(|i| BTreeSet::from([i])).collect(), cols: n }
    }

    pub fn empty(n: usize, m: usize) -> Rel {
        Rel { rows: vec![BTreeSet::new(); n], cols: m }
    }

    /// Deterministic transition from a total function.
    pub fn function(f: &[usize], cols: usize) -> Rel {
        Rel { rows: f.iter().map(|&t| BTreeSet::from([t])).collect(), cols }
    }

    pub fn sources(&self) -> usize {
        self.rows.len()
    }

    pub fn targets(&self) -> usize {
        self.cols
    }

    pub fn image(&self, s: usize) -> &BTreeSet<usize> {
        &self.rows[s]
    }

    pub fn rows(&self) -> &[BTreeSet<usize>] {
        &self.rows
    }

    /// Union of the images of `set`.
    pub fn image_of<'a>(&self, set: impl IntoIterator<Item = &'a usize>) -> BTreeSet<usize> {
        set.into_iter().flat_map(|&s| self.rows[s].iter().copied()).collect()
    }

    /// `self` after `first`: `a -> union of self(b) for b in first(a)`.
    pub fn after(&self, first: &Rel) -> Rel {
        Rel { rows: first.rows.iter().map(|r| self.image_of(r)).collect(), cols: self.cols }
    }

    pub fn is_subrel(&self, other: &Rel) -> bool {
        self.rows.len() == other.rows.len() && self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }

    pub fn inverse(&self) -> Rel {
        let mut rows = vec![BTreeSet::new(); self.cols];
        for (s, r) in self.rows.iter().enumerate() {
            for &t in r {
                rows[t].insert(s);
            }
        }
        Rel { rows, cols: self.rows.len() }
    }

    pub fn kind(&self) -> RelKind {
        let qd = self.rows.iter().all(|r| r.len() <= 1);
        let complete = self.rows.iter().all(|r| !r.is_empty());
        let deterministic = qd && complete;
        let reversible = deterministic && self.cols == self.rows.len() && {
            let hit: BTreeSet<usize> = self.rows.iter().flatten().copied().collect();
            hit.len() == self.cols
        };
        RelKind { quasi_deterministic: qd, complete, deterministic, reversible }
    }

    /// The unique target of `s` when it has exactly one.
    pub fn value(&self, s: usize) -> Option<usize> {
        let r = &self.rows[s];
        (r.len() == 1).then(|| *r.iter().next().unwrap())
    }
}

/// Category, named states (global ids), state lists per object and one
/// transition per arrow, in local indices of the endpoint state lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dynamics {
    cat: FinCat,
    names: Vec<String>,
    states: Vec<Vec<usize>>,
    trans: Vec<Rel>,
}

impl Dynamics {
    pub fn new(cat: FinCat, names: Vec<String>, states: Vec<Vec<usize>>, trans: Vec<Rel>) -> Result<Dynamics> {
        if states.len() != cat.object_count() || trans.len() != cat.arrow_count() {
            return input("one state list per object and one transition per arrow are required");
        }
        let mut seen = std::collections::HashSet::new();
        if names.iter().any(|n| !seen.insert(n)) {
            return input("state names must be unique");
        }
        for list in &states {
            if list.iter().any(|&s| s >= names.len()) {
                return input("state id out of range");
            }
            let set: BTreeSet<_> = list.iter().collect();
            if set.len() != list.len() {
                return input("a state is listed twice for the same object");
            }
        }
        for (f, t) in trans.iter().enumerate() {
            if t.sources() != states[cat.dom(f)].len() || t.targets() != states[cat.cod(f)].len() {
                return input(format!("transition of {} has the wrong shape", cat.arrows()[f].name));
            }
        }
        Ok(Dynamics { cat, names, states, trans })
    }

    pub fn category(&self) -> &FinCat {
        &self.cat
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn states(&self, o: usize) -> &[usize] {
        &self.states[o]
    }

    pub fn state_lists(&self) -> &[Vec<usize>] {
        &self.states
    }

    pub fn transition(&self, f: usize) -> &Rel {
        &self.trans[f]
    }

    pub fn transitions(&self) -> &[Rel] {
        &self.trans
    }

    pub fn state_count(&self) -> usize {
        self.names.len()
    }

    pub fn local(&self, o: usize, state: usize) -> Option<usize> {
        self.states[o].iter().position(|&s| s == state)
    }

    /// Description of the first broken functor law, if any.
    pub fn violation(&self) -> Option<String> {
        if let Some(v) = self.cat.violation() {
            return Some(format!("not a category: {v}"));
        }
        for o in 0..self.cat.object_count() {
            if self.trans[self.cat.identity(o)] != Rel::identity(self.states[o].len()) {
                return Some(format!("identity of {} does not act as the identity", self.cat.objects()[o]));
            }
        }
        for (f, g, h) in self.cat.composites() {
            if self.trans[g].after(&self.trans[f]) != self.trans[h] {
                let a = self.cat.arrows();
                return Some(format!("transition of {} differs from that of {} after {}", a[h].name, a[g].name, a[f].name));
            }
        }
        None
    }

    pub fn is_valid(&self) -> bool {
        self.violation().is_none()
    }

    pub fn require_valid(&self) -> Result<()> {
        match self.violation() {
            Some(v) => invalid(v),
            None => Ok(()),
        }
    }

    /// No state belongs to two objects.
    pub fn is_proper(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.states.iter().flatten().all(|&s| seen.insert(s))
    }

    pub fn require_proper(&self) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            domain("dynamics is not proper: a state belongs to two objects")
        }
    }

    /// Object of each listed state (first one when improper).
    pub fn owner(&self) -> HashMap<usize, usize> {
        let mut m = HashMap::new();
        for (o, list) in self.states.iter().enumerate() {
            for &s in list {
                m.entry(s).or_insert(o);
            }
        }
        m
    }

    /// Every transition deterministic.
    pub fn is_deterministic(&self) -> bool {
        self.trans.iter().all(|t| t.kind().deterministic)
    }

    /// Global images of a global state under arrow `f`.
    pub fn step(&self, f: usize, state: usize) -> BTreeSet<usize> {
        let (d, c) = (self.cat.dom(f), self.cat.cod(f));
        match self.local(d, state) {
            Some(i) => self.trans[f].image(i).iter().map(|&j| self.states[c][j]).collect(),
            None => BTreeSet::new(),
        }
    }

    /// Pairs `(a, b)` with `b` reachable from `a` along some arrow.
    pub fn preorder(&self) -> Result<BTreeSet<(usize, usize)>> {
        self.require_proper()?;
        let mut rel = BTreeSet::new();
        for f in 0..self.cat.arrow_count() {
            for &a in &self.states[self.cat.dom(f)] {
                for b in self.step(f, a) {
                    rel.insert((a, b));
                }
            }
        }
        Ok(rel)
    }

    /// States reachable from `state` along one arrow out of any object listing it.
    pub fn orbit(&self, state: usize) -> BTreeSet<usize> {
        (0..self.cat.arrow_count()).flat_map(|f| self.step(f, state)).collect()
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// One state per object, every arrow acting as the identity of that state.
pub fn zeta(cat: &FinCat) -> Dynamics {
    let names = cat.objects().to_vec();
    let states = (0..cat.object_count()).map(|o| vec![o]).collect();
    let trans = (0..cat.arrow_count()).map(|_| Rel::identity(1)).collect();
    Dynamics { cat: cat.clone(), names, states, trans }
}

/// States of `T` are the arrows into `T`; `f` sends `a` to `f . a`.
pub fn xi(cat: &FinCat) -> Dynamics {
    let names = cat.arrows().iter().map(|a| a.name.clone()).collect();
    let states: Vec<Vec<usize>> = (0..cat.object_count()).map(|o| cat.into(o).collect()).collect();
    let trans = (0..cat.arrow_count())
        .map(|f| {
            let (d, c) = (cat.dom(f), cat.cod(f));
            let map: Vec<usize> = states[d]
                .iter()
                .map(|&a| {
                    let fa = cat.compose(f, a).expect("composable");
                    states[c].iter().position(|&s| s == fa).unwrap()
                })
                .collect();
            Rel::function(&map, states[c].len())
        })
        .collect();
    Dynamics { cat: cat.clone(), names, states, trans }
}
