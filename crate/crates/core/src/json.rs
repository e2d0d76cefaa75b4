//! JSON schemas for every input and output type, with conversions.
//!
//! Subsets are lists of point indices. Categories, states and arrows are
//! referred to by name. A document of the form `{"ok": .., "result": ..}`
//! is accepted wherever its `result` would be.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::device::SeparationDevice;
use crate::dynamics::{Dynamics, Rel};
use crate::dynamorphism::Dynamorphism;
use crate::error::{input, Error, Result};
use crate::fincat::{Arrow, FinCat, Functor, Monoid};
use crate::foliation::Foliation;
use crate::representation::{RepMorphism, Representation};
use crate::space::Space;
use crate::subset::{self, Family, Subset};

/// Strips a report envelope, if present.
pub fn unwrap_report(v: Value) -> Value {
    match v {
        Value::Object(mut m) if m.contains_key("ok") && m.contains_key("result") => m.remove("result").unwrap(),
        v => v,
    }
}

pub fn from_value<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T> {
    serde_json::from_value(unwrap_report(v)).map_err(|e| Error::Input(e.to_string()))
}

pub fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub points: usize,
    #[serde(default)]
    pub connected: Vec<Vec<usize>>,
    #[serde(default)]
    pub integral: bool,
    /// Close the listed parts into the smallest structure containing them.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub generate: bool,
}

impl SpaceJson {
    /// Listed members plus the empty set, plus singletons when integral.
    pub fn family(&self) -> Result<Family> {
        subset::check_points(self.points)?;
        let mut fam = Family::new();
        fam.insert(0);
        for l in &self.connected {
            fam.insert(subset::from_indices(self.points, l)?);
        }
        if self.integral {
            fam.extend((0..self.points).map(subset::singleton));
        }
        Ok(fam)
    }

    pub fn to_space(&self) -> Result<Space> {
        if self.generate {
            return crate::space::generate(self.points, &self.family()?, false);
        }
        Space::new(self.points, self.family()?)
    }

    pub fn from_space(s: &Space) -> SpaceJson {
        SpaceJson {
            points: s.points(),
            connected: subset::canonical(s.connected()).into_iter().filter(|l| !l.is_empty()).collect(),
            integral: s.is_integral(),
            generate: false,
        }
    }
}

pub fn space_value(s: &Space) -> Value {
    to_value(&SpaceJson::from_space(s))
}

pub fn family_value(fam: &Family) -> Value {
    to_value(&subset::canonical(fam))
}

pub fn subsets_value(sets: &[Subset]) -> Value {
    to_value(&sets.iter().map(|&s| subset::to_vec(s)).collect::<Vec<_>>())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FoliationJson {
    pub points: usize,
    #[serde(default)]
    pub internal: Vec<Vec<usize>>,
    #[serde(default)]
    pub external: Vec<Vec<usize>>,
}

impl FoliationJson {
    pub fn to_foliation(&self) -> Result<Foliation> {
        Foliation::from_lists(self.points, &self.internal, &self.external)
    }

    pub fn from_foliation(z: &Foliation) -> FoliationJson {
        let lists = |s: &Space| subset::canonical(s.connected()).into_iter().filter(|l| !l.is_empty()).collect();
        FoliationJson { points: z.points(), internal: lists(z.internal()), external: lists(z.external()) }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub object: SpaceJson,
    pub ambient: SpaceJson,
    pub map: Vec<Vec<usize>>,
}

impl RepresentationJson {
    pub fn to_representation(&self) -> Result<Representation> {
        Representation::from_lists(self.object.to_space()?, self.ambient.to_space()?, &self.map)
    }

    pub fn from_representation(r: &Representation) -> RepresentationJson {
        RepresentationJson {
            object: SpaceJson::from_space(r.object()),
            ambient: SpaceJson::from_space(r.ambient()),
            map: r.map_lists(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepMorphismJson {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl From<&RepMorphism> for RepMorphismJson {
    fn from(m: &RepMorphism) -> Self {
        RepMorphismJson { alpha: m.alpha.clone(), beta: m.beta.clone() }
    }
}

impl From<RepMorphismJson> for RepMorphism {
    fn from(m: RepMorphismJson) -> Self {
        RepMorphism { alpha: m.alpha, beta: m.beta }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeviceJson {
    pub points: usize,
    pub pairs: Vec<(Vec<usize>, Vec<usize>)>,
}

impl DeviceJson {
    pub fn to_device(&self) -> Result<SeparationDevice> {
        SeparationDevice::new(self.points, &self.pairs)
    }

    pub fn from_device(d: &SeparationDevice) -> DeviceJson {
        DeviceJson {
            points: d.points(),
            pairs: d.pairs().iter().map(|&(s, t)| (subset::to_vec(s), subset::to_vec(t))).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrowJson {
    pub id: String,
    pub dom: String,
    pub cod: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CategoryJson {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowJson>,
    pub identities: BTreeMap<String, String>,
    /// `[f, g, h]` means `g . f = h`.
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonoidJson {
    pub elements: Vec<String>,
    pub identity: String,
    /// `table[a][b]` names `a * b`.
    pub table: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PreorderJson {
    pub elements: Vec<String>,
    /// Pairs `[a, b]` meaning `a <= b`; closed reflexively and transitively.
    pub relation: Vec<[String; 2]>,
}

/// Any of the three ways of describing a finite category.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CategoryInput {
    Full(CategoryJson),
    Monoid(MonoidJson),
    Preorder(PreorderJson),
}

fn lookup(names: &[String], name: &str, what: &str) -> Result<usize> {
    names.iter().position(|n| n == name).ok_or_else(|| Error::Input(format!("unknown {what} {name:?}")))
}

impl MonoidJson {
    pub fn to_monoid(&self) -> Result<Monoid> {
        let e = &self.elements;
        let table = self
            .table
            .iter()
            .map(|row| row.iter().map(|x| lookup(e, x, "element")).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Monoid::new(e.clone(), lookup(e, &self.identity, "element")?, table)
    }
}

impl CategoryInput {
    pub fn to_category(&self) -> Result<FinCat> {
        match self {
            CategoryInput::Full(c) => {
                let mut arrows = Vec::new();
                let mut names = Vec::new();
                for a in &c.arrows {
                    arrows.push(Arrow {
                        name: a.id.clone(),
                        dom: lookup(&c.objects, &a.dom, "object")?,
                        cod: lookup(&c.objects, &a.cod, "object")?,
                    });
                    names.push(a.id.clone());
                }
                let identities = c
                    .objects
                    .iter()
                    .map(|o| match c.identities.get(o) {
                        Some(a) => lookup(&names, a, "arrow"),
                        None => input(format!("object {o:?} has no identity")),
                    })
                    .collect::<Result<Vec<_>>>()?;
                let comps = c
                    .compose
                    .iter()
                    .map(|[f, g, h]| Ok((lookup(&names, f, "arrow")?, lookup(&names, g, "arrow")?, lookup(&names, h, "arrow")?)))
                    .collect::<Result<Vec<_>>>()?;
                FinCat::new(c.objects.clone(), arrows, identities, &comps)
            }
            CategoryInput::Monoid(m) => Ok(m.to_monoid()?.to_category()),
            CategoryInput::Preorder(p) => {
                let rel = p
                    .relation
                    .iter()
                    .map(|[a, b]| Ok((lookup(&p.elements, a, "element")?, lookup(&p.elements, b, "element")?)))
                    .collect::<Result<Vec<_>>>()?;
                let refs: Vec<&str> = p.elements.iter().map(|s| s.as_str()).collect();
                let names = p.elements.clone();
                FinCat::preorder(&refs, &rel, |a, b| {
                    if a == b {
                        format!("id_{}", names[a])
                    } else {
                        format!("{}<={}", names[a], names[b])
                    }
                })
            }
        }
    }
}

impl CategoryJson {
    /// Full form; composites involving an identity are left implicit.
    pub fn from_category(c: &FinCat) -> CategoryJson {
        let name = |f: usize| c.arrows()[f].name.clone();
        CategoryJson {
            objects: c.objects().to_vec(),
            arrows: c
                .arrows()
                .iter()
                .map(|a| ArrowJson { id: a.name.clone(), dom: c.objects()[a.dom].clone(), cod: c.objects()[a.cod].clone() })
                .collect(),
            identities: (0..c.object_count()).map(|o| (c.objects()[o].clone(), name(c.identity(o)))).collect(),
            compose: c
                .composites()
                .into_iter()
                .filter(|&(f, g, _)| !c.is_identity(f) && !c.is_identity(g))
                .map(|(f, g, h)| [name(f), name(g), name(h)])
                .collect(),
        }
    }
}

pub fn category_value(c: &FinCat) -> Value {
    to_value(&CategoryJson::from_category(c))
}

/// Inline category or a path to a category file.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CategoryRef {
    Path(String),
    Inline(CategoryInput),
}

impl CategoryRef {
    pub fn resolve(&self, base: &Path) -> Result<FinCat> {
        match self {
            CategoryRef::Inline(c) => c.to_category(),
            CategoryRef::Path(p) => {
                let path: PathBuf = if Path::new(p).is_absolute() { p.into() } else { base.join(p) };
                let text = std::fs::read_to_string(&path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
                let v: Value = serde_json::from_str(&text).map_err(|e| Error::Input(e.to_string()))?;
                from_value::<CategoryInput>(v)?.to_category()
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DynamicsJson {
    pub category: CategoryRef,
    #[serde(default)]
    pub states: BTreeMap<String, Vec<String>>,
    /// Arrow name to state name to target state names. Omitted identity
    /// arrows act as identities; other omitted entries are empty.
    #[serde(default)]
    pub transitions: BTreeMap<String, BTreeMap<String, Vec<String>>>,
}

impl DynamicsJson {
    pub fn to_dynamics(&self, base: &Path) -> Result<Dynamics> {
        let cat = self.category.resolve(base)?;
        for o in self.states.keys() {
            if cat.object_index(o).is_none() {
                return input(format!("states given for unknown object {o:?}"));
            }
        }
        let mut names: Vec<String> = Vec::new();
        let mut states = Vec::new();
        for o in cat.objects() {
            let list = self.states.get(o).cloned().unwrap_or_default();
            let ids = list
                .iter()
                .map(|s| match names.iter().position(|n| n == s) {
                    Some(i) => i,
                    None => {
                        names.push(s.clone());
                        names.len() - 1
                    }
                })
                .collect::<Vec<_>>();
            states.push(ids);
        }
        for a in self.transitions.keys() {
            if cat.arrow_index(a).is_none() {
                return input(format!("transition given for unknown arrow {a:?}"));
            }
        }
        let mut trans = Vec::new();
        for (f, arrow) in cat.arrows().iter().enumerate() {
            let (src, dst) = (&states[arrow.dom], &states[arrow.cod]);
            let rel = match self.transitions.get(&arrow.name) {
                None if cat.is_identity(f) => Rel::identity(src.len()),
                None => Rel::empty(src.len(), dst.len()),
                Some(entries) => {
                    let mut rows = vec![BTreeSet::new(); src.len()];
                    for (s, targets) in entries {
                        let i = local_index(&names, src, s, &arrow.name)?;
                        for t in targets {
                            rows[i].insert(local_index(&names, dst, t, &arrow.name)?);
                        }
                    }
                    Rel::new(rows, dst.len())?
                }
            };
            trans.push(rel);
        }
        Dynamics::new(cat, names, states, trans)
    }

    pub fn from_dynamics(d: &Dynamics) -> DynamicsJson {
        let c = d.category();
        let name = |s: usize| d.names()[s].clone();
        let states = (0..c.object_count()).map(|o| (c.objects()[o].clone(), d.states(o).iter().map(|&s| name(s)).collect())).collect();
        let transitions = (0..c.arrow_count())
            .map(|f| {
                let (src, dst) = (d.states(c.dom(f)), d.states(c.cod(f)));
                let entries = (0..src.len())
                    .map(|i| (name(src[i]), d.transition(f).image(i).iter().map(|&j| name(dst[j])).collect()))
                    .collect();
                (c.arrows()[f].name.clone(), entries)
            })
            .collect();
        DynamicsJson { category: CategoryRef::Inline(CategoryInput::Full(CategoryJson::from_category(c))), states, transitions }
    }
}

fn local_index(names: &[String], list: &[usize], state: &str, arrow: &str) -> Result<usize> {
    list.iter()
        .position(|&s| names[s] == state)
        .ok_or_else(|| Error::Input(format!("state {state:?} is not at the right end of arrow {arrow:?}")))
}

pub fn dynamics_value(d: &Dynamics) -> Value {
    to_value(&DynamicsJson::from_dynamics(d))
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct FunctorJson {
    #[serde(default)]
    pub objects: BTreeMap<String, String>,
    /// Identity arrows may be omitted.
    #[serde(default)]
    pub arrows: BTreeMap<String, String>,
}

impl FunctorJson {
    pub fn to_functor(&self, e: &FinCat, f: &FinCat) -> Result<Functor> {
        let objects = e
            .objects()
            .iter()
            .map(|o| match self.objects.get(o) {
                Some(t) => lookup(f.objects(), t, "object"),
                None => lookup(f.objects(), o, "object"),
            })
            .collect::<Result<Vec<_>>>()?;
        let names: Vec<String> = f.arrows().iter().map(|a| a.name.clone()).collect();
        let arrows = (0..e.arrow_count())
            .map(|a| {
                let an = &e.arrows()[a].name;
                match self.arrows.get(an) {
                    Some(t) => lookup(&names, t, "arrow"),
                    None if e.is_identity(a) => Ok(f.identity(objects[e.dom(a)])),
                    None => lookup(&names, an, "arrow"),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Functor { objects, arrows })
    }

    pub fn from_functor(func: &Functor, e: &FinCat, f: &FinCat) -> FunctorJson {
        FunctorJson {
            objects: (0..e.object_count()).map(|o| (e.objects()[o].clone(), f.objects()[func.objects[o]].clone())).collect(),
            arrows: (0..e.arrow_count()).map(|a| (e.arrows()[a].name.clone(), f.arrows()[func.arrows[a]].name.clone())).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DynamorphismJson {
    /// Omitted: objects and arrows mapped to those of the same name.
    #[serde(default)]
    pub functor: Option<FunctorJson>,
    /// Object to source state to target states; omitted entries are empty.
    #[serde(default)]
    pub delta: BTreeMap<String, BTreeMap<String, Vec<String>>>,
}

impl DynamorphismJson {
    pub fn to_dynamorphism(&self, alpha: &Dynamics, beta: &Dynamics) -> Result<Dynamorphism> {
        let (e, f) = (alpha.category(), beta.category());
        let functor = self.functor.clone().unwrap_or_default().to_functor(e, f)?;
        for o in self.delta.keys() {
            if e.object_index(o).is_none() {
                return input(format!("delta given for unknown object {o:?}"));
            }
        }
        let delta = (0..e.object_count())
            .map(|s| {
                let (src, dst) = (alpha.states(s), beta.states(functor.objects[s]));
                let mut rows = vec![BTreeSet::new(); src.len()];
                if let Some(entries) = self.delta.get(&e.objects()[s]) {
                    for (a, targets) in entries {
                        let i = local_index(alpha.names(), src, a, &e.objects()[s])?;
                        for t in targets {
                            rows[i].insert(local_index(beta.names(), dst, t, &e.objects()[s])?);
                        }
                    }
                }
                Rel::new(rows, dst.len())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Dynamorphism { functor, delta })
    }

    pub fn from_dynamorphism(d: &Dynamorphism, alpha: &Dynamics, beta: &Dynamics) -> DynamorphismJson {
        let (e, f) = (alpha.category(), beta.category());
        let delta = (0..e.object_count())
            .map(|s| {
                let (src, dst) = (alpha.states(s), beta.states(d.functor.objects[s]));
                let entries = (0..src.len())
                    .map(|i| {
                        let targets = d.delta[s].image(i).iter().map(|&j| beta.names()[dst[j]].clone()).collect();
                        (alpha.names()[src[i]].clone(), targets)
                    })
                    .collect();
                (e.objects()[s].clone(), entries)
            })
            .collect();
        DynamorphismJson { functor: Some(FunctorJson::from_functor(&d.functor, e, f)), delta }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConnCatJson {
    #[serde(flatten)]
    pub category: CategoryInput,
    /// Sets of arrow names.
    #[serde(default)]
    pub arrow_connected: Vec<Vec<String>>,
    #[serde(default)]
    pub integral: bool,
}

/// Arrow-name lists as masks; the empty set and, when asked, the singletons
/// are included.
pub fn arrow_family(cat: &FinCat, lists: &[Vec<String>], integral: bool) -> Result<Family> {
    subset::check_points(cat.arrow_count())?;
    let names: Vec<String> = cat.arrows().iter().map(|a| a.name.clone()).collect();
    named_family(&names, lists, integral)
}

fn named_family(names: &[String], lists: &[Vec<String>], integral: bool) -> Result<Family> {
    let mut fam = Family::new();
    fam.insert(0);
    for l in lists {
        let mut m = 0;
        for x in l {
            m |= subset::singleton(lookup(names, x, "name")?);
        }
        fam.insert(m);
    }
    if integral {
        fam.extend((0..names.len()).map(subset::singleton));
    }
    Ok(fam)
}

pub fn named_lists(names: &[String], fam: &Family) -> Vec<Vec<String>> {
    subset::canonical(fam)
        .into_iter()
        .filter(|l| !l.is_empty())
        .map(|l| l.into_iter().map(|i| names[i].clone()).collect())
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConnDynamicsJson {
    #[serde(flatten)]
    pub dynamics: DynamicsJson,
    #[serde(default)]
    pub arrow_connected: Vec<Vec<String>>,
    #[serde(default)]
    pub arrows_integral: bool,
    #[serde(default)]
    pub state_connected: Vec<Vec<String>>,
    #[serde(default)]
    pub states_integral: bool,
    /// Also require the arrow structure to be stable under composition.
    #[serde(default)]
    pub categorical: bool,
    /// Close both listed families into structures.
    #[serde(default)]
    pub generate: bool,
}

impl ConnDynamicsJson {
    pub fn to_conn_dynamics(&self, base: &Path) -> Result<crate::conndyn::ConnDynamics> {
        let d = self.dynamics.to_dynamics(base)?;
        subset::check_points(d.state_count())?;
        let close = |n: usize, fam: Family| if self.generate { crate::space::generate(n, &fam, false) } else { Space::new(n, fam) };
        let arrows = close(d.category().arrow_count(), arrow_family(d.category(), &self.arrow_connected, self.arrows_integral)?)?;
        let states = close(d.state_count(), named_family(d.names(), &self.state_connected, self.states_integral)?)?;
        crate::conndyn::ConnDynamics::new(d, arrows, states, self.categorical)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonoidCheckJson {
    #[serde(flatten)]
    pub monoid: MonoidJson,
    /// Sets of element names.
    #[serde(default)]
    pub connected: Vec<Vec<String>>,
    #[serde(default)]
    pub integral: bool,
}

impl MonoidCheckJson {
    pub fn parse(&self) -> Result<(Monoid, Family)> {
        let m = self.monoid.to_monoid()?;
        subset::check_points(m.len())?;
        let fam = named_family(&m.elements, &self.connected, self.integral)?;
        Ok((m, fam))
    }
}
