//! Morphisms of dynamics: a functor between the categories together with a
//! transition per object into the image object's states.

use serde::Serialize;

use crate::dynamics::{xi, Dynamics, Rel};
use crate::error::{domain, input, Result};
use crate::fincat::{FinCat, Functor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dynamorphism {
    pub functor: Functor,
    /// `delta[S]` goes from the states of `S` to the states of `functor(S)`.
    pub delta: Vec<Rel>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DynamorphismReport {
    pub valid: bool,
    pub complete: bool,
    pub quasi_deterministic: bool,
    pub deterministic: bool,
    pub faithful: bool,
}

fn check_shape(alpha: &Dynamics, beta: &Dynamics, d: &Dynamorphism) -> Result<()> {
    let (e, f) = (alpha.category(), beta.category());
    if d.functor.objects.len() != e.object_count()
        || d.functor.arrows.len() != e.arrow_count()
        || d.functor.objects.iter().any(|&o| o >= f.object_count())
        || d.functor.arrows.iter().any(|&a| a >= f.arrow_count())
    {
        return input("functor has the wrong shape");
    }
    if d.delta.len() != e.object_count() {
        return input("one state transition per object is required");
    }
    for (s, t) in d.delta.iter().enumerate() {
        if t.sources() != alpha.states(s).len() || t.targets() != beta.states(d.functor.objects[s]).len() {
            return input(format!("state transition at {} has the wrong shape", e.objects()[s]));
        }
    }
    Ok(())
}

/// `delta_T . e^alpha` inside `(F e)^beta . delta_S` for every arrow `e: S -> T`.
pub fn check(alpha: &Dynamics, beta: &Dynamics, d: &Dynamorphism) -> Result<DynamorphismReport> {
    check_shape(alpha, beta, d)?;
    let e = alpha.category();
    let is_functor = d.functor.is_functor(e, beta.category());
    let valid = is_functor
        && (0..e.arrow_count()).all(|a| {
            let lhs = d.delta[e.cod(a)].after(alpha.transition(a));
            let rhs = beta.transition(d.functor.arrows[a]).after(&d.delta[e.dom(a)]);
            lhs.is_subrel(&rhs)
        });
    let kinds: Vec<_> = d.delta.iter().map(|t| t.kind()).collect();
    Ok(DynamorphismReport {
        valid,
        complete: kinds.iter().all(|k| k.complete),
        quasi_deterministic: kinds.iter().all(|k| k.quasi_deterministic),
        deterministic: kinds.iter().all(|k| k.deterministic),
        faithful: d.functor.is_faithful(),
    })
}

impl Dynamorphism {
    pub fn identity(alpha: &Dynamics) -> Dynamorphism {
        Dynamorphism {
            functor: Functor::identity(alpha.category()),
            delta: alpha.state_lists().iter().map(|l| Rel::identity(l.len())).collect(),
        }
    }

    /// `self` after `first`.
    pub fn after(&self, first: &Dynamorphism) -> Dynamorphism {
        let delta = first
            .delta
            .iter()
            .enumerate()
            .map(|(s, t)| self.delta[first.functor.objects[s]].after(t))
            .collect();
        Dynamorphism { functor: self.functor.after(&first.functor), delta }
    }
}

fn require_functor(e: &FinCat, f: &FinCat, functor: &Functor) -> Result<()> {
    if functor.is_functor(e, f) {
        Ok(())
    } else {
        domain("maps do not form a functor")
    }
}

/// `S -> F S` on the single states.
pub fn zeta_on_functor(e: &FinCat, f: &FinCat, functor: &Functor) -> Result<Dynamorphism> {
    require_functor(e, f, functor)?;
    Ok(Dynamorphism { functor: functor.clone(), delta: (0..e.object_count()).map(|_| Rel::identity(1)).collect() })
}

/// `a -> F a` on arrows into each object.
pub fn xi_on_functor(e: &FinCat, f: &FinCat, functor: &Functor) -> Result<Dynamorphism> {
    require_functor(e, f, functor)?;
    let target = xi(f);
    let delta = (0..e.object_count())
        .map(|s| {
            let fs = functor.objects[s];
            let map: Vec<usize> = e
                .into(s)
                .map(|a| target.local(fs, functor.arrows[a]).expect("image arrow ends at the image object"))
                .collect();
            Rel::function(&map, target.states(fs).len())
        })
        .collect();
    Ok(Dynamorphism { functor: functor.clone(), delta })
}

/// From arrows into `S` to the single state of `S`.
pub fn canonical_z(e: &FinCat) -> Dynamorphism {
    let delta = (0..e.object_count()).map(|s| Rel::function(&vec![0; e.into(s).count()], 1)).collect();
    Dynamorphism { functor: Functor::identity(e), delta }
}

/// Both routes around the square built from `canonical_z` and a functor agree.
pub fn canonical_z_natural(e: &FinCat, f: &FinCat, functor: &Functor) -> Result<bool> {
    let left = canonical_z(f).after(&xi_on_functor(e, f, functor)?);
    let right = zeta_on_functor(e, f, functor)?.after(&canonical_z(e));
    Ok(left == right)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SolutionReport {
    pub solution: bool,
    pub complete: bool,
}

/// A solution is a quasi-deterministic dynamorphism out of a deterministic
/// proper dynamics.
pub fn solution_check(sigma: &Dynamorphism, tau: &Dynamics, alpha: &Dynamics) -> Result<SolutionReport> {
    if !tau.is_deterministic() || !tau.is_proper() {
        return domain("source dynamics must be deterministic and proper");
    }
    let r = check(tau, alpha, sigma)?;
    let solution = r.valid && r.quasi_deterministic;
    if solution {
        debug_assert!(undefined_stays_undefined(sigma, tau));
    }
    Ok(SolutionReport { solution, complete: r.complete })
}

/// Once a solution is undefined at a state it stays undefined along every arrow.
pub fn undefined_stays_undefined(sigma: &Dynamorphism, tau: &Dynamics) -> bool {
    let c = tau.category();
    (0..c.arrow_count()).all(|e| {
        let (s, t) = (c.dom(e), c.cod(e));
        (0..tau.states(s).len()).all(|i| {
            !sigma.delta[s].image(i).is_empty() || sigma.delta[t].image_of(tau.transition(e).image(i)).is_empty()
        })
    })
}

/// The solution with nothing defined.
pub fn empty_solution(tau: &Dynamics, alpha: &Dynamics, functor: Functor) -> Dynamorphism {
    let delta = (0..tau.category().object_count())
        .map(|s| Rel::empty(tau.states(s).len(), alpha.states(functor.objects[s]).len()))
        .collect();
    Dynamorphism { functor, delta }
}
