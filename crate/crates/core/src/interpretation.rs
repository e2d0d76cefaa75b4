//! Interpretations between dynamics over the same category (incoming and
//! outgoing), and across categories.

use serde::Serialize;

use crate::dynamics::{Dynamics, Rel};
use crate::dynamorphism::{check, Dynamorphism};
use crate::error::{domain, Result};
use crate::fincat::Functor;

fn require_same_category(a: &Dynamics, b: &Dynamics, d: &Dynamorphism) -> Result<()> {
    if a.category() != b.category() || d.functor != Functor::identity(a.category()) {
        return domain("both dynamics must share the category and the functor must be the identity");
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InterpInReport {
    pub dynamorphism: bool,
    /// Observed transitions are exactly the images of the underlying ones.
    pub entrante: bool,
    /// Pointwise equality `psi_T . f = f . psi_S` with every `psi_S` onto.
    pub surjective_commuting: bool,
}

/// Incoming interpretation check for a quasi-deterministic `psi: alpha -> beta`.
pub fn interp_in_check(alpha: &Dynamics, beta: &Dynamics, psi: &Dynamorphism) -> Result<InterpInReport> {
    require_same_category(alpha, beta, psi)?;
    let r = check(alpha, beta, psi)?;
    if !r.quasi_deterministic {
        return domain("incoming interpretation must be quasi-deterministic");
    }
    let c = alpha.category();
    let entrante = r.valid
        && (0..c.arrow_count()).all(|f| {
            let (s, t) = (c.dom(f), c.cod(f));
            psi.delta[t].after(alpha.transition(f)).after(&psi.delta[s].inverse()) == *beta.transition(f)
        });
    let onto = psi.delta.iter().all(|d| d.inverse().rows().iter().all(|r| !r.is_empty()));
    let pointwise = (0..c.arrow_count()).all(|f| {
        let (s, t) = (c.dom(f), c.cod(f));
        psi.delta[t].after(alpha.transition(f)) == beta.transition(f).after(&psi.delta[s])
    });
    Ok(InterpInReport { dynamorphism: r.valid, entrante, surjective_commuting: r.valid && onto && pointwise })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InterpOutReport {
    pub dynamorphism: bool,
    /// Nonempty pairwise disjoint images.
    pub sortante: bool,
    /// Transitions commute exactly with the images.
    pub reguliere: bool,
}

fn disjoint_nonempty(d: &Rel) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    d.rows().iter().all(|r| !r.is_empty() && r.iter().all(|&x| seen.insert(x)))
}

/// Outgoing interpretation check for `phi: beta -> alpha`.
pub fn interp_out_check(beta: &Dynamics, alpha: &Dynamics, phi: &Dynamorphism) -> Result<InterpOutReport> {
    require_same_category(beta, alpha, phi)?;
    let r = check(beta, alpha, phi)?;
    let sortante = r.valid && phi.delta.iter().all(disjoint_nonempty);
    let c = beta.category();
    let reguliere = sortante
        && (0..c.arrow_count()).all(|f| {
            let (s, t) = (c.dom(f), c.cod(f));
            alpha.transition(f).after(&phi.delta[s]) == phi.delta[t].after(beta.transition(f))
        });
    Ok(InterpOutReport { dynamorphism: r.valid, sortante, reguliere })
}

/// Inverse images: `s -> psi_S^{-1}(s)`.
pub fn tilde_in(psi: &Dynamorphism) -> Dynamorphism {
    Dynamorphism { functor: psi.functor.clone(), delta: psi.delta.iter().map(Rel::inverse).collect() }
}

/// `r -> {s}` when `r` lies in `phi_S(s)`, empty otherwise.
pub fn tilde_out(phi: &Dynamorphism) -> Result<Dynamorphism> {
    if !phi.delta.iter().all(disjoint_nonempty) {
        return domain("images must be nonempty and pairwise disjoint");
    }
    Ok(Dynamorphism { functor: phi.functor.clone(), delta: phi.delta.iter().map(Rel::inverse).collect() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Association {
    pub mixte: bool,
    pub reguliere: bool,
    /// The interpretation in the other direction.
    pub associated: Dynamorphism,
}

/// Starting from an incoming interpretation `psi: alpha -> beta`.
pub fn associate_in(alpha: &Dynamics, beta: &Dynamics, psi: &Dynamorphism) -> Result<Association> {
    let r = interp_in_check(alpha, beta, psi)?;
    let phi = tilde_in(psi);
    let out = interp_out_check(beta, alpha, &phi)?;
    let mixte = r.entrante && out.sortante;
    Ok(Association { mixte, reguliere: mixte && out.reguliere, associated: phi })
}

/// Starting from an outgoing interpretation `phi: beta -> alpha`.
pub fn associate_out(beta: &Dynamics, alpha: &Dynamics, phi: &Dynamorphism) -> Result<Association> {
    let out = interp_out_check(beta, alpha, phi)?;
    if !out.sortante {
        return Ok(Association { mixte: false, reguliere: false, associated: tilde_in(phi) });
    }
    let psi = tilde_out(phi)?;
    let mixte = interp_in_check(alpha, beta, &psi)?.entrante;
    Ok(Association { mixte, reguliere: mixte && out.reguliere, associated: psi })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TransReport {
    pub interpretation: bool,
    pub reguliere: bool,
}

/// Interpretation across categories: `phi: beta -> alpha` with a faithful
/// functor and nonempty pairwise disjoint images.
pub fn interp_trans_check(beta: &Dynamics, alpha: &Dynamics, phi: &Dynamorphism) -> Result<TransReport> {
    let r = check(beta, alpha, phi)?;
    let interpretation = r.valid && r.faithful && phi.delta.iter().all(disjoint_nonempty);
    let c = beta.category();
    let reguliere = interpretation
        && (0..c.arrow_count()).all(|f| {
            let (s, t) = (c.dom(f), c.cod(f));
            phi.delta[t].after(beta.transition(f)) == alpha.transition(phi.functor.arrows[f]).after(&phi.delta[s])
        });
    Ok(TransReport { interpretation, reguliere })
}
