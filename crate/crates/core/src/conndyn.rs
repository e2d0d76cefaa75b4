//! Dynamics with connectivity on arrows and on states, and the foliation of
//! the states they induce.

use crate::conncat::is_connective;
use crate::dynamics::Dynamics;
use crate::error::{input, invalid, Result};
use crate::foliation::Foliation;
use crate::order::{order_report, OrderReport};
use crate::space::{generate, Space};
use crate::subset::{elements, singleton, Family, Subset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnDynamics {
    dynamics: Dynamics,
    arrows: Space,
    states: Space,
}

impl ConnDynamics {
    /// `categorical` additionally requires the arrow structure to be stable
    /// under composition.
    pub fn new(dynamics: Dynamics, arrows: Space, states: Space, categorical: bool) -> Result<ConnDynamics> {
        dynamics.require_valid()?;
        dynamics.require_proper()?;
        if arrows.points() != dynamics.category().arrow_count() {
            return input("arrow structure must live on the arrows");
        }
        if states.points() != dynamics.state_count() {
            return input("state structure must live on the states");
        }
        if categorical && !is_connective(dynamics.category(), arrows.connected()) {
            return invalid("arrow structure is not stable under composition");
        }
        Ok(ConnDynamics { dynamics, arrows, states })
    }

    pub fn dynamics(&self) -> &Dynamics {
        &self.dynamics
    }

    pub fn arrow_structure(&self) -> &Space {
        &self.arrows
    }

    pub fn state_structure(&self) -> &Space {
        &self.states
    }

    /// States reached from `state` along the arrows of `k`.
    pub fn reach(&self, k: Subset, state: usize) -> Subset {
        elements(k).flat_map(|f| self.dynamics.step(f, state)).fold(0, |acc, b| acc | singleton(b))
    }

    /// Internal structure generated by the reach sets of connected arrow sets;
    /// external structure is the state structure.
    pub fn foliation(&self) -> Result<Foliation> {
        let n = self.dynamics.state_count();
        let mut fam = Family::new();
        for &k in self.arrows.connected() {
            for a in 0..n {
                fam.insert(self.reach(k, a));
            }
        }
        Foliation::new(generate(n, &fam, false)?, self.states.clone())
    }

    /// Order of the induced leaf space.
    pub fn order(&self) -> Result<OrderReport> {
        Ok(order_report(&self.foliation()?.leaf_space_induced()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::Rel;
    use crate::fincat::{FinCat, Monoid};

    /// `Z/n` acting on itself by rotation, arrows connected in consecutive pairs.
    fn rotation(n: usize) -> ConnDynamics {
        let m = Monoid::cyclic(n);
        let cat = m.to_category();
        let names = (0..n).map(|i| format!("s{i}")).collect();
        let trans = (0..n).map(|g| Rel::function(&(0..n).map(|s| (s + g) % n).collect::<Vec<_>>(), n)).collect();
        let d = Dynamics::new(cat, names, vec![(0..n).collect()], trans).unwrap();
        let pairs: Family = (0..n).map(|k| singleton(k) | singleton((k + 1) % n)).collect();
        let arrows = generate(n, &pairs, false).unwrap();
        let cycle = Space::graph(n, &(0..n).map(|k| (k, (k + 1) % n)).collect::<Vec<_>>()).unwrap();
        ConnDynamics::new(d, arrows, cycle, false).unwrap()
    }

    #[test]
    fn rotation_has_one_leaf() {
        let c = rotation(6);
        let z = c.foliation().unwrap();
        assert_eq!(z.leaf_lists(), vec![(0..6).collect::<Vec<_>>()]);
        assert_eq!(c.order().unwrap().order, 0);
    }

    #[test]
    fn chain_steps_with_identities() {
        // one state per object of the chain 0 -> .. -> 5, arrows connected as {id_k, k<=k+1}
        let cat = FinCat::chain(6);
        let d = crate::dynamics::zeta(&cat);
        let pairs: Family = (0..5)
            .map(|k| singleton(cat.identity(k)) | singleton(cat.arrow_index(&format!("{k}<={}", k + 1)).unwrap()))
            .collect();
        let arrows = generate(cat.arrow_count(), &pairs, false).unwrap();
        let c = ConnDynamics::new(d, arrows, Space::path(6).unwrap(), false).unwrap();
        assert_eq!(c.foliation().unwrap().leaves().len(), 1);
        assert_eq!(c.order().unwrap().order, 0);
    }

    #[test]
    fn improper_rejected() {
        let d = Dynamics::new(FinCat::discrete(2), vec!["a".into()], vec![vec![0], vec![0]], vec![Rel::identity(1), Rel::identity(1)]).unwrap();
        let r = ConnDynamics::new(d, Space::discrete(2).unwrap(), Space::discrete(1).unwrap(), false);
        assert!(r.is_err());
    }
}
