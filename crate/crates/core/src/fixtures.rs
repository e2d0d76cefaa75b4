//! Small named spaces, foliations and categories used in examples and tests.

use crate::fincat::FinCat;
use crate::foliation::Foliation;
use crate::space::Space;

/// Three points, singletons and the whole set: the Borromean pattern.
pub fn b3() -> Space {
    Space::from_lists(3, &[vec![0], vec![1], vec![2], vec![0, 1, 2]]).unwrap()
}

/// Points 0 and 1 connected, 2 only inside the whole set.
pub fn x3() -> Space {
    Space::from_lists(3, &[vec![0], vec![1], vec![0, 1, 2]]).unwrap()
}

/// Six points in three internal pairs, two external links.
pub fn z6() -> Foliation {
    Foliation::from_lists(6, &[vec![0, 1], vec![2, 3], vec![4, 5]], &[vec![0, 2], vec![3, 5]]).unwrap()
}

/// `S -> T` with a single non-identity arrow `f`.
pub fn arr2() -> FinCat {
    FinCat::preorder(&["S", "T"], &[(0, 1)], |a, b| match (a, b) {
        (0, 1) => "f".to_string(),
        (0, _) => "id_S".to_string(),
        _ => "id_T".to_string(),
    })
    .unwrap()
}

/// Dynamics over [`arr2`] with the given state names and the image of each
/// state of `S` under `f`, as indices into `t`.
pub fn arr2_dynamics(s: &[&str], t: &[&str], f: &[&[usize]]) -> crate::dynamics::Dynamics {
    use crate::dynamics::{Dynamics, Rel};
    let c = arr2();
    let names: Vec<String> = s.iter().chain(t).map(|x| x.to_string()).collect();
    let states = vec![(0..s.len()).collect(), (s.len()..s.len() + t.len()).collect()];
    let rows = f.iter().map(|r| r.iter().copied().collect()).collect();
    let mut trans = vec![Rel::identity(0); 3];
    trans[c.identity(0)] = Rel::identity(s.len());
    trans[c.identity(1)] = Rel::identity(t.len());
    trans[c.arrow_index("f").unwrap()] = Rel::new(rows, t.len()).unwrap();
    Dynamics::new(c, names, states, trans).unwrap()
}

/// One state `p` over `S`, one state `q` over `T`, `f(p) = {q}`.
pub fn dyn_beta() -> crate::dynamics::Dynamics {
    arr2_dynamics(&["p"], &["q"], &[&[0]])
}
