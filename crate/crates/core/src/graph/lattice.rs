use std::collections::{BTreeMap, HashMap, VecDeque};

use thiserror::Error;

use super::{ComponentClass, TransitionGraph};
use crate::clockwork::PhiVector;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("component {0} is cyclic and has no lattice structure")]
    Cyclic(usize),
    #[error("component {component} has {count} local {what}")]
    NotUnique { component: usize, what: &'static str, count: usize },
    #[error("state {0} is reached with two different move counts")]
    Inconsistent(usize),
    #[error("state {0} is not reachable from the minimum by clockwise moves")]
    Unreachable(usize),
    #[error("states {0} and {1} share a move-count vector")]
    NotInjective(usize, usize),
    #[error("no state has the pointwise {what} of states {a} and {b}")]
    Missing { what: &'static str, a: usize, b: usize },
    #[error("state {0} is not in this component")]
    Foreign(usize),
    #[error("distributivity fails for states {0}, {1}, {2}")]
    Distributivity(usize, usize, usize),
}

/// An acyclic component seen as a lattice: each state is identified with
/// its move counts relative to the unique minimum.
#[derive(Clone, Debug)]
pub struct LatticeView {
    pub component: usize,
    pub min: usize,
    pub max: usize,
    pub phi: BTreeMap<usize, PhiVector>,
    by_phi: HashMap<PhiVector, usize>,
}

pub fn lattice_view(g: &TransitionGraph, component: usize) -> Result<LatticeView, LatticeError> {
    let c = &g.components[component];
    if c.class == ComponentClass::Cyclic {
        return Err(LatticeError::Cyclic(component));
    }
    let unique = |v: &[usize], what| match v {
        [one] => Ok(*one),
        _ => Err(LatticeError::NotUnique { component, what, count: v.len() }),
    };
    let min = unique(&c.local_minima, "minima")?;
    let max = unique(&c.local_maxima, "maxima")?;
    let mut phi = BTreeMap::new();
    phi.insert(min, PhiVector::default());
    let mut queue = VecDeque::from([min]);
    while let Some(s) = queue.pop_front() {
        let here = phi[&s].clone();
        for e in g.out_edges(s) {
            let mut next = here.clone();
            next.add(e.site, 1);
            match phi.get(&e.to) {
                Some(have) if *have != next => return Err(LatticeError::Inconsistent(e.to)),
                Some(_) => {}
                None => {
                    phi.insert(e.to, next);
                    queue.push_back(e.to);
                }
            }
        }
    }
    if let Some(&s) = c.states.iter().find(|s| !phi.contains_key(s)) {
        return Err(LatticeError::Unreachable(s));
    }
    let mut by_phi = HashMap::with_capacity(phi.len());
    for (&s, v) in &phi {
        if let Some(other) = by_phi.insert(v.clone(), s) {
            return Err(LatticeError::NotInjective(other, s));
        }
    }
    Ok(LatticeView { component, min, max, phi, by_phi })
}

/// Meet and join tables indexed by position in `ids`, which lists the
/// component's states in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeTables {
    pub ids: Vec<usize>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
}

impl LatticeView {
    pub fn size(&self) -> usize {
        self.phi.len()
    }

    pub fn phi_of(&self, s: usize) -> Result<&PhiVector, LatticeError> {
        self.phi.get(&s).ok_or(LatticeError::Foreign(s))
    }

    pub fn state_with(&self, phi: &PhiVector) -> Option<usize> {
        self.by_phi.get(phi).copied()
    }

    /// The state whose move counts are the pointwise minimum.
    pub fn meet(&self, a: usize, b: usize) -> Result<usize, LatticeError> {
        let v = self.phi_of(a)?.pointwise_min(self.phi_of(b)?);
        self.state_with(&v).ok_or(LatticeError::Missing { what: "minimum", a, b })
    }

    pub fn join(&self, a: usize, b: usize) -> Result<usize, LatticeError> {
        let v = self.phi_of(a)?.pointwise_max(self.phi_of(b)?);
        self.state_with(&v).ok_or(LatticeError::Missing { what: "maximum", a, b })
    }

    /// Meet and join for every pair. Fails if some pair is not closed.
    pub fn tables(&self) -> Result<LatticeTables, LatticeError> {
        let ids: Vec<usize> = self.phi.keys().copied().collect();
        let pos: HashMap<usize, usize> = ids.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let k = ids.len();
        let mut meet = vec![vec![0; k]; k];
        let mut join = vec![vec![0; k]; k];
        for i in 0..k {
            for j in i..k {
                let m = pos[&self.meet(ids[i], ids[j])?];
                let jn = pos[&self.join(ids[i], ids[j])?];
                meet[i][j] = m;
                meet[j][i] = m;
                join[i][j] = jn;
                join[j][i] = jn;
            }
        }
        Ok(LatticeTables { ids, meet, join })
    }

    /// `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` for every triple.
    pub fn check_distributive(&self) -> Result<(), LatticeError> {
        let LatticeTables { ids, meet, join } = self.tables()?;
        let k = ids.len();
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]] {
                        return Err(LatticeError::Distributivity(ids[a], ids[b], ids[c]));
                    }
                }
            }
        }
        Ok(())
    }
}
