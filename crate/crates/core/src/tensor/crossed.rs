use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{ActionByAutomorphisms, Group, GroupTable, Homomorphism, SubgroupRef};

/// A crossed module `μ: M → G` with an action of `G` on `M`.
#[derive(Clone, Debug)]
pub struct CrossedModule {
    mu: Homomorphism,
    action: ActionByAutomorphisms,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossedLaw {
    /// `μ(^g m) = g μ(m) g⁻¹`
    Equivariance,
    /// `^{μ(m)} m' = m m' m⁻¹`
    Peiffer,
}

/// A failed crossed-module law with the pair of elements that breaks it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrossedViolation {
    pub law: CrossedLaw,
    pub witness: (usize, usize),
}

impl CrossedModule {
    /// Checks both laws exhaustively.
    pub fn new(mu: Homomorphism, action: ActionByAutomorphisms) -> Result<Self> {
        let cm = Self::from_parts(mu, action)?;
        if let Err(v) = validate_crossed_module(&cm) {
            return Err(Error::Structure(format!("{:?} fails at {:?}", v.law, v.witness)));
        }
        Ok(cm)
    }

    /// Assembles the parts after checking only that the groups match up.
    pub fn from_parts(mu: Homomorphism, action: ActionByAutomorphisms) -> Result<Self> {
        if !action.actor().same_as(mu.target()) || !action.space().same_as(mu.source()) {
            return Err(Error::AmbientMismatch);
        }
        Ok(CrossedModule { mu, action })
    }

    /// `id: G → G` with conjugation.
    pub fn identity(g: &Group) -> Self {
        CrossedModule { mu: Homomorphism::identity(g), action: ActionByAutomorphisms::conjugation(g) }
    }

    /// Inclusion of a normal subgroup, acted on by conjugation. A subgroup
    /// that is not normal breaks equivariance; the error names the witness.
    pub fn inclusion(n: &SubgroupRef) -> Result<Self> {
        if let Some((element, by)) = n.normality_witness() {
            return Err(Error::NotNormal { element, by });
        }
        let g = n.ambient();
        let (table, embed) = n.to_group(format!("{}<{}", n.order(), g.name()))?;
        let m = Arc::new(table);
        let mut local = vec![usize::MAX; g.order()];
        for (i, &x) in embed.iter().enumerate() {
            local[x] = i;
        }
        let mu = Homomorphism::new(&m, g, embed.clone())?;
        let action = ActionByAutomorphisms::new(g, &m, |a, x| local[g.conj(a, embed[x])])?;
        Ok(CrossedModule { mu, action })
    }

    /// Abelian `M` mapped trivially to `G`, which acts trivially.
    pub fn trivial(m: &Group, g: &Group) -> Result<Self> {
        if !m.is_abelian() {
            return Err(Error::Structure("trivial crossed module needs an abelian source".into()));
        }
        Ok(CrossedModule { mu: Homomorphism::trivial(m, g), action: ActionByAutomorphisms::trivial(g, m) })
    }

    pub fn source(&self) -> &Group {
        self.mu.source()
    }

    pub fn codomain(&self) -> &Group {
        self.mu.target()
    }

    pub fn mu(&self) -> &Homomorphism {
        &self.mu
    }

    pub fn action(&self) -> &ActionByAutomorphisms {
        &self.action
    }

    /// `^g m`
    #[inline]
    pub fn act(&self, g: usize, m: usize) -> usize {
        self.action.act(g, m)
    }

    #[inline]
    pub fn map(&self, m: usize) -> usize {
        self.mu.apply(m)
    }
}

/// Checks equivariance and the Peiffer identity over all pairs.
pub fn validate_crossed_module(cm: &CrossedModule) -> std::result::Result<(), CrossedViolation> {
    let (m, g) = (cm.source(), cm.codomain());
    for a in 0..g.order() {
        for x in 0..m.order() {
            if cm.map(cm.act(a, x)) != g.conj(a, cm.map(x)) {
                return Err(CrossedViolation { law: CrossedLaw::Equivariance, witness: (a, x) });
            }
        }
    }
    for x in 0..m.order() {
        for y in 0..m.order() {
            if cm.act(cm.map(x), y) != m.conj(x, y) {
                return Err(CrossedViolation { law: CrossedLaw::Peiffer, witness: (x, y) });
            }
        }
    }
    Ok(())
}

/// The pullback `K = M ×_G N = {(m, n) : μ(m) = ν(n)}` with its projections.
/// Pairs are numbered in lexicographic order, so `(1, 1)` is index 0.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub k: Group,
    pub pairs: Vec<(usize, usize)>,
    pub pi1: Homomorphism,
    pub pi2: Homomorphism,
    index: Vec<usize>,
    n_order: usize,
}

impl Pullback {
    pub fn index_of(&self, m: usize, n: usize) -> Option<usize> {
        let i = self.index[m * self.n_order + n];
        (i != usize::MAX).then_some(i)
    }
}

pub fn pullback(mu: &CrossedModule, nu: &CrossedModule) -> Result<Pullback> {
    if !mu.codomain().same_as(nu.codomain()) {
        return Err(Error::AmbientMismatch);
    }
    let (m, n) = (mu.source(), nu.source());
    let mut pairs = Vec::new();
    let mut index = vec![usize::MAX; m.order() * n.order()];
    for x in 0..m.order() {
        for y in 0..n.order() {
            if mu.map(x) == nu.map(y) {
                index[x * n.order() + y] = pairs.len();
                pairs.push((x, y));
            }
        }
    }
    let name = format!("{}x_{}{}", m.name(), mu.codomain().name(), n.name());
    let k = Arc::new(GroupTable::from_fn_tagged(name, pairs.len(), |a, b| {
        let (x1, y1) = pairs[a];
        let (x2, y2) = pairs[b];
        index[m.mul(x1, x2) * n.order() + n.mul(y1, y2)]
    })?);
    let pi1 = Homomorphism::new(&k, m, pairs.iter().map(|p| p.0).collect())?;
    let pi2 = Homomorphism::new(&k, n, pairs.iter().map(|p| p.1).collect())?;
    Ok(Pullback { k, pairs, pi1, pi2, index, n_order: n.order() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{catalog, center};

    fn group(t: GroupTable) -> Group {
        Arc::new(t)
    }

    #[test]
    fn classical_crossed_modules() {
        let h = group(catalog::heisenberg(3).unwrap());
        validate_crossed_module(&CrossedModule::identity(&h)).unwrap();
        validate_crossed_module(&CrossedModule::inclusion(&center(&h)).unwrap()).unwrap();
    }

    #[test]
    fn non_normal_inclusion_fails() {
        let d = group(catalog::dihedral(8).unwrap());
        let r = (0..8).find(|&x| d.element_order(x) == 2 && !center(&d).contains(x)).unwrap();
        let s = SubgroupRef::closure(&d, [r]);
        assert!(matches!(CrossedModule::inclusion(&s), Err(Error::NotNormal { .. })));
    }

    #[test]
    fn twisted_action_breaks_peiffer() {
        // C3 -> C3 identity but with trivial action: Peiffer holds (abelian)
        // while equivariance fails for a nonabelian identity with trivial action
        let s3 = group(catalog::dihedral(6).unwrap());
        let cm =
            CrossedModule::from_parts(Homomorphism::identity(&s3), ActionByAutomorphisms::trivial(&s3, &s3)).unwrap();
        let v = validate_crossed_module(&cm).unwrap_err();
        assert_eq!(v.law, CrossedLaw::Equivariance);
    }

    #[test]
    fn pullback_orders() {
        let h = group(catalog::heisenberg(3).unwrap());
        let id = CrossedModule::identity(&h);
        assert_eq!(pullback(&id, &id).unwrap().k.order(), 27);
        let z = CrossedModule::inclusion(&center(&h)).unwrap();
        // fibers over the three central elements: 1 * 1 each
        assert_eq!(pullback(&z, &id).unwrap().k.order(), 3);
        let c2 = group(catalog::cyclic(2).unwrap());
        let c3 = group(catalog::cyclic(3).unwrap());
        let one = group(GroupTable::trivial());
        let a = CrossedModule::trivial(&c2, &one).unwrap();
        let b = CrossedModule::trivial(&c3, &one).unwrap();
        assert_eq!(pullback(&a, &b).unwrap().k.order(), 6);
    }
}
