use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::table::{Group, GroupTable};

/// Grows `elems` (with membership mask `member`) to the subgroup generated by
/// `elems ∪ gens`. `elems` must already be closed under the old generators or
/// contain only the identity.
pub(crate) fn extend_closure(g: &GroupTable, elems: &mut Vec<usize>, member: &mut [bool], gens: &[usize]) {
    let mut i = 0;
    while i < elems.len() {
        let e = elems[i];
        for &s in gens {
            let y = g.mul(e, s);
            if !member[y] {
                member[y] = true;
                elems.push(y);
            }
        }
        i += 1;
    }
}

/// A subgroup of an ambient [`GroupTable`], stored as a sorted element set.
#[derive(Clone)]
pub struct SubgroupRef {
    ambient: Group,
    elements: Vec<usize>,
    member: Vec<bool>,
    is_normal: bool,
}

impl SubgroupRef {
    fn from_member(ambient: &Group, member: Vec<bool>) -> Self {
        let elements: Vec<usize> = (0..member.len()).filter(|&i| member[i]).collect();
        let mut s = SubgroupRef { ambient: ambient.clone(), elements, member, is_normal: false };
        s.is_normal = s.normality_witness().is_none();
        s
    }

    /// Smallest subgroup containing `seeds`.
    pub fn closure(ambient: &Group, seeds: impl IntoIterator<Item = usize>) -> Self {
        let n = ambient.order();
        let mut member = vec![false; n];
        member[0] = true;
        let mut elems = vec![0];
        let mut gens = Vec::new();
        for s in seeds {
            assert!(s < n, "seed {s} out of range for order {n}");
            if !member[s] {
                gens.push(s);
                extend_closure(ambient, &mut elems, &mut member, &gens);
            }
        }
        Self::from_member(ambient, member)
    }

    pub fn trivial(ambient: &Group) -> Self {
        Self::closure(ambient, [])
    }

    pub fn whole(ambient: &Group) -> Self {
        Self::from_member(ambient, vec![true; ambient.order()])
    }

    /// Wraps an element set after checking it is a subgroup.
    pub fn from_elements(ambient: &Group, elems: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut member = vec![false; ambient.order()];
        for e in elems {
            if e >= ambient.order() {
                return Err(Error::Invalid(format!("element {e} out of range")));
            }
            member[e] = true;
        }
        if !member[0] {
            return Err(Error::NotASubgroup);
        }
        let s = Self::from_member(ambient, member);
        let gens = s.generators();
        for &x in &s.elements {
            for &y in &gens {
                if !s.member[ambient.mul(x, y)] {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(s)
    }

    pub fn ambient(&self) -> &Group {
        &self.ambient
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.member[x]
    }

    pub fn is_normal(&self) -> bool {
        self.is_normal
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.ambient.order()
    }

    /// `Some((s, g))` with `g s g⁻¹` outside the subgroup, if any.
    pub fn normality_witness(&self) -> Option<(usize, usize)> {
        let g = &self.ambient;
        for &t in g.generators() {
            for &s in &self.elements {
                if !self.member[g.conj(t, s)] {
                    return Some((s, t));
                }
            }
        }
        None
    }

    pub fn require_normal(&self) -> Result<()> {
        match self.normality_witness() {
            None => Ok(()),
            Some((element, by)) => Err(Error::NotNormal { element, by }),
        }
    }

    pub fn same_ambient(&self, other: &SubgroupRef) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient.same_as(&other.ambient)
    }

    fn check_ambient(&self, other: &SubgroupRef) -> Result<()> {
        if self.same_ambient(other) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn is_subset(&self, other: &SubgroupRef) -> bool {
        self.same_ambient(other) && self.elements.iter().all(|&x| other.member[x])
    }

    /// A greedy generating set in element order.
    pub fn generators(&self) -> Vec<usize> {
        let n = self.ambient.order();
        let mut member = vec![false; n];
        member[0] = true;
        let mut elems = vec![0];
        let mut gens = Vec::new();
        for &x in &self.elements {
            if !member[x] {
                gens.push(x);
                extend_closure(&self.ambient, &mut elems, &mut member, &gens);
            }
        }
        gens
    }

    pub fn exponent(&self) -> usize {
        self.elements.iter().map(|&x| self.ambient.element_order(x)).fold(1, crate::numtheory::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.ambient;
        let gens = self.generators();
        gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    pub fn intersection(&self, other: &SubgroupRef) -> Result<SubgroupRef> {
        self.check_ambient(other)?;
        let member = (0..self.member.len()).map(|i| self.member[i] && other.member[i]).collect();
        Ok(Self::from_member(&self.ambient, member))
    }

    /// Subgroup generated by both.
    pub fn join(&self, other: &SubgroupRef) -> Result<SubgroupRef> {
        self.check_ambient(other)?;
        Ok(Self::closure(&self.ambient, self.generators().into_iter().chain(other.generators())))
    }

    /// The subgroup as a group in its own right, plus the embedding
    /// (index `i` of the new table is `elements()[i]`).
    pub fn to_group(&self, name: impl Into<String>) -> Result<(GroupTable, Vec<usize>)> {
        let g = &self.ambient;
        let mut local = vec![usize::MAX; g.order()];
        for (i, &x) in self.elements.iter().enumerate() {
            local[x] = i;
        }
        let elems = &self.elements;
        let t = GroupTable::from_fn_tagged(name, elems.len(), |a, b| local[g.mul(elems[a], elems[b])])?;
        Ok((t, elems.clone()))
    }
}

impl PartialEq for SubgroupRef {
    fn eq(&self, other: &Self) -> bool {
        self.same_ambient(other) && self.elements == other.elements
    }
}

impl Eq for SubgroupRef {}

impl fmt::Debug for SubgroupRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubgroupRef")
            .field("ambient", &self.ambient.name())
            .field("order", &self.order())
            .field("normal", &self.is_normal)
            .finish()
    }
}

/// Closure of all commutators `[x, y] = x⁻¹y⁻¹xy` with `x ∈ a`, `y ∈ b`.
pub fn commutator_subgroup(a: &SubgroupRef, b: &SubgroupRef) -> Result<SubgroupRef> {
    a.check_ambient(b)?;
    let g = &a.ambient;
    let n = g.order();
    let mut member = vec![false; n];
    member[0] = true;
    let mut elems = vec![0];
    let mut gens = Vec::new();
    for &x in &a.elements {
        for &y in &b.elements {
            let c = g.commutator(x, y);
            if !member[c] {
                gens.push(c);
                extend_closure(g, &mut elems, &mut member, &gens);
            }
        }
    }
    Ok(SubgroupRef::from_member(g, member))
}

/// `[n, g, g, ..., g]` with `k` copies of `g`; `k = 0` returns `n`.
pub fn iterated_commutator(n: &SubgroupRef, g: &SubgroupRef, k: usize) -> Result<SubgroupRef> {
    n.check_ambient(g)?;
    let mut cur = n.clone();
    for _ in 0..k {
        if cur.is_trivial() {
            break;
        }
        cur = commutator_subgroup(&cur, g)?;
    }
    Ok(cur)
}

/// Closure of `{ x^e : x ∈ n }`.
pub fn power_subgroup(n: &SubgroupRef, e: u64) -> SubgroupRef {
    let g = &n.ambient;
    let seeds: Vec<usize> = n.elements.iter().map(|&x| g.pow(x, e as i64)).collect();
    SubgroupRef::closure(g, seeds)
}

/// The set `{ x^e : x ∈ n }` itself, which need not be a subgroup.
pub fn power_set(n: &SubgroupRef, e: u64) -> Vec<usize> {
    let g = &n.ambient;
    let mut out: Vec<usize> = n.elements.iter().map(|&x| g.pow(x, e as i64)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `ab = { xy : x ∈ a, y ∈ b }`, rejected when it is not a subgroup.
pub fn product_of_subgroups(a: &SubgroupRef, b: &SubgroupRef) -> Result<SubgroupRef> {
    a.check_ambient(b)?;
    let g = &a.ambient;
    let mut member = vec![false; g.order()];
    for &x in &a.elements {
        for &y in &b.elements {
            member[g.mul(x, y)] = true;
        }
    }
    let s = SubgroupRef::from_member(g, member);
    if a.is_normal || b.is_normal {
        return Ok(s);
    }
    let closed = s.elements.iter().all(|&x| s.elements.iter().all(|&y| s.member[g.mul(x, y)]));
    if !closed {
        return Err(Error::NotASubgroup);
    }
    Ok(s)
}

/// Product of a list of normal subgroups; the empty product is trivial.
pub fn product_of_normals(ambient: &Group, parts: &[SubgroupRef]) -> Result<SubgroupRef> {
    let mut acc = SubgroupRef::trivial(ambient);
    for p in parts {
        acc = acc.join(p)?;
    }
    Ok(acc)
}

pub fn centralizer_of(g: &Group, s: &SubgroupRef) -> SubgroupRef {
    let gens = s.generators();
    let member = (0..g.order()).map(|x| gens.iter().all(|&y| g.mul(x, y) == g.mul(y, x))).collect();
    SubgroupRef::from_member(g, member)
}

pub fn center(g: &Group) -> SubgroupRef {
    centralizer_of(g, &SubgroupRef::whole(g))
}

/// Smallest normal subgroup containing `seeds`.
pub fn normal_closure(g: &Group, seeds: impl IntoIterator<Item = usize>) -> SubgroupRef {
    let mut s = SubgroupRef::closure(g, seeds);
    loop {
        match s.normality_witness() {
            None => return s,
            Some((x, t)) => {
                let mut gens = s.generators();
                gens.push(g.conj(t, x));
                s = SubgroupRef::closure(g, gens);
            }
        }
    }
}

/// Preimage of a subgroup of `G/N` under the projection, given the coset map.
pub fn preimage(g: &Group, coset_of: &[usize], target: &SubgroupRef) -> SubgroupRef {
    let member = (0..g.order()).map(|x| target.contains(coset_of[x])).collect();
    SubgroupRef::from_member(g, member)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    fn cyc(n: usize) -> Group {
        Arc::new(catalog::cyclic(n).unwrap())
    }

    #[test]
    fn closure_of_single_element() {
        let g = cyc(8);
        assert_eq!(SubgroupRef::closure(&g, [2]).elements(), &[0, 2, 4, 6]);
        assert_eq!(SubgroupRef::closure(&g, []).elements(), &[0]);
    }

    #[test]
    fn closure_is_idempotent() {
        let g = Arc::new(catalog::dihedral(16).unwrap());
        let s = SubgroupRef::closure(&g, [3, 9]);
        let t = SubgroupRef::closure(&g, s.elements().iter().copied());
        assert_eq!(s, t);
    }

    #[test]
    fn power_subgroups() {
        let g = cyc(9);
        assert_eq!(power_subgroup(&SubgroupRef::whole(&g), 3).order(), 3);
        let e = Arc::new(catalog::elementary_abelian(3, 2).unwrap());
        assert!(power_subgroup(&SubgroupRef::whole(&e), 3).is_trivial());
    }

    #[test]
    fn product_rejects_non_subgroup() {
        // two reflections in D8 generate the whole group but their product set has 4 elements
        let g = Arc::new(catalog::dihedral(8).unwrap());
        let refl: Vec<usize> = (0..8).filter(|&x| g.element_order(x) == 2 && !center(&g).contains(x)).collect();
        let a = SubgroupRef::closure(&g, [refl[0]]);
        let b = (1..refl.len())
            .map(|i| SubgroupRef::closure(&g, [refl[i]]))
            .find(|b| a.join(b).unwrap().order() == 8)
            .unwrap();
        assert_eq!(product_of_subgroups(&a, &b).unwrap_err(), Error::NotASubgroup);
    }

    #[test]
    fn normal_closure_of_reflection_in_d8() {
        let g = Arc::new(catalog::dihedral(8).unwrap());
        let r = (0..8).find(|&x| g.element_order(x) == 2 && !center(&g).contains(x)).unwrap();
        let s = normal_closure(&g, [r]);
        assert_eq!(s.order(), 4);
        assert!(s.is_normal());
    }

    #[test]
    fn mismatched_ambients_are_rejected() {
        let a = SubgroupRef::whole(&cyc(4));
        let b = SubgroupRef::whole(&cyc(5));
        assert_eq!(commutator_subgroup(&a, &b).unwrap_err(), Error::AmbientMismatch);
    }

    #[test]
    fn to_group_keeps_structure() {
        let g = Arc::new(catalog::quaternion8().unwrap());
        let z = center(&g);
        let (t, emb) = z.to_group("Z(Q8)").unwrap();
        assert_eq!(t.order(), 2);
        assert_eq!(emb[0], 0);
        assert_eq!(t.prime(), Some(2));
    }
}
