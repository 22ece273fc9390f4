use std::sync::Arc;

use crate::error::Result;
use crate::group::hom::Homomorphism;
use crate::group::subgroup::{preimage, SubgroupRef};
use crate::group::table::{Group, GroupTable};

/// A quotient `G/N` with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: Group,
    pub projection: Homomorphism,
}

impl Quotient {
    /// Full preimage of a subgroup of the quotient.
    pub fn lift(&self, s: &SubgroupRef) -> SubgroupRef {
        preimage(self.projection.source(), self.projection.images(), s)
    }
}

/// Coset multiplication table of `G/N`. Cosets are numbered by their
/// smallest element, so the identity coset is 0.
pub fn quotient_group(g: &Group, n: &SubgroupRef) -> Result<Quotient> {
    n.require_normal()?;
    let order = g.order();
    let mut coset_of = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for x in 0..order {
        if coset_of[x] == usize::MAX {
            let id = reps.len();
            reps.push(x);
            for &y in n.elements() {
                coset_of[g.mul(x, y)] = id;
            }
        }
    }
    let name = format!("{}/{}", g.name(), n.order());
    let table = GroupTable::from_fn_tagged(name, reps.len(), |a, b| coset_of[g.mul(reps[a], reps[b])])?;
    let group = Arc::new(table);
    let projection = Homomorphism::new(g, &group, coset_of)?;
    Ok(Quotient { group, projection })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::group::{catalog, center};

    #[test]
    fn heisenberg_mod_center_is_elementary_abelian() {
        let h = Arc::new(catalog::heisenberg(3).unwrap());
        let q = quotient_group(&h, &center(&h)).unwrap();
        assert_eq!(q.group.order(), 9);
        assert!(q.group.is_abelian());
        assert_eq!(q.group.exponent(), 3);
        q.projection.verify_exhaustive().unwrap();
    }

    #[test]
    fn trivial_and_full_quotients() {
        let d = Arc::new(catalog::dihedral(8).unwrap());
        let q = quotient_group(&d, &SubgroupRef::trivial(&d)).unwrap();
        assert_eq!(q.group.order(), 8);
        assert!(!q.group.is_abelian());
        let q = quotient_group(&d, &SubgroupRef::whole(&d)).unwrap();
        assert_eq!(q.group.order(), 1);
    }

    #[test]
    fn non_normal_quotient_is_rejected() {
        let d = Arc::new(catalog::dihedral(8).unwrap());
        let r = (0..8).find(|&x| d.element_order(x) == 2 && !center(&d).contains(x)).unwrap();
        let s = SubgroupRef::closure(&d, [r]);
        assert!(matches!(quotient_group(&d, &s), Err(Error::NotNormal { .. })));
    }
}
