use serde::{Deserialize, Serialize};

use crate::group::quotient::quotient_group;
use crate::group::subgroup::{commutator_subgroup, SubgroupRef};
use crate::group::table::{Group, GroupTable};
use crate::numtheory::factorize;

/// Cheap isomorphism invariants. For abelian groups the invariant factors
/// decide isomorphism; otherwise equal fingerprints are only evidence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    pub exponent: usize,
    pub abelianization: Vec<u64>,
    pub class: Option<usize>,
}

/// Invariant factors `d_1 | d_2 | … | d_r` (ascending, all > 1) of an
/// abelian group, read off from the counts of elements killed by prime powers.
///
/// # Panics
/// If `g` is not abelian.
pub fn abelian_invariants(g: &GroupTable) -> Vec<u64> {
    assert!(g.is_abelian(), "abelian_invariants needs an abelian group");
    let n = g.order() as u64;
    let mut per_prime: Vec<Vec<u64>> = Vec::new();
    for (p, _) in factorize(g.order()) {
        let p = p as u64;
        // omega[k] = #{x : x^{p^k} = 1}
        let mut omega = vec![1u64];
        let mut pk = p as i64;
        loop {
            let count = (0..g.order()).filter(|&x| g.pow(x, pk) == 0).count() as u64;
            if count == *omega.last().unwrap() && omega.len() > 1 {
                break;
            }
            omega.push(count);
            pk *= p as i64;
            if count == n {
                break;
            }
        }
        // number of cyclic factors of order >= p^k is log_p(omega[k]/omega[k-1])
        let at_least: Vec<u32> = omega
            .windows(2)
            .map(|w| {
                let mut ratio = w[1] / w[0];
                let mut e = 0;
                while ratio > 1 {
                    ratio /= p;
                    e += 1;
                }
                e
            })
            .collect();
        let mut exps = Vec::new();
        for (k, &c) in at_least.iter().enumerate() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..(c - next) {
                exps.push(p.pow(k as u32 + 1));
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        per_prime.push(exps);
    }
    let rank = per_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<u64> =
        (0..rank).map(|i| per_prime.iter().map(|e| e.get(i).copied().unwrap_or(1)).product()).collect();
    factors.reverse();
    factors
}

fn nilpotency_class(g: &Group) -> Option<usize> {
    let whole = SubgroupRef::whole(g);
    let mut term = whole.clone();
    let mut class = 0;
    while !term.is_trivial() {
        let next = commutator_subgroup(&term, &whole).ok()?;
        if next.order() == term.order() {
            return None;
        }
        term = next;
        class += 1;
    }
    Some(class)
}

pub fn fingerprint(g: &Group) -> Fingerprint {
    let whole = SubgroupRef::whole(g);
    let derived = commutator_subgroup(&whole, &whole).expect("same ambient");
    let ab = quotient_group(g, &derived).expect("derived subgroup is normal");
    Fingerprint {
        order: g.order(),
        exponent: g.exponent(),
        abelianization: abelian_invariants(&ab.group),
        class: nilpotency_class(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;
    use std::sync::Arc;

    #[test]
    fn invariants_of_products() {
        let c = |n| catalog::cyclic(n).unwrap();
        assert_eq!(abelian_invariants(&c(1)), Vec::<u64>::new());
        assert_eq!(abelian_invariants(&c(12)), vec![12]);
        let g = catalog::direct_product(&c(9), &c(3)).unwrap();
        assert_eq!(abelian_invariants(&g), vec![3, 9]);
        let g = catalog::direct_product(&c(6), &c(4)).unwrap();
        assert_eq!(abelian_invariants(&g), vec![2, 12]);
        assert_eq!(abelian_invariants(&catalog::elementary_abelian(2, 3).unwrap()), vec![2, 2, 2]);
    }

    #[test]
    fn fingerprints_separate_order_8() {
        let d8 = fingerprint(&Arc::new(catalog::dihedral(8).unwrap()));
        let q8 = fingerprint(&Arc::new(catalog::quaternion8().unwrap()));
        assert_eq!(d8.abelianization, vec![2, 2]);
        assert_eq!(d8.class, Some(2));
        assert_eq!(d8, q8);
        let h = fingerprint(&Arc::new(catalog::heisenberg(3).unwrap()));
        assert_eq!((h.order, h.exponent, h.class), (27, 3, Some(2)));
    }
}
