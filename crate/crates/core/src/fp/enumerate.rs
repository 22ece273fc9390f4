use crate::error::{Error, Result};
use crate::fp::abelian::{abelian_quotient_order, AbelianOrder};
use crate::fp::presentation::Presentation;
use crate::fp::tietze::simplify;
use crate::fp::todd_coxeter::{todd_coxeter, CosetStatus, CosetTable};
use crate::fp::word::Word;
use std::sync::Arc;

use crate::group::{Group, GroupTable, DEFAULT_ORDER_CAP};
use crate::numtheory::prime_power_base;

/// Letters of relators used in the first enumeration attempt of a
/// simplified presentation; grows fourfold on each retry.
const INITIAL_RELATOR_BUDGET: usize = 16384;
/// Row cap for attempts that use only part of the relators, as a multiple
/// of the largest acceptable order.
const PARTIAL_ATTEMPT_FACTOR: usize = 1;
/// Row cap for the attempt with every relator, as a multiple of the largest
/// acceptable order (and never above `max_cosets`).
const FULL_ATTEMPT_FACTOR: usize = 16;

/// Regular representation of a complete coset table of the trivial subgroup.
/// Element `i` is the coset `i`; the returned list holds the element of each
/// generator.
pub fn table_to_group(ct: &CosetTable, name: impl Into<String>) -> Result<(GroupTable, Vec<usize>)> {
    table_to_group_capped(ct, name, DEFAULT_ORDER_CAP)
}

fn table_to_group_capped(ct: &CosetTable, name: impl Into<String>, cap: usize) -> Result<(GroupTable, Vec<usize>)> {
    if ct.status() != CosetStatus::Complete {
        return Err(Error::Invalid("coset table is not complete".into()));
    }
    let n = ct.coset_count();
    if n > cap {
        return Err(Error::OrderCap { order: n, cap });
    }
    let ncols = 2 * ct.generator_count();
    // spanning tree: each coset j > 0 is reached as parent·column
    let mut tree = vec![(usize::MAX, 0usize); n];
    let mut order = vec![0usize];
    tree[0] = (0, 0);
    let mut i = 0;
    while i < order.len() {
        let c = order[i];
        for x in 0..ncols {
            let d = ct.column(c, x);
            if tree[d].0 == usize::MAX {
                tree[d] = (c, x);
                order.push(d);
            }
        }
        i += 1;
    }
    if order.len() != n {
        return Err(Error::Invalid("coset table is not connected".into()));
    }
    let mut mult = vec![0u32; n * n];
    for a in 0..n {
        mult[a * n] = a as u32;
        for &j in &order[1..] {
            let (par, x) = tree[j];
            mult[a * n + j] = ct.column(mult[a * n + par] as usize, x) as u32;
        }
    }
    // otherwise the n permutations must be closed under the generators,
    // i.e. the action is regular
    for a in (0..n).filter(|_| !ct.subgroup_trivial()) {
        for j in 0..n {
            for x in 0..ncols {
                if mult[a * n + ct.column(j, x)] as usize != ct.column(mult[a * n + j] as usize, x) {
                    return Err(Error::Invalid("coset table is not a regular representation".into()));
                }
            }
        }
    }
    let prime = prime_power_base(n as u64).map(|p| p as u32);
    let group = GroupTable::from_flat_capped(name, n, mult, prime, cap)?;
    let images = (0..ct.generator_count()).map(|g| ct.column(0, 2 * g)).collect();
    Ok((group, images))
}

/// A group resolved from a presentation, with the element of every original
/// generator.
#[derive(Clone, Debug)]
pub struct EnumeratedGroup {
    pub group: Group,
    pub generator_images: Vec<usize>,
    /// Generators and relators left after simplification.
    pub simplified_shape: (usize, usize),
}

/// Resolves a presentation into a group table.
///
/// The presentation is simplified first. Long relator lists are enumerated
/// with a prefix of the shortest relators; relators that fail in the result
/// are added and the enumeration repeated, so the final group satisfies all of
/// them. Every original relator is then checked against the generator images.
pub fn enumerate_group(p: &Presentation, max_cosets: usize, name: impl Into<String>) -> Result<EnumeratedGroup> {
    enumerate_group_capped(p, max_cosets, DEFAULT_ORDER_CAP, name)
}

/// [`enumerate_group`] with an explicit cap on the order of the result. Row
/// counts during enumeration stay below a fixed multiple of that cap.
pub fn enumerate_group_capped(
    p: &Presentation,
    max_cosets: usize,
    max_order: usize,
    name: impl Into<String>,
) -> Result<EnumeratedGroup> {
    let s = simplify(p);
    let sp = &s.presentation;
    match abelian_quotient_order(sp) {
        AbelianOrder::Finite(n) if n > max_order as u128 => {
            return Err(Error::OrderCap { order: usize::try_from(n).unwrap_or(usize::MAX), cap: max_order })
        }
        AbelianOrder::Infinite => return Err(Error::Invalid("presentation has an infinite abelianization".into())),
        _ => {}
    }
    let rels = sp.relators();
    let mut budget = INITIAL_RELATOR_BUDGET;
    let mut chosen: Vec<bool> = vec![false; rels.len()];
    let ct = loop {
        let mut used = 0;
        for (i, r) in rels.iter().enumerate() {
            if !chosen[i] && used + r.len() > budget {
                break;
            }
            used += r.len();
            chosen[i] = true;
        }
        let all = chosen.iter().all(|&c| c);
        let subset: Vec<Word> = rels.iter().zip(&chosen).filter(|(_, &c)| c).map(|(r, _)| r.clone()).collect();
        let trial = Presentation::new(sp.generator_count(), subset)?;
        let factor = if all { FULL_ATTEMPT_FACTOR } else { PARTIAL_ATTEMPT_FACTOR };
        let cap = max_cosets.min(factor.saturating_mul(max_order));
        match todd_coxeter(&trial, &[], cap) {
            Ok(ct) if ct.coset_count() <= max_order || all => {
                let failing: Vec<usize> =
                    (0..rels.len()).filter(|&i| !chosen[i] && ct.trace(0, &rels[i]) != 0).collect();
                if failing.is_empty() {
                    break ct;
                }
                for i in failing {
                    chosen[i] = true;
                }
            }
            Ok(_) | Err(Error::CosetsExceeded { .. }) if !all => budget *= 4,
            Err(e) => return Err(e),
            Ok(_) => unreachable!("complete attempts are accepted above"),
        }
    };
    let (group, kept_images) = table_to_group_capped(&ct, name, max_order)?;
    let generator_images = s.expand_images(&kept_images, 0, |x| group.inv(x), |a, b| group.mul(a, b));
    for r in p.relators() {
        let v = r.evaluate(
            0,
            |g, inv| if inv { group.inv(generator_images[g]) } else { generator_images[g] },
            |a, b| group.mul(a, b),
        );
        if v != 0 {
            return Err(Error::Structure(format!("relator {r} does not hold after enumeration")));
        }
    }
    Ok(EnumeratedGroup {
        group: Arc::new(group),
        generator_images,
        simplified_shape: (sp.generator_count(), rels.len()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::fingerprint;

    #[test]
    fn regular_representation() {
        let p: Presentation = "<a,b | a^2, b^2, (a*b)^3>".parse().unwrap();
        let ct = todd_coxeter(&p, &[], 100).unwrap();
        let (g, gens) = table_to_group(&ct, "S3").unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(gens.len(), 2);
        assert_eq!(g.element_order(gens[0]), 2);
    }

    #[test]
    fn nontrivial_subgroup_table_is_rejected() {
        let p: Presentation = "<a,b | a^2, b^2, (a*b)^3>".parse().unwrap();
        let ct = todd_coxeter(&p, &[Word::generator(0)], 100).unwrap();
        assert!(table_to_group(&ct, "x").is_err());
    }

    #[test]
    fn quaternion_fingerprint() {
        let p: Presentation = "<a,b | a^4, a^2*b^-2, b^-1*a*b*a>".parse().unwrap();
        let e = enumerate_group(&p, 1000, "Q").unwrap();
        let f = fingerprint(&e.group);
        assert_eq!((f.order, f.exponent), (8, 4));
        assert_eq!((0..8).filter(|&x| e.group.element_order(x) == 2).count(), 1);
    }

    #[test]
    fn redundant_generators() {
        let p: Presentation = "<a,b,c,d | c = a*b, d = c*c, a^3, b^3, [a,b], d*a>".parse().unwrap();
        let e = enumerate_group(&p, 1000, "g").unwrap();
        // d = (ab)^2 = a^-1 forces b^2 = a^-3 = 1, so b = 1
        assert_eq!(e.group.order(), 3);
    }
}
