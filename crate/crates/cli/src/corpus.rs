use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use pgtk_core::error::{Error, Result};
use pgtk_core::group::{fingerprint, validate_table, CatalogSpec, Fingerprint, Group};
use pgtk_core::numtheory::is_prime;
use serde::{Deserialize, Serialize};

/// Constructor families a corpus may draw from.
pub const CONSTRUCTORS: &[&str] = &[
    "cyclic",
    "elementary_abelian",
    "heisenberg",
    "extraspecial_exp_p2",
    "dihedral",
    "quaternion",
    "semidihedral",
    "modular",
    "wreath",
    "metacyclic",
    "direct_product",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub primes: Vec<u32>,
    /// Largest group order per prime.
    pub max_order: BTreeMap<u32, usize>,
    pub constructors: Vec<String>,
    pub seed: u64,
}

impl Default for CorpusSpec {
    /// `p = 2` up to 128, `p = 3` up to 243, `p = 5` up to 125, every constructor.
    fn default() -> Self {
        CorpusSpec {
            primes: vec![2, 3, 5],
            max_order: BTreeMap::from([(2, 128), (3, 243), (5, 125)]),
            constructors: CONSTRUCTORS.iter().map(|s| s.to_string()).collect(),
            seed: 0,
        }
    }
}

impl CorpusSpec {
    /// The given primes, all with the same order cap, every constructor.
    pub fn uniform(primes: &[u32], max_order: usize) -> Self {
        CorpusSpec {
            primes: primes.to_vec(),
            max_order: primes.iter().map(|&p| (p, max_order)).collect(),
            ..CorpusSpec::default()
        }
    }

    fn validate(&self) -> Result<()> {
        for &p in &self.primes {
            if !is_prime(p as u64) {
                return Err(Error::NotPrime(p));
            }
            if !self.max_order.contains_key(&p) {
                return Err(Error::Invalid(format!("no max order given for p = {p}")));
            }
        }
        if let Some(c) = self.constructors.iter().find(|c| !CONSTRUCTORS.contains(&c.as_str())) {
            return Err(Error::Invalid(format!("unknown constructor `{c}`")));
        }
        Ok(())
    }

    fn allows(&self, c: &str) -> bool {
        self.constructors.iter().any(|x| x == c)
    }
}

#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub spec: CatalogSpec,
    pub prime: u32,
    pub group: Group,
}

impl CorpusItem {
    pub fn name(&self) -> String {
        self.spec.to_string()
    }
}

/// Fingerprint plus the sorted element-order histogram, which separates
/// D8 from Q8 and D16 from SD16.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct DedupKey {
    fingerprint: Fingerprint,
    order_counts: BTreeMap<usize, usize>,
}

fn dedup_key(g: &Group) -> DedupKey {
    let mut order_counts = BTreeMap::new();
    for x in 0..g.order() {
        *order_counts.entry(g.element_order(x)).or_insert(0) += 1;
    }
    DedupKey { fingerprint: fingerprint(g), order_counts }
}

fn powers(p: u32, max: usize) -> impl Iterator<Item = (u32, usize)> {
    (1u32..).map(move |k| (k, (p as usize).pow(k))).take_while(move |&(_, n)| n <= max)
}

/// Indecomposable-by-construction candidates for one prime, unfiltered.
fn base_specs(spec: &CorpusSpec, p: u32, max: usize) -> Vec<(&'static str, CatalogSpec)> {
    use CatalogSpec::*;
    let mut out = Vec::new();
    for (k, n) in powers(p, max) {
        out.push(("cyclic", Cyclic(n)));
        if k >= 2 {
            out.push(("elementary_abelian", ElementaryAbelian(p, k)));
        }
    }
    let cube = (p as usize).pow(3);
    if cube <= max
        && p != 2 {
            out.push(("heisenberg", Heisenberg(p)));
            out.push(("extraspecial_exp_p2", ExtraspecialExpP2(p)));
        }
    if p == 2 {
        for (k, n) in powers(2, max) {
            if k >= 3 {
                out.push(("dihedral", Dihedral(n)));
            }
            if k >= 4 {
                out.push(("semidihedral", Semidihedral(n)));
                out.push(("modular", Modular(n)));
            }
        }
        if 8 <= max {
            out.push(("quaternion", Quaternion8));
        }
    }
    if (p as usize).checked_pow(p + 1).is_some_and(|n| n <= max) {
        out.push(("wreath", Wreath(p)));
    }
    for (a, na) in powers(p, max).filter(|&(a, _)| a >= 2) {
        for (_, nb) in powers(p, max / na) {
            let mut rs = BTreeSet::from([1 + (p as usize).pow(a - 1)]);
            rs.insert(1 + p as usize);
            for r in rs {
                out.push(("metacyclic", SemidirectCyclic(na, nb, r % na)));
            }
        }
    }
    out.retain(|(c, _)| spec.allows(c));
    out
}

/// Every allowed catalog group of each prime within its order cap, then
/// direct products of two of them within the cap, deduplicated (first
/// occurrence wins) and sorted by prime, order and name.
pub fn build_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusItem>> {
    spec.validate()?;
    let mut out = Vec::new();
    let primes: BTreeSet<u32> = spec.primes.iter().copied().collect();
    for p in primes {
        let max = spec.max_order[&p];
        let mut seen = BTreeSet::new();
        let mut items: Vec<CorpusItem> = Vec::new();
        let mut admit = |cs: CatalogSpec, items: &mut Vec<CorpusItem>| -> Result<()> {
            let table = match cs.build() {
                Ok(t) => t,
                Err(Error::InvalidAction(_)) => return Ok(()),
                Err(e) => return Err(e),
            };
            if let Err(v) = validate_table(&table.to_data()) {
                return Err(Error::InvalidTable(format!("{cs}: {v}")));
            }
            if table.prime() != Some(p) {
                return Err(Error::InvalidTable(format!("{cs} is not tagged as a {p}-group")));
            }
            let group = Arc::new(table.with_name(cs.to_string()));
            if seen.insert(dedup_key(&group)) {
                items.push(CorpusItem { spec: cs, prime: p, group });
            }
            Ok(())
        };
        let bases = base_specs(spec, p, max);
        for (_, cs) in &bases {
            if cs.order().is_some_and(|n| n <= max) {
                admit(cs.clone(), &mut items)?;
            }
        }
        if spec.allows("direct_product") {
            let factors: Vec<CatalogSpec> = items.iter().map(|i| i.spec.clone()).collect();
            for (i, a) in factors.iter().enumerate() {
                for b in &factors[i..] {
                    // larger factor first: C9×C3, not C3×C9
                    let (x, y) = if (b.order(), b.to_string()) > (a.order(), a.to_string()) { (b, a) } else { (a, b) };
                    let prod = CatalogSpec::DirectProduct(Box::new(x.clone()), Box::new(y.clone()));
                    if prod.order().is_some_and(|n| n <= max) {
                        admit(prod, &mut items)?;
                    }
                }
            }
        }
        items.sort_by_key(|a| (a.group.order(), a.name()));
        out.extend(items);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(spec: &CorpusSpec) -> Vec<String> {
        build_corpus(spec).unwrap().iter().map(|i| i.name()).collect()
    }

    #[test]
    fn three_groups_up_to_27() {
        let n = names(&CorpusSpec::uniform(&[3], 27));
        for s in [
            "cyclic(27)",
            "direct_product(cyclic(9),cyclic(3))",
            "elementary_abelian(3,3)",
            "heisenberg(3)",
            "extraspecial_exp_p2(3)",
        ] {
            assert!(n.contains(&s.to_string()), "{s} missing from {n:?}");
        }
        // every group of order dividing 27, exactly once
        assert_eq!(n.len(), 1 + 2 + 5);
    }

    #[test]
    fn two_groups_up_to_16() {
        let n = names(&CorpusSpec::uniform(&[2], 16));
        for s in [
            "cyclic(16)",
            "direct_product(cyclic(8),cyclic(2))",
            "direct_product(cyclic(4),cyclic(4))",
            "direct_product(elementary_abelian(2,2),cyclic(4))",
            "elementary_abelian(2,4)",
            "dihedral(8)",
            "dihedral(16)",
            "quaternion(8)",
            "semidihedral(16)",
        ] {
            assert!(n.contains(&s.to_string()), "{s} missing from {n:?}");
        }
    }

    #[test]
    fn empty_whitelist_gives_empty_corpus() {
        let spec = CorpusSpec { constructors: vec![], ..CorpusSpec::default() };
        assert!(build_corpus(&spec).unwrap().is_empty());
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(build_corpus(&CorpusSpec::uniform(&[4], 16)).is_err());
        let spec = CorpusSpec { constructors: vec!["klein".into()], ..CorpusSpec::default() };
        assert!(build_corpus(&spec).is_err());
    }

    #[test]
    fn corpus_is_deterministic_and_tagged() {
        let spec = CorpusSpec::uniform(&[2, 5], 32);
        let a = build_corpus(&spec).unwrap();
        let b = build_corpus(&spec).unwrap();
        assert_eq!(a.iter().map(|i| i.name()).collect::<Vec<_>>(), b.iter().map(|i| i.name()).collect::<Vec<_>>());
        for i in &a {
            assert_eq!(i.group.prime(), Some(i.prime));
            assert!(i.group.order() <= 32);
        }
    }
}
