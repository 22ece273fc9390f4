use pgtk_core::fp::{abelian_quotient_order, reference_presentation, AbelianOrder};
use pgtk_core::group::{
    catalog, center, commutator_subgroup, fingerprint, normal_closure, power_subgroup, quotient_group, shared,
    CatalogSpec, Group, SubgroupRef,
};
use pgtk_core::powerful::{
    check_lubotzky_mann_suite, check_theorem_a_i, check_theorem_a_ii, is_powerful, is_powerfully_embedded, Outcome,
};
use pgtk_core::series::{lower_central_series, lower_p_series, upper_central_series};
use proptest::prelude::*;

const GROUPS: &[(&str, u32)] = &[
    ("C8", 2),
    ("elementary_abelian(2,3)", 2),
    ("D8", 2),
    ("Q8", 2),
    ("D16", 2),
    ("SD16", 2),
    ("modular(16)", 2),
    ("direct_product(D8,C2)", 2),
    ("wreath(2)", 2),
    ("C27", 3),
    ("heisenberg(3)", 3),
    ("XP2(3)", 3),
    ("direct_product(C9,C3)", 3),
    ("semidirect_cyclic(9,3,4)", 3),
    ("wreath(3)", 3),
    ("heisenberg(5)", 5),
];

fn pick() -> impl Strategy<Value = (Group, u32)> {
    (0..GROUPS.len()).prop_map(|i| (shared(catalog(GROUPS[i].0).unwrap()), GROUPS[i].1))
}

fn with_elements(k: usize) -> impl Strategy<Value = (Group, u32, Vec<usize>)> {
    pick().prop_flat_map(move |(g, p)| {
        let n = g.order();
        (Just(g), Just(p), proptest::collection::vec(0..n, k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn table_laws((g, _, xs) in with_elements(3)) {
        let (a, b, c) = (xs[0], xs[1], xs[2]);
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inv(a)), 0);
        prop_assert_eq!(g.mul(0, a), a);
        prop_assert_eq!(g.pow(a, g.element_order(a) as i64), 0);
        prop_assert_eq!(g.inv(g.mul(a, b)), g.mul(g.inv(b), g.inv(a)));
        prop_assert_eq!(g.commutator(a, b), g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    }

    #[test]
    fn closures_are_subgroups((g, _, xs) in with_elements(2)) {
        let s = SubgroupRef::closure(&g, xs.clone());
        for &x in &xs {
            prop_assert!(s.contains(x));
        }
        prop_assert_eq!(g.order() % s.order(), 0);
        for &x in s.elements() {
            for &y in s.elements() {
                prop_assert!(s.contains(g.mul(x, y)));
            }
        }
        let nc = normal_closure(&g, xs);
        prop_assert!(nc.is_normal());
        prop_assert!(s.is_subset(&nc));
    }

    #[test]
    fn lattice_operations((g, _, xs) in with_elements(2)) {
        let a = normal_closure(&g, [xs[0]]);
        let b = normal_closure(&g, [xs[1]]);
        let meet = a.intersection(&b).unwrap();
        let join = a.join(&b).unwrap();
        prop_assert!(meet.is_subset(&a) && meet.is_subset(&b));
        prop_assert!(a.is_subset(&join) && b.is_subset(&join));
        // |AB| |A ∩ B| = |A| |B|
        prop_assert_eq!(join.order() * meet.order(), a.order() * b.order());
        let c = commutator_subgroup(&a, &b).unwrap();
        prop_assert!(c.is_normal());
        prop_assert!(c.is_subset(&meet));
    }

    #[test]
    fn quotient_projection_is_a_surjective_hom((g, _, xs) in with_elements(3)) {
        let n = normal_closure(&g, [xs[0]]);
        let q = quotient_group(&g, &n).unwrap();
        prop_assert_eq!(q.group.order() * n.order(), g.order());
        prop_assert!(q.projection.is_surjective());
        prop_assert_eq!(q.projection.kernel(), n);
        let (a, b) = (xs[1], xs[2]);
        prop_assert_eq!(q.projection.apply(g.mul(a, b)), q.group.mul(q.projection.apply(a), q.projection.apply(b)));
    }

    #[test]
    fn series_shapes((g, p) in pick()) {
        let gamma = lower_central_series(&g).unwrap();
        let z = upper_central_series(&g).unwrap();
        // a p-group is nilpotent, and the two central series have equal length
        prop_assert_eq!(gamma.length(), z.length());
        prop_assert_eq!(z.term(1), &center(&g));
        let lam = lower_p_series(&g, p).unwrap();
        for i in 1..=gamma.terms.len() {
            prop_assert!(gamma.term(i).is_subset(lam.term(i)));
            prop_assert!(lam.term(i + 1).is_subset(lam.term(i)));
        }
    }

    #[test]
    fn powerful_facts((g, p) in pick(), n in 1usize..4) {
        prop_assert_ne!(check_theorem_a_i(&g, p, n).unwrap().outcome(), Outcome::Violation);
        prop_assert_ne!(check_theorem_a_ii(&g, p, n).unwrap().outcome(), Outcome::Violation);
        if is_powerful(&g, p).unwrap() {
            prop_assert!(check_lubotzky_mann_suite(&g, p).unwrap().all_hold());
        }
        let whole = SubgroupRef::whole(&g);
        prop_assert!(is_powerfully_embedded(&SubgroupRef::trivial(&g), p).unwrap());
        prop_assert_eq!(is_powerful(&g, p).unwrap(), is_powerfully_embedded(&whole, p).unwrap());
        // G^p is normal, so [G^p, G] stays inside it
        let gp = power_subgroup(&whole, p as u64);
        let c = commutator_subgroup(&gp, &whole).unwrap();
        prop_assert!(c.is_subset(&gp));
    }

    #[test]
    fn abelian_groups_are_powerful(e in proptest::collection::vec(1u32..4, 1..4), p in prop::sample::select(vec![2u32, 3])) {
        let spec = e.iter().map(|&k| format!("C{}", p.pow(k))).reduce(|a, b| format!("direct_product({a},{b})")).unwrap();
        prop_assume!(p.pow(e.iter().sum()) <= 729);
        let g = shared(catalog(&spec).unwrap());
        prop_assert!(is_powerful(&g, p).unwrap());
    }

    #[test]
    fn product_fingerprint_is_symmetric(i in 0..GROUPS.len(), j in 0..GROUPS.len()) {
        let (a, b) = (GROUPS[i].0, GROUPS[j].0);
        prop_assume!(GROUPS[i].1 == GROUPS[j].1);
        let ab = catalog(&format!("direct_product({a},{b})"));
        let ba = catalog(&format!("direct_product({b},{a})"));
        if let (Ok(ab), Ok(ba)) = (ab, ba) {
            prop_assert_eq!(fingerprint(&shared(ab)), fingerprint(&shared(ba)));
        }
    }

    #[test]
    fn abelianization_of_reference_presentation(i in 0..GROUPS.len()) {
        let spec: CatalogSpec = GROUPS[i].0.parse().unwrap();
        let g = shared(spec.build().unwrap());
        let whole = SubgroupRef::whole(&g);
        let derived = commutator_subgroup(&whole, &whole).unwrap();
        let p = reference_presentation(&spec).unwrap();
        prop_assert_eq!(abelian_quotient_order(&p), AbelianOrder::Finite((g.order() / derived.order()) as u128));
    }
}
