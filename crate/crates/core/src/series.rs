//! Central, derived, lower `p` and Frattini series, and the subgroups
//! `𝒟_n` and `𝓕_n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{
    center, commutator_subgroup, power_subgroup, product_of_normals, quotient_group, Group, SubgroupRef,
};

/// Longest series computed before giving up on stabilization.
pub const DEFAULT_TERM_BOUND: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    LowerCentral,
    UpperCentral,
    Derived,
    LowerP,
    Frattini,
}

impl SeriesKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SeriesKind::LowerCentral => "lower_central",
            SeriesKind::UpperCentral => "upper_central",
            SeriesKind::Derived => "derived",
            SeriesKind::LowerP => "lower_p",
            SeriesKind::Frattini => "frattini",
        }
    }

    pub fn is_ascending(self) -> bool {
        self == SeriesKind::UpperCentral
    }

    /// Index of the first term: `Z_0`, but `γ_1`, `Γ_1`, `λ_1`, `Ψ_1`.
    pub fn first_index(self) -> usize {
        if self.is_ascending() {
            0
        } else {
            1
        }
    }
}

/// Terms of a series up to the first repeat. Later terms equal the last one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesResult {
    pub kind: SeriesKind,
    pub terms: Vec<SubgroupRef>,
    /// Position in `terms` of the term that repeats; `None` when the term
    /// bound was hit first.
    pub stabilized_at: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    kind: SeriesKind,
    orders: Vec<usize>,
    terms: Vec<Vec<usize>>,
}

impl SeriesResult {
    /// Term with the series' own numbering (`Z_0`, `γ_1`, ...). Indices past
    /// stabilization return the stable term.
    pub fn term(&self, n: usize) -> &SubgroupRef {
        let first = self.kind.first_index();
        assert!(n >= first, "{} has no term {n}", self.kind.as_str());
        let i = (n - first).min(self.terms.len() - 1);
        &self.terms[i]
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(SubgroupRef::order).collect()
    }

    /// Number of steps to reach the trivial group (descending) or the whole
    /// group (ascending), if it does.
    pub fn length(&self) -> Option<usize> {
        let last = self.terms.last()?;
        let done = if self.kind.is_ascending() { last.is_whole() } else { last.is_trivial() };
        (done && self.stabilized_at.is_some()).then(|| self.terms.len() - 1)
    }

    pub fn to_json(&self) -> String {
        let j = SeriesJson {
            kind: self.kind,
            orders: self.orders(),
            terms: self.terms.iter().map(|t| t.elements().to_vec()).collect(),
        };
        serde_json::to_string(&j).expect("series serializes")
    }

    /// Rebuilds a series over `g` from its JSON form, checking every term.
    pub fn from_json(g: &Group, s: &str) -> Result<Self> {
        let j: SeriesJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let terms = j.terms.into_iter().map(|t| SubgroupRef::from_elements(g, t)).collect::<Result<Vec<_>>>()?;
        if terms.is_empty() || terms.iter().map(SubgroupRef::order).ne(j.orders.iter().copied()) {
            return Err(Error::Parse("series orders do not match its terms".into()));
        }
        let stabilized_at = Some(terms.len() - 1);
        Ok(SeriesResult { kind: j.kind, terms, stabilized_at })
    }
}

fn iterate(
    kind: SeriesKind,
    first: SubgroupRef,
    bound: usize,
    mut step: impl FnMut(&SubgroupRef) -> Result<SubgroupRef>,
) -> Result<SeriesResult> {
    let mut terms = vec![first];
    while terms.len() < bound {
        let next = step(terms.last().expect("nonempty"))?;
        if &next == terms.last().expect("nonempty") {
            let at = terms.len() - 1;
            return Ok(SeriesResult { kind, terms, stabilized_at: Some(at) });
        }
        terms.push(next);
    }
    Ok(SeriesResult { kind, terms, stabilized_at: None })
}

/// `γ_1 = G`, `γ_{n+1} = [γ_n, G]`.
pub fn lower_central_series(g: &Group) -> Result<SeriesResult> {
    lower_central_series_bounded(g, DEFAULT_TERM_BOUND)
}

pub fn lower_central_series_bounded(g: &Group, bound: usize) -> Result<SeriesResult> {
    let whole = SubgroupRef::whole(g);
    iterate(SeriesKind::LowerCentral, whole.clone(), bound, |t| commutator_subgroup(t, &whole))
}

/// `Z_0 = 1`, `Z_{n+1}/Z_n = Z(G/Z_n)`.
pub fn upper_central_series(g: &Group) -> Result<SeriesResult> {
    upper_central_series_bounded(g, DEFAULT_TERM_BOUND)
}

pub fn upper_central_series_bounded(g: &Group, bound: usize) -> Result<SeriesResult> {
    iterate(SeriesKind::UpperCentral, SubgroupRef::trivial(g), bound, |t| {
        let q = quotient_group(g, t)?;
        Ok(q.lift(&center(&q.group)))
    })
}

/// `Γ_1 = G`, `Γ_{n+1} = [Γ_n, Γ_n]`.
pub fn derived_series(g: &Group) -> Result<SeriesResult> {
    iterate(SeriesKind::Derived, SubgroupRef::whole(g), DEFAULT_TERM_BOUND, |t| commutator_subgroup(t, t))
}

fn require_p_group(g: &Group, p: u32) -> Result<()> {
    if !crate::numtheory::is_prime(p as u64) {
        return Err(Error::NotPrime(p));
    }
    g.require_prime(p)
}

/// `λ_1 = G`, `λ_n = λ_{n-1}^p [λ_{n-1}, G]`, cross-checked term by term
/// against `λ_n = γ_1^{p^{n-1}} γ_2^{p^{n-2}} ⋯ γ_n`.
pub fn lower_p_series(g: &Group, p: u32) -> Result<SeriesResult> {
    let s = lower_p_series_recursive(g, p)?;
    let gamma = lower_central_series(g)?;
    // one past stabilization as well, so the stable term is compared too
    for n in 1..=s.terms.len() + 1 {
        let closed = lower_p_closed_form_with(&gamma, p, n)?;
        if &closed != s.term(n) {
            return Err(Error::Structure(format!(
                "lower p-series term {n}: recursion gives order {}, product formula gives {}",
                s.term(n).order(),
                closed.order()
            )));
        }
    }
    Ok(s)
}

/// Recursive definition only.
pub fn lower_p_series_recursive(g: &Group, p: u32) -> Result<SeriesResult> {
    require_p_group(g, p)?;
    let whole = SubgroupRef::whole(g);
    iterate(SeriesKind::LowerP, whole.clone(), DEFAULT_TERM_BOUND, |t| {
        product_of_normals(g, &[power_subgroup(t, p as u64), commutator_subgroup(t, &whole)?])
    })
}

/// `λ_n = γ_1^{p^{n-1}} γ_2^{p^{n-2}} ⋯ γ_n`.
pub fn lower_p_closed_form(g: &Group, p: u32, n: usize) -> Result<SubgroupRef> {
    require_p_group(g, p)?;
    lower_p_closed_form_with(&lower_central_series(g)?, p, n)
}

fn lower_p_closed_form_with(gamma: &SeriesResult, p: u32, n: usize) -> Result<SubgroupRef> {
    assert!(n >= 1, "λ is numbered from 1");
    let g = gamma.terms[0].ambient().clone();
    let parts: Vec<SubgroupRef> = (1..=n)
        .map(|i| {
            let e = (p as u64).checked_pow((n - i) as u32);
            match e {
                Some(e) => power_subgroup(gamma.term(i), e),
                None => SubgroupRef::trivial(&g),
            }
        })
        .collect();
    product_of_normals(&g, &parts)
}

/// `Ψ_1 = G`, `Ψ_n = Ψ_{n-1}^p [Ψ_{n-1}, Ψ_{n-1}]`.
pub fn frattini_series(g: &Group, p: u32) -> Result<SeriesResult> {
    require_p_group(g, p)?;
    iterate(SeriesKind::Frattini, SubgroupRef::whole(g), DEFAULT_TERM_BOUND, |t| {
        product_of_normals(g, &[power_subgroup(t, p as u64), commutator_subgroup(t, t)?])
    })
}

/// `{ h : [..[[h, x_1], x_2], .., x_n] = 1 for all x_i ∈ terms(i) }`, by the
/// sweep `K_{n+1} = 1`, `K_i = { y : [y, x] ∈ K_{i+1} for all x ∈ terms(i) }`.
fn commutator_sweep(g: &Group, n: usize, terms: impl Fn(usize) -> SubgroupRef) -> Result<SubgroupRef> {
    assert!(n >= 1, "sweep depth starts at 1");
    let order = g.order();
    let mut k = vec![false; order];
    k[0] = true;
    for i in (1..=n).rev() {
        let xs = terms(i);
        k = (0..order).map(|y| xs.elements().iter().all(|&x| k[g.commutator(y, x)])).collect();
    }
    let s = SubgroupRef::from_elements(g, (0..order).filter(|&y| k[y]))?;
    s.require_normal()?;
    Ok(s)
}

/// `𝒟_n(G)`: iterated commutators with entries from the derived series vanish.
pub fn script_d_n(g: &Group, n: usize) -> Result<SubgroupRef> {
    let derived = derived_series(g)?;
    commutator_sweep(g, n, |i| derived.term(i).clone())
}

/// `𝓕_n(G)`: iterated commutators with entries from the Frattini series vanish.
pub fn script_f_n(g: &Group, p: u32, n: usize) -> Result<SubgroupRef> {
    let psi = frattini_series(g, p)?;
    commutator_sweep(g, n, |i| psi.term(i).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog::{self, CatalogSpec};
    use crate::group::iterated_commutator;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn grp(spec: &str) -> Group {
        Arc::new(catalog::catalog(spec).unwrap())
    }

    /// Brute-force `γ_n`: subgroup generated by all left-normed commutators
    /// of weight `n` in group elements.
    fn brute_gamma(g: &Group, n: usize) -> Vec<usize> {
        let mut words: Vec<usize> = (0..g.order()).collect();
        for _ in 1..n {
            let mut next = Vec::new();
            for &w in &words {
                for x in 0..g.order() {
                    next.push(g.commutator(w, x));
                }
            }
            next.sort_unstable();
            next.dedup();
            words = next;
        }
        SubgroupRef::closure(g, words).elements().to_vec()
    }

    #[test]
    fn abelian_lower_central() {
        let g = grp("C8");
        let s = lower_central_series(&g).unwrap();
        assert_eq!(s.orders(), vec![8, 1]);
        assert_eq!(s.stabilized_at, Some(1));
    }

    #[test]
    fn heisenberg_series() {
        let g = grp("heisenberg(3)");
        assert_eq!(lower_central_series(&g).unwrap().orders(), vec![27, 3, 1]);
        assert_eq!(upper_central_series(&g).unwrap().orders(), vec![1, 3, 27]);
        assert_eq!(derived_series(&g).unwrap().orders(), vec![27, 3, 1]);
        assert_eq!(lower_p_series(&g, 3).unwrap().orders(), vec![27, 3, 1]);
        assert_eq!(frattini_series(&g, 3).unwrap().orders(), vec![27, 3, 1]);
        for n in 1..=3 {
            let s = lower_central_series(&g).unwrap();
            assert_eq!(s.term(n).elements(), brute_gamma(&g, n).as_slice());
        }
    }

    #[test]
    fn dihedral_16_lower_central_has_length_three() {
        let g = grp("D16");
        let s = lower_central_series(&g).unwrap();
        assert_eq!(s.orders(), vec![16, 4, 2, 1]);
        assert_eq!(s.length(), Some(3));
        for n in 1..=4 {
            assert_eq!(s.term(n).elements(), brute_gamma(&g, n).as_slice());
        }
    }

    #[test]
    fn quaternion_upper_central() {
        let g = grp("Q8");
        assert_eq!(upper_central_series(&g).unwrap().orders(), vec![1, 2, 8]);
    }

    #[test]
    fn elementary_abelian_derived() {
        let g = grp("elementary_abelian(2,3)");
        assert_eq!(derived_series(&g).unwrap().orders(), vec![8, 1]);
    }

    #[test]
    fn lower_p_examples() {
        assert_eq!(lower_p_series(&grp("C9"), 3).unwrap().orders(), vec![9, 3, 1]);
        assert_eq!(lower_p_series(&grp("elementary_abelian(3,2)"), 3).unwrap().orders(), vec![9, 1]);
    }

    #[test]
    fn lower_p_rejects_wrong_prime() {
        assert!(matches!(lower_p_series(&grp("C9"), 2), Err(Error::PrimeMismatch { .. })));
        assert!(matches!(frattini_series(&grp("C9"), 2), Err(Error::PrimeMismatch { .. })));
    }

    #[test]
    fn frattini_examples() {
        assert_eq!(frattini_series(&grp("C8"), 2).unwrap().orders(), vec![8, 4, 2, 1]);
        assert_eq!(frattini_series(&grp("elementary_abelian(2,3)"), 2).unwrap().orders(), vec![8, 1]);
    }

    #[test]
    fn script_d_examples() {
        let h = grp("heisenberg(3)");
        assert_eq!(script_d_n(&h, 1).unwrap(), center(&h));
        assert!(script_d_n(&h, 2).unwrap().is_whole());
        let a = grp("C9");
        for n in 1..4 {
            assert!(script_d_n(&a, n).unwrap().is_whole());
        }
    }

    #[test]
    fn script_f_examples() {
        let d8 = grp("D8");
        assert_eq!(script_f_n(&d8, 2, 1).unwrap(), center(&d8));
        let f2 = script_f_n(&d8, 2, 2).unwrap();
        // Ψ_2(D8) = Z(D8) is central, so every double commutator vanishes
        assert!(f2.is_whole());
        let e = grp("elementary_abelian(3,2)");
        assert!(script_f_n(&e, 3, 2).unwrap().is_whole());
    }

    #[test]
    fn term_past_stabilization() {
        let g = grp("heisenberg(3)");
        let s = lower_central_series(&g).unwrap();
        assert!(s.term(7).is_trivial());
        let z = upper_central_series(&g).unwrap();
        assert!(z.term(9).is_whole());
    }

    #[test]
    fn json_round_trip() {
        let g = grp("D16");
        let s = lower_central_series(&g).unwrap();
        let j = s.to_json();
        assert!(j.starts_with(r#"{"kind":"lower_central","orders":[16,4,2,1],"terms":[["#));
        let back = SeriesResult::from_json(&g, &j).unwrap();
        assert_eq!(back.terms, s.terms);
    }

    #[test]
    fn non_nilpotent_upper_central_stops() {
        // S3 = C3:C2 has trivial center
        let s3 = Arc::new(catalog::semidirect_cyclic(3, 2, 2).unwrap());
        let z = upper_central_series(&s3).unwrap();
        assert_eq!(z.orders(), vec![1]);
        assert_eq!(z.length(), None);
        let l = lower_central_series(&s3).unwrap();
        assert_eq!(l.orders(), vec![6, 3]);
    }

    fn small_p_groups() -> Vec<Group> {
        [
            "C8",
            "D8",
            "Q8",
            "D16",
            "SD16",
            "modular(16)",
            "heisenberg(3)",
            "extraspecial_exp_p2(3)",
            "direct_product(D8,C2)",
            "wreath(2)",
            "wreath(3)",
            "C9",
        ]
        .iter()
        .map(|s| grp(s))
        .collect()
    }

    fn spec_groups() -> impl Strategy<Value = Group> {
        let gs = small_p_groups();
        (0..gs.len()).prop_map(move |i| gs[i].clone())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn central_series_shapes(g in spec_groups()) {
            let p = g.prime().unwrap();
            let gamma = lower_central_series(&g).unwrap();
            let z = upper_central_series(&g).unwrap();
            for w in gamma.terms.windows(2) {
                prop_assert!(w[1].is_subset(&w[0]));
            }
            for w in z.terms.windows(2) {
                prop_assert!(w[0].is_subset(&w[1]));
            }
            for t in gamma.terms.iter().chain(&z.terms) {
                prop_assert!(t.is_normal());
                prop_assert_eq!(g.order() % t.order(), 0);
            }
            // nilpotent: both reach the end in the same number of steps
            prop_assert_eq!(gamma.length(), z.length());
            for n in 1..6 {
                let zn = z.term(n);
                prop_assert!(zn.is_subset(&script_d_n(&g, n).unwrap()));
            }
            // [γ_j, Z_k] ⊆ Z_{k-j}
            for k in 1..5 {
                for j in 1..=k {
                    let c = commutator_subgroup(gamma.term(j), z.term(k)).unwrap();
                    prop_assert!(c.is_subset(z.term(k - j)));
                }
            }
            let lam = lower_p_series(&g, p).unwrap();
            for n in 1..6 {
                prop_assert_eq!(lam.term(n), &lower_p_closed_form(&g, p, n).unwrap());
                prop_assert!(gamma.term(n).is_subset(lam.term(n)));
            }
        }

        #[test]
        fn iterated_commutator_matches_lower_central(g in spec_groups(), k in 0usize..4) {
            let whole = SubgroupRef::whole(&g);
            let it = iterated_commutator(&whole, &whole, k).unwrap();
            let gamma = lower_central_series(&g).unwrap();
            prop_assert_eq!(&it, gamma.term(k + 1));
        }
    }

    #[test]
    fn every_catalog_spec_parses_for_series() {
        for s in ["C27", "heisenberg(5)"] {
            let g = Arc::new(s.parse::<CatalogSpec>().unwrap().build().unwrap());
            let p = g.prime().unwrap();
            lower_p_series(&g, p).unwrap();
        }
    }
}
