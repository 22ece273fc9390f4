//! Powerful p-groups, powerfully embedded subgroups, and checkers for the
//! theorems that conclude one of these from a hypothesis on a quotient.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{
    commutator_subgroup, normal_closure, power_set, power_subgroup, quotient_group, Group, SubgroupRef,
};
use crate::series::{
    derived_series, frattini_series, lower_central_series, lower_p_series, script_d_n, script_f_n, upper_central_series,
};

/// `p` for odd primes, `4` for `p = 2`.
pub fn powerful_exponent(p: u32) -> u64 {
    if p == 2 {
        4
    } else {
        p as u64
    }
}

fn check_prime(p: u32) -> Result<()> {
    if crate::numtheory::is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// A pair `(x, y)` with `[x, y]` outside `s^p` (`s^4` for `p = 2`), where `x`
/// ranges over `s` and `y` over `over`.
fn embedding_witness(s: &SubgroupRef, over: &SubgroupRef, p: u32) -> Option<(usize, usize)> {
    let g = s.ambient();
    let pw = power_subgroup(s, powerful_exponent(p));
    if commutator_subgroup(s, over).expect("same ambient").is_subset(&pw) {
        return None;
    }
    for &x in s.elements() {
        for &y in over.elements() {
            if !pw.contains(g.commutator(x, y)) {
                return Some((x, y));
            }
        }
    }
    unreachable!("commutator subgroup escapes s^p without an escaping commutator")
}

/// Witness that `s` (as a group) is not powerful.
pub fn powerful_witness(s: &SubgroupRef, p: u32) -> Option<(usize, usize)> {
    let g = s.ambient();
    let pw = power_subgroup(s, powerful_exponent(p));
    let c = commutator_subgroup(s, s).expect("same ambient");
    if c.is_subset(&pw) {
        return None;
    }
    for &x in s.elements() {
        for &y in s.elements() {
            if !pw.contains(g.commutator(x, y)) {
                return Some((x, y));
            }
        }
    }
    unreachable!("commutator subgroup escapes s^p without an escaping commutator")
}

/// `[G, G] ⊆ G^p` (`G^4` when `p = 2`).
pub fn is_powerful(g: &Group, p: u32) -> Result<bool> {
    check_prime(p)?;
    g.require_prime(p)?;
    Ok(is_powerful_subgroup(&SubgroupRef::whole(g), p))
}

/// Powerfulness of a subgroup regarded as a group in its own right.
pub fn is_powerful_subgroup(s: &SubgroupRef, p: u32) -> bool {
    let c = commutator_subgroup(s, s).expect("same ambient");
    c.is_subset(&power_subgroup(s, powerful_exponent(p)))
}

/// `[N, G] ⊆ N^p` (`N^4` when `p = 2`) for a normal subgroup `N`.
pub fn is_powerfully_embedded(n: &SubgroupRef, p: u32) -> Result<bool> {
    check_prime(p)?;
    n.require_normal()?;
    let c = commutator_subgroup(n, &SubgroupRef::whole(n.ambient()))?;
    Ok(c.is_subset(&power_subgroup(n, powerful_exponent(p))))
}

fn is_powerful_quotient(h: &Group, n: &SubgroupRef, p: u32) -> Result<bool> {
    let q = quotient_group(h, n)?;
    Ok(is_powerful_subgroup(&SubgroupRef::whole(&q.group), p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    /// `H/Z_{n-1}` powerful ⇒ `γ_n` powerfully embedded.
    #[serde(rename = "A_i")]
    AI,
    /// `H/Z_{n-1}` powerful ⇒ `λ_n` powerfully embedded (`p` odd) or
    /// powerful (`p = 2`).
    #[serde(rename = "A_ii")]
    AII,
    /// `H/𝒟_{n-1}` powerful ⇒ `Γ_n` powerfully embedded (`p` odd).
    #[serde(rename = "A_iii")]
    AIII,
    /// `N ⊆ Z_n`, `H/N` powerful ⇒ `γ_{n+1}` powerful.
    #[serde(rename = "B_i")]
    BI,
    /// `N ⊆ 𝒟_n`, `H/N` powerful ⇒ `Γ_{n+1}` powerful.
    #[serde(rename = "B_ii")]
    BII,
    /// `N ⊆ 𝓕_n` of exponent `p` ⇒ `Ψ_{n+1}` finite.
    #[serde(rename = "frattini_i")]
    FrattiniI,
    /// `N ⊆ 𝓕_n` of exponent `p`, `H/N` powerful ⇒ `Ψ_{n+1}` powerful.
    #[serde(rename = "frattini_ii")]
    FrattiniII,
    /// `M` powerful, `μ(M)` powerfully embedded ⇒ `M ⊗ G`, `M ⊗^p G`
    /// powerful and `γ_2(M⊗G) ⊆ τ_1 ⊆ (M⊗G)^p`.
    #[serde(rename = "tensor_powerful")]
    TensorPowerful,
}

impl TheoremId {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::AI => "A_i",
            TheoremId::AII => "A_ii",
            TheoremId::AIII => "A_iii",
            TheoremId::BI => "B_i",
            TheoremId::BII => "B_ii",
            TheoremId::FrattiniI => "frattini_i",
            TheoremId::FrattiniII => "frattini_ii",
            TheoremId::TensorPowerful => "tensor_powerful",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Evidence that a conclusion fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// Elements whose commutator leaves the required power subgroup.
    Elements { x: usize, y: usize },
    /// A subgroup that is not contained in another.
    Containment { inner: Vec<usize>, outer: Vec<usize> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    SubstantivePass,
    VacuousPass,
    Violation,
}

/// One evaluation of a theorem statement on one input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub theorem_id: TheoremId,
    pub group_name: String,
    pub parameter_n: usize,
    /// Which normal subgroup played the role of `N`, when there is one.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub subgroup: Option<String>,
    pub hypothesis_holds: bool,
    pub conclusion_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl TheoremCheck {
    /// The witness closure runs only for a violation.
    pub fn new(
        theorem_id: TheoremId,
        group_name: &str,
        parameter_n: usize,
        hypothesis_holds: bool,
        conclusion_holds: bool,
        witness: impl FnOnce() -> Option<Witness>,
    ) -> Self {
        let witness = if hypothesis_holds && !conclusion_holds { witness() } else { None };
        TheoremCheck {
            theorem_id,
            group_name: group_name.to_string(),
            parameter_n,
            subgroup: None,
            hypothesis_holds,
            conclusion_holds,
            witness,
        }
    }

    pub fn with_subgroup(mut self, label: impl Into<String>) -> Self {
        self.subgroup = Some(label.into());
        self
    }

    pub fn outcome(&self) -> Outcome {
        match (self.hypothesis_holds, self.conclusion_holds) {
            (false, _) => Outcome::VacuousPass,
            (true, true) => Outcome::SubstantivePass,
            (true, false) => Outcome::Violation,
        }
    }
}

fn elements_witness(w: Option<(usize, usize)>) -> Option<Witness> {
    w.map(|(x, y)| Witness::Elements { x, y })
}

fn embedded_check(id: TheoremId, h: &Group, n: usize, hyp: bool, s: &SubgroupRef, p: u32) -> TheoremCheck {
    let whole = SubgroupRef::whole(h);
    let w = embedding_witness(s, &whole, p);
    TheoremCheck::new(id, h.name(), n, hyp, w.is_none(), || elements_witness(w))
}

fn powerful_check(id: TheoremId, h: &Group, n: usize, hyp: bool, s: &SubgroupRef, p: u32) -> TheoremCheck {
    let w = powerful_witness(s, p);
    TheoremCheck::new(id, h.name(), n, hyp, w.is_none(), || elements_witness(w))
}

fn require_n(n: usize, least: usize) -> Result<()> {
    if n < least {
        return Err(Error::Invalid(format!("n must be at least {least}")));
    }
    Ok(())
}

fn require_odd(p: u32) -> Result<()> {
    check_prime(p)?;
    if p == 2 {
        return Err(Error::Invalid("this statement is only made for odd p".into()));
    }
    Ok(())
}

/// `H/Z_{n-1}(H)` powerful ⇒ `γ_n(H)` powerfully embedded.
pub fn check_theorem_a_i(h: &Group, p: u32, n: usize) -> Result<TheoremCheck> {
    require_n(n, 1)?;
    check_prime(p)?;
    h.require_prime(p)?;
    let hyp = is_powerful_quotient(h, upper_central_series(h)?.term(n - 1), p)?;
    Ok(embedded_check(TheoremId::AI, h, n, hyp, lower_central_series(h)?.term(n), p))
}

/// `H/Z_{n-1}(H)` powerful ⇒ `λ_n(H)` powerfully embedded for odd `p`, and
/// `λ_n(H)` powerful for `p = 2`.
pub fn check_theorem_a_ii(h: &Group, p: u32, n: usize) -> Result<TheoremCheck> {
    require_n(n, 1)?;
    check_prime(p)?;
    h.require_prime(p)?;
    let hyp = is_powerful_quotient(h, upper_central_series(h)?.term(n - 1), p)?;
    let lam = lower_p_series(h, p)?;
    if p == 2 {
        Ok(powerful_check(TheoremId::AII, h, n, hyp, lam.term(n), p))
    } else {
        Ok(embedded_check(TheoremId::AII, h, n, hyp, lam.term(n), p))
    }
}

/// `H/𝒟_{n-1}(H)` powerful ⇒ `Γ_n(H)` powerfully embedded (odd `p`).
pub fn check_theorem_a_iii(h: &Group, p: u32, n: usize) -> Result<TheoremCheck> {
    require_n(n, 2)?;
    require_odd(p)?;
    h.require_prime(p)?;
    let hyp = is_powerful_quotient(h, &script_d_n(h, n - 1)?, p)?;
    Ok(embedded_check(TheoremId::AIII, h, n, hyp, derived_series(h)?.term(n), p))
}

/// `None` when `inner ⊆ outer`, else both element lists.
pub fn containment_witness(inner: &SubgroupRef, outer: &SubgroupRef) -> Option<Witness> {
    (!inner.is_subset(outer))
        .then(|| Witness::Containment { inner: inner.elements().to_vec(), outer: outer.elements().to_vec() })
}

/// Part (i): `N ⊆ Z_n(H)` and `H/N` powerful ⇒ `γ_{n+1}(H)` powerful.
pub fn check_theorem_b_i(h: &Group, n_sub: &SubgroupRef, p: u32, n: usize) -> Result<TheoremCheck> {
    require_n(n, 1)?;
    require_odd(p)?;
    n_sub.require_normal()?;
    let hyp = n_sub.is_subset(upper_central_series(h)?.term(n)) && is_powerful_quotient(h, n_sub, p)?;
    Ok(powerful_check(TheoremId::BI, h, n, hyp, lower_central_series(h)?.term(n + 1), p))
}

/// Part (ii): `N ⊆ 𝒟_n(H)` and `H/N` powerful ⇒ `Γ_{n+1}(H)` powerful.
pub fn check_theorem_b_ii(h: &Group, n_sub: &SubgroupRef, p: u32, n: usize) -> Result<TheoremCheck> {
    require_n(n, 1)?;
    require_odd(p)?;
    n_sub.require_normal()?;
    let hyp = n_sub.is_subset(&script_d_n(h, n)?) && is_powerful_quotient(h, n_sub, p)?;
    Ok(powerful_check(TheoremId::BII, h, n, hyp, derived_series(h)?.term(n + 1), p))
}

/// Both parts.
pub fn check_theorem_b(h: &Group, n_sub: &SubgroupRef, p: u32, n: usize) -> Result<[TheoremCheck; 2]> {
    Ok([check_theorem_b_i(h, n_sub, p, n)?, check_theorem_b_ii(h, n_sub, p, n)?])
}

/// `N ⊆ 𝓕_n(H)` of exponent `p`. Part (i), finiteness of `Ψ_{n+1}`, holds
/// for every finite input and is recorded as such. Part (ii), for odd `p`
/// and `H/N` powerful, asks for `Ψ_{n+1}(H)` powerful.
pub fn check_frattini_theorem(h: &Group, n_sub: &SubgroupRef, p: u32, n: usize) -> Result<Vec<TheoremCheck>> {
    require_n(n, 1)?;
    check_prime(p)?;
    h.require_prime(p)?;
    n_sub.require_normal()?;
    let base = n_sub.is_subset(&script_f_n(h, p, n)?) && n_sub.exponent() as u64 <= p as u64;
    let mut out = vec![TheoremCheck::new(TheoremId::FrattiniI, h.name(), n, base, true, || None)];
    if p != 2 {
        let hyp = base && is_powerful_quotient(h, n_sub, p)?;
        out.push(powerful_check(TheoremId::FrattiniII, h, n, hyp, frattini_series(h, p)?.term(n + 1), p));
    }
    Ok(out)
}

/// One line of the Lubotzky–Mann check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactCheck {
    pub fact: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LubotzkyMannReport {
    pub group_name: String,
    pub facts: Vec<FactCheck>,
}

impl LubotzkyMannReport {
    pub fn all_hold(&self) -> bool {
        self.facts.iter().all(|f| f.holds)
    }
}

/// For powerful `G`: `γ_i`, `Z_i`, `G^{p^i}`, `λ_i` are powerfully embedded,
/// and `G^{p^i}` is exactly the set of `p^i`-th powers, for every `i` up to
/// the point where all of them stabilize.
pub fn check_lubotzky_mann_suite(g: &Group, p: u32) -> Result<LubotzkyMannReport> {
    if !is_powerful(g, p)? {
        return Err(Error::Invalid(format!("{} is not powerful", g.name())));
    }
    let gamma = lower_central_series(g)?;
    let z = upper_central_series(g)?;
    let lam = lower_p_series(g, p)?;
    let whole = SubgroupRef::whole(g);
    let mut facts = Vec::new();
    let mut push = |fact: String, holds: bool| facts.push(FactCheck { fact, holds });
    let top = gamma.terms.len().max(z.terms.len()).max(lam.terms.len()) + 1;
    let mut i = 1;
    let mut e = p as u64;
    loop {
        push(format!("gamma_{i} powerfully embedded"), is_powerfully_embedded(gamma.term(i), p)?);
        push(format!("Z_{i} powerfully embedded"), is_powerfully_embedded(z.term(i), p)?);
        push(format!("lambda_{i} powerfully embedded"), is_powerfully_embedded(lam.term(i), p)?);
        let pw = power_subgroup(&whole, e);
        push(format!("G^(p^{i}) powerfully embedded"), is_powerfully_embedded(&pw, p)?);
        push(format!("G^(p^{i}) is the set of p^{i}-th powers"), power_set(&whole, e) == pw.elements());
        if i >= top && pw.is_trivial() {
            break;
        }
        i += 1;
        e *= p as u64;
    }
    Ok(LubotzkyMannReport { group_name: g.name().to_string(), facts })
}

/// `[N^{p^i}, M^{p^j}] = [N, M]^{p^{i+j}}` for powerfully embedded `M`, `N`,
/// over `i + j ≤ max_sum`. Returns the first failing `(i, j)`.
pub fn check_shalev_identity(m: &SubgroupRef, n: &SubgroupRef, p: u32, max_sum: u32) -> Result<Option<(u32, u32)>> {
    let pp = p as u64;
    let mn = commutator_subgroup(n, m)?;
    for s in 0..=max_sum {
        let rhs = power_subgroup(&mn, pp.pow(s));
        for i in 0..=s {
            let j = s - i;
            let lhs = commutator_subgroup(&power_subgroup(n, pp.pow(i)), &power_subgroup(m, pp.pow(j)))?;
            if lhs != rhs {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// Normal subgroups of exponent dividing `p` inside `within`, as normal
/// closures of single elements of order `p` and their pairwise joins,
/// deduplicated, at most `limit` of them, in a deterministic order.
pub fn exponent_p_normal_subgroups(within: &SubgroupRef, p: u32, limit: usize) -> Vec<SubgroupRef> {
    let g = within.ambient();
    let mut found: Vec<SubgroupRef> = Vec::new();
    let push = |s: SubgroupRef, found: &mut Vec<SubgroupRef>| {
        if found.len() < limit && s.exponent() as u64 <= p as u64 && !found.contains(&s) {
            found.push(s);
        }
    };
    push(SubgroupRef::trivial(g), &mut found);
    for &x in within.elements() {
        if g.element_order(x) == p as usize {
            push(normal_closure(g, [x]), &mut found);
        }
    }
    let minimal = found.len();
    for a in 1..minimal {
        for b in a + 1..minimal {
            if let Ok(j) = found[a].join(&found[b]) {
                push(j, &mut found);
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{catalog, center};
    use std::sync::Arc;

    fn grp(spec: &str) -> Group {
        Arc::new(catalog::catalog(spec).unwrap())
    }

    /// Brute-force oracle: every commutator of two elements lies in the set
    /// generated by all `e`-th powers.
    fn brute_powerful(g: &Group, e: u64) -> bool {
        let powers = SubgroupRef::closure(g, (0..g.order()).map(|x| g.pow(x, e as i64)));
        (0..g.order()).all(|x| (0..g.order()).all(|y| powers.contains(g.commutator(x, y))))
    }

    #[test]
    fn powerful_examples() {
        assert!(is_powerful(&grp("C27"), 3).unwrap());
        assert!(!is_powerful(&grp("heisenberg(3)"), 3).unwrap());
        assert!(is_powerful(&grp("extraspecial_exp_p2(3)"), 3).unwrap());
        assert!(!is_powerful(&grp("D8"), 2).unwrap());
        assert!(!is_powerful(&grp("Q8"), 2).unwrap());
        assert!(is_powerful(&grp("modular(16)"), 2).unwrap());
        for s in ["heisenberg(3)", "extraspecial_exp_p2(3)", "C9", "wreath(3)"] {
            let g = grp(s);
            assert_eq!(is_powerful(&g, 3).unwrap(), brute_powerful(&g, 3), "{s}");
        }
        for s in ["D8", "Q8", "modular(16)", "D16", "SD16", "C8", "wreath(2)"] {
            let g = grp(s);
            assert_eq!(is_powerful(&g, 2).unwrap(), brute_powerful(&g, 4), "{s}");
        }
    }

    #[test]
    fn powerful_rejects_wrong_prime() {
        assert!(matches!(is_powerful(&grp("C9"), 2), Err(Error::PrimeMismatch { .. })));
        assert!(matches!(is_powerful(&grp("C9"), 9), Err(Error::NotPrime(9))));
    }

    #[test]
    fn embedded_examples() {
        let h = grp("heisenberg(3)");
        assert!(is_powerfully_embedded(&SubgroupRef::trivial(&h), 3).unwrap());
        assert!(is_powerfully_embedded(&center(&h), 3).unwrap());
        assert!(!is_powerfully_embedded(&SubgroupRef::whole(&h), 3).unwrap());
        let d16 = grp("D16");
        let g2 = lower_central_series(&d16).unwrap().term(2).clone();
        // [γ_2, D16] = γ_3 of order 2 and γ_2^4 = 1 since γ_2 is cyclic of order 4
        assert_eq!(g2.order(), 4);
        assert!(!is_powerfully_embedded(&g2, 2).unwrap());
        let s = SubgroupRef::closure(&d16, [d16.generators()[1]]);
        if !s.is_normal() {
            assert!(matches!(is_powerfully_embedded(&s, 2), Err(Error::NotNormal { .. })));
        }
    }

    #[test]
    fn theorem_a_examples() {
        let h = grp("heisenberg(3)");
        let c = check_theorem_a_i(&h, 3, 2).unwrap();
        assert!(c.hypothesis_holds && c.conclusion_holds && c.witness.is_none());
        assert_eq!(c.outcome(), Outcome::SubstantivePass);
        let c = check_theorem_a_ii(&h, 3, 2).unwrap();
        assert_eq!(c.outcome(), Outcome::SubstantivePass);
        let c = check_theorem_a_iii(&h, 3, 2).unwrap();
        assert_eq!(c.outcome(), Outcome::SubstantivePass);
        // heisenberg(3) itself is not powerful, so n = 1 is vacuous
        let c = check_theorem_a_i(&h, 3, 1).unwrap();
        assert_eq!(c.outcome(), Outcome::VacuousPass);
        assert!(!c.conclusion_holds);
        assert!(c.witness.is_none());
        let e = grp("elementary_abelian(3,2)");
        for n in 1..4 {
            assert_eq!(check_theorem_a_ii(&e, 3, n).unwrap().outcome(), Outcome::SubstantivePass);
        }
        let q8 = grp("Q8");
        let c = check_theorem_a_ii(&q8, 2, 2).unwrap();
        assert!(c.hypothesis_holds);
        assert_eq!(c.outcome(), Outcome::SubstantivePass);
        let x = grp("extraspecial_exp_p2(3)");
        assert_eq!(check_theorem_a_iii(&x, 3, 2).unwrap().outcome(), Outcome::SubstantivePass);
        assert!(check_theorem_a_iii(&q8, 2, 2).is_err());
    }

    #[test]
    fn theorem_b_examples() {
        let h = grp("heisenberg(3)");
        let [b1, b2] = check_theorem_b(&h, &center(&h), 3, 1).unwrap();
        assert_eq!(b1.outcome(), Outcome::SubstantivePass);
        assert_eq!(b2.outcome(), Outcome::SubstantivePass);
        let [b1, _] = check_theorem_b(&h, &SubgroupRef::trivial(&h), 3, 1).unwrap();
        assert_eq!(b1.outcome(), Outcome::VacuousPass);
    }

    #[test]
    fn frattini_examples() {
        let e = grp("elementary_abelian(3,3)");
        let z = center(&e);
        let checks = check_frattini_theorem(&e, &z, 3, 1).unwrap();
        assert!(checks.iter().all(|c| c.outcome() == Outcome::SubstantivePass));
        let h = grp("heisenberg(3)");
        let checks = check_frattini_theorem(&h, &center(&h), 3, 1).unwrap();
        assert_eq!(checks.len(), 2);
        assert_eq!(checks[1].outcome(), Outcome::SubstantivePass);
        let d8 = grp("D8");
        let checks = check_frattini_theorem(&d8, &center(&d8), 2, 1).unwrap();
        assert_eq!(checks.len(), 1);
        assert_eq!(checks[0].theorem_id, TheoremId::FrattiniI);
    }

    #[test]
    fn lubotzky_mann_examples() {
        for (s, p) in [("C27", 3), ("extraspecial_exp_p2(3)", 3), ("modular(16)", 2), ("C8", 2)] {
            let r = check_lubotzky_mann_suite(&grp(s), p).unwrap();
            assert!(r.all_hold(), "{s}: {:?}", r.facts);
        }
        assert!(check_lubotzky_mann_suite(&grp("heisenberg(3)"), 3).is_err());
    }

    #[test]
    fn shalev_on_extraspecial() {
        let g = grp("extraspecial_exp_p2(3)");
        let whole = SubgroupRef::whole(&g);
        let z = center(&g);
        assert_eq!(check_shalev_identity(&whole, &whole, 3, 3).unwrap(), None);
        assert_eq!(check_shalev_identity(&whole, &z, 3, 3).unwrap(), None);
    }

    #[test]
    fn witness_serializes() {
        let h = grp("heisenberg(3)");
        let c = TheoremCheck::new(TheoremId::BI, h.name(), 1, true, false, || {
            elements_witness(powerful_witness(&SubgroupRef::whole(&h), 3))
        });
        assert_eq!(c.outcome(), Outcome::Violation);
        let j = serde_json::to_string(&c).unwrap();
        assert!(j.contains(r#""theorem_id":"B_i""#), "{j}");
        assert!(j.contains(r#""witness":{"type":"elements""#), "{j}");
        let back: TheoremCheck = serde_json::from_str(&j).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn exponent_p_candidates() {
        let e = grp("elementary_abelian(2,3)");
        let all = exponent_p_normal_subgroups(&SubgroupRef::whole(&e), 2, 1000);
        // trivial, 7 lines, 7 planes; the whole group is not a pairwise join
        assert_eq!(all.len(), 15);
        assert!(all.iter().all(|s| s.exponent() <= 2));
    }
}
