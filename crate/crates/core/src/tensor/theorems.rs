use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{commutator_subgroup, power_subgroup, quotient_group, Group, SubgroupRef};
use crate::powerful::{
    containment_witness, is_powerful_subgroup, is_powerfully_embedded, powerful_witness, FactCheck, TheoremCheck,
    TheoremId, Witness,
};
use crate::series::{lower_p_series, upper_central_series};
use crate::tensor::build::{compute_q_tensor, compute_tensor, TensorCaps};
use crate::tensor::crossed::CrossedModule;
use crate::tensor::maps::{natural_maps, tau_image};
use crate::tensor::nfold::n_fold_tensor;

/// Theorem check for `μ: M → G` together with the orders that were computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorPowerfulCheck {
    pub check: TheoremCheck,
    pub tensor_order: usize,
    pub q_tensor_order: usize,
    pub facts: Vec<FactCheck>,
}

/// For odd `p`, `M` powerful and `μ(M)` powerfully embedded in `G`:
/// `M ⊗ G` and `M ⊗^p G` are powerful, `γ_2(M⊗G) ⊆ τ_1(M^p⊗G)`,
/// `τ_1(M^p⊗G) ⊆ (M⊗G)^p`, and `γ_2(M⊗^pG) ⊆ η(M^p⊗G)`.
pub fn check_tensor_powerful(mu: &CrossedModule, p: u32, caps: &TensorCaps) -> Result<TensorPowerfulCheck> {
    if p == 2 || !crate::numtheory::is_prime(p as u64) {
        return Err(Error::Invalid("the tensor statement is made for odd primes".into()));
    }
    let (m, g) = (mu.source(), mu.codomain());
    g.require_prime(p)?;
    let image = mu.mu().image_subgroup();
    let hyp = is_powerful_subgroup(&SubgroupRef::whole(m), p) && is_powerfully_embedded(&image, p)?;
    let id = CrossedModule::identity(g);
    let plain = compute_tensor(mu, &id, caps)?;
    let modp = compute_q_tensor(mu, &id, p, caps)?;
    let maps = natural_maps(&plain, &modp)?;
    let whole = SubgroupRef::whole(plain.group());
    let whole_q = SubgroupRef::whole(modp.group());
    let gamma2 = commutator_subgroup(&whole, &whole)?;
    let gamma2_q = commutator_subgroup(&whole_q, &whole_q)?;
    let pth = power_subgroup(&whole, p as u64);
    let tau = &maps.tau;

    let mut witness: Option<Witness> = None;
    let mut facts = Vec::new();
    let mut record = |fact: &str, w: Option<Witness>| {
        facts.push(FactCheck { fact: fact.to_string(), holds: w.is_none() });
        if witness.is_none() {
            witness = w;
        }
    };
    let el = |w: Option<(usize, usize)>| w.map(|(x, y)| Witness::Elements { x, y });
    record("M(x)G powerful", el(powerful_witness(&whole, p)));
    record("M(x)^pG powerful", el(powerful_witness(&whole_q, p)));
    record("gamma_2(M(x)G) in tau_1(M^p(x)G)", containment_witness(&gamma2, tau));
    record("tau_1(M^p(x)G) in (M(x)G)^p", containment_witness(tau, &pth));
    record("gamma_2(M(x)^pG) in eta(M^p(x)G)", containment_witness(&gamma2_q, &maps.eta));
    let conclusion = facts.iter().all(|f| f.holds);
    let check = TheoremCheck::new(
        TheoremId::TensorPowerful,
        &format!("{}->{}", m.name(), g.name()),
        1,
        hyp,
        conclusion,
        || witness,
    );
    Ok(TensorPowerfulCheck { check, tensor_order: plain.group().order(), q_tensor_order: modp.group().order(), facts })
}

/// `|λ_{n+1}(H)|` divides `|G^{⊗^p (n+1)}|` for `G = H/N`, stated when `N`
/// has exponent `p` and lies in `Z_n(H)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurjectionReport {
    pub hypothesis_holds: bool,
    pub lambda_order: usize,
    pub tensor_order: usize,
    pub divides: bool,
}

pub fn check_surjection_order_law(
    h: &Group,
    n_sub: &SubgroupRef,
    n: usize,
    caps: &TensorCaps,
) -> Result<SurjectionReport> {
    let p = h.prime().ok_or_else(|| Error::Invalid("H must be a nontrivial p-group".into()))?;
    if n < 1 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    n_sub.require_normal()?;
    let hyp = n_sub.exponent() as u64 <= p as u64 && n_sub.is_subset(upper_central_series(h)?.term(n));
    let lambda = lower_p_series(h, p)?.term(n + 1).order();
    let quot = quotient_group(h, n_sub)?;
    let tensor_order = if quot.group.order() == 1 {
        1
    } else {
        let nf = n_fold_tensor(&quot.group, n + 1, Some(p), caps)?;
        if let Some(e) = nf.error {
            return Err(e);
        }
        nf.last().expect("n + 1 >= 2 stages").group().order()
    };
    Ok(SurjectionReport {
        hypothesis_holds: hyp,
        lambda_order: lambda,
        tensor_order,
        divides: tensor_order % lambda == 0,
    })
}

/// `τ_k` images for `k = 1, 2, ...` until trivial, for reporting.
pub fn tau_chain(t: &crate::tensor::TensorResult, p: u32) -> Result<Vec<SubgroupRef>> {
    let mut out = Vec::new();
    for k in 1..=16 {
        let s = tau_image(t, p, k)?;
        let done = s.is_trivial();
        out.push(s);
        if done {
            break;
        }
    }
    Ok(out)
}
