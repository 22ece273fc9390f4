use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{product_of_normals, quotient_group, Group, Homomorphism, SubgroupRef};
use crate::powerful::is_powerful_subgroup;
use crate::series::{lower_central_series, lower_p_series};
use crate::tensor::build::{compute_q_tensor, compute_tensor, TensorCaps, TensorResult};
use crate::tensor::crossed::CrossedModule;
use crate::tensor::maps::induced_hom;

/// Largest `n` accepted by [`iterated_tensor`].
pub const ITERATED_FOLD_CAP: usize = 2;

fn product(mu: &CrossedModule, nu: &CrossedModule, q: Option<u32>, caps: &TensorCaps) -> Result<TensorResult> {
    match q {
        None => compute_tensor(mu, nu, caps),
        Some(q) => compute_q_tensor(mu, nu, q, caps),
    }
}

/// `G^{⊗2}, ..., G^{⊗n}` (or the mod-`q` versions) with `μ_k: G^{⊗k} → G`.
/// If a stage fails, the completed prefix is kept and the error recorded.
#[derive(Clone, Debug)]
pub struct NFold {
    /// `stages[i]` is `G^{⊗(i+2)}`.
    pub stages: Vec<TensorResult>,
    /// `mu[i]` is `μ_{i+2}`.
    pub mu: Vec<Homomorphism>,
    pub error: Option<Error>,
}

impl NFold {
    pub fn last(&self) -> Option<&TensorResult> {
        self.stages.last()
    }
}

/// `G^{⊗(k+1)} = G^{⊗k} ⊗ G` with `μ_{k+1}(x ⊗ g) = [μ_k(x), g]`, which is
/// the `β` map of each stage. The image of `μ_k` is checked against `γ_k(G)`
/// (plain) or `λ_k(G)` (`q` equal to the prime of `G`).
pub fn n_fold_tensor(g: &Group, n: usize, q: Option<u32>, caps: &TensorCaps) -> Result<NFold> {
    if n < 2 {
        return Err(Error::Invalid("n-fold products start at n = 2".into()));
    }
    let id = CrossedModule::identity(g);
    let gamma = lower_central_series(g)?;
    let lambda = match (q, g.prime()) {
        (Some(q), Some(p)) if q == p => Some(lower_p_series(g, p)?),
        _ => None,
    };
    let mut out = NFold { stages: Vec::new(), mu: Vec::new(), error: None };
    let mut left = id.clone();
    for k in 2..=n {
        let t = match product(&left, &id, q, caps) {
            Ok(t) => t,
            Err(e) => {
                out.error = Some(e);
                return Ok(out);
            }
        };
        let next = match t.beta_crossed_module() {
            Ok(cm) => cm,
            Err(e) => {
                out.error = Some(e);
                return Ok(out);
            }
        };
        let image = next.mu().image_subgroup();
        let expected = match (q, &lambda) {
            (None, _) => Some(gamma.term(k)),
            (Some(_), Some(l)) => Some(l.term(k)),
            (Some(_), None) => None,
        };
        if let Some(e) = expected {
            if &image != e {
                out.error = Some(Error::Structure(format!(
                    "image of mu_{k} has order {}, expected {}",
                    image.order(),
                    e.order()
                )));
                return Ok(out);
            }
        }
        out.mu.push(next.mu().clone());
        out.stages.push(t);
        left = next;
    }
    Ok(out)
}

/// `G_{⊗2}, ..., G_{⊗n}` with `G_{⊗(k+1)} = G_{⊗k} ⊗ G_{⊗k}` (identity
/// crossed modules), and whether each stage is powerful when `G` is.
#[derive(Clone, Debug)]
pub struct Iterated {
    pub stages: Vec<TensorResult>,
    pub powerful: Vec<Option<bool>>,
    pub error: Option<Error>,
}

pub fn iterated_tensor(g: &Group, n: usize, q: Option<u32>, caps: &TensorCaps) -> Result<Iterated> {
    if n > ITERATED_FOLD_CAP {
        return Err(Error::Invalid(format!("iterated tensor products are capped at n = {ITERATED_FOLD_CAP}")));
    }
    let p = g.prime();
    let base_powerful = p.map(|p| is_powerful_subgroup(&SubgroupRef::whole(g), p)).unwrap_or(false);
    let mut out = Iterated { stages: Vec::new(), powerful: Vec::new(), error: None };
    let mut cur = g.clone();
    for _ in 2..=n {
        let id = CrossedModule::identity(&cur);
        match product(&id, &id, q, caps) {
            Ok(t) => {
                let flag = match p {
                    Some(p) if base_powerful => Some(is_powerful_subgroup(&SubgroupRef::whole(t.group()), p)),
                    _ => None,
                };
                cur = t.group().clone();
                out.stages.push(t);
                out.powerful.push(flag);
            }
            Err(e) => {
                out.error = Some(e);
                break;
            }
        }
    }
    Ok(out)
}

/// Outcome of checking `1 → N_1 N_2 → H^{⊗^q 2} → G^{⊗^q 2} → 1` for
/// `G = H/N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub h_tensor_order: usize,
    pub g_tensor_order: usize,
    pub n1_order: usize,
    pub n2_order: usize,
    pub product_order: usize,
    pub kernel_order: usize,
    pub surjective: bool,
    pub kernel_equals_product: bool,
    pub order_law: bool,
}

impl ExactnessReport {
    pub fn holds(&self) -> bool {
        self.surjective && self.kernel_equals_product && self.order_law
    }
}

/// Builds both `q`-tensor squares, the induced surjection `d`, and the images
/// `N_1` of `N ⊗^q H` and `N_2` of `H ⊗^q N`, then compares `ker d` with
/// `N_1 N_2` element by element. Only `fold = 2` is supported.
pub fn check_nfold_exact_sequence(
    h: &Group,
    n_sub: &SubgroupRef,
    fold: usize,
    q: u32,
    caps: &TensorCaps,
) -> Result<ExactnessReport> {
    if fold != 2 {
        return Err(Error::Invalid("exactness is only checked at fold 2".into()));
    }
    if !n_sub.ambient().same_as(h) {
        return Err(Error::AmbientMismatch);
    }
    n_sub.require_normal()?;
    let idh = CrossedModule::identity(h);
    let ht = compute_q_tensor(&idh, &idh, q, caps)?;
    let quot = quotient_group(h, n_sub)?;
    let idg = CrossedModule::identity(&quot.group);
    let gt = compute_q_tensor(&idg, &idg, q, caps)?;
    let pi = &quot.projection;
    let d = induced_hom(&ht, &gt, pi, pi, pi)?;

    let inc = CrossedModule::inclusion(n_sub)?;
    let id_hom = Homomorphism::identity(h);
    let left = compute_q_tensor(&inc, &idh, q, caps)?;
    let f1 = induced_hom(&left, &ht, inc.mu(), &id_hom, &id_hom)?;
    let right = compute_q_tensor(&idh, &inc, q, caps)?;
    let f2 = induced_hom(&right, &ht, &id_hom, inc.mu(), &id_hom)?;
    let n1 = f1.image_subgroup();
    let n2 = f2.image_subgroup();
    ht.require_invariant(&n1)?;
    ht.require_invariant(&n2)?;
    let prod = product_of_normals(ht.group(), &[n1.clone(), n2.clone()])?;
    let kernel = d.kernel();
    Ok(ExactnessReport {
        h_tensor_order: ht.group().order(),
        g_tensor_order: gt.group().order(),
        n1_order: n1.order(),
        n2_order: n2.order(),
        product_order: prod.order(),
        kernel_order: kernel.order(),
        surjective: d.is_surjective(),
        kernel_equals_product: kernel == prod,
        order_law: ht.group().order() == prod.order() * gt.group().order(),
    })
}
