use crate::error::{Error, Result};
use crate::group::{power_subgroup, Homomorphism, SubgroupRef};
use crate::numtheory::binomial;
use crate::tensor::build::{Symbol, TensorKind, TensorResult};
use crate::tensor::crossed::CrossedModule;

impl TensorResult {
    /// The element of a presentation symbol.
    pub fn symbol_element(&self, s: Symbol) -> usize {
        match s {
            Symbol::Tensor(m, n) => self.tensor(m, n),
            Symbol::Brace(k) => self.brace_of(k).expect("brace symbol in a plain tensor"),
        }
    }

    /// `^g x` for `g` in the shared codomain.
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.g_action().act(g, x)
    }

    /// Checks that a subgroup is stable under the codomain action and normal.
    pub fn require_invariant(&self, s: &SubgroupRef) -> Result<()> {
        let gens = s.generators();
        for c in 0..self.mu().codomain().order() {
            if let Some(&x) = gens.iter().find(|&&x| !s.contains(self.act(c, x))) {
                return Err(Error::Structure(format!("subgroup is not invariant: ^{c} moves {x} out")));
            }
        }
        s.require_normal()
    }
}

/// Defines a map out of `src` by images of its presentation generators.
/// Every defining relator is evaluated in `tgt` first; the map is then
/// extended along the Cayley graph and checked to be a homomorphism.
pub fn map_symbols(src: &TensorResult, tgt: &TensorResult, image: impl Fn(Symbol) -> usize) -> Result<Homomorphism> {
    let l = tgt.group();
    let images: Vec<usize> = src.presentation.symbols().iter().map(|&s| image(s)).collect();
    let inv: Vec<usize> = images.iter().map(|&x| l.inv(x)).collect();
    for (i, r) in src.presentation.presentation.relators().iter().enumerate() {
        let v = r.evaluate(0, |g, inverted| if inverted { inv[g] } else { images[g] }, |a, b| l.mul(a, b));
        if v != 0 {
            return Err(Error::Structure(format!("relator {i} does not map to the identity")));
        }
    }
    let assign: Vec<(usize, usize)> =
        src.presentation.symbols().iter().zip(&images).map(|(&s, &y)| (src.symbol_element(s), y)).collect();
    Homomorphism::from_generator_images(src.group(), l, &assign)
}

fn same_module(a: &CrossedModule, b: &CrossedModule) -> bool {
    a.source().same_as(b.source()) && a.codomain().same_as(b.codomain()) && a.mu().agrees_with(b.mu())
}

/// Subgroup of `t` generated by `m ⊗ n` with `m ∈ M^{p^k}`: the image of
/// `M^{p^k} ⊗ N`. Invariance under the codomain and normality are checked.
pub fn tau_image(t: &TensorResult, p: u32, k: u32) -> Result<SubgroupRef> {
    let (m, n) = (t.mu().source(), t.nu().source());
    let e = (p as u64).checked_pow(k).ok_or_else(|| Error::Invalid("p^k overflows".into()))?;
    let mp = power_subgroup(&SubgroupRef::whole(m), e);
    let seeds: Vec<usize> =
        mp.elements().iter().flat_map(|&x| (0..n.order()).map(move |y| (x, y))).map(|(x, y)| t.tensor(x, y)).collect();
    let s = SubgroupRef::closure(t.group(), seeds);
    t.require_invariant(&s)?;
    Ok(s)
}

/// `σ: M ⊗ N → M ⊗^p N` and the images `τ_1(M^p ⊗ N)`, `η(M^p ⊗ N) = σ τ_1(M^p ⊗ N)`.
#[derive(Clone, Debug)]
pub struct NaturalMaps {
    pub sigma: Homomorphism,
    pub tau: SubgroupRef,
    pub eta: SubgroupRef,
}

impl NaturalMaps {
    /// `τ_k` image in the plain tensor for larger `k`.
    pub fn tau_n(plain: &TensorResult, p: u32, k: u32) -> Result<SubgroupRef> {
        tau_image(plain, p, k)
    }
}

pub fn natural_maps(t_plain: &TensorResult, t_q: &TensorResult) -> Result<NaturalMaps> {
    let p = match (t_plain.kind, t_q.kind) {
        (TensorKind::Plain, TensorKind::ModQ { q }) => q,
        _ => return Err(Error::Invalid("natural maps need a plain and a mod-q tensor".into())),
    };
    if !same_module(t_plain.mu(), t_q.mu()) || !same_module(t_plain.nu(), t_q.nu()) {
        return Err(Error::Invalid("tensors are built from different crossed modules".into()));
    }
    let sigma = map_symbols(t_plain, t_q, |s| t_q.symbol_element(s))?;
    let tau = tau_image(t_plain, p, 1)?;
    let eta = sigma.map_subgroup(&tau);
    t_q.require_invariant(&eta)?;
    Ok(NaturalMaps { sigma, tau, eta })
}

fn check_square(
    top: &Homomorphism,
    right: &Homomorphism,
    left: &Homomorphism,
    bottom: &Homomorphism,
    what: &str,
) -> Result<()> {
    // right ∘ top = bottom ∘ left
    for x in 0..top.source().order() {
        if right.apply(top.apply(x)) != bottom.apply(left.apply(x)) {
            return Err(Error::Structure(format!("{what} square does not commute at {x}")));
        }
    }
    Ok(())
}

fn check_compatible(
    f: &Homomorphism,
    phi: &Homomorphism,
    src: &CrossedModule,
    tgt: &CrossedModule,
    what: &str,
) -> Result<()> {
    for h in 0..src.codomain().order() {
        for a in 0..src.source().order() {
            if f.apply(src.act(h, a)) != tgt.act(phi.apply(h), f.apply(a)) {
                return Err(Error::Structure(format!("{what} is not compatible with the actions at ({h}, {a})")));
            }
        }
    }
    Ok(())
}

/// `f1 ⊗ f2`: `a ⊗ c ↦ f1(a) ⊗ f2(c)`, `{(a, c)} ↦ {(f1 a, f2 c)}`.
///
/// `f1: A → A'`, `f2: C → C'` and `φ: G → G'` must commute with the crossed
/// module maps and respect the actions. Well-definedness is checked on every
/// relator of `src`, and the faces of the resulting cube are re-checked.
pub fn induced_hom(
    src: &TensorResult,
    tgt: &TensorResult,
    f1: &Homomorphism,
    f2: &Homomorphism,
    phi: &Homomorphism,
) -> Result<Homomorphism> {
    if src.kind != tgt.kind {
        return Err(Error::Invalid("induced maps need tensors of the same kind".into()));
    }
    let shapes = [
        (f1.source(), src.mu().source()),
        (f1.target(), tgt.mu().source()),
        (f2.source(), src.nu().source()),
        (f2.target(), tgt.nu().source()),
        (phi.source(), src.mu().codomain()),
        (phi.target(), tgt.mu().codomain()),
    ];
    if shapes.iter().any(|(a, b)| !a.same_as(b)) {
        return Err(Error::AmbientMismatch);
    }
    check_square(f1, tgt.mu().mu(), src.mu().mu(), phi, "left")?;
    check_square(f2, tgt.nu().mu(), src.nu().mu(), phi, "right")?;
    check_compatible(f1, phi, src.mu(), tgt.mu(), "f1")?;
    check_compatible(f2, phi, src.nu(), tgt.nu(), "f2")?;
    let brace_target = |k: usize| -> usize {
        let (sk, _) = src.brace.as_ref().expect("q tensor");
        let (tk, te) = tgt.brace.as_ref().expect("q tensor");
        let (a, c) = sk.pairs[k];
        let j = tk.index_of(f1.apply(a), f2.apply(c)).expect("commuting squares map K into K'");
        te[j]
    };
    let map = map_symbols(src, tgt, |s| match s {
        Symbol::Tensor(a, c) => tgt.tensor(f1.apply(a), f2.apply(c)),
        Symbol::Brace(k) => brace_target(k),
    })?;
    // cube faces: α' F = f1 α, β' F = f2 β, F(^h l) = ^{φ h} F(l)
    check_square(&map, tgt.alpha(), src.alpha(), f1, "alpha")?;
    check_square(&map, tgt.beta(), src.beta(), f2, "beta")?;
    for h in 0..phi.source().order() {
        for x in 0..src.group().order() {
            if map.apply(src.act(h, x)) != tgt.act(phi.apply(h), map.apply(x)) {
                return Err(Error::Structure(format!("induced map is not equivariant at ({h}, {x})")));
            }
        }
    }
    Ok(map)
}

/// `m^t ⊗ g ≡ (m⊗g)^r (m^{t-r}⊗g) (m^{t-r}⊗[μm,g])^r (m⊗[μm,g])^{C(r,2)}`
/// modulo the `τ_{k+2}` image, for all `m ∈ M^{p^k}` and `g ∈ G`, with
/// `[x, y] = x y x⁻¹ y⁻¹`. Returns the first `(m, g)` where it fails.
pub fn check_power_expansion(t: &TensorResult, p: u32, k: u32, r: u32, t_exp: u32) -> Result<Option<(usize, usize)>> {
    if t.kind != TensorKind::Plain || !t.nu().source().same_as(t.mu().codomain()) {
        return Err(Error::Invalid("power expansion is stated for plain M ⊗ G".into()));
    }
    let (m, g, l) = (t.mu().source(), t.mu().codomain(), t.group());
    let modulus = tau_image(t, p, k + 2)?;
    let mk = power_subgroup(&SubgroupRef::whole(m), (p as u64).pow(k));
    let (r, te) = (r as i64, t_exp as i64);
    let c2 = binomial(r as u64, 2) as i64;
    for &x in mk.elements() {
        let mx = t.mu().map(x);
        for y in 0..g.order() {
            let comm = g.mul(g.mul(mx, y), g.inv(g.mul(y, mx)));
            let xtr = m.pow(x, te - r);
            let lhs = t.tensor(m.pow(x, te), y);
            let mut rhs = l.pow(t.tensor(x, y), r);
            rhs = l.mul(rhs, t.tensor(xtr, y));
            rhs = l.mul(rhs, l.pow(t.tensor(xtr, comm), r));
            rhs = l.mul(rhs, l.pow(t.tensor(x, comm), c2));
            if !modulus.contains(l.mul(l.inv(lhs), rhs)) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}
