use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::{enumerate_group_capped, Presentation, Word, DEFAULT_MAX_COSETS};
use crate::group::{ActionByAutomorphisms, Group, Homomorphism};
use crate::tensor::crossed::{pullback, CrossedModule, Pullback};
use crate::tensor::square::CrossedSquare;

pub const DEFAULT_GENERATOR_CAP: usize = 1024;
pub const DEFAULT_PLAIN_FACTOR_CAP: usize = 32;
pub const DEFAULT_Q_FACTOR_CAP: usize = 32;
pub const DEFAULT_RESULT_ORDER_CAP: usize = 8192;

/// Size limits for tensor constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorCaps {
    /// Largest `|M|`, `|N|` for the plain tensor product.
    pub plain_factor: usize,
    /// Largest `|M|`, `|N|` for the tensor product modulo `q`.
    pub q_factor: usize,
    pub generators: usize,
    pub max_cosets: usize,
    /// Largest order of a computed tensor product.
    pub result_order: usize,
}

impl Default for TensorCaps {
    fn default() -> Self {
        TensorCaps {
            plain_factor: DEFAULT_PLAIN_FACTOR_CAP,
            q_factor: DEFAULT_Q_FACTOR_CAP,
            generators: DEFAULT_GENERATOR_CAP,
            max_cosets: DEFAULT_MAX_COSETS,
            result_order: DEFAULT_RESULT_ORDER_CAP,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TensorKind {
    Plain,
    ModQ { q: u32 },
}

/// A generator of a tensor presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Symbol {
    /// `m ⊗ n`
    Tensor(usize, usize),
    /// `{k}` for an element index of the pullback
    Brace(usize),
}

/// An instantiated tensor presentation together with the generator index of
/// every symbol. Degenerate symbols (`1⊗n`, `m⊗1`, `{1}`) have no generator.
#[derive(Clone, Debug)]
pub struct TensorPresentation {
    pub presentation: Presentation,
    n_order: usize,
    tensor_gen: Vec<Option<usize>>,
    brace_gen: Vec<Option<usize>>,
    symbols: Vec<Symbol>,
}

impl TensorPresentation {
    /// The symbol behind each generator.
    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Presentation text with readable generator names.
    pub fn to_text(&self) -> String {
        self.presentation.to_string()
    }

    /// Generator of `m ⊗ n` as a word.
    pub fn tensor(&self, m: usize, n: usize) -> Word {
        self.tensor_gen[m * self.n_order + n].map_or_else(Word::identity, Word::generator)
    }

    pub fn brace(&self, k: usize) -> Word {
        self.brace_gen[k].map_or_else(Word::identity, Word::generator)
    }
}

struct Builder {
    relators: Vec<Word>,
    seen: HashSet<Word>,
}

impl Builder {
    fn push(&mut self, parts: &[&Word]) {
        let mut w = Word::identity();
        for p in parts {
            w = w.mul(p);
        }
        let w = w.cyclic_reduce();
        if !w.is_empty() && self.seen.insert(w.clone()) {
            self.relators.push(w);
        }
    }
}

fn check_shared(mu: &CrossedModule, nu: &CrossedModule) -> Result<()> {
    if mu.codomain().same_as(nu.codomain()) {
        Ok(())
    } else {
        Err(Error::AmbientMismatch)
    }
}

fn check_factor_cap(mu: &CrossedModule, nu: &CrossedModule, cap: usize) -> Result<()> {
    for o in [mu.source().order(), nu.source().order()] {
        if o > cap {
            return Err(Error::OrderCap { order: o, cap });
        }
    }
    Ok(())
}

/// Shared instantiation of relation families (1) and (2).
fn tensor_symbols(mu: &CrossedModule, nu: &CrossedModule, extra: usize, cap: usize) -> Result<TensorPresentation> {
    let (m, n) = (mu.source(), nu.source());
    let count = m.order() * n.order() + extra;
    if count > cap {
        return Err(Error::GeneratorCap { count, cap });
    }
    let mut tensor_gen = vec![None; m.order() * n.order()];
    let mut labels = Vec::new();
    let mut symbols = Vec::new();
    for a in 1..m.order() {
        for b in 1..n.order() {
            tensor_gen[a * n.order() + b] = Some(labels.len());
            labels.push(format!("t{a}_{b}"));
            symbols.push(Symbol::Tensor(a, b));
        }
    }
    let presentation = Presentation::new(labels.len(), Vec::new())?.with_labels(labels)?;
    Ok(TensorPresentation { presentation, n_order: n.order(), tensor_gen, brace_gen: Vec::new(), symbols })
}

fn bilinear_relators(tp: &TensorPresentation, mu: &CrossedModule, nu: &CrossedModule, b: &mut Builder) {
    let (m, n) = (mu.source(), nu.source());
    // ^n m and ^m n through the codomain
    let nm = |y: usize, x: usize| mu.act(nu.map(y), x);
    let mn = |x: usize, y: usize| nu.act(mu.map(x), y);
    for x in 1..m.order() {
        for y in 1..n.order() {
            for y2 in 1..n.order() {
                // m ⊗ nn' = (m ⊗ n)(^n m ⊗ ^n n')
                let lhs = tp.tensor(x, n.mul(y, y2)).inverse();
                b.push(&[&lhs, &tp.tensor(x, y), &tp.tensor(nm(y, x), nu.act(nu.map(y), y2))]);
            }
        }
    }
    for x in 1..m.order() {
        for x2 in 1..m.order() {
            for y in 1..n.order() {
                // mm' ⊗ n = (^m m' ⊗ ^m n)(m ⊗ n)
                let lhs = tp.tensor(m.mul(x, x2), y).inverse();
                b.push(&[&lhs, &tp.tensor(m.conj(x, x2), mn(x, y)), &tp.tensor(x, y)]);
            }
        }
    }
}

/// Presentation of `M ⊗ N`: one generator per `(m, n)` with `m, n ≠ 1` and
/// both expansion laws instantiated over all elements.
pub fn build_tensor_presentation(
    mu: &CrossedModule,
    nu: &CrossedModule,
    caps: &TensorCaps,
) -> Result<TensorPresentation> {
    check_shared(mu, nu)?;
    check_factor_cap(mu, nu, caps.plain_factor)?;
    let mut tp = tensor_symbols(mu, nu, 0, caps.generators)?;
    let mut b = Builder { relators: Vec::new(), seen: HashSet::new() };
    bilinear_relators(&tp, mu, nu, &mut b);
    let labels = tp.presentation.labels().map(|l| l.to_vec()).unwrap_or_default();
    tp.presentation = Presentation::new(labels.len(), b.relators)?.with_labels(labels)?;
    Ok(tp)
}

/// Presentation of `M ⊗^q N`: tensor symbols plus `{k}` for `k ∈ K`, with
/// all six relation families instantiated over all elements.
pub fn build_q_tensor_presentation(
    mu: &CrossedModule,
    nu: &CrossedModule,
    q: u32,
    k: &Pullback,
    caps: &TensorCaps,
) -> Result<TensorPresentation> {
    check_shared(mu, nu)?;
    check_factor_cap(mu, nu, caps.q_factor)?;
    if q == 0 {
        return Err(Error::Invalid("q must be positive".into()));
    }
    let kg = &k.k;
    let mut tp = tensor_symbols(mu, nu, kg.order(), caps.generators)?;
    let mut labels = tp.presentation.labels().map(|l| l.to_vec()).unwrap_or_default();
    tp.brace_gen = vec![None; kg.order()];
    for i in 1..kg.order() {
        tp.brace_gen[i] = Some(labels.len());
        labels.push(format!("k{i}"));
        tp.symbols.push(Symbol::Brace(i));
    }
    let (m, n) = (mu.source(), nu.source());
    let q = q as i64;
    let mut b = Builder { relators: Vec::new(), seen: HashSet::new() };
    bilinear_relators(&tp, mu, nu, &mut b);
    // K acts on M and N through μ∘π₁ = ν∘π₂
    let k_on_m = |c: usize, x: usize| mu.act(mu.map(k.pi1.apply(c)), x);
    let k_on_n = |c: usize, y: usize| nu.act(mu.map(k.pi1.apply(c)), y);
    for c in 1..kg.order() {
        let cq = kg.pow(c, q);
        let brace = tp.brace(c);
        let brace_inv = brace.inverse();
        for x in 1..m.order() {
            for y in 1..n.order() {
                // {k}(m ⊗ n){k}⁻¹ = ^{k^q}m ⊗ ^{k^q}n
                let rhs = tp.tensor(k_on_m(cq, x), k_on_n(cq, y)).inverse();
                b.push(&[&brace, &tp.tensor(x, y), &brace_inv, &rhs]);
            }
        }
    }
    for c in 0..kg.order() {
        for c2 in 0..kg.order() {
            // {kk'} = {k} ∏_{i=1}^{q-1} (π₁k⁻¹ ⊗ (^{k^{1-q+i}} π₂k')^i) {k'}
            let mut rhs = tp.brace(c);
            let m_inv = m.inv(k.pi1.apply(c));
            for i in 1..q {
                let acted = k_on_n(kg.pow(c, 1 - q + i), k.pi2.apply(c2));
                rhs = rhs.mul(&tp.tensor(m_inv, n.pow(acted, i)));
            }
            rhs = rhs.mul(&tp.brace(c2));
            b.push(&[&tp.brace(kg.mul(c, c2)).inverse(), &rhs]);
            // [{k},{k'}] = π₁k^q ⊗ π₂k'^q
            let (bk, bk2) = (tp.brace(c), tp.brace(c2));
            let t = tp.tensor(m.pow(k.pi1.apply(c), q), n.pow(k.pi2.apply(c2), q));
            b.push(&[&bk, &bk2, &bk.inverse(), &bk2.inverse(), &t.inverse()]);
        }
    }
    for x in 0..m.order() {
        for y in 0..n.order() {
            // {(m·^n m⁻¹, ^m n·n⁻¹)} = (m ⊗ n)^q
            let first = m.mul(x, m.inv(mu.act(nu.map(y), x)));
            let second = n.mul(nu.act(mu.map(x), y), n.inv(y));
            let c = k.index_of(first, second).ok_or_else(|| Error::Structure("commutator pair outside K".into()))?;
            b.push(&[&tp.brace(c), &tp.tensor(x, y).pow(-q)]);
        }
    }
    tp.presentation = Presentation::new(labels.len(), b.relators)?.with_labels(labels)?;
    Ok(tp)
}

/// `M ⊗ N` or `M ⊗^q N` resolved to a group table, with its structure maps.
#[derive(Clone, Debug)]
pub struct TensorResult {
    pub kind: TensorKind,
    pub group: Group,
    /// `gen_map[m·|N| + n]` is the element `m ⊗ n`.
    pub gen_map: Vec<usize>,
    /// For the `q` variant: the pullback and the element `{k}` of each `k`.
    pub brace: Option<(Pullback, Vec<usize>)>,
    pub square: CrossedSquare,
    pub presentation: Arc<TensorPresentation>,
    pub presentation_shape: PresentationShape,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationShape {
    pub generators: usize,
    pub relators: usize,
    pub simplified_generators: usize,
    pub simplified_relators: usize,
}

impl TensorResult {
    pub fn mu(&self) -> &CrossedModule {
        &self.square.mu
    }

    pub fn nu(&self) -> &CrossedModule {
        &self.square.nu
    }

    pub fn alpha(&self) -> &Homomorphism {
        &self.square.alpha
    }

    pub fn beta(&self) -> &Homomorphism {
        &self.square.beta
    }

    pub fn g_action(&self) -> &ActionByAutomorphisms {
        &self.square.act_l
    }

    /// The element `m ⊗ n`.
    pub fn tensor(&self, m: usize, n: usize) -> usize {
        self.gen_map[m * self.nu().source().order() + n]
    }

    /// The element `{k}` (only for the `q` variant).
    pub fn brace_of(&self, k: usize) -> Option<usize> {
        self.brace.as_ref().map(|(_, b)| b[k])
    }

    pub fn q(&self) -> Option<u32> {
        match self.kind {
            TensorKind::Plain => None,
            TensorKind::ModQ { q } => Some(q),
        }
    }

    /// `β: L → N` as a crossed module when `N` is the codomain itself
    /// (`ν = id`), as used for n-fold products.
    pub fn beta_crossed_module(&self) -> Result<CrossedModule> {
        let g = self.mu().codomain();
        if !self.nu().source().same_as(g) {
            return Err(Error::Structure("β lands in N, which is not the codomain".into()));
        }
        let beta = Homomorphism::new_unchecked(self.group(), g, self.beta().images().to_vec());
        CrossedModule::new(beta, self.g_action().clone())
    }

    pub fn group(&self) -> &Group {
        &self.group
    }
}

fn assemble(
    kind: TensorKind,
    tp: TensorPresentation,
    mu: &CrossedModule,
    nu: &CrossedModule,
    k: Option<Pullback>,
    caps: &TensorCaps,
) -> Result<TensorResult> {
    let (m, n, g) = (mu.source(), nu.source(), mu.codomain());
    let name = match kind {
        TensorKind::Plain => format!("{}(x){}", m.name(), n.name()),
        TensorKind::ModQ { q } => format!("{}(x)^{q}{}", m.name(), n.name()),
    };
    let e = enumerate_group_capped(&tp.presentation, caps.max_cosets, caps.result_order, name)?;
    let l = e.group.clone();
    let elem = |w: Word| w.letters().first().map_or(0, |&x| e.generator_images[x as usize - 1]);
    let mut gen_map = vec![0; m.order() * n.order()];
    for a in 0..m.order() {
        for b in 0..n.order() {
            gen_map[a * n.order() + b] = elem(tp.tensor(a, b));
        }
    }
    let brace = k.map(|k| {
        let elems: Vec<usize> = (0..k.k.order()).map(|c| elem(tp.brace(c))).collect();
        (k, elems)
    });
    let q = match kind {
        TensorKind::Plain => 1,
        TensorKind::ModQ { q } => q as i64,
    };
    // α and β on every symbol; building them from all symbols checks that
    // they are well defined
    let mut alpha_assign = Vec::new();
    let mut beta_assign = Vec::new();
    for a in 1..m.order() {
        for b in 1..n.order() {
            let t = gen_map[a * n.order() + b];
            alpha_assign.push((t, m.mul(a, m.inv(mu.act(nu.map(b), a)))));
            beta_assign.push((t, n.mul(nu.act(mu.map(a), b), n.inv(b))));
        }
    }
    if let Some((k, elems)) = &brace {
        for c in 1..k.k.order() {
            alpha_assign.push((elems[c], m.pow(k.pi1.apply(c), q)));
            beta_assign.push((elems[c], n.pow(k.pi2.apply(c), q)));
        }
    }
    let structure = |what: &str, e: Error| Error::Structure(format!("{what}: {e}"));
    let alpha = Homomorphism::from_generator_images(&l, m, &alpha_assign).map_err(|e| structure("alpha", e))?;
    let beta = Homomorphism::from_generator_images(&l, n, &beta_assign).map_err(|e| structure("beta", e))?;
    // G acts symbol-wise: ^g(m ⊗ n) = ^g m ⊗ ^g n, ^g{k} = {^g k}
    let mut perms = Vec::with_capacity(g.order());
    for c in 0..g.order() {
        let mut assign = Vec::new();
        for a in 1..m.order() {
            for b in 1..n.order() {
                let image = gen_map[mu.act(c, a) * n.order() + nu.act(c, b)];
                assign.push((gen_map[a * n.order() + b], image));
            }
        }
        if let Some((k, elems)) = &brace {
            for (i, &(a, b)) in k.pairs.iter().enumerate().skip(1) {
                let target = k.index_of(mu.act(c, a), nu.act(c, b)).expect("K is G-invariant");
                assign.push((elems[i], elems[target]));
            }
        }
        let h = Homomorphism::from_generator_images(&l, &l, &assign).map_err(|e| structure("G-action", e))?;
        perms.push(h);
    }
    let act_l = ActionByAutomorphisms::new(g, &l, |c, x| perms[c].apply(x))?;
    let square = CrossedSquare { alpha, beta, mu: mu.clone(), nu: nu.clone(), h: gen_map.clone(), act_l };
    if let Err(v) = square.validate() {
        return Err(Error::Structure(format!("crossed square axiom {} fails at {:?}", v.axiom, v.witness)));
    }
    let presentation_shape = PresentationShape {
        generators: tp.presentation.generator_count(),
        relators: tp.presentation.relators().len(),
        simplified_generators: e.simplified_shape.0,
        simplified_relators: e.simplified_shape.1,
    };
    Ok(TensorResult {
        kind,
        group: Arc::clone(&l),
        gen_map,
        brace,
        square,
        presentation: Arc::new(tp),
        presentation_shape,
    })
}

/// `M ⊗ N` of two crossed modules over the same group.
pub fn compute_tensor(mu: &CrossedModule, nu: &CrossedModule, caps: &TensorCaps) -> Result<TensorResult> {
    let tp = build_tensor_presentation(mu, nu, caps)?;
    assemble(TensorKind::Plain, tp, mu, nu, None, caps)
}

/// `M ⊗^q N` of two crossed modules over the same group.
pub fn compute_q_tensor(mu: &CrossedModule, nu: &CrossedModule, q: u32, caps: &TensorCaps) -> Result<TensorResult> {
    check_shared(mu, nu)?;
    check_factor_cap(mu, nu, caps.q_factor)?;
    let k = pullback(mu, nu)?;
    let tp = build_q_tensor_presentation(mu, nu, q, &k, caps)?;
    assemble(TensorKind::ModQ { q }, tp, mu, nu, Some(k), caps)
}
