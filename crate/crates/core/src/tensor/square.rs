use serde::Serialize;

use crate::group::{ActionByAutomorphisms, Group, Homomorphism};
use crate::tensor::crossed::{validate_crossed_module, CrossedModule};

/// A crossed square
///
/// ```text
///   L --β--> N
///   |α       |ν
///   M --μ--> G
/// ```
///
/// with `G` acting on `L`, `M`, `N` and a pairing `h: M × N → L`.
#[derive(Clone, Debug)]
pub struct CrossedSquare {
    pub alpha: Homomorphism,
    pub beta: Homomorphism,
    pub mu: CrossedModule,
    pub nu: CrossedModule,
    /// `h(m, n)` stored at `m·|N| + n`
    pub h: Vec<usize>,
    pub act_l: ActionByAutomorphisms,
}

/// First failed axiom of a crossed square, with the elements involved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareViolation {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
}

fn fail(axiom: &'static str, witness: Vec<usize>) -> Result<(), SquareViolation> {
    Err(SquareViolation { axiom, witness })
}

impl CrossedSquare {
    pub fn l(&self) -> &Group {
        self.alpha.source()
    }

    pub fn m(&self) -> &Group {
        self.mu.source()
    }

    pub fn n(&self) -> &Group {
        self.nu.source()
    }

    pub fn g(&self) -> &Group {
        self.mu.codomain()
    }

    #[inline]
    pub fn h(&self, m: usize, n: usize) -> usize {
        self.h[m * self.n().order() + n]
    }

    /// `^m l` through `μ`.
    fn act_l_by_m(&self, m: usize, l: usize) -> usize {
        self.act_l.act(self.mu.map(m), l)
    }

    fn act_l_by_n(&self, n: usize, l: usize) -> usize {
        self.act_l.act(self.nu.map(n), l)
    }

    /// Checks axioms (i)–(v) exhaustively over all elements.
    pub fn validate(&self) -> Result<(), SquareViolation> {
        let (l, m, n, g) = (self.l(), self.m(), self.n(), self.g());
        let kappa = |x: usize| self.mu.map(self.alpha.apply(x));
        // (i) commutativity, equivariance of α and β, crossed modules μ, ν, κ
        for x in 0..l.order() {
            if kappa(x) != self.nu.map(self.beta.apply(x)) {
                return fail("commutativity", vec![x]);
            }
        }
        for a in 0..g.order() {
            for x in 0..l.order() {
                let y = self.act_l.act(a, x);
                if self.alpha.apply(y) != self.mu.act(a, self.alpha.apply(x)) {
                    return fail("alpha_equivariance", vec![a, x]);
                }
                if self.beta.apply(y) != self.nu.act(a, self.beta.apply(x)) {
                    return fail("beta_equivariance", vec![a, x]);
                }
                if kappa(y) != g.conj(a, kappa(x)) {
                    return fail("kappa_equivariance", vec![a, x]);
                }
            }
        }
        if let Err(v) = validate_crossed_module(&self.mu) {
            return fail("mu_crossed_module", vec![v.witness.0, v.witness.1]);
        }
        if let Err(v) = validate_crossed_module(&self.nu) {
            return fail("nu_crossed_module", vec![v.witness.0, v.witness.1]);
        }
        for x in 0..l.order() {
            for y in 0..l.order() {
                if self.act_l.act(kappa(x), y) != l.conj(x, y) {
                    return fail("kappa_peiffer", vec![x, y]);
                }
            }
        }
        // (ii) α h(m,n) = m·^n m⁻¹ and β h(m,n) = ^m n·n⁻¹
        for a in 0..m.order() {
            for b in 0..n.order() {
                let na = self.mu.act(self.nu.map(b), a);
                if self.alpha.apply(self.h(a, b)) != m.mul(a, m.inv(na)) {
                    return fail("alpha_h", vec![a, b]);
                }
                let mb = self.nu.act(self.mu.map(a), b);
                if self.beta.apply(self.h(a, b)) != n.mul(mb, n.inv(b)) {
                    return fail("beta_h", vec![a, b]);
                }
            }
        }
        // (iii) h(αl, n) = l·^n l⁻¹ and h(m, βl) = ^m l·l⁻¹
        for x in 0..l.order() {
            for b in 0..n.order() {
                let nl = self.act_l_by_n(b, x);
                if self.h(self.alpha.apply(x), b) != l.mul(x, l.inv(nl)) {
                    return fail("h_alpha", vec![x, b]);
                }
            }
            for a in 0..m.order() {
                let ml = self.act_l_by_m(a, x);
                if self.h(a, self.beta.apply(x)) != l.mul(ml, l.inv(x)) {
                    return fail("h_beta", vec![a, x]);
                }
            }
        }
        // (iv) h(mm',n) = ^m h(m',n)·h(m,n) and h(m,nn') = h(m,n)·^n h(m,n')
        for a in 0..m.order() {
            for b in 0..n.order() {
                let hab = self.h(a, b);
                for a2 in 0..m.order() {
                    let rhs = l.mul(self.act_l_by_m(a, self.h(a2, b)), hab);
                    if self.h(m.mul(a, a2), b) != rhs {
                        return fail("h_left_product", vec![a, a2, b]);
                    }
                }
                for b2 in 0..n.order() {
                    let rhs = l.mul(hab, self.act_l_by_n(b, self.h(a, b2)));
                    if self.h(a, n.mul(b, b2)) != rhs {
                        return fail("h_right_product", vec![a, b, b2]);
                    }
                }
            }
        }
        // (v) h(^g m, ^g n) = ^g h(m,n)
        for c in 0..g.order() {
            for a in 0..m.order() {
                for b in 0..n.order() {
                    if self.h(self.mu.act(c, a), self.nu.act(c, b)) != self.act_l.act(c, self.h(a, b)) {
                        return fail("h_equivariance", vec![c, a, b]);
                    }
                }
            }
        }
        Ok(())
    }

    /// `[l, l'] = h(αl, βl')` with `[x, y] = x y x⁻¹ y⁻¹`, over all pairs.
    pub fn check_commutator_law(&self) -> Result<(), SquareViolation> {
        let l = self.l();
        for x in 0..l.order() {
            let ax = self.alpha.apply(x);
            for y in 0..l.order() {
                let comm = l.mul(l.mul(x, y), l.inv(l.mul(y, x)));
                if comm != self.h(ax, self.beta.apply(y)) {
                    return fail("commutator_law", vec![x, y]);
                }
            }
        }
        Ok(())
    }
}
