use crate::error::Result;
use crate::fp::{Presentation, Word};
use crate::group::catalog::CatalogSpec;

fn g(i: usize) -> Word {
    Word::generator(i)
}

fn comm(a: &Word, b: &Word) -> Word {
    a.inverse().mul(&b.inverse()).mul(a).mul(b)
}

/// `(generator count, relators)` of a catalog constructor.
fn relators(spec: &CatalogSpec) -> (usize, Vec<Word>) {
    use CatalogSpec::*;
    let (a, b, c) = (g(0), g(1), g(2));
    match spec {
        Cyclic(n) => (1, vec![a.pow(*n as i64)]),
        ElementaryAbelian(p, k) => {
            let k = *k as usize;
            let mut rels: Vec<Word> = (0..k).map(|i| g(i).pow(*p as i64)).collect();
            for i in 0..k {
                for j in i + 1..k {
                    rels.push(comm(&g(i), &g(j)));
                }
            }
            (k, rels)
        }
        Dihedral(n) => (2, vec![a.pow(*n as i64 / 2), b.pow(2), a.mul(&b).pow(2)]),
        Quaternion8 => (2, vec![a.pow(4), a.pow(2).mul(&b.pow(-2)), b.inverse().mul(&a).mul(&b).mul(&a)]),
        Semidihedral(n) => {
            let n = *n as i64;
            (2, vec![a.pow(n / 2), b.pow(2), b.mul(&a).mul(&b).mul(&a.pow(1 - n / 4))])
        }
        Modular(n) => {
            let n = *n as i64;
            (2, vec![a.pow(n / 2), b.pow(2), b.mul(&a).mul(&b.inverse()).mul(&a.pow(-(n / 4 + 1)))])
        }
        Heisenberg(p) => {
            let p = *p as i64;
            (3, vec![a.pow(p), b.pow(p), c.pow(p), comm(&a, &b).mul(&c.inverse()), comm(&a, &c), comm(&b, &c)])
        }
        ExtraspecialExpP2(p) => {
            let p = *p as i64;
            (2, vec![a.pow(p * p), b.pow(p), b.inverse().mul(&a).mul(&b).mul(&a.pow(-(1 + p)))])
        }
        SemidirectCyclic(n, m, r) => {
            (2, vec![a.pow(*n as i64), b.pow(*m as i64), b.inverse().mul(&a).mul(&b).mul(&a.pow(-(*r as i64)))])
        }
        DirectProduct(x, y) => {
            let (kx, rx) = relators(x);
            let (ky, ry) = relators(y);
            let shift = |w: &Word| Word::new(w.letters().iter().map(|&l| l + l.signum() * kx as i32).collect());
            let mut rels = rx;
            rels.extend(ry.iter().map(shift));
            for i in 0..kx {
                for j in kx..kx + ky {
                    rels.push(comm(&g(i), &g(j)));
                }
            }
            (kx + ky, rels)
        }
        Wreath(p) => {
            let p = *p as i64;
            let mut rels = vec![a.pow(p), b.pow(p)];
            for i in 1..p {
                rels.push(comm(&a, &b.pow(-i).mul(&a).mul(&b.pow(i))));
            }
            (2, rels)
        }
    }
}

/// A standard presentation of a catalog constructor whose enumeration has
/// the constructor's order.
pub fn reference_presentation(spec: &CatalogSpec) -> Result<Presentation> {
    let (k, rels) = relators(spec);
    Presentation::new(k, rels)
}
