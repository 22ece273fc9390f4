//! Tietze simplification: eliminates generators that occur exactly once in
//! some relator, substituting them away everywhere else.

use std::collections::{BTreeSet, HashSet};

use crate::fp::presentation::Presentation;
use crate::fp::word::Word;

/// Replacement words longer than this are not substituted.
pub const MAX_SUBSTITUTION: usize = 24;

/// Result of simplifying a presentation.
#[derive(Clone, Debug)]
pub struct Simplified {
    /// Presentation on the surviving generators (renumbered from 0).
    pub presentation: Presentation,
    /// Original index of each surviving generator.
    pub kept: Vec<usize>,
    /// Eliminations in the order they were made: original generator and the
    /// word (over original indices) it was replaced by. Later eliminations
    /// may occur inside earlier words.
    pub eliminated: Vec<(usize, Word)>,
}

impl Simplified {
    /// Images of all original generators, given images of the kept ones.
    pub fn expand_images<T: Copy>(
        &self,
        kept_images: &[T],
        one: T,
        inv: impl Fn(T) -> T,
        mul: impl Fn(T, T) -> T,
    ) -> Vec<T> {
        let total = self.kept.len() + self.eliminated.len();
        let mut img: Vec<Option<T>> = vec![None; total];
        for (&g, &x) in self.kept.iter().zip(kept_images) {
            img[g] = Some(x);
        }
        for (g, w) in self.eliminated.iter().rev() {
            let v = w.evaluate(
                one,
                |h, inverted| {
                    let x = img[h].expect("substitution words only use later generators");
                    if inverted {
                        inv(x)
                    } else {
                        x
                    }
                },
                &mul,
            );
            img[*g] = Some(v);
        }
        img.into_iter().map(|x| x.expect("every generator has an image")).collect()
    }
}

fn canonical(w: &[i32]) -> Vec<i32> {
    let inv: Vec<i32> = w.iter().rev().map(|l| -l).collect();
    let mut best = w.to_vec();
    for base in [w, &inv[..]] {
        for k in 0..base.len() {
            let rot: Vec<i32> = base[k..].iter().chain(&base[..k]).copied().collect();
            if rot < best {
                best = rot;
            }
        }
    }
    best
}

struct State {
    rels: Vec<Option<Vec<i32>>>,
    occ: Vec<BTreeSet<usize>>,
    seen: HashSet<Vec<i32>>,
}

impl State {
    fn insert(&mut self, w: Vec<i32>) -> Option<usize> {
        let w = Word::new(w).cyclic_reduce().into_letters();
        if w.is_empty() || !self.seen.insert(canonical(&w)) {
            return None;
        }
        let id = self.rels.len();
        for &l in &w {
            self.occ[l.unsigned_abs() as usize - 1].insert(id);
        }
        self.rels.push(Some(w));
        Some(id)
    }

    fn remove(&mut self, id: usize) -> Vec<i32> {
        let w = self.rels[id].take().expect("live relator");
        self.seen.remove(&canonical(&w));
        for &l in &w {
            self.occ[l.unsigned_abs() as usize - 1].remove(&id);
        }
        w
    }
}

/// Eliminates generators greedily, cheapest first, where the cost of using a
/// relator of length `L` to remove a generator in `k` other relators is
/// `(L - 2)·k` extra letters.
pub fn simplify(p: &Presentation) -> Simplified {
    let n = p.generator_count();
    let mut st = State { rels: Vec::new(), occ: vec![BTreeSet::new(); n], seen: HashSet::new() };
    for r in p.relators() {
        st.insert(r.letters().to_vec());
    }
    let mut alive = vec![true; n];
    let mut eliminated = Vec::new();
    loop {
        // best = (cost, length, relator id, generator)
        let mut best: Option<(usize, usize, usize, usize)> = None;
        for (id, r) in st.rels.iter().enumerate() {
            let Some(r) = r else { continue };
            let len = r.len();
            if len > MAX_SUBSTITUTION + 1 {
                continue;
            }
            if let Some((c, l, _, _)) = best {
                if c == 0 && l <= len {
                    continue;
                }
            }
            for &letter in r {
                let g = letter.unsigned_abs() as usize - 1;
                if r.iter().filter(|&&m| m.unsigned_abs() == letter.unsigned_abs()).count() != 1 {
                    continue;
                }
                let cost = len.saturating_sub(2) * (st.occ[g].len() - 1);
                let cand = (cost, len, id, g);
                if best.is_none_or(|b| cand < b) {
                    best = Some(cand);
                }
            }
        }
        let Some((_, _, id, g)) = best else { break };
        let r = st.remove(id);
        let pos = r.iter().position(|&l| l.unsigned_abs() as usize == g + 1).unwrap();
        // rotate so that the generator comes first: g^e · u = 1
        let rest: Vec<i32> = r[pos + 1..].iter().chain(&r[..pos]).copied().collect();
        let u = Word::new(rest);
        let replacement = if r[pos] > 0 { u.inverse() } else { u };
        let ids: Vec<usize> = st.occ[g].iter().copied().collect();
        for other in ids {
            let w = st.remove(other);
            st.insert(Word::new(w).substitute(g, &replacement).into_letters());
        }
        alive[g] = false;
        eliminated.push((g, replacement));
    }
    let kept: Vec<usize> = (0..n).filter(|&g| alive[g]).collect();
    let mut renumber = vec![0i32; n];
    for (i, &g) in kept.iter().enumerate() {
        renumber[g] = i as i32 + 1;
    }
    let mut relators: Vec<Word> = st
        .rels
        .into_iter()
        .flatten()
        .map(|w| Word::new(w.iter().map(|&l| renumber[l.unsigned_abs() as usize - 1] * l.signum()).collect()))
        .collect();
    relators.sort_by(|a, b| (a.len(), a.letters()).cmp(&(b.len(), b.letters())));
    let mut presentation = Presentation::new(kept.len(), relators).expect("renumbered relators are in range");
    if let Some(labels) = p.labels() {
        presentation =
            presentation.with_labels(kept.iter().map(|&g| labels[g].clone()).collect()).expect("labels stay distinct");
    }
    Simplified { presentation, kept, eliminated }
}
