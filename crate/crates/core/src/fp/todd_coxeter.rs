use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::presentation::Presentation;
use crate::fp::word::Word;

pub const DEFAULT_MAX_COSETS: usize = 2_000_000;

const UNDEF: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CosetStatus {
    Complete,
    Exceeded,
    InProgress,
}

/// A coset table: row `c`, column `2g` is `c·g`, column `2g+1` is `c·g⁻¹`.
/// Coset 0 is the subgroup itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    generator_count: usize,
    coset_count: usize,
    table: Vec<u32>,
    status: CosetStatus,
    subgroup_trivial: bool,
}

impl CosetTable {
    pub fn coset_count(&self) -> usize {
        self.coset_count
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn status(&self) -> CosetStatus {
        self.status
    }

    /// True when every subgroup word was freely trivial, so the table is
    /// the regular representation of the group.
    pub fn subgroup_trivial(&self) -> bool {
        self.subgroup_trivial
    }

    #[inline]
    pub fn column(&self, coset: usize, col: usize) -> usize {
        self.table[coset * 2 * self.generator_count + col] as usize
    }

    /// Image of a coset under a signed 1-based letter.
    pub fn act(&self, coset: usize, letter: i32) -> usize {
        self.column(coset, letter_column(letter))
    }

    pub fn trace(&self, coset: usize, w: &Word) -> usize {
        w.letters().iter().fold(coset, |c, &l| self.act(c, l))
    }

    /// Rows as nested lists (for JSON output and golden comparisons).
    pub fn rows(&self) -> Vec<Vec<u32>> {
        let w = 2 * self.generator_count;
        (0..self.coset_count).map(|c| self.table[c * w..(c + 1) * w].to_vec()).collect()
    }
}

#[inline]
fn letter_column(l: i32) -> usize {
    2 * (l.unsigned_abs() as usize - 1) + usize::from(l < 0)
}

/// Enumerates the cosets of the subgroup generated by `subgroup_words` using
/// HLT relator scanning with union-find coincidence processing. When the row
/// budget runs out, a lookahead pass (scanning without defining) and a
/// compaction are tried before giving up with [`Error::CosetsExceeded`].
///
/// The completed table is standardized, so identical inputs give identical
/// tables.
pub fn todd_coxeter(p: &Presentation, subgroup_words: &[Word], max_cosets: usize) -> Result<CosetTable> {
    if max_cosets == 0 {
        return Err(Error::Invalid("max_cosets must be at least 1".into()));
    }
    let relators: Vec<Vec<u32>> = p
        .relators()
        .iter()
        .map(|r| r.cyclic_reduce())
        .filter(|r| !r.is_empty())
        .map(|r| r.letters().iter().map(|&l| letter_column(l) as u32).collect())
        .collect();
    let subgroup: Vec<Vec<u32>> = subgroup_words
        .iter()
        .map(|w| w.reduce().letters().iter().map(|&l| letter_column(l) as u32).collect())
        .collect();
    if subgroup.iter().flatten().any(|&c| c as usize >= 2 * p.generator_count()) {
        return Err(Error::Invalid("subgroup word uses an unknown generator".into()));
    }
    let mut e = Enumerator::new(2 * p.generator_count(), max_cosets);
    e.run(&relators, &subgroup)?;
    let mut ct = e.finish(p.generator_count());
    ct.subgroup_trivial = subgroup.iter().all(|w| w.is_empty());
    Ok(ct)
}

struct Full;

struct Enumerator {
    ncols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    max: usize,
    queue: Vec<u32>,
}

impl Enumerator {
    fn new(ncols: usize, max: usize) -> Self {
        Enumerator { ncols, table: vec![UNDEF; ncols], parent: vec![0], max, queue: Vec::new() }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: u32, x: u32) -> u32 {
        self.table[c as usize * self.ncols + x as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, x: u32, v: u32) {
        self.table[c as usize * self.ncols + x as usize] = v;
    }

    #[inline]
    fn live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn define(&mut self, c: u32, x: u32) -> std::result::Result<(), Full> {
        if self.len() >= self.max {
            return Err(Full);
        }
        let d = self.len() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.ncols));
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(())
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi as usize] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i];
            i += 1;
            for x in 0..self.ncols as u32 {
                let d = self.get(dead, x);
                if d == UNDEF {
                    continue;
                }
                self.set(d, x ^ 1, UNDEF);
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mx = self.get(mu, x);
                if mx != UNDEF {
                    self.merge(nu, mx);
                } else {
                    let nx = self.get(nu, x ^ 1);
                    if nx != UNDEF {
                        self.merge(mu, nx);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x ^ 1, mu);
                    }
                }
            }
        }
    }

    /// Traces `w` from `alpha` in both directions. With `fill`, missing
    /// entries are defined until the relator closes.
    fn scan(&mut self, alpha: u32, w: &[u32], fill: bool) -> std::result::Result<(), Full> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (alpha, alpha);
        let mut i = 0isize;
        let mut j = w.len() as isize - 1;
        loop {
            while i <= j && self.get(f, w[i as usize]) != UNDEF {
                f = self.get(f, w[i as usize]);
                i += 1;
            }
            if i > j {
                if f != alpha {
                    self.coincidence(f, alpha);
                }
                return Ok(());
            }
            while j >= i && self.get(b, w[j as usize] ^ 1) != UNDEF {
                b = self.get(b, w[j as usize] ^ 1);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                self.set(f, w[i as usize], b);
                self.set(b, w[i as usize] ^ 1, f);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i as usize])?;
        }
    }

    fn lookahead(&mut self, relators: &[Vec<u32>]) {
        for c in 0..self.len() as u32 {
            for r in relators {
                if !self.live(c) {
                    break;
                }
                let _ = self.scan(c, r, false);
            }
        }
    }

    /// Drops dead rows; returns the new index of the first live coset at or
    /// after `pos`.
    fn compact(&mut self, pos: usize) -> usize {
        let n = self.len();
        let mut new_index = vec![UNDEF; n];
        let mut k = 0u32;
        let mut new_pos = None;
        for c in 0..n {
            if c >= pos && new_pos.is_none() && self.live(c as u32) {
                new_pos = Some(k as usize);
            }
            if self.live(c as u32) {
                new_index[c] = k;
                k += 1;
            }
        }
        let mut table = Vec::with_capacity(k as usize * self.ncols);
        for c in 0..n {
            if new_index[c] != UNDEF {
                for &v in &self.table[c * self.ncols..(c + 1) * self.ncols] {
                    table.push(if v == UNDEF { UNDEF } else { new_index[v as usize] });
                }
            }
        }
        self.table = table;
        self.parent = (0..k).collect();
        new_pos.unwrap_or(k as usize)
    }

    fn run(&mut self, relators: &[Vec<u32>], subgroup: &[Vec<u32>]) -> Result<()> {
        let exceeded = Error::CosetsExceeded { max_cosets: self.max };
        for w in subgroup {
            if self.scan(0, w, true).is_err() {
                self.lookahead(relators);
                self.compact(0);
                if self.scan(0, w, true).is_err() {
                    return Err(exceeded);
                }
            }
        }
        let mut c = 0usize;
        // lookahead passes that freed less than a tenth of the table
        let mut weak_passes = 0;
        while c < self.len() {
            if self.live(c as u32) && self.step(c as u32, relators).is_err() {
                self.lookahead(relators);
                c = self.compact(c);
                if self.len() >= self.max {
                    return Err(exceeded);
                }
                if self.len() * 10 > self.max * 9 {
                    weak_passes += 1;
                    if weak_passes >= 2 {
                        return Err(exceeded);
                    }
                }
                continue;
            }
            c += 1;
        }
        Ok(())
    }

    fn step(&mut self, c: u32, relators: &[Vec<u32>]) -> std::result::Result<(), Full> {
        for r in relators {
            self.scan(c, r, true)?;
            if !self.live(c) {
                return Ok(());
            }
        }
        for x in 0..self.ncols as u32 {
            if self.get(c, x) == UNDEF {
                self.define(c, x)?;
            }
        }
        Ok(())
    }

    fn finish(mut self, generator_count: usize) -> CosetTable {
        self.compact(0);
        let n = self.len();
        // standardize: number cosets in order of first appearance scanning
        // rows in order and columns left to right
        let mut new_index = vec![UNDEF; n];
        let mut order = vec![0u32];
        new_index[0] = 0;
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            for x in 0..self.ncols as u32 {
                let d = self.get(c, x);
                if new_index[d as usize] == UNDEF {
                    new_index[d as usize] = order.len() as u32;
                    order.push(d);
                }
            }
            i += 1;
        }
        let mut table = Vec::with_capacity(n * self.ncols);
        for &c in &order {
            for x in 0..self.ncols as u32 {
                table.push(new_index[self.get(c, x) as usize]);
            }
        }
        CosetTable { generator_count, coset_count: n, table, status: CosetStatus::Complete, subgroup_trivial: false }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enumerate(s: &str) -> CosetTable {
        todd_coxeter(&s.parse().unwrap(), &[], 100).unwrap()
    }

    #[test]
    fn cyclic_five() {
        let t = enumerate("<a | a^5>");
        assert_eq!(t.coset_count(), 5);
        assert_eq!(t.rows(), vec![vec![1, 2], vec![3, 0], vec![0, 4], vec![4, 1], vec![2, 3]]);
    }

    #[test]
    fn triangle_and_quaternion() {
        assert_eq!(enumerate("<a,b | a^2, b^2, (a*b)^3>").coset_count(), 6);
        assert_eq!(enumerate("<a,b | a^4, a^2*b^-2, b^-1*a*b*a>").coset_count(), 8);
    }

    #[test]
    fn subgroup_cosets() {
        let p: Presentation = "<a,b | a^2, b^2, (a*b)^3>".parse().unwrap();
        let t = todd_coxeter(&p, &[Word::generator(0)], 100).unwrap();
        assert_eq!(t.coset_count(), 3);
    }

    #[test]
    fn relators_trace_to_identity() {
        let p: Presentation = "<a,b | a^3, b^3, (a*b)^3, (a*b^-1)^3>".parse().unwrap();
        let t = todd_coxeter(&p, &[], 1000).unwrap();
        assert_eq!(t.coset_count(), 27);
        for c in 0..t.coset_count() {
            for r in p.relators() {
                assert_eq!(t.trace(c, r), c);
            }
        }
    }

    #[test]
    fn exceeded_is_reported() {
        let p: Presentation = "<a,b | a^2>".parse().unwrap();
        assert_eq!(todd_coxeter(&p, &[], 50), Err(Error::CosetsExceeded { max_cosets: 50 }));
    }

    #[test]
    fn tight_budget_uses_lookahead() {
        let p: Presentation = "<a,b | a^8, b^2, b*a*b*a>".parse().unwrap();
        let t = todd_coxeter(&p, &[], 16).unwrap();
        assert_eq!(t.coset_count(), 16);
    }
}
