use std::fmt;

use serde::{Deserialize, Serialize};

/// A word in the free group: nonzero signed 1-based generator indices,
/// negative meaning the inverse generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<i32>);

impl Word {
    /// # Panics
    /// If any letter is 0.
    pub fn new(letters: Vec<i32>) -> Self {
        assert!(letters.iter().all(|&l| l != 0), "0 is not a generator letter");
        Word(letters)
    }

    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// The 0-based generator `g` as a one-letter word.
    pub fn generator(g: usize) -> Self {
        Word(vec![g as i32 + 1])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<i32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index used (1-based), 0 for the empty word.
    pub fn max_generator(&self) -> usize {
        self.0.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }

    /// Freely reduced product `self · other`.
    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        for &l in &other.0 {
            push_reduced(&mut out, l);
        }
        Word(out)
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn reduce(&self) -> Word {
        reduce(self)
    }

    /// Freely and cyclically reduced form.
    pub fn cyclic_reduce(&self) -> Word {
        let r = reduce(self).0;
        let (mut i, mut j) = (0, r.len());
        while j >= i + 2 && r[i] == -r[j - 1] {
            i += 1;
            j -= 1;
        }
        Word(r[i..j].to_vec())
    }

    /// Evaluates the word with `image(g, inverted)` supplying the element of
    /// each 0-based generator, folded by `mul` from `one`.
    pub fn evaluate<T: Copy>(&self, one: T, image: impl Fn(usize, bool) -> T, mul: impl Fn(T, T) -> T) -> T {
        self.0.iter().fold(one, |acc, &l| mul(acc, image(l.unsigned_abs() as usize - 1, l < 0)))
    }

    /// Replaces every occurrence of generator `g` (0-based) by `by`.
    pub fn substitute(&self, g: usize, by: &Word) -> Word {
        let inv = by.inverse();
        let mut out = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if l.unsigned_abs() as usize == g + 1 {
                let w = if l > 0 { by } else { &inv };
                for &m in &w.0 {
                    push_reduced(&mut out, m);
                }
            } else {
                push_reduced(&mut out, l);
            }
        }
        Word(out)
    }
}

fn push_reduced(out: &mut Vec<i32>, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

/// Free reduction: cancels adjacent `x x⁻¹` pairs until none remain.
pub fn reduce(w: &Word) -> Word {
    let mut out = Vec::with_capacity(w.0.len());
    for &l in &w.0 {
        push_reduced(&mut out, l);
    }
    Word(out)
}

impl From<Vec<i32>> for Word {
    fn from(v: Vec<i32>) -> Self {
        Word::new(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&Word::new(vec![1, -1])), Word::identity());
        assert_eq!(reduce(&Word::new(vec![1, 2, -2, 1])), Word::new(vec![1, 1]));
        assert_eq!(reduce(&Word::new(vec![-3, 3, -3])), Word::new(vec![-3]));
    }

    #[test]
    fn cyclic_reduction() {
        assert_eq!(Word::new(vec![2, 1, 3, -2]).cyclic_reduce(), Word::new(vec![1, 3]));
        assert_eq!(Word::new(vec![1, 2, -1]).cyclic_reduce(), Word::new(vec![2]));
    }

    #[test]
    fn substitution() {
        let w = Word::new(vec![1, -2, 1]);
        assert_eq!(w.substitute(1, &Word::new(vec![1, 3])), Word::new(vec![1, -3]));
    }

    fn word() -> impl Strategy<Value = Word> {
        prop::collection::vec((1i32..4, any::<bool>()), 0..24)
            .prop_map(|v| Word::new(v.into_iter().map(|(g, s)| if s { g } else { -g }).collect()))
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent(w in word()) {
            let r = reduce(&w);
            prop_assert_eq!(reduce(&r), r.clone());
            prop_assert!(r.letters().windows(2).all(|p| p[0] != -p[1]));
        }

        #[test]
        fn inverse_cancels(w in word()) {
            prop_assert!(w.mul(&w.inverse()).is_empty());
        }
    }
}
