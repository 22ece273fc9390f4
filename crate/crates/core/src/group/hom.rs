use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::subgroup::SubgroupRef;
use crate::group::table::Group;

/// An elementwise map between two group tables that respects multiplication.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: Group,
    target: Group,
    image: Vec<usize>,
}

impl Homomorphism {
    /// Wraps an image array after checking the homomorphism law on all pairs.
    pub fn new(source: &Group, target: &Group, image: Vec<usize>) -> Result<Self> {
        if image.len() != source.order() || image.iter().any(|&y| y >= target.order()) {
            return Err(Error::Invalid("image array has the wrong shape".into()));
        }
        let h = Homomorphism { source: source.clone(), target: target.clone(), image };
        h.check()?;
        Ok(h)
    }

    /// Trusted constructor for maps whose law is checked elsewhere.
    pub(crate) fn new_unchecked(source: &Group, target: &Group, image: Vec<usize>) -> Self {
        Homomorphism { source: source.clone(), target: target.clone(), image }
    }

    pub fn identity(g: &Group) -> Self {
        Self::new_unchecked(g, g, (0..g.order()).collect())
    }

    pub fn trivial(source: &Group, target: &Group) -> Self {
        Self::new_unchecked(source, target, vec![0; source.order()])
    }

    /// Extends prescribed generator images to the whole source by a spanning
    /// search over the generators, then verifies the result exhaustively.
    ///
    /// Fails if the generators do not generate the source, if two paths
    /// assign different images, or if the extension is not a homomorphism.
    pub fn from_generator_images(source: &Group, target: &Group, assignments: &[(usize, usize)]) -> Result<Self> {
        let n = source.order();
        let mut image = vec![usize::MAX; n];
        image[0] = 0;
        let mut queue = vec![0usize];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for &(s, t) in assignments {
                let y = source.mul(x, s);
                let v = target.mul(image[x], t);
                if image[y] == usize::MAX {
                    image[y] = v;
                    queue.push(y);
                } else if image[y] != v {
                    return Err(Error::NotHomomorphism { x, y: s });
                }
            }
            i += 1;
        }
        if queue.len() != n {
            return Err(Error::Invalid("generator images do not reach every element".into()));
        }
        Self::new(source, target, image)
    }

    fn check(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if self.image[0] != 0 {
            return Err(Error::NotHomomorphism { x: 0, y: 0 });
        }
        // checking against a generating set on the right suffices
        for x in 0..s.order() {
            for &y in s.generators() {
                if self.image[s.mul(x, y)] != t.mul(self.image[x], self.image[y]) {
                    return Err(Error::NotHomomorphism { x, y });
                }
            }
        }
        Ok(())
    }

    /// Exhaustive check of the homomorphism law over every pair.
    pub fn verify_exhaustive(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        for x in 0..s.order() {
            for y in 0..s.order() {
                if self.image[s.mul(x, y)] != t.mul(self.image[x], self.image[y]) {
                    return Err(Error::NotHomomorphism { x, y });
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Group {
        &self.source
    }

    pub fn target(&self) -> &Group {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn kernel(&self) -> SubgroupRef {
        let elems: Vec<usize> = (0..self.source.order()).filter(|&x| self.image[x] == 0).collect();
        SubgroupRef::closure(&self.source, elems)
    }

    pub fn image_subgroup(&self) -> SubgroupRef {
        SubgroupRef::closure(&self.target, self.image.iter().copied())
    }

    /// Image of a subgroup of the source.
    pub fn map_subgroup(&self, s: &SubgroupRef) -> SubgroupRef {
        SubgroupRef::closure(&self.target, s.elements().iter().map(|&x| self.image[x]))
    }

    /// `other ∘ self`
    pub fn then(&self, other: &Homomorphism) -> Result<Homomorphism> {
        if !self.target.same_as(other.source()) {
            return Err(Error::AmbientMismatch);
        }
        let image = self.image.iter().map(|&x| other.apply(x)).collect();
        Ok(Homomorphism::new_unchecked(&self.source, &other.target, image))
    }

    pub fn is_surjective(&self) -> bool {
        self.image_subgroup().is_whole()
    }

    pub fn agrees_with(&self, other: &Homomorphism) -> bool {
        self.image == other.image
    }
}

/// An action of `actor` on `space` by automorphisms: `perm[g]` is the
/// permutation `x ↦ ^g x`.
#[derive(Clone, Debug)]
pub struct ActionByAutomorphisms {
    actor: Group,
    space: Group,
    perm: Vec<u32>,
}

impl ActionByAutomorphisms {
    /// Builds an action from a function and checks every invariant.
    pub fn new(actor: &Group, space: &Group, act: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let a = Self::new_unchecked(actor, space, act);
        a.validate()?;
        Ok(a)
    }

    pub(crate) fn new_unchecked(actor: &Group, space: &Group, act: impl Fn(usize, usize) -> usize) -> Self {
        let mut perm = Vec::with_capacity(actor.order() * space.order());
        for g in 0..actor.order() {
            for x in 0..space.order() {
                perm.push(act(g, x) as u32);
            }
        }
        ActionByAutomorphisms { actor: actor.clone(), space: space.clone(), perm }
    }

    /// Conjugation `^g x = g x g⁻¹` of a group on itself.
    pub fn conjugation(g: &Group) -> Self {
        Self::new_unchecked(g, g, |a, x| g.conj(a, x))
    }

    pub fn trivial(actor: &Group, space: &Group) -> Self {
        Self::new_unchecked(actor, space, |_, x| x)
    }

    /// Action of `actor` through a homomorphism into the acting group of `self`.
    pub fn pull_back(&self, along: &Homomorphism) -> Result<Self> {
        if !along.target().same_as(&self.actor) {
            return Err(Error::AmbientMismatch);
        }
        Ok(Self::new_unchecked(along.source(), &self.space, |g, x| self.act(along.apply(g), x)))
    }

    pub fn actor(&self) -> &Group {
        &self.actor
    }

    pub fn space(&self) -> &Group {
        &self.space
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.perm[g * self.space.order() + x] as usize
    }

    pub fn validate(&self) -> Result<()> {
        let (a, s) = (&self.actor, &self.space);
        let n = s.order();
        for x in 0..n {
            if self.act(0, x) != x {
                return Err(Error::InvalidAction(format!("identity moves {x}")));
            }
        }
        for g in 0..a.order() {
            let mut seen = vec![false; n];
            for x in 0..n {
                let y = self.act(g, x);
                if y >= n || seen[y] {
                    return Err(Error::InvalidAction(format!("{g} does not permute the space")));
                }
                seen[y] = true;
            }
            for x in 0..n {
                for &y in s.generators() {
                    if self.act(g, s.mul(x, y)) != s.mul(self.act(g, x), self.act(g, y)) {
                        return Err(Error::InvalidAction(format!("{g} is not an automorphism")));
                    }
                }
            }
        }
        for g in 0..a.order() {
            for &h in a.generators() {
                let gh = a.mul(g, h);
                for x in 0..n {
                    if self.act(gh, x) != self.act(g, self.act(h, x)) {
                        return Err(Error::InvalidAction(format!("not compatible with {g}*{h}")));
                    }
                }
            }
        }
        Ok(())
    }
}

#[allow(dead_code)]
pub(crate) fn same_group(a: &Group, b: &Group) -> bool {
    Arc::ptr_eq(a, b) || a.same_as(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    #[test]
    fn generator_images_extend() {
        let c12 = Arc::new(catalog::cyclic(12).unwrap());
        let c4 = Arc::new(catalog::cyclic(4).unwrap());
        let h = Homomorphism::from_generator_images(&c12, &c4, &[(1, 1)]).unwrap();
        assert_eq!(h.apply(7), 3);
        assert_eq!(h.kernel().order(), 3);
        assert!(h.is_surjective());
        h.verify_exhaustive().unwrap();
    }

    #[test]
    fn inconsistent_images_are_rejected() {
        let c4 = Arc::new(catalog::cyclic(4).unwrap());
        let c3 = Arc::new(catalog::cyclic(3).unwrap());
        assert!(Homomorphism::from_generator_images(&c4, &c3, &[(1, 1)]).is_err());
    }

    #[test]
    fn conjugation_is_an_action() {
        let q = Arc::new(catalog::quaternion8().unwrap());
        ActionByAutomorphisms::conjugation(&q).validate().unwrap();
    }

    #[test]
    fn non_automorphism_is_rejected() {
        let c4 = Arc::new(catalog::cyclic(4).unwrap());
        let c2 = Arc::new(catalog::cyclic(2).unwrap());
        // the generator of C2 acting by x -> x + 1 is not an automorphism
        let err = ActionByAutomorphisms::new(&c2, &c4, |g, x| (x + g) % 4).unwrap_err();
        assert!(matches!(err, Error::InvalidAction(_)));
    }
}
