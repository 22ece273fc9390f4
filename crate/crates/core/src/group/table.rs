use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::prime_power_base;

/// Largest group order any operation accepts.
pub const DEFAULT_ORDER_CAP: usize = 4096;
/// Associativity is checked on every triple up to this order. Above it the
/// check runs over a generating set (exact), falling back to seeded sampling
/// of `10·n²` triples when no small generating set exists.
pub const EXHAUSTIVE_ASSOC_CAP: usize = 512;
const ASSOC_SEED: u64 = 0x5eed_a550c;

/// Shared handle to an immutable group table.
pub type Group = Arc<GroupTable>;

/// A finite group given by its full multiplication table.
///
/// Elements are the indices `0..order`; index 0 is always the identity.
#[derive(Clone)]
pub struct GroupTable {
    name: String,
    order: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
    prime: Option<u32>,
    gens: OnceLock<Vec<usize>>,
}

/// Raw table data as stored in group files. It may violate the group axioms;
/// [`validate_table`] decides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableData {
    pub name: String,
    pub order: usize,
    pub prime: Option<u32>,
    pub mult: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Shape,
    IdentityLaw,
    LatinSquare,
    InverseLaw,
    Associativity,
    PrimePower,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Shape => "table shape",
            Axiom::IdentityLaw => "identity law",
            Axiom::LatinSquare => "latin square",
            Axiom::InverseLaw => "inverse law",
            Axiom::Associativity => "associativity",
            Axiom::PrimePower => "prime-power order",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated (witness {:?})", self.axiom, self.witness)
    }
}

/// Checks every group axiom on raw table data and returns the first failure.
pub fn validate_table(t: &TableData) -> Result<(), Violation> {
    let n = t.order;
    let bad = |axiom, witness: Vec<usize>| Err(Violation { axiom, witness });
    if n == 0 || t.mult.len() != n {
        return bad(Axiom::Shape, vec![t.mult.len()]);
    }
    for (i, row) in t.mult.iter().enumerate() {
        if row.len() != n {
            return bad(Axiom::Shape, vec![i]);
        }
        if let Some(j) = row.iter().position(|&v| v as usize >= n) {
            return bad(Axiom::Shape, vec![i, j]);
        }
    }
    let flat: Vec<u32> = t.mult.iter().flatten().copied().collect();
    validate_flat(n, &flat, t.prime)
}

/// Greedy set of elements from which every element is reached by right
/// multiplication starting at the identity. Gives up (returning `None`) once
/// the set grows past what a group of order `n` could need.
fn right_generators(n: usize, m: &impl Fn(usize, usize) -> usize) -> Option<Vec<usize>> {
    let limit = usize::BITS - n.leading_zeros() + 1;
    let mut gens = Vec::new();
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut queue = vec![0];
    let mut count = 1;
    while count < n {
        if gens.len() as u32 >= limit {
            return None;
        }
        let g = (0..n).find(|&x| !reached[x])?;
        gens.push(g);
        // re-run the search from everything reached so far with the new generator
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for &h in &gens {
                let y = m(x, h);
                if !reached[y] {
                    reached[y] = true;
                    queue.push(y);
                    count += 1;
                }
            }
            i += 1;
        }
    }
    Some(gens)
}

fn validate_flat(n: usize, mult: &[u32], prime: Option<u32>) -> Result<(), Violation> {
    let m = |a: usize, b: usize| mult[a * n + b] as usize;
    let bad = |axiom, witness: Vec<usize>| Err(Violation { axiom, witness });
    for x in 0..n {
        if m(0, x) != x || m(x, 0) != x {
            return bad(Axiom::IdentityLaw, vec![x]);
        }
    }
    let mut seen = vec![usize::MAX; n];
    for x in 0..n {
        for y in 0..n {
            let v = m(x, y);
            if seen[v] == x {
                return bad(Axiom::LatinSquare, vec![x, y]);
            }
            seen[v] = x;
        }
    }
    seen.fill(usize::MAX);
    for y in 0..n {
        for x in 0..n {
            let v = m(x, y);
            if seen[v] == y {
                return bad(Axiom::LatinSquare, vec![x, y]);
            }
            seen[v] = y;
        }
    }
    for x in 0..n {
        let Some(y) = (0..n).find(|&y| m(x, y) == 0) else {
            return bad(Axiom::InverseLaw, vec![x]);
        };
        if m(y, x) != 0 {
            return bad(Axiom::InverseLaw, vec![x]);
        }
    }
    if n <= EXHAUSTIVE_ASSOC_CAP {
        for x in 0..n {
            for y in 0..n {
                let xy = m(x, y);
                for z in 0..n {
                    if m(xy, z) != m(x, m(y, z)) {
                        return bad(Axiom::Associativity, vec![x, y, z]);
                    }
                }
            }
        }
    } else if let Some(gens) = right_generators(n, &m) {
        // Light's test: the y with (xy)z = x(yz) for all x, z are closed under
        // products, so checking generators that reach every element suffices
        for &g in &gens {
            for x in 0..n {
                let xg = m(x, g);
                for z in 0..n {
                    if m(xg, z) != m(x, m(g, z)) {
                        return bad(Axiom::Associativity, vec![x, g, z]);
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(ASSOC_SEED);
        for _ in 0..10 * n * n {
            let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if m(m(x, y), z) != m(x, m(y, z)) {
                return bad(Axiom::Associativity, vec![x, y, z]);
            }
        }
    }
    if let Some(p) = prime {
        if prime_power_base(n as u64) != Some(p as u64) {
            return bad(Axiom::PrimePower, vec![n]);
        }
    }
    Ok(())
}

impl GroupTable {
    /// Builds a table from a flat row-major product array, validating it.
    pub fn from_flat(name: impl Into<String>, order: usize, mult: Vec<u32>, prime: Option<u32>) -> Result<Self> {
        Self::from_flat_capped(name, order, mult, prime, DEFAULT_ORDER_CAP)
    }

    /// [`GroupTable::from_flat`] with an explicit order cap in place of
    /// [`DEFAULT_ORDER_CAP`].
    pub fn from_flat_capped(
        name: impl Into<String>,
        order: usize,
        mult: Vec<u32>,
        prime: Option<u32>,
        cap: usize,
    ) -> Result<Self> {
        if order > cap {
            return Err(Error::OrderCap { order, cap });
        }
        if order == 0 || mult.len() != order * order || mult.iter().any(|&v| v as usize >= order) {
            return Err(Error::InvalidTable("table shape".into()));
        }
        validate_flat(order, &mult, prime).map_err(|v| Error::InvalidTable(v.to_string()))?;
        let mut inv = vec![0u32; order];
        for x in 0..order {
            inv[x] = (0..order).find(|&y| mult[x * order + y] == 0).unwrap() as u32;
        }
        Ok(GroupTable { name: name.into(), order, mult, inv, prime, gens: OnceLock::new() })
    }

    /// Builds a table from a product function on `0..order`.
    pub fn from_fn(
        name: impl Into<String>,
        order: usize,
        prime: Option<u32>,
        op: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        if order > DEFAULT_ORDER_CAP {
            return Err(Error::OrderCap { order, cap: DEFAULT_ORDER_CAP });
        }
        let mut mult = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                mult.push(op(a, b) as u32);
            }
        }
        Self::from_flat(name, order, mult, prime)
    }

    /// Builds a table and tags it with `p` when its order is a power of `p`.
    pub fn from_fn_tagged(name: impl Into<String>, order: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let prime = prime_power_base(order as u64).map(|p| p as u32);
        Self::from_fn(name, order, prime, op)
    }

    pub fn from_data(data: &TableData) -> Result<Self> {
        validate_table(data).map_err(|v| Error::InvalidTable(v.to_string()))?;
        let flat = data.mult.iter().flatten().copied().collect();
        Self::from_flat(data.name.clone(), data.order, flat, data.prime)
    }

    pub fn to_data(&self) -> TableData {
        TableData {
            name: self.name.clone(),
            order: self.order,
            prime: self.prime,
            mult: self.mult.chunks(self.order).map(|r| r.to_vec()).collect(),
        }
    }

    pub fn trivial() -> Self {
        Self::from_flat("1", 1, vec![0], None).expect("trivial group")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn prime(&self) -> Option<u32> {
        self.prime
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g x g⁻¹`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `x⁻¹ y⁻¹ x y`
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn pow(&self, x: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(x) } else { x };
        let mut k = e.unsigned_abs();
        let (mut acc, mut sq) = (0, base);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).map(|x| self.element_order(x)).fold(1, crate::numtheory::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A deterministic generating set, chosen greedily in index order.
    pub fn generators(&self) -> &[usize] {
        self.gens.get_or_init(|| {
            let mut gens = Vec::new();
            let mut member = vec![false; self.order];
            member[0] = true;
            let mut elems = vec![0usize];
            for x in 1..self.order {
                if !member[x] {
                    gens.push(x);
                    crate::group::subgroup::extend_closure(self, &mut elems, &mut member, &gens);
                }
            }
            gens
        })
    }

    pub fn same_as(&self, other: &GroupTable) -> bool {
        std::ptr::eq(self, other) || (self.order == other.order && self.mult == other.mult)
    }

    /// Checks the prime tag against a caller-supplied prime.
    pub fn require_prime(&self, p: u32) -> Result<()> {
        match self.prime {
            Some(t) if t == p => Ok(()),
            None if self.order == 1 => Ok(()),
            tagged => Err(Error::PrimeMismatch { given: p, tagged }),
        }
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("prime", &self.prime)
            .finish()
    }
}

impl PartialEq for GroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for GroupTable {}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_data(n: usize) -> TableData {
        TableData {
            name: format!("C{n}"),
            order: n,
            prime: None,
            mult: (0..n).map(|i| (0..n).map(|j| ((i + j) % n) as u32).collect()).collect(),
        }
    }

    #[test]
    fn identity_violation_reports_witness() {
        let mut d = cyclic_data(4);
        d.mult[0][1] = 0;
        let v = validate_table(&d).unwrap_err();
        assert_eq!(v.axiom, Axiom::IdentityLaw);
        assert_eq!(v.witness, vec![1]);
    }

    #[test]
    fn non_associative_latin_square_is_caught() {
        // order-5 loop where every element squares to 0; no group of order 5 has involutions
        let rows = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]];
        let d =
            TableData { name: "loop5".into(), order: 5, prime: None, mult: rows.iter().map(|r| r.to_vec()).collect() };
        assert_eq!(validate_table(&d).unwrap_err().axiom, Axiom::Associativity);
    }

    #[test]
    fn prime_tag_must_match_order() {
        let mut d = cyclic_data(6);
        d.prime = Some(2);
        assert_eq!(validate_table(&d).unwrap_err().axiom, Axiom::PrimePower);
        assert!(GroupTable::from_data(&d).is_err());
    }

    #[test]
    fn shape_errors() {
        let mut d = cyclic_data(3);
        d.mult[2].pop();
        assert_eq!(validate_table(&d).unwrap_err().axiom, Axiom::Shape);
        let mut d = cyclic_data(3);
        d.mult[1][1] = 7;
        assert_eq!(validate_table(&d).unwrap_err().axiom, Axiom::Shape);
    }

    #[test]
    fn powers_and_orders() {
        let g = GroupTable::from_data(&cyclic_data(12)).unwrap();
        assert_eq!(g.pow(1, 5), 5);
        assert_eq!(g.pow(1, -1), 11);
        assert_eq!(g.element_order(4), 3);
        assert_eq!(g.exponent(), 12);
        assert_eq!(g.generators(), &[1]);
    }

    #[test]
    fn order_cap_is_enforced() {
        let err = GroupTable::from_fn("big", DEFAULT_ORDER_CAP + 1, None, |a, b| a ^ b).unwrap_err();
        assert!(err.is_resource());
    }
}
