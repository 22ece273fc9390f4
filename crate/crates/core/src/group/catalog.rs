//! Constructors for the small groups used throughout the toolkit.
//!
//! Element numbering (index 0 is always the identity):
//!
//! * `cyclic(n)`: index `i` is `a^i`.
//! * `elementary_abelian(p, k)`: index `Σ d_j p^j` is the vector `(d_0, …, d_{k-1})`.
//! * `direct_product(a, b)`: index `x + |a|·y` is the pair `(x, y)`.
//! * `semidirect(a, b, φ)`: index `x + |a|·h` is `(x, h)` with
//!   `(x, h)(x', h') = (x·φ_h(x'), hh')`.
//! * `heisenberg(p)`: index `a + p·b + p²·c` is the unitriangular matrix with
//!   entries `a` (1,2), `b` (2,3), `c` (1,3).
//! * `dihedral`, `semidihedral`, `modular`, `extraspecial_exp_p2` and
//!   `semidirect_cyclic`: cyclic-by-cyclic semidirect products, index
//!   `i + n·j` is `x^i y^j`.
//! * `quaternion8`: index `i + 4j` is `a^i b^j` with `a⁴ = 1`, `b² = a²`,
//!   `b a b⁻¹ = a⁻¹`.
//! * `wreath(p)`: `C_p^p ⋊ C_p` with the generator shifting coordinates.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::hom::ActionByAutomorphisms;
use crate::group::table::{Group, GroupTable};
use crate::numtheory::{gcd, is_prime};

fn require_prime(p: u32) -> Result<()> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    let mut b = base % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

pub fn cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::UnknownSpec("cyclic(0)".into()));
    }
    GroupTable::from_fn_tagged(format!("C{n}"), n, |a, b| (a + b) % n)
}

pub fn elementary_abelian(p: u32, k: u32) -> Result<GroupTable> {
    require_prime(p)?;
    let p = p as usize;
    let order = p.checked_pow(k).ok_or(Error::OrderCap { order: usize::MAX, cap: 0 })?;
    GroupTable::from_fn_tagged(format!("C{p}^{k}"), order, |mut a, mut b| {
        let (mut out, mut place) = (0, 1);
        for _ in 0..k {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    })
}

pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Result<GroupTable> {
    let (na, nb) = (a.order(), b.order());
    let name = format!("{}x{}", a.name(), b.name());
    GroupTable::from_fn_tagged(name, na * nb, |x, y| {
        let (x1, x2) = (x % na, x / na);
        let (y1, y2) = (y % na, y / na);
        a.mul(x1, y1) + na * b.mul(x2, y2)
    })
}

/// `a ⋊ b` where `action` is an action of `b` on `a` by automorphisms.
pub fn semidirect(a: &Group, b: &Group, action: &ActionByAutomorphisms) -> Result<GroupTable> {
    if !action.actor().same_as(b) || !action.space().same_as(a) {
        return Err(Error::InvalidAction("action does not match the factors".into()));
    }
    action.validate()?;
    let na = a.order();
    let name = format!("{}:{}", a.name(), b.name());
    GroupTable::from_fn_tagged(name, na * b.order(), |x, y| {
        let (x1, h1) = (x % na, x / na);
        let (y1, h2) = (y % na, y / na);
        a.mul(x1, action.act(h1, y1)) + na * b.mul(h1, h2)
    })
}

/// `C_n ⋊ C_m` where the generator of `C_m` maps `x ↦ x^r`.
pub fn semidirect_cyclic(n: usize, m: usize, r: usize) -> Result<GroupTable> {
    if n == 0 || m == 0 {
        return Err(Error::UnknownSpec(format!("semidirect_cyclic({n},{m},{r})")));
    }
    if gcd(r % n, n) != 1 && n > 1 {
        return Err(Error::InvalidAction(format!("x -> x^{r} is not invertible mod {n}")));
    }
    if pow_mod(r as u64, m as u64, n as u64) != 1 % n as u64 {
        return Err(Error::InvalidAction(format!("{r}^{m} != 1 mod {n}")));
    }
    let a = Arc::new(cyclic(n)?);
    let b = Arc::new(cyclic(m)?);
    let action = ActionByAutomorphisms::new(&b, &a, |j, x| (x * pow_mod(r as u64, j as u64, n as u64) as usize) % n)?;
    semidirect(&a, &b, &action)
}

/// Extraspecial group of order `p³` and exponent `p` (odd `p`).
pub fn heisenberg(p: u32) -> Result<GroupTable> {
    require_prime(p)?;
    if p == 2 {
        return Err(Error::UnknownSpec("heisenberg(2) has exponent 4; use dihedral(8)".into()));
    }
    let p = p as usize;
    let split = |x: usize| (x % p, (x / p) % p, x / (p * p));
    GroupTable::from_fn_tagged(format!("Heis({p})"), p * p * p, |x, y| {
        let (a, b, c) = split(x);
        let (a2, b2, c2) = split(y);
        (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p)
    })
}

/// `C_{p²} ⋊ C_p` with `x ↦ x^{1+p}`: extraspecial of order `p³`, exponent `p²`.
pub fn extraspecial_exp_p2(p: u32) -> Result<GroupTable> {
    require_prime(p)?;
    let p = p as usize;
    Ok(semidirect_cyclic(p * p, p, p + 1)?.with_name(format!("XP2({p})")))
}

/// Dihedral group of order `n` (`n` even, at least 4).
pub fn dihedral(n: usize) -> Result<GroupTable> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::UnknownSpec(format!("dihedral({n})")));
    }
    let h = n / 2;
    Ok(semidirect_cyclic(h, 2, h - 1)?.with_name(format!("D{n}")))
}

pub fn quaternion8() -> Result<GroupTable> {
    GroupTable::from_fn_tagged("Q8", 8, |x, y| {
        let (i, j) = (x % 4, x / 4);
        let (i2, j2) = (y % 4, y / 4);
        let i2 = if j == 1 { (4 - i2) % 4 } else { i2 };
        let mut e = (i + i2) % 4;
        let mut f = j + j2;
        if f == 2 {
            e = (e + 2) % 4;
            f = 0;
        }
        e + 4 * f
    })
}

/// Semidihedral group of order `n = 2^k`, `k ≥ 4`: `x ↦ x^{n/4 - 1}`.
pub fn semidihedral(n: usize) -> Result<GroupTable> {
    if n < 16 || !n.is_power_of_two() {
        return Err(Error::UnknownSpec(format!("semidihedral({n})")));
    }
    Ok(semidirect_cyclic(n / 2, 2, n / 4 - 1)?.with_name(format!("SD{n}")))
}

/// Modular group of order `n = 2^k`, `k ≥ 4`: `x ↦ x^{n/4 + 1}`.
pub fn modular(n: usize) -> Result<GroupTable> {
    if n < 16 || !n.is_power_of_two() {
        return Err(Error::UnknownSpec(format!("modular({n})")));
    }
    Ok(semidirect_cyclic(n / 2, 2, n / 4 + 1)?.with_name(format!("Mod{n}")))
}

/// `C_p ≀ C_p`, of order `p^{p+1}` and class `p`.
pub fn wreath(p: u32) -> Result<GroupTable> {
    require_prime(p)?;
    let base = Arc::new(elementary_abelian(p, p)?);
    let top = Arc::new(cyclic(p as usize)?);
    let pu = p as usize;
    let shift = |x: usize| {
        let mut digits: Vec<usize> = (0..pu).map(|j| (x / pu.pow(j as u32)) % pu).collect();
        digits.rotate_right(1);
        digits.iter().rev().fold(0, |acc, &d| acc * pu + d)
    };
    let action = ActionByAutomorphisms::new(&top, &base, |j, x| (0..j).fold(x, |y, _| shift(y)))?;
    Ok(semidirect(&base, &top, &action)?.with_name(format!("Wr({p})")))
}

/// Parsed form of a catalog constructor string such as `heisenberg(3)` or
/// `direct_product(cyclic(9),cyclic(3))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogSpec {
    Cyclic(usize),
    ElementaryAbelian(u32, u32),
    Heisenberg(u32),
    ExtraspecialExpP2(u32),
    Dihedral(usize),
    Quaternion8,
    Semidihedral(usize),
    Modular(usize),
    Wreath(u32),
    SemidirectCyclic(usize, usize, usize),
    DirectProduct(Box<CatalogSpec>, Box<CatalogSpec>),
}

impl CatalogSpec {
    pub fn build(&self) -> Result<GroupTable> {
        match self {
            CatalogSpec::Cyclic(n) => cyclic(*n),
            CatalogSpec::ElementaryAbelian(p, k) => elementary_abelian(*p, *k),
            CatalogSpec::Heisenberg(p) => heisenberg(*p),
            CatalogSpec::ExtraspecialExpP2(p) => extraspecial_exp_p2(*p),
            CatalogSpec::Dihedral(n) => dihedral(*n),
            CatalogSpec::Quaternion8 => quaternion8(),
            CatalogSpec::Semidihedral(n) => semidihedral(*n),
            CatalogSpec::Modular(n) => modular(*n),
            CatalogSpec::Wreath(p) => wreath(*p),
            CatalogSpec::SemidirectCyclic(n, m, r) => semidirect_cyclic(*n, *m, *r),
            CatalogSpec::DirectProduct(a, b) => direct_product(&a.build()?, &b.build()?),
        }
    }

    /// Order without building the table.
    pub fn order(&self) -> Option<usize> {
        Some(match self {
            CatalogSpec::Cyclic(n) | CatalogSpec::Dihedral(n) => *n,
            CatalogSpec::Semidihedral(n) | CatalogSpec::Modular(n) => *n,
            CatalogSpec::ElementaryAbelian(p, k) => (*p as usize).checked_pow(*k)?,
            CatalogSpec::Heisenberg(p) | CatalogSpec::ExtraspecialExpP2(p) => (*p as usize).pow(3),
            CatalogSpec::Quaternion8 => 8,
            CatalogSpec::Wreath(p) => (*p as usize).checked_pow(p + 1)?,
            CatalogSpec::SemidirectCyclic(n, m, _) => n * m,
            CatalogSpec::DirectProduct(a, b) => a.order()?.checked_mul(b.order()?)?,
        })
    }
}

impl fmt::Display for CatalogSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogSpec::Cyclic(n) => write!(f, "cyclic({n})"),
            CatalogSpec::ElementaryAbelian(p, k) => write!(f, "elementary_abelian({p},{k})"),
            CatalogSpec::Heisenberg(p) => write!(f, "heisenberg({p})"),
            CatalogSpec::ExtraspecialExpP2(p) => write!(f, "extraspecial_exp_p2({p})"),
            CatalogSpec::Dihedral(n) => write!(f, "dihedral({n})"),
            CatalogSpec::Quaternion8 => write!(f, "quaternion(8)"),
            CatalogSpec::Semidihedral(n) => write!(f, "semidihedral({n})"),
            CatalogSpec::Modular(n) => write!(f, "modular({n})"),
            CatalogSpec::Wreath(p) => write!(f, "wreath({p})"),
            CatalogSpec::SemidirectCyclic(n, m, r) => write!(f, "semidirect_cyclic({n},{m},{r})"),
            CatalogSpec::DirectProduct(a, b) => write!(f, "direct_product({a},{b})"),
        }
    }
}

impl FromStr for CatalogSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        parse_spec(&s).ok_or_else(|| Error::UnknownSpec(s.clone()))
    }
}

fn split_args(inner: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&inner[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&inner[start..]);
    out
}

fn parse_spec(s: &str) -> Option<CatalogSpec> {
    use CatalogSpec::*;
    let num = |t: &str| t.parse::<usize>().ok();
    if let Some(open) = s.find('(') {
        if !s.ends_with(')') {
            return None;
        }
        let head = &s[..open];
        let args = split_args(&s[open + 1..s.len() - 1]);
        let n = |i: usize| args.get(i).and_then(|a| num(a));
        let one = |f: fn(usize) -> CatalogSpec| (args.len() == 1).then(|| n(0).map(f)).flatten();
        return match head {
            "cyclic" | "C" => one(Cyclic),
            "dihedral" | "D" => one(Dihedral),
            "semidihedral" | "SD" => one(Semidihedral),
            "modular" => one(Modular),
            "quaternion" | "Q" => (n(0)? == 8 && args.len() == 1).then_some(Quaternion8),
            "heisenberg" | "Heis" => Some(Heisenberg(n(0)? as u32)),
            "extraspecial_exp_p2" | "XP2" => Some(ExtraspecialExpP2(n(0)? as u32)),
            "wreath" | "Wr" => Some(Wreath(n(0)? as u32)),
            "elementary_abelian" if args.len() == 2 => Some(ElementaryAbelian(n(0)? as u32, n(1)? as u32)),
            "semidirect_cyclic" if args.len() == 3 => Some(SemidirectCyclic(n(0)?, n(1)?, n(2)?)),
            "direct_product" if args.len() == 2 => {
                Some(DirectProduct(Box::new(parse_spec(args[0])?), Box::new(parse_spec(args[1])?)))
            }
            _ => None,
        };
    }
    // shorthands: C8, D16, SD16, Q8, heisenberg3, Heis3, XP2_3
    let split_num = |prefix: &str| s.strip_prefix(prefix).and_then(num);
    if s == "Q8" {
        return Some(Quaternion8);
    }
    if let Some(n) = split_num("SD") {
        return Some(Semidihedral(n));
    }
    if let Some(n) = split_num("heisenberg").or_else(|| split_num("Heis")) {
        return Some(Heisenberg(n as u32));
    }
    if let Some(n) = split_num("Mod") {
        return Some(Modular(n));
    }
    if let Some(n) = split_num("C") {
        return Some(Cyclic(n));
    }
    if let Some(n) = split_num("D") {
        return Some(Dihedral(n));
    }
    None
}

/// Builds a group from a catalog string.
pub fn catalog(spec: &str) -> Result<GroupTable> {
    spec.parse::<CatalogSpec>()?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_table() {
        let g = cyclic(5).unwrap();
        assert_eq!(g.order(), 5);
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(g.mul(i, j), (i + j) % 5);
            }
        }
        assert_eq!(g.prime(), Some(5));
    }

    #[test]
    fn heisenberg_has_exponent_p() {
        let g = heisenberg(3).unwrap();
        assert_eq!(g.order(), 27);
        assert_eq!(g.exponent(), 3);
        assert!(!g.is_abelian());
    }

    #[test]
    fn extraspecial_exp_p2_shape() {
        let g = extraspecial_exp_p2(3).unwrap();
        assert_eq!(g.order(), 27);
        assert_eq!(g.exponent(), 9);
        assert!(!g.is_abelian());
    }

    #[test]
    fn klein_four() {
        let c2 = cyclic(2).unwrap();
        let v = direct_product(&c2, &c2).unwrap();
        assert_eq!(v.order(), 4);
        assert_eq!(v.exponent(), 2);
        assert!(v.is_abelian());
    }

    #[test]
    fn two_groups() {
        let q = quaternion8().unwrap();
        assert_eq!((0..8).filter(|&x| q.element_order(x) == 2).count(), 1);
        let d = dihedral(8).unwrap();
        assert_eq!((0..8).filter(|&x| d.element_order(x) == 2).count(), 5);
        let sd = semidihedral(16).unwrap();
        assert_eq!(sd.exponent(), 8);
        assert_eq!((0..16).filter(|&x| sd.element_order(x) == 2).count(), 5);
        let m = modular(16).unwrap();
        assert_eq!((0..16).filter(|&x| m.element_order(x) == 2).count(), 3);
    }

    #[test]
    fn wreath_order() {
        let w = wreath(3).unwrap();
        assert_eq!(w.order(), 81);
        assert_eq!(w.prime(), Some(3));
    }

    #[test]
    fn spec_errors() {
        assert_eq!(elementary_abelian(4, 2).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(semidirect_cyclic(9, 3, 2), Err(Error::InvalidAction(_))));
        assert!(matches!(semidirect_cyclic(9, 3, 3), Err(Error::InvalidAction(_))));
        assert!(catalog("frobnicate(3)").is_err());
        assert!(catalog("heisenberg(4)").is_err());
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "cyclic(9)",
            "heisenberg(3)",
            "direct_product(cyclic(9),cyclic(3))",
            "elementary_abelian(2,3)",
            "quaternion(8)",
            "semidirect_cyclic(9,3,4)",
        ] {
            let spec: CatalogSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("heisenberg3".parse::<CatalogSpec>().unwrap(), CatalogSpec::Heisenberg(3));
        assert_eq!("SD16".parse::<CatalogSpec>().unwrap(), CatalogSpec::Semidihedral(16));
        assert_eq!("C8".parse::<CatalogSpec>().unwrap(), CatalogSpec::Cyclic(8));
    }
}
