//! Unsigned and signed permutations.
//!
//! Points are 1-based. A [`Permutation`] stores its one-line notation
//! `p(1) p(2) … p(n)`; a [`SignedPermutation`] stores only its window
//! `[w(1) … w(n)]`, and the action on negative points is always derived
//! as `w(-i) = -w(i)`.
//!
//! Composition is fixed as `(p ∘ q)(x) = p(q(x))`. Under this convention
//! right-multiplying by a prefix reversal edits the one-line string:
//! `compose(w, f_i)` is `w` with its first `i + 1` entries reversed (and,
//! for the burnt flip, negated).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Which of the two groups an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// The symmetric group S_n.
    Unsigned,
    /// The hyperoctahedral group B_n.
    Signed,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Unsigned => "unsigned",
            Family::Signed => "signed",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unsigned" | "S" => Ok(Family::Unsigned),
            "signed" | "B" => Ok(Family::Signed),
            other => Err(Error::Parse(format!("unknown family `{other}`"))),
        }
    }
}

impl Family {
    /// Number of group elements of degree `n`, saturating at `u128::MAX`.
    pub fn group_order(self, n: usize) -> u128 {
        let mut size: u128 = 1;
        for k in 1..=n as u128 {
            size = size.saturating_mul(k);
            if self == Family::Signed {
                size = size.saturating_mul(2);
            }
        }
        size
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Degree { n, min: 1 })
    } else {
        Ok(())
    }
}

/// Total order on signed points used for canonical cycle form: by
/// magnitude, then positive before negative (`1 < -1 < 2 < -2 < …`).
pub fn signed_point_cmp(a: i32, b: i32) -> Ordering {
    (a.unsigned_abs(), a < 0).cmp(&(b.unsigned_abs(), b < 0))
}

/// Element of S_n in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation, checking that it
    /// is a bijection of `1..=n`.
    pub fn new(image: Vec<u32>) -> Result<Self> {
        let n = image.len();
        check_degree(n)?;
        let mut seen = vec![false; n];
        for &v in &image {
            let idx = v as usize;
            if idx == 0 || idx > n {
                return Err(Error::InvalidElement {
                    family: Family::Unsigned,
                    reason: format!("value {v} outside 1..={n}"),
                });
            }
            if std::mem::replace(&mut seen[idx - 1], true) {
                return Err(Error::InvalidElement {
                    family: Family::Unsigned,
                    reason: format!("value {v} repeated"),
                });
            }
        }
        Ok(Permutation { image })
    }

    pub(crate) fn from_vec_unchecked(image: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(image.clone()).is_ok());
        Permutation { image }
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_degree(n)?;
        Ok(Permutation {
            image: (1..=n as u32).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// One-line notation.
    pub fn image(&self) -> &[u32] {
        &self.image
    }

    /// `p(x)` for a 1-based point `x`.
    pub fn apply(&self, x: u32) -> u32 {
        self.image[x as usize - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            image: other.image.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.degree()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v as usize - 1] = i as u32 + 1;
        }
        Permutation { image }
    }

    /// Disjoint cycles in canonical form; fixed points are omitted.
    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n as u32 {
            if seen[start as usize - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x as usize - 1] {
                seen[x as usize - 1] = true;
                cycle.push(x as i32);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        CycleDecomposition {
            family: Family::Unsigned,
            degree: n,
            cycles,
        }
    }

    /// Least `m >= 1` with `p^m = e`, as the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_decomposition().order()
    }

    pub fn is_involution(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(i, &v)| self.apply(v) as usize == i + 1)
    }

    /// Reverses the first `len` one-line entries in place, i.e. replaces
    /// `w` by `compose(w, f_{len-1})`.
    pub(crate) fn reverse_prefix(&mut self, len: usize) {
        self.image[..len].reverse();
    }

    /// Lexicographic rank of the one-line notation among all of S_n.
    pub fn rank(&self) -> u64 {
        let n = self.degree();
        let mut used = vec![false; n + 1];
        let mut rank = 0u64;
        for (pos, &v) in self.image.iter().enumerate() {
            let smaller_unused = (1..v).filter(|&u| !used[u as usize]).count() as u64;
            rank = rank * (n - pos) as u64 + smaller_unused;
            used[v as usize] = true;
        }
        rank
    }

    /// Inverse of [`Permutation::rank`].
    pub fn unrank(n: usize, mut rank: u64) -> Result<Permutation> {
        check_degree(n)?;
        let total = Family::Unsigned.group_order(n);
        if rank as u128 >= total {
            return Err(Error::InvalidArgument(format!(
                "rank {rank} out of range for S_{n}"
            )));
        }
        let mut digits = vec![0u64; n];
        for pos in (0..n).rev() {
            let base = (n - pos) as u64;
            digits[pos] = rank % base;
            rank /= base;
        }
        let mut remaining: Vec<u32> = (1..=n as u32).collect();
        let image = digits
            .into_iter()
            .map(|d| remaining.remove(d as usize))
            .collect();
        Ok(Permutation { image })
    }

    /// All elements of S_n in lexicographic (rank) order.
    pub fn all(n: usize) -> Result<impl Iterator<Item = Permutation>> {
        check_degree(n)?;
        let total = Family::Unsigned.group_order(n) as u64;
        Ok((0..total).map(move |r| Permutation::unrank(n, r).expect("rank in range")))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.image.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses space-separated one-line notation, e.g. `"2 1 3 4"`.
    fn from_str(s: &str) -> Result<Self> {
        let image = s
            .split(' ')
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad entry `{tok}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(image)
    }
}

/// Element of B_n in window notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    /// Builds a signed permutation from its window, checking that the
    /// magnitudes form a bijection of `1..=n`.
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        check_degree(n)?;
        let mut seen = vec![false; n];
        for &v in &window {
            let mag = v.unsigned_abs() as usize;
            if mag == 0 || mag > n {
                return Err(Error::InvalidElement {
                    family: Family::Signed,
                    reason: format!("value {v} outside ±1..=±{n}"),
                });
            }
            if std::mem::replace(&mut seen[mag - 1], true) {
                return Err(Error::InvalidElement {
                    family: Family::Signed,
                    reason: format!("magnitude {mag} repeated"),
                });
            }
        }
        Ok(SignedPermutation { window })
    }

    pub(crate) fn from_vec_unchecked(window: Vec<i32>) -> Self {
        debug_assert!(SignedPermutation::new(window.clone()).is_ok());
        SignedPermutation { window }
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_degree(n)?;
        Ok(SignedPermutation {
            window: (1..=n as i32).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `w(x)` for a nonzero point `x` of `[±n]`.
    pub fn apply(&self, x: i32) -> i32 {
        let v = self.window[x.unsigned_abs() as usize - 1];
        if x < 0 {
            -v
        } else {
            v
        }
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as i32 + 1)
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(SignedPermutation {
            window: other.window.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut window = vec![0; self.degree()];
        for (i, &v) in self.window.iter().enumerate() {
            let x = i as i32 + 1;
            window[v.unsigned_abs() as usize - 1] = if v < 0 { -x } else { x };
        }
        SignedPermutation { window }
    }

    /// Disjoint cycles of the action on all `2n` points of `[±n]`, in
    /// canonical form; fixed points are omitted.
    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.degree();
        // slot 2(|x|-1) holds x > 0, the next slot holds -x
        let slot = |x: i32| 2 * (x.unsigned_abs() as usize - 1) + usize::from(x < 0);
        let mut seen = vec![false; 2 * n];
        let mut cycles = Vec::new();
        for mag in 1..=n as i32 {
            for start in [mag, -mag] {
                if seen[slot(start)] {
                    continue;
                }
                let mut cycle = Vec::new();
                let mut x = start;
                while !seen[slot(x)] {
                    seen[slot(x)] = true;
                    cycle.push(x);
                    x = self.apply(x);
                }
                if cycle.len() > 1 {
                    cycles.push(cycle);
                }
            }
        }
        CycleDecomposition {
            family: Family::Signed,
            degree: n,
            cycles,
        }
    }

    /// Least `m >= 1` with `w^m = e`, as the lcm of the cycle lengths on `[±n]`.
    pub fn order(&self) -> u64 {
        self.cycle_decomposition().order()
    }

    pub fn is_involution(&self) -> bool {
        (1..=self.degree() as i32).all(|x| self.apply(self.apply(x)) == x)
    }

    /// Reverses and negates the first `len` window entries in place, i.e.
    /// replaces `w` by `compose(w, f^B_{len-1})`.
    pub(crate) fn flip_prefix(&mut self, len: usize) {
        let prefix = &mut self.window[..len];
        prefix.reverse();
        for v in prefix {
            *v = -*v;
        }
    }

    /// Lexicographic rank of the window among all of B_n, comparing
    /// entries with [`signed_point_cmp`].
    pub fn rank(&self) -> u64 {
        let n = self.degree();
        let mut used = vec![false; n + 1];
        let mut rank = 0u64;
        for (pos, &v) in self.window.iter().enumerate() {
            let mag = v.unsigned_abs();
            let smaller_unused = (1..mag).filter(|&u| !used[u as usize]).count() as u64;
            let digit = 2 * smaller_unused + u64::from(v < 0);
            rank = rank * (2 * (n - pos)) as u64 + digit;
            used[mag as usize] = true;
        }
        rank
    }

    /// Inverse of [`SignedPermutation::rank`].
    pub fn unrank(n: usize, mut rank: u64) -> Result<SignedPermutation> {
        check_degree(n)?;
        let total = Family::Signed.group_order(n);
        if rank as u128 >= total {
            return Err(Error::InvalidArgument(format!(
                "rank {rank} out of range for B_{n}"
            )));
        }
        let mut digits = vec![0u64; n];
        for pos in (0..n).rev() {
            let base = (2 * (n - pos)) as u64;
            digits[pos] = rank % base;
            rank /= base;
        }
        let mut remaining: Vec<i32> = (1..=n as i32).collect();
        let window = digits
            .into_iter()
            .map(|d| {
                let mag = remaining.remove((d / 2) as usize);
                if d % 2 == 1 {
                    -mag
                } else {
                    mag
                }
            })
            .collect();
        Ok(SignedPermutation { window })
    }

    /// All elements of B_n in rank order.
    pub fn all(n: usize) -> Result<impl Iterator<Item = SignedPermutation>> {
        check_degree(n)?;
        let total = Family::Signed.group_order(n) as u64;
        Ok((0..total).map(move |r| SignedPermutation::unrank(n, r).expect("rank in range")))
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses bracketed window notation, e.g. `"[-2 -1 3]"`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected `[...]`, got `{s}`")))?;
        let window = inner
            .split(' ')
            .map(|tok| {
                tok.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad entry `{tok}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(window)
    }
}

macro_rules! serde_via_text {
    ($ty:ty) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let text = String::deserialize(d)?;
                text.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_text!(Permutation);
serde_via_text!(SignedPermutation);

/// Disjoint-cycle form of an element.
///
/// Canonical: each cycle starts at its smallest point, cycles are sorted by
/// leading point, and fixed points are never listed. Signed elements act on
/// `[±n]` and points compare by [`signed_point_cmp`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleDecomposition {
    pub family: Family,
    pub degree: usize,
    pub cycles: Vec<Vec<i32>>,
}

impl CycleDecomposition {
    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    /// Lcm of cycle lengths; fixed points contribute 1.
    pub fn order(&self) -> u64 {
        self.cycles
            .iter()
            .fold(1, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Points not moved by the element.
    pub fn fixed_points(&self) -> Vec<i32> {
        let moved: std::collections::HashSet<i32> = self.cycles.iter().flatten().copied().collect();
        let n = self.degree as i32;
        let points: Vec<i32> = match self.family {
            Family::Unsigned => (1..=n).collect(),
            Family::Signed => (1..=n).flat_map(|x| [x, -x]).collect(),
        };
        points.into_iter().filter(|x| !moved.contains(x)).collect()
    }

    /// Rebuilds the element as a one-line or window vector.
    pub fn to_element(&self) -> Element {
        match self.family {
            Family::Unsigned => {
                let mut image: Vec<u32> = (1..=self.degree as u32).collect();
                for c in &self.cycles {
                    for (k, &x) in c.iter().enumerate() {
                        image[x as usize - 1] = c[(k + 1) % c.len()] as u32;
                    }
                }
                Element::Unsigned(Permutation::from_vec_unchecked(image))
            }
            Family::Signed => {
                let mut window: Vec<i32> = (1..=self.degree as i32).collect();
                for c in &self.cycles {
                    for (k, &x) in c.iter().enumerate() {
                        if x > 0 {
                            window[x as usize - 1] = c[(k + 1) % c.len()];
                        }
                    }
                }
                Element::Signed(SignedPermutation::from_vec_unchecked(window))
            }
        }
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return f.write_str("()");
        }
        for c in &self.cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Operations shared by both families.
pub trait GroupElement: Clone + Eq + Ord + std::hash::Hash + fmt::Display {
    const FAMILY: Family;
    fn identity_of(n: usize) -> Result<Self>;
    fn degree(&self) -> usize;
    fn compose(&self, other: &Self) -> Result<Self>;
    fn inverse(&self) -> Self;
    fn cycle_decomposition(&self) -> CycleDecomposition;
    fn is_identity(&self) -> bool;
    fn is_involution(&self) -> bool;
    fn rank(&self) -> u64;
    fn unrank(n: usize, rank: u64) -> Result<Self>;

    fn order(&self) -> u64 {
        self.cycle_decomposition().order()
    }
}

macro_rules! impl_group_element {
    ($ty:ty, $family:expr) => {
        impl GroupElement for $ty {
            const FAMILY: Family = $family;
            fn identity_of(n: usize) -> Result<Self> {
                <$ty>::identity(n)
            }
            fn degree(&self) -> usize {
                <$ty>::degree(self)
            }
            fn compose(&self, other: &Self) -> Result<Self> {
                <$ty>::compose(self, other)
            }
            fn inverse(&self) -> Self {
                <$ty>::inverse(self)
            }
            fn cycle_decomposition(&self) -> CycleDecomposition {
                <$ty>::cycle_decomposition(self)
            }
            fn is_identity(&self) -> bool {
                <$ty>::is_identity(self)
            }
            fn is_involution(&self) -> bool {
                <$ty>::is_involution(self)
            }
            fn rank(&self) -> u64 {
                <$ty>::rank(self)
            }
            fn unrank(n: usize, rank: u64) -> Result<Self> {
                <$ty>::unrank(n, rank)
            }
        }
    };
}

impl_group_element!(Permutation, Family::Unsigned);
impl_group_element!(SignedPermutation, Family::Signed);

/// An element of either family, for APIs that choose the family at run time.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Element {
    Unsigned(Permutation),
    Signed(SignedPermutation),
}

impl Element {
    pub fn identity(n: usize, family: Family) -> Result<Element> {
        Ok(match family {
            Family::Unsigned => Element::Unsigned(Permutation::identity(n)?),
            Family::Signed => Element::Signed(SignedPermutation::identity(n)?),
        })
    }

    pub fn family(&self) -> Family {
        match self {
            Element::Unsigned(_) => Family::Unsigned,
            Element::Signed(_) => Family::Signed,
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Element::Unsigned(p) => p.degree(),
            Element::Signed(w) => w.degree(),
        }
    }

    pub fn compose(&self, other: &Element) -> Result<Element> {
        match (self, other) {
            (Element::Unsigned(p), Element::Unsigned(q)) => p.compose(q).map(Element::Unsigned),
            (Element::Signed(p), Element::Signed(q)) => p.compose(q).map(Element::Signed),
            _ => Err(Error::FamilyMismatch {
                left: self.family(),
                right: other.family(),
            }),
        }
    }

    pub fn inverse(&self) -> Element {
        match self {
            Element::Unsigned(p) => Element::Unsigned(p.inverse()),
            Element::Signed(w) => Element::Signed(w.inverse()),
        }
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        match self {
            Element::Unsigned(p) => p.cycle_decomposition(),
            Element::Signed(w) => w.cycle_decomposition(),
        }
    }

    pub fn order(&self) -> u64 {
        self.cycle_decomposition().order()
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Element::Unsigned(p) => p.is_identity(),
            Element::Signed(w) => w.is_identity(),
        }
    }

    /// Parses either text form: bracketed means signed.
    pub fn parse(s: &str) -> Result<Element> {
        if s.starts_with('[') {
            s.parse().map(Element::Signed)
        } else {
            s.parse().map(Element::Unsigned)
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Unsigned(p) => p.fmt(f),
            Element::Signed(w) => w.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn w(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn identity_examples() {
        assert_eq!(Permutation::identity(3).unwrap().to_string(), "1 2 3");
        assert_eq!(SignedPermutation::identity(2).unwrap().to_string(), "[1 2]");
        assert_eq!(Permutation::identity(1).unwrap().to_string(), "1");
        assert_eq!(
            Element::identity(0, Family::Unsigned),
            Err(Error::Degree { n: 0, min: 1 })
        );
        assert!(SignedPermutation::identity(0).is_err());
    }

    #[test]
    fn compose_examples() {
        let q = p("4 1 3 2");
        assert_eq!(Permutation::identity(4).unwrap().compose(&q).unwrap(), q);
        // p(q(x)) by hand: p(3)=3, p(2)=1, p(1)=2
        assert_eq!(p("2 1 3 4").compose(&p("3 2 1 4")).unwrap(), p("3 1 2 4"));
        assert_eq!(
            w("[1 2 3]").compose(&w("[-2 -1 3]")).unwrap(),
            w("[-2 -1 3]")
        );
    }

    #[test]
    fn compose_errors() {
        assert_eq!(
            p("1 2").compose(&p("1 2 3")),
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        );
        let a = Element::identity(2, Family::Unsigned).unwrap();
        let b = Element::identity(2, Family::Signed).unwrap();
        assert!(matches!(a.compose(&b), Err(Error::FamilyMismatch { .. })));
    }

    #[test]
    fn inverse_examples() {
        let e = Permutation::identity(5).unwrap();
        assert_eq!(e.inverse(), e);
        assert_eq!(p("2 3 1").inverse(), p("3 1 2"));
        let f2 = w("[-3 -2 -1]");
        assert_eq!(f2.inverse(), f2);
        let x = w("[2 -3 1]");
        assert!(x.compose(&x.inverse()).unwrap().is_identity());
    }

    #[test]
    fn cycle_examples() {
        assert!(Permutation::identity(4)
            .unwrap()
            .cycle_decomposition()
            .cycles
            .is_empty());
        assert_eq!(
            Permutation::identity(4)
                .unwrap()
                .cycle_decomposition()
                .to_string(),
            "()"
        );
        // compose(f_1, f_2) = 3 1 2 under p(q(x)); compose(f_2, f_1) = 2 3 1
        let f1 = p("2 1 3");
        let f2 = p("3 2 1");
        assert_eq!(f1.compose(&f2).unwrap(), p("3 1 2"));
        assert_eq!(
            f1.compose(&f2).unwrap().cycle_decomposition().to_string(),
            "(1,3,2)"
        );
        assert_eq!(f2.compose(&f1).unwrap(), p("2 3 1"));
        assert_eq!(
            f2.compose(&f1).unwrap().cycle_decomposition().to_string(),
            "(1,2,3)"
        );

        let b0 = w("[-1 2]");
        let b1 = w("[-2 -1]");
        let prod = b0.compose(&b1).unwrap();
        assert_eq!(prod.cycle_decomposition().to_string(), "(1,-2,-1,2)");
        assert_eq!(prod.order(), 4);
    }

    #[test]
    fn signed_cycles_are_canonical() {
        // s^B_1 in B_3 swaps 1 and 2 on both sides
        let s1 = w("[2 1 3]");
        assert_eq!(s1.cycle_decomposition().to_string(), "(1,2)(-1,-2)");
        let f0 = w("[-1 2 3]");
        assert_eq!(f0.cycle_decomposition().to_string(), "(1,-1)");
        assert_eq!(f0.cycle_decomposition().fixed_points(), vec![2, -2, 3, -3]);
    }

    #[test]
    fn order_examples() {
        assert_eq!(Permutation::identity(6).unwrap().order(), 1);
        assert_eq!(p("4 3 2 1 5").order(), 2);
        let b1 = w("[-2 -1 3]");
        let b2 = w("[-3 -2 -1]");
        assert_eq!(b1.compose(&b2).unwrap().order(), 6);
    }

    #[test]
    fn cycles_reassemble() {
        for q in Permutation::all(4).unwrap() {
            assert_eq!(q.cycle_decomposition().to_element(), Element::Unsigned(q));
        }
        for q in SignedPermutation::all(3).unwrap() {
            assert_eq!(q.cycle_decomposition().to_element(), Element::Signed(q));
        }
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!("1 1 2".parse::<Permutation>().is_err());
        assert!("1  2".parse::<Permutation>().is_err());
        assert!("0 1".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert!("-2 -1".parse::<SignedPermutation>().is_err());
        assert!("[2 -2]".parse::<SignedPermutation>().is_err());
        assert!("[1 3]".parse::<SignedPermutation>().is_err());
        assert!("[]".parse::<SignedPermutation>().is_err());
    }

    #[test]
    fn text_forms_are_stable() {
        for s in ["2 1 3 4", "1", "5 4 3 2 1"] {
            assert_eq!(p(s).to_string(), s);
        }
        for s in ["[-2 -1 3]", "[1]", "[-1]", "[3 -1 2]"] {
            assert_eq!(w(s).to_string(), s);
        }
        assert_eq!(Element::parse("[-1 2]").unwrap().family(), Family::Signed);
        assert_eq!(Element::parse("2 1").unwrap().family(), Family::Unsigned);
    }

    #[test]
    fn rank_is_lexicographic_and_dense() {
        let all: Vec<_> = Permutation::all(4).unwrap().collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|pair| pair[0].image() < pair[1].image()));
        for (r, q) in all.iter().enumerate() {
            assert_eq!(q.rank(), r as u64);
        }

        let signed: Vec<_> = SignedPermutation::all(3).unwrap().collect();
        assert_eq!(signed.len(), 48);
        assert!(signed[0].is_identity());
        for pair in signed.windows(2) {
            let ord = pair[0]
                .window()
                .iter()
                .zip(pair[1].window())
                .map(|(&a, &b)| signed_point_cmp(a, b))
                .find(|o| o.is_ne());
            assert_eq!(ord, Some(Ordering::Less));
        }
        for (r, q) in signed.iter().enumerate() {
            assert_eq!(q.rank(), r as u64);
        }
        assert!(Permutation::unrank(3, 6).is_err());
        assert!(SignedPermutation::unrank(2, 8).is_err());
    }

    #[test]
    fn group_orders() {
        assert_eq!(Family::Unsigned.group_order(5), 120);
        assert_eq!(Family::Signed.group_order(3), 48);
        assert_eq!(Family::Signed.group_order(0), 1);
    }
}
