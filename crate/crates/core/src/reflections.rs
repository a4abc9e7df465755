//! Conjugates of the pancake generators ("pancake reflections").
//!
//! In S_n the conjugates `w f_i w^{-1}` are exactly the non-identity
//! involutions. In B_n the conjugates of the burnt flips `w f^B_i w^{-1}`
//! are compared with the classical reflections `w s^B_i w^{-1}`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gens::{burnt_flip, pancake_flip};
use crate::limits::{check_cap, Limits};
use crate::perm::{Family, GroupElement, Permutation, SignedPermutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReflectionKind {
    /// `{w f_i w^-1}` in S_n.
    UnsignedPancake,
    /// `{w f^B_i w^-1}` in B_n.
    SignedPancake,
    /// `{w s^B_i w^-1}` in B_n.
    SignedCoxeter,
}

/// A set of involutions, kept sorted and duplicate free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionSet<E> {
    pub kind: ReflectionKind,
    pub n: usize,
    pub elements: BTreeSet<E>,
}

impl<E: GroupElement> ReflectionSet<E> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.elements.contains(e)
    }

    /// Canonical cycle strings of all elements, sorted as strings.
    pub fn cycle_strings(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .elements
            .iter()
            .map(|e| e.cycle_decomposition().to_string())
            .collect();
        out.sort();
        out
    }
}

/// All conjugates `w g w^{-1}` of the given generators over the whole group.
fn conjugation_sweep<E: GroupElement>(n: usize, generators: &[E]) -> Result<BTreeSet<E>> {
    let mut out = BTreeSet::new();
    let total = E::FAMILY.group_order(n) as u64;
    for r in 0..total {
        let w = E::unrank(n, r)?;
        let w_inv = w.inverse();
        for g in generators {
            out.insert(w.compose(g)?.compose(&w_inv)?);
        }
    }
    Ok(out)
}

/// Non-identity involutions of S_n.
pub fn involutions(n: usize, limits: &Limits) -> Result<BTreeSet<Permutation>> {
    check_cap(
        "involution enumeration",
        Family::Unsigned,
        n,
        limits.involutions,
    )?;
    Ok(Permutation::all(n)?
        .filter(|p| p.is_involution() && !p.is_identity())
        .collect())
}

/// `{w f_i w^{-1} | w ∈ S_n, 1 <= i <= n-1}`.
pub fn pancake_reflections(n: usize, limits: &Limits) -> Result<ReflectionSet<Permutation>> {
    check_cap(
        "pancake reflection sweep",
        Family::Unsigned,
        n,
        limits.pancake_reflections,
    )?;
    let gens = (1..n)
        .map(|i| pancake_flip(i, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(ReflectionSet {
        kind: ReflectionKind::UnsignedPancake,
        n,
        elements: conjugation_sweep(n, &gens)?,
    })
}

/// Number of non-identity involutions of S_n,
/// `sum_{k=1}^{n/2} n! / (2^k (n-2k)! k!)`.
///
/// Panics if the count overflows `u128` (n in the high 30s).
pub fn involution_count_formula(n: usize) -> u128 {
    // term_k = term_{k-1} * (n-2k+2)(n-2k+1) / (2k), term_0 = 1
    let n = n as u128;
    let mut term: u128 = 1;
    let mut total: u128 = 0;
    let mut k: u128 = 1;
    while 2 * k <= n {
        term = term
            .checked_mul((n - 2 * k + 2) * (n - 2 * k + 1))
            .expect("involution count overflows u128")
            / (2 * k);
        total += term;
        k += 1;
    }
    total
}

/// For an involution `t = (a_1,b_1)…(a_k,b_k)` of S_n, returns `w` and the
/// flip subscript `2k-1` with `w f_{2k-1} = t w`. `w` has one-line
/// `a_1 … a_k b_k … b_1` followed by the unused points in increasing order.
pub fn reflection_witness(t: &Permutation) -> Result<(Permutation, usize)> {
    if !t.is_involution() {
        return Err(Error::NotAnInvolution);
    }
    if t.is_identity() {
        return Err(Error::Identity);
    }
    let n = t.degree();
    // canonical form lists each 2-cycle as (a, b) with a < b, sorted by a
    let pairs: Vec<(u32, u32)> = t
        .cycle_decomposition()
        .cycles
        .iter()
        .map(|c| (c[0] as u32, c[1] as u32))
        .collect();
    let k = pairs.len();
    let mut image: Vec<u32> = pairs.iter().map(|&(a, _)| a).collect();
    image.extend(pairs.iter().rev().map(|&(_, b)| b));
    let moved: BTreeSet<u32> = image.iter().copied().collect();
    image.extend((1..=n as u32).filter(|x| !moved.contains(x)));
    let w = Permutation::new(image)?;
    let flip = 2 * k - 1;
    let lhs = w.compose(&pancake_flip(flip, n)?)?;
    let rhs = t.compose(&w)?;
    if lhs != rhs {
        return Err(Error::InvalidArgument(format!(
            "witness check failed for {}",
            t.cycle_decomposition()
        )));
    }
    Ok((w, flip))
}

/// `{w f^B_i w^{-1} | w ∈ B_n, 0 <= i <= n-1}` by conjugation.
pub fn burnt_reflections(n: usize, limits: &Limits) -> Result<ReflectionSet<SignedPermutation>> {
    check_cap(
        "burnt reflection sweep",
        Family::Signed,
        n,
        limits.burnt_reflections,
    )?;
    let gens = (0..n)
        .map(|i| burnt_flip(i, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(ReflectionSet {
        kind: ReflectionKind::SignedPancake,
        n,
        elements: conjugation_sweep(n, &gens)?,
    })
}

/// The same set built directly from the cycle form
/// `(w_1, -w_{i+1})(w_2, -w_i)…(w_{i+1}, -w_1)` over every window `w` of B_n
/// and every `0 <= i <= n-1`, without conjugating.
pub fn burnt_reflections_from_cycle_form(
    n: usize,
    limits: &Limits,
) -> Result<ReflectionSet<SignedPermutation>> {
    check_cap(
        "burnt reflection sweep",
        Family::Signed,
        n,
        limits.burnt_reflections,
    )?;
    let mut elements = BTreeSet::new();
    for w in SignedPermutation::all(n)? {
        let win = w.window();
        for i in 0..n {
            // map[x] for x > 0; negative points follow by symmetry
            let mut map: Vec<i32> = (1..=n as i32).collect();
            let mut set = |from: i32, to: i32| {
                if from > 0 {
                    map[from as usize - 1] = to;
                } else {
                    map[(-from) as usize - 1] = -to;
                }
            };
            for m in 0..=i {
                let a = win[m];
                let b = -win[i - m];
                set(a, b);
                set(b, a);
            }
            elements.insert(SignedPermutation::new(map)?);
        }
    }
    Ok(ReflectionSet {
        kind: ReflectionKind::SignedPancake,
        n,
        elements,
    })
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `sum_{i=1}^n C(n, i) 2^{floor(i/2)}`, the closed form stated for the number
/// of burnt pancake reflections. Exhaustive enumeration disagrees from
/// `n = 3` on; see [`burnt_reflection_count_by_shape`].
pub fn burnt_reflection_count_formula(n: usize) -> u128 {
    let n = n as u128;
    (1..=n).map(|i| binomial(n, i) << (i / 2)).sum()
}

/// Count of conjugates of burnt flips by cycle shape: a conjugate of
/// `f^B_{s-1}` is fixed by its support of size `s`, a pairing of that support
/// (with one negated fixed point when `s` is odd), and a sign per pair,
/// giving `sum_{s=1}^n C(n, s) s! / floor(s/2)!`.
pub fn burnt_reflection_count_by_shape(n: usize) -> u128 {
    let n = n as u128;
    (1..=n)
        .map(|s| {
            let falling: u128 = (s / 2 + 1..=s).product();
            binomial(n, s) * falling
        })
        .sum()
}

/// Classical reflections of B_n,
/// `{(i,j)(-i,-j) | 1 <= i < |j| <= n} ∪ {(i,-i) | 1 <= i <= n}`,
/// constructed directly.
pub fn coxeter_reflections_signed(
    n: usize,
    limits: &Limits,
) -> Result<ReflectionSet<SignedPermutation>> {
    check_cap(
        "signed reflection construction",
        Family::Signed,
        n,
        limits.burnt_reflections,
    )?;
    let mut elements = BTreeSet::new();
    let n32 = n as i32;
    for i in 1..=n32 {
        let mut win: Vec<i32> = (1..=n32).collect();
        win[i as usize - 1] = -i;
        elements.insert(SignedPermutation::new(win)?);
    }
    for i in 1..=n32 {
        for m in i + 1..=n32 {
            for j in [m, -m] {
                let mut win: Vec<i32> = (1..=n32).collect();
                // i -> j, |j| -> sign(j) * i
                win[i as usize - 1] = j;
                win[m as usize - 1] = if j > 0 { i } else { -i };
                elements.insert(SignedPermutation::new(win)?);
            }
        }
    }
    Ok(ReflectionSet {
        kind: ReflectionKind::SignedCoxeter,
        n,
        elements,
    })
}

/// Symmetric difference of two reflection sets, as cycle strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetComparison {
    pub n: usize,
    pub common: usize,
    pub only_left: Vec<String>,
    pub only_right: Vec<String>,
}

pub fn compare<E: GroupElement>(
    left: &ReflectionSet<E>,
    right: &ReflectionSet<E>,
) -> SetComparison {
    let strings = |it: &mut dyn Iterator<Item = &E>| {
        let mut v: Vec<String> = it.map(|e| e.cycle_decomposition().to_string()).collect();
        v.sort();
        v
    };
    SetComparison {
        n: left.n,
        common: left.elements.intersection(&right.elements).count(),
        only_left: strings(&mut left.elements.difference(&right.elements)),
        only_right: strings(&mut right.elements.difference(&left.elements)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn cycles(set: &BTreeSet<Permutation>) -> Vec<String> {
        set.iter()
            .map(|p| p.cycle_decomposition().to_string())
            .collect()
    }

    #[test]
    fn involution_examples() {
        assert_eq!(cycles(&involutions(2, &lim()).unwrap()), vec!["(1,2)"]);
        let mut three = cycles(&involutions(3, &lim()).unwrap());
        three.sort();
        assert_eq!(three, vec!["(1,2)", "(1,3)", "(2,3)"]);
        assert_eq!(involutions(4, &lim()).unwrap().len(), 9);
        assert!(matches!(
            involutions(9, &lim()),
            Err(Error::CapExceeded { cap: 8, .. })
        ));
    }

    #[test]
    fn count_formula_examples() {
        assert_eq!(involution_count_formula(1), 0);
        assert_eq!(involution_count_formula(2), 1);
        assert_eq!(involution_count_formula(4), 9);
        assert_eq!(involution_count_formula(7), 231);
        // telephone numbers minus one
        assert_eq!(involution_count_formula(10), 9495);
    }

    #[test]
    fn pancake_reflection_examples() {
        let two = pancake_reflections(2, &lim()).unwrap();
        assert_eq!(two.cycle_strings(), vec!["(1,2)"]);
        let five = pancake_reflections(5, &lim()).unwrap();
        assert_eq!(five.elements, involutions(5, &lim()).unwrap());
        assert_eq!(five.len(), 25);
        assert_eq!(pancake_reflections(6, &lim()).unwrap().len(), 75);
        assert!(pancake_reflections(1, &lim()).unwrap().is_empty());
        assert!(pancake_reflections(8, &lim()).is_err());
    }

    #[test]
    fn witness_examples() {
        let t: Permutation = "2 1 3".parse().unwrap();
        assert_eq!(
            reflection_witness(&t).unwrap(),
            ("1 2 3".parse().unwrap(), 1)
        );

        let t: Permutation = "3 4 1 2".parse().unwrap(); // (1,3)(2,4)
        assert_eq!(
            reflection_witness(&t).unwrap(),
            ("1 2 4 3".parse().unwrap(), 3)
        );

        let t: Permutation = "1 5 3 4 2".parse().unwrap(); // (2,5)
        assert_eq!(
            reflection_witness(&t).unwrap(),
            ("2 5 1 3 4".parse().unwrap(), 1)
        );

        assert_eq!(
            reflection_witness(&"2 3 1".parse().unwrap()),
            Err(Error::NotAnInvolution)
        );
        assert_eq!(
            reflection_witness(&Permutation::identity(4).unwrap()),
            Err(Error::Identity)
        );
    }

    #[test]
    fn witnesses_for_every_involution() {
        for n in 2..=6 {
            for t in involutions(n, &lim()).unwrap() {
                let (w, flip) = reflection_witness(&t).unwrap();
                assert_eq!(
                    w.compose(&pancake_flip(flip, n).unwrap()).unwrap(),
                    t.compose(&w).unwrap()
                );
            }
        }
    }

    #[test]
    fn burnt_reflection_examples() {
        let one = burnt_reflections(1, &lim()).unwrap();
        assert_eq!(one.cycle_strings(), vec!["(1,-1)"]);
        assert_eq!(burnt_reflections(2, &lim()).unwrap().len(), 4);
        // enumeration, not the stated closed form (which gives 11)
        assert_eq!(burnt_reflections(3, &lim()).unwrap().len(), 15);
        assert!(burnt_reflections(7, &lim()).is_err());
    }

    #[test]
    fn burnt_counts() {
        let stated: Vec<u128> = (1..=5).map(burnt_reflection_count_formula).collect();
        assert_eq!(stated, vec![1, 4, 11, 28, 69]);
        let by_shape: Vec<u128> = (1..=5).map(burnt_reflection_count_by_shape).collect();
        assert_eq!(by_shape, vec![1, 4, 15, 52, 205]);
        for n in 1..=5 {
            assert_eq!(
                burnt_reflections(n, &lim()).unwrap().len() as u128,
                burnt_reflection_count_by_shape(n)
            );
        }
    }

    #[test]
    fn cycle_form_matches_sweep() {
        for n in 1..=4 {
            assert_eq!(
                burnt_reflections_from_cycle_form(n, &lim())
                    .unwrap()
                    .elements,
                burnt_reflections(n, &lim()).unwrap().elements
            );
        }
    }

    #[test]
    fn coxeter_reflections() {
        let one = coxeter_reflections_signed(1, &lim()).unwrap();
        assert_eq!(one.cycle_strings(), vec!["(1,-1)"]);
        let two = coxeter_reflections_signed(2, &lim()).unwrap();
        assert_eq!(two.len(), 4);
        for n in 1..=5 {
            let tb = coxeter_reflections_signed(n, &lim()).unwrap();
            assert_eq!(tb.len(), n * n);
            // agrees with conjugating the Coxeter generators
            let gens = (0..n)
                .map(
                    |i| match crate::gens::adjacent_transposition(i, n, Family::Signed).unwrap() {
                        crate::perm::Element::Signed(w) => w,
                        _ => unreachable!(),
                    },
                )
                .collect::<Vec<_>>();
            assert_eq!(tb.elements, conjugation_sweep(n, &gens).unwrap());
        }
    }

    #[test]
    fn sign_flips_in_both_sets() {
        for n in 1..=5 {
            let tb = coxeter_reflections_signed(n, &lim()).unwrap();
            let tpm = burnt_reflections(n, &lim()).unwrap();
            for i in 1..=n as i32 {
                let mut win: Vec<i32> = (1..=n as i32).collect();
                win[i as usize - 1] = -i;
                let flip = SignedPermutation::new(win).unwrap();
                assert!(tb.contains(&flip) && tpm.contains(&flip));
            }
        }
    }

    #[test]
    fn coxeter_reflections_sit_inside_burnt_reflections() {
        for n in 1..=5 {
            let cmp = compare(
                &coxeter_reflections_signed(n, &lim()).unwrap(),
                &burnt_reflections(n, &lim()).unwrap(),
            );
            assert!(cmp.only_left.is_empty(), "n = {n}: {:?}", cmp.only_left);
            assert_eq!(cmp.common, n * n);
            assert_eq!(cmp.only_right.is_empty(), n <= 2);
        }
        let three = compare(
            &coxeter_reflections_signed(3, &lim()).unwrap(),
            &burnt_reflections(3, &lim()).unwrap(),
        );
        assert_eq!(three.only_right.len(), 6);
        assert!(three.only_right.contains(&"(1,-3)(-1,3)(2,-2)".to_string()));
    }

    #[test]
    fn every_member_is_an_involution() {
        for n in 1..=4 {
            assert!(burnt_reflections(n, &lim())
                .unwrap()
                .elements
                .iter()
                .all(|e| e.is_involution()));
            assert!(pancake_reflections(n, &lim())
                .unwrap()
                .elements
                .iter()
                .all(|e| e.is_involution()));
        }
    }
}
