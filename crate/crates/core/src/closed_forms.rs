//! Closed-form orders of products of pancake generators.
//!
//! Public functions take generator subscripts. The closed forms are
//! written in terms of prefix lengths `i = a + 1`, `j = b + 1`; that frame
//! only appears inside [`TwoFlipCaseData`] and the branch code.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle;

/// Result of a closed-form evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderResult {
    /// `None` when no branch of the formula covers the input.
    pub value: Option<u64>,
    /// Which branch fired, e.g. `T1.4b.r1t1`.
    pub case_label: &'static str,
    /// Whether the value was produced or confirmed by the brute-force oracle.
    pub oracle_checked: bool,
}

impl OrderResult {
    fn formula(value: u64, case_label: &'static str) -> Self {
        OrderResult {
            value: Some(value),
            case_label,
            oracle_checked: false,
        }
    }

    fn uncovered(case_label: &'static str) -> Self {
        OrderResult {
            value: None,
            case_label,
            oracle_checked: false,
        }
    }

    pub fn is_covered(&self) -> bool {
        self.value.is_some()
    }
}

pub const UNCOVERED_T3: &str = "T3.uncovered";
pub const ORACLE: &str = "oracle";

/// Case quantities of the two-flip closed forms for prefix lengths `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwoFlipCaseData {
    pub i: u64,
    pub j: u64,
    pub d: u64,
    pub q: u64,
    pub r: u64,
    pub t: u64,
}

impl TwoFlipCaseData {
    pub fn new(i: u64, j: u64) -> Result<Self> {
        if !(1 <= i && i < j) {
            return Err(Error::InvalidArgument(format!(
                "prefix lengths need 1 <= i < j, got i = {i}, j = {j}"
            )));
        }
        let d = j - i;
        let q = j / d;
        let r = j % d;
        Ok(TwoFlipCaseData {
            i,
            j,
            d,
            q,
            r,
            t: d - r,
        })
    }
}

/// Order of `f_a f_b` for pancake generators `a, b >= 1`.
pub fn order_two_flips_formula(a: usize, b: usize) -> Result<OrderResult> {
    for x in [a, b] {
        if x < 1 {
            return Err(Error::Subscript {
                index: x,
                min: 1,
                max: usize::MAX,
            });
        }
    }
    if a == b {
        return Ok(OrderResult::formula(1, "T1.1"));
    }
    let (lo, hi) = (a.min(b) as u64, a.max(b) as u64);
    let (i, j) = (lo + 1, hi + 1);
    if (lo, hi) == (1, 2) {
        return Ok(OrderResult::formula(3, "T1.3"));
    }
    // j >= 4 from here on
    if i <= j / 2 {
        return Ok(OrderResult::formula(4, "T1.4a"));
    }
    if i == j - 1 {
        return Ok(OrderResult::formula(j, "T1.4c"));
    }
    let c = TwoFlipCaseData::new(i, j)?;
    let (q, r, t) = (c.q, c.r, c.t);
    let even = q % 2 == 0;
    let (value, label) = match (r, t) {
        (0, _) => (2 * q, "T1.4b.r0"),
        (1, 1) => (q * (q + 1), "T1.4b.r1t1"),
        (1, _) if even => (2 * q * (q + 1), "T1.4b.r1t2+.qeven"),
        (1, _) => (q * (q + 1), "T1.4b.r1t2+.qodd"),
        (_, 1) if even => (q * (q + 1), "T1.4b.r2+t1.qeven"),
        (_, 1) => (2 * q * (q + 1), "T1.4b.r2+t1.qodd"),
        _ => (2 * q * (q + 1), "T1.4b.r2+t2+"),
    };
    Ok(OrderResult::formula(value, label))
}

/// Order of `f^B_a f^B_b` for burnt generators `a, b >= 0`.
///
/// Pairs involving `f^B_0` fall outside the general case; their order is
/// 4 (label `T4.ext-i1`), which the oracle sweeps confirm.
pub fn order_two_burnt_flips_formula(a: usize, b: usize) -> Result<OrderResult> {
    if a == b {
        return Ok(OrderResult::formula(1, "T4.1"));
    }
    let (lo, hi) = (a.min(b) as u64, a.max(b) as u64);
    let (i, j) = (lo + 1, hi + 1);
    if i == 1 {
        return Ok(OrderResult::formula(4, "T4.ext-i1"));
    }
    if i == j - 1 {
        return Ok(OrderResult::formula(2 * j, "T4.5"));
    }
    // i >= 2 and i < j - 1 force j >= 4
    if i <= j / 2 {
        return Ok(OrderResult::formula(4, "T4.3"));
    }
    let c = TwoFlipCaseData::new(i, j)?;
    Ok(if c.r == 0 {
        OrderResult::formula(2 * c.q, "T4.4.r0")
    } else {
        OrderResult::formula(2 * c.q * (c.q + 1), "T4.4.r+")
    })
}

/// Every branch of the three-flip closed form that applies to `f_1 f_b f_c`
/// (`1 <= b <= c`), in their listed order. Several branches
/// can apply to the same pair; they are expected to agree.
pub fn three_flip_branches(b: usize, c: usize) -> Vec<(&'static str, u64)> {
    let mut out = Vec::new();
    let (b, c) = (b as u64, c as u64);
    if b < 1 || b > c {
        return out;
    }
    let k = c + 1;

    if b == 1 || b == c {
        out.push(("T3.1", 2));
    }
    if b == c {
        return out;
    }
    if b == 2 && c >= 5 {
        out.push(("T3.2", 6));
    }
    if c == b + 1 {
        out.push(("T3.3", c));
    }
    if (c == b + 2 && k % 2 == 1) || (c == b + 3 && k % 3 != 2) {
        out.push(("T3.4", k));
    }
    if k >= 5 {
        let d = c - b;
        let q = k / d;
        let r = k % d;
        if let Some(hit) = branch_5a(d, q, r) {
            out.push(hit);
        }
        if let Some(hit) = branch_5b(d, q, r) {
            out.push(hit);
        }
    }
    out
}

fn branch_5a(d: u64, q: u64, r: u64) -> Option<(&'static str, u64)> {
    let odd = q % 2 == 1;
    match (r, d) {
        (0, d) if d >= 4 => Some(("T3.5a.r0d4+", 4 * q)),
        (1, 2) => Some(("T3.5a.r1d2", 2 * q + 1)),
        (1, 4) => Some(("T3.5a.r1d4", q * (3 * q + 1))),
        (1, d) if d >= 5 && odd => Some(("T3.5a.r1d5+.qodd", q * (3 * q + 1))),
        (1, d) if d >= 5 => Some(("T3.5a.r1d5+.qeven", 2 * q * (3 * q + 1))),
        _ => None,
    }
}

fn branch_5b(d: u64, q: u64, r: u64) -> Option<(&'static str, u64)> {
    let qq1 = q * (q + 1);
    let odd = q % 2 == 1;
    match (r, d) {
        (2, 3) => Some(("T3.5b.r2d3", qq1)),
        (2, d) if d >= 4 && odd => Some(("T3.5b.r2d4+.qodd", qq1)),
        (2, d) if d >= 4 => Some(("T3.5b.r2d4+.qeven", 2 * qq1)),
        (3, 4) if q.is_multiple_of(3) => Some(("T3.5b.r3d4.q0mod3", qq1)),
        (3, 4) => Some(("T3.5b.r3d4.qnot0mod3", 3 * qq1)),
        (3, d) if d >= 5 => Some(match q % 6 {
            3 => ("T3.5b.r3d5+.q3mod6", qq1),
            0 => ("T3.5b.r3d5+.q0mod6", 2 * qq1),
            1 | 5 => ("T3.5b.r3d5+.q1,5mod6", 3 * qq1),
            _ => ("T3.5b.r3d5+.q2,4mod6", 6 * qq1),
        }),
        // Stated for every d >= 5; only r = 4, d = 5 has no extra 2q-cycles.
        (r, d) if r >= 4 && d >= 5 => Some(match q % 4 {
            0 => ("T3.5b.r4+d5+.q0mod4", qq1),
            2 => ("T3.5b.r4+d5+.q2mod4", 2 * qq1),
            _ => ("T3.5b.r4+d5+.qodd", 4 * qq1),
        }),
        _ => None,
    }
}

/// Order of `f_1 f_b f_c` for `1 <= b <= c` from the first applicable
/// branch, or an uncovered result when none applies.
pub fn order_three_flips_f1_formula(b: usize, c: usize) -> Result<OrderResult> {
    if b < 1 {
        return Err(Error::Subscript {
            index: b,
            min: 1,
            max: c,
        });
    }
    if b > c {
        return Err(Error::InvalidArgument(format!(
            "expected b <= c, got b = {b}, c = {c}"
        )));
    }
    Ok(match three_flip_branches(b, c).first() {
        Some(&(label, value)) => OrderResult::formula(value, label),
        None => OrderResult::uncovered(UNCOVERED_T3),
    })
}

/// Order of `f_a f_b f_c` in `S_n`, using the symmetry under reordering the
/// three subscripts. Repeated subscripts give 2; a triple containing `f_1`
/// goes through the three-flip formula; anything else (and any uncovered
/// pair) comes from the oracle.
pub fn canonical_triple_order(a: usize, b: usize, c: usize, n: usize) -> Result<OrderResult> {
    let max = n.saturating_sub(1);
    for x in [a, b, c] {
        if x < 1 || x > max {
            return Err(Error::Subscript {
                index: x,
                min: 1,
                max,
            });
        }
    }
    let mut s = [a, b, c];
    s.sort_unstable();
    if s[0] == s[1] || s[1] == s[2] {
        return Ok(OrderResult::formula(2, "T3.lemma.repeat"));
    }
    if s[0] == 1 {
        let res = order_three_flips_f1_formula(s[1], s[2])?;
        if res.is_covered() {
            return Ok(res);
        }
    }
    Ok(OrderResult {
        value: Some(oracle::three_flips_in(s[0], s[1], s[2], n)?),
        case_label: ORACLE,
        oracle_checked: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two(a: usize, b: usize) -> OrderResult {
        order_two_flips_formula(a, b).unwrap()
    }

    fn burnt(a: usize, b: usize) -> OrderResult {
        order_two_burnt_flips_formula(a, b).unwrap()
    }

    fn triple(b: usize, c: usize) -> OrderResult {
        order_three_flips_f1_formula(b, c).unwrap()
    }

    #[test]
    fn two_flip_examples() {
        assert_eq!(two(3, 3).value, Some(1));
        assert_eq!(two(1, 2).value, Some(3));
        assert_eq!(two(3, 4).value, Some(5));
        assert_eq!(two(3, 4).case_label, "T1.4c");
        assert_eq!(two(4, 6).value, Some(12));
        assert_eq!(two(4, 6).case_label, "T1.4b.r1t1");
        assert_eq!(two(5, 8).value, Some(6));
        assert_eq!(two(5, 8).case_label, "T1.4b.r0");
        assert_eq!(two(2, 6).value, Some(4));
        assert_eq!(two(2, 6).case_label, "T1.4a");
        assert_eq!(two(6, 4), two(4, 6));
        assert!(order_two_flips_formula(0, 3).is_err());
    }

    #[test]
    fn case_data() {
        let c = TwoFlipCaseData::new(5, 7).unwrap();
        assert_eq!((c.d, c.q, c.r, c.t), (2, 3, 1, 1));
        assert_eq!(c.j, c.q * c.d + c.r);
        assert!(TwoFlipCaseData::new(3, 3).is_err());
        assert!(TwoFlipCaseData::new(0, 3).is_err());
    }

    #[test]
    fn burnt_examples() {
        assert_eq!(burnt(2, 2).value, Some(1));
        assert_eq!(burnt(1, 2).value, Some(6));
        assert_eq!(burnt(1, 2).case_label, "T4.5");
        assert_eq!(burnt(0, 1).value, Some(4));
        assert_eq!(burnt(0, 1).case_label, "T4.ext-i1");
        assert_eq!(burnt(4, 6).value, Some(24));
        assert_eq!(burnt(4, 6).case_label, "T4.4.r+");
        assert_eq!(burnt(5, 8).value, Some(6));
        assert_eq!(burnt(5, 8).case_label, "T4.4.r0");
    }

    #[test]
    fn triple_examples() {
        assert_eq!(triple(1, 7).value, Some(2));
        assert_eq!(triple(7, 7).value, Some(2));
        assert_eq!(triple(2, 7).value, Some(6));
        assert_eq!(triple(2, 7).case_label, "T3.2");
        assert_eq!(triple(19, 24).value, Some(20));
        assert_eq!(triple(4, 6).value, Some(7));
        assert_eq!(triple(4, 6).case_label, "T3.4");
        assert_eq!(
            three_flip_branches(4, 6),
            vec![("T3.4", 7), ("T3.5a.r1d2", 7)]
        );
        let unc = triple(3, 5);
        assert_eq!(unc.value, None);
        assert_eq!(unc.case_label, UNCOVERED_T3);
        assert_eq!(oracle::three_flips_in(1, 3, 5, 6).unwrap(), 3);
        assert!(order_three_flips_f1_formula(0, 3).is_err());
        assert!(order_three_flips_f1_formula(5, 3).is_err());
    }

    #[test]
    fn small_three_flip_cases() {
        // f_1 f_2 f_3 and f_1 f_2 f_4 are reached by the consecutive-pair
        // and gap-two branches, not by the general q, r branches.
        for (b, c) in [(2, 3), (2, 4)] {
            let res = triple(b, c);
            assert_eq!(res.value, Some(oracle::three_flips(1, b, c).unwrap()));
        }
    }

    #[test]
    fn canonical_triple_examples() {
        assert_eq!(canonical_triple_order(3, 3, 5, 8).unwrap().value, Some(2));
        let r = canonical_triple_order(24, 1, 19, 25).unwrap();
        assert_eq!(r.value, Some(20));
        assert!(!r.oracle_checked);
        let o = canonical_triple_order(2, 4, 3, 6).unwrap();
        assert_eq!(o.case_label, ORACLE);
        assert!(o.oracle_checked);
        assert_eq!(o.value, Some(oracle::three_flips_in(2, 3, 4, 6).unwrap()));
        assert_eq!(o.value, Some(oracle::three_flips_in(2, 4, 3, 6).unwrap()));
        let fallback = canonical_triple_order(5, 1, 3, 6).unwrap();
        assert_eq!(fallback.case_label, ORACLE);
        assert_eq!(fallback.value, Some(3));
        assert!(canonical_triple_order(1, 2, 6, 6).is_err());
        assert!(canonical_triple_order(0, 2, 3, 6).is_err());
    }

    #[test]
    fn overlapping_branches_agree() {
        for c in 1..=80 {
            for b in 1..=c {
                let hits = three_flip_branches(b, c);
                if let Some(&(_, first)) = hits.first() {
                    assert!(hits.iter().all(|&(_, v)| v == first), "({b},{c}): {hits:?}");
                }
            }
        }
    }

    #[test]
    fn literal_q0mod4_branch_overstates_for_wide_gaps() {
        // r = 4, d = 5: only the 4q+4 and q cycles exist, formula holds
        let hits = three_flip_branches(18, 23); // k = 24, d = 5, q = 4, r = 4
        assert_eq!(hits, vec![("T3.5b.r4+d5+.q0mod4", 20)]);
        assert_eq!(oracle::three_flips(1, 18, 23).unwrap(), 20);
        // d = 6: extra 2q-cycles push the order to 2q(q+1)
        let hits = three_flip_branches(21, 27); // k = 28, d = 6, q = 4, r = 4
        assert_eq!(hits, vec![("T3.5b.r4+d5+.q0mod4", 20)]);
        assert_eq!(oracle::three_flips(1, 21, 27).unwrap(), 40);
    }
}
