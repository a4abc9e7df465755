//! Formula-against-oracle sweeps.
//!
//! Every sweep has a `_with` form taking the formula as a closure so a
//! corrupted formula can be swept the same way as the real one.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cayley::{build_graph, girth, two_generator_cycles, verify_chord_free};
use crate::closed_forms::{
    order_two_burnt_flips_formula, order_two_flips_formula, three_flip_branches, OrderResult,
};
use crate::error::{Error, Result};
use crate::gens::{
    adjacent_transposition, burnt_flip, expand_word, flip_as_adjacent_word, pancake_flip, Alphabet,
    GeneratorWord,
};
use crate::limits::Limits;
use crate::oracle;
use crate::perm::{Element, Family};
use crate::reflections::{
    burnt_reflection_count_formula, burnt_reflections, involution_count_formula, involutions,
    pancake_reflections,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Orders2,
    Orders2b,
    Orders3,
    Reflections,
    Cycles,
    Girth,
    Identities,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Orders2,
        Suite::Orders2b,
        Suite::Orders3,
        Suite::Reflections,
        Suite::Cycles,
        Suite::Girth,
        Suite::Identities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Orders2 => "orders2",
            Suite::Orders2b => "orders2b",
            Suite::Orders3 => "orders3",
            Suite::Reflections => "reflections",
            Suite::Cycles => "cycles",
            Suite::Girth => "girth",
            Suite::Identities => "identities",
        }
    }

    /// Default upper end of the swept range.
    pub fn default_max(self) -> usize {
        match self {
            Suite::Orders2 => 99,
            Suite::Orders2b => 79,
            Suite::Orders3 => 60,
            Suite::Reflections => 7,
            Suite::Cycles => 4,
            Suite::Girth => 6,
            Suite::Identities => 8,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

/// One disagreement. `args` are the swept parameters (subscripts, or a
/// degree for the structural suites).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub args: Vec<usize>,
    pub expected: Option<u64>,
    pub actual: u64,
    pub case_label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub suite: Suite,
    pub max: usize,
    pub checked: u64,
    pub mismatches: Vec<Mismatch>,
    /// Inputs no formula branch covers.
    pub uncovered: Vec<Vec<usize>>,
}

impl SweepReport {
    fn new(suite: Suite, max: usize) -> Self {
        SweepReport {
            suite,
            max,
            checked: 0,
            mismatches: Vec::new(),
            uncovered: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn check(&mut self, args: Vec<usize>, expected: Option<u64>, actual: u64, label: &str) {
        self.checked += 1;
        if expected != Some(actual) {
            self.mismatches.push(Mismatch {
                args,
                expected,
                actual,
                case_label: label.to_string(),
            });
        }
    }
}

pub fn run_suite(suite: Suite, max: usize, limits: &Limits) -> Result<SweepReport> {
    match suite {
        Suite::Orders2 => sweep_two_flips(max),
        Suite::Orders2b => sweep_two_burnt_flips(max),
        Suite::Orders3 => sweep_three_flips(max),
        Suite::Reflections => sweep_reflections(max, limits),
        Suite::Cycles => sweep_cycles(max, limits),
        Suite::Girth => sweep_girth(max, limits),
        Suite::Identities => sweep_identities(max),
    }
}

/// `f_a f_b` for `1 <= a < b <= max`; `expected` is the formula value and
/// `actual` the oracle.
pub fn sweep_two_flips_with<F>(max: usize, formula: F) -> Result<SweepReport>
where
    F: Fn(usize, usize) -> Result<OrderResult>,
{
    let mut report = SweepReport::new(Suite::Orders2, max);
    for b in 2..=max {
        for a in 1..b {
            let res = formula(a, b)?;
            report.check(
                vec![a, b],
                res.value,
                oracle::two_flips(a, b)?,
                res.case_label,
            );
        }
    }
    Ok(report)
}

pub fn sweep_two_flips(max: usize) -> Result<SweepReport> {
    sweep_two_flips_with(max, order_two_flips_formula)
}

/// `f^B_a f^B_b` for `0 <= a < b <= max`.
pub fn sweep_two_burnt_flips_with<F>(max: usize, formula: F) -> Result<SweepReport>
where
    F: Fn(usize, usize) -> Result<OrderResult>,
{
    let mut report = SweepReport::new(Suite::Orders2b, max);
    for b in 1..=max {
        for a in 0..b {
            let res = formula(a, b)?;
            report.check(
                vec![a, b],
                res.value,
                oracle::two_burnt_flips(a, b)?,
                res.case_label,
            );
        }
    }
    Ok(report)
}

pub fn sweep_two_burnt_flips(max: usize) -> Result<SweepReport> {
    sweep_two_burnt_flips_with(max, order_two_burnt_flips_formula)
}

/// `f_1 f_b f_c` for `2 <= b < c <= max`. Every applicable branch is
/// compared with the oracle, so disagreeing overlaps show up as a mismatch
/// of at least one of them.
pub fn sweep_three_flips_with<F>(max: usize, branches: F) -> Result<SweepReport>
where
    F: Fn(usize, usize) -> Vec<(&'static str, u64)>,
{
    let mut report = SweepReport::new(Suite::Orders3, max);
    for c in 3..=max {
        for b in 2..c {
            let hits = branches(b, c);
            if hits.is_empty() {
                report.uncovered.push(vec![b, c]);
                continue;
            }
            let truth = oracle::three_flips(1, b, c)?;
            for (label, value) in hits {
                report.check(vec![b, c], Some(value), truth, label);
            }
        }
    }
    Ok(report)
}

pub fn sweep_three_flips(max: usize) -> Result<SweepReport> {
    sweep_three_flips_with(max, three_flip_branches)
}

/// `(b, c, branches)` for a pair whose applicable branches disagree.
pub type BranchConflict = (usize, usize, Vec<(&'static str, u64)>);

/// Pairs covered by two or more branches that give different values.
pub fn overlap_conflicts<F>(max: usize, branches: F) -> Vec<BranchConflict>
where
    F: Fn(usize, usize) -> Vec<(&'static str, u64)>,
{
    let mut out = Vec::new();
    for c in 3..=max {
        for b in 2..c {
            let hits = branches(b, c);
            let values: BTreeSet<u64> = hits.iter().map(|&(_, v)| v).collect();
            if values.len() > 1 {
                out.push((b, c, hits));
            }
        }
    }
    out
}

/// For `2 <= n <= max`: pancake reflections equal the involutions and both
/// have the closed-form size; for `1 <= n <= min(max, 5)` the burnt
/// reflections have the closed-form size.
pub fn sweep_reflections(max: usize, limits: &Limits) -> Result<SweepReport> {
    let mut report = SweepReport::new(Suite::Reflections, max);
    for n in 2..=max {
        let refl = pancake_reflections(n, limits)?;
        let inv = involutions(n, limits)?;
        let formula = involution_count_formula(n) as u64;
        report.check(
            vec![n],
            Some(formula),
            refl.len() as u64,
            "reflections.count",
        );
        report.check(
            vec![n],
            Some(formula),
            inv.len() as u64,
            "involutions.count",
        );
        let diff = refl.elements.symmetric_difference(&inv).count() as u64;
        report.check(vec![n], Some(0), diff, "reflections.eq.involutions");
    }
    for n in 1..=max.min(5) {
        let burnt = burnt_reflections(n, limits)?;
        report.check(
            vec![n],
            Some(burnt_reflection_count_formula(n) as u64),
            burnt.len() as u64,
            "burnt_reflections.count",
        );
    }
    Ok(report)
}

/// For every generator pair of B_n, `3 <= n <= max`: the alternating cycles
/// partition the vertices into `|V| / ell` cycles, none with a chord.
pub fn sweep_cycles(max: usize, limits: &Limits) -> Result<SweepReport> {
    let mut report = SweepReport::new(Suite::Cycles, max);
    for n in 3..=max {
        let graph = build_graph(Family::Signed, n, limits)?;
        for b in 1..n {
            for a in 0..b {
                let args = vec![n, a, b];
                match two_generator_cycles(&graph, a, b) {
                    Ok(fam) => {
                        let expected = graph.vertex_count() as u64 / fam.ell;
                        report.check(
                            args.clone(),
                            Some(expected),
                            fam.count() as u64,
                            "cycles.count",
                        );
                        let mut chorded = 0;
                        for c in &fam.cycles {
                            if !verify_chord_free(&graph, c)? {
                                chorded += 1;
                            }
                        }
                        report.check(args, Some(0), chorded, "cycles.chords");
                    }
                    Err(Error::CycleStructure(_)) => {
                        report.check(args, None, 0, "cycles.structure");
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(report)
}

/// Girth 8 for B_n, `2 <= n <= min(max, 4)`, and girth 6 for S_n,
/// `3 <= n <= max`.
pub fn sweep_girth(max: usize, limits: &Limits) -> Result<SweepReport> {
    let mut report = SweepReport::new(Suite::Girth, max);
    for n in 2..=max.min(4) {
        let g = girth(&build_graph(Family::Signed, n, limits)?)?;
        report.check(vec![n], Some(8), g as u64, "girth.signed");
    }
    for n in 3..=max {
        let g = girth(&build_graph(Family::Unsigned, n, limits)?)?;
        report.check(vec![n], Some(6), g as u64, "girth.unsigned");
    }
    Ok(report)
}

/// For every `n <= max`: `s_i = f_i f_1 f_i`, `s^B_i = f^B_i f^B_0 f^B_1
/// f^B_0 f^B_i` for `i >= 1`, and the adjacent-transposition words for the
/// flips expand to the flips. `actual` is 1 for agreement, 0 otherwise.
pub fn sweep_identities(max: usize) -> Result<SweepReport> {
    let mut report = SweepReport::new(Suite::Identities, max);
    let mut record = |args: Vec<usize>, ok: bool, label: &str| {
        report.check(args, Some(1), u64::from(ok), label);
    };
    for n in 2..=max {
        for i in 1..n {
            let f = pancake_flip(i, n)?;
            let lhs = f.compose(&pancake_flip(1, n)?)?.compose(&f)?;
            let s = adjacent_transposition(i, n, Family::Unsigned)?;
            record(vec![n, i], Element::Unsigned(lhs) == s, "identity.s_i");
        }
    }
    for n in 2..=max {
        for i in 1..n {
            let f = burnt_flip(i, n)?;
            let (f0, f1) = (burnt_flip(0, n)?, burnt_flip(1, n)?);
            let lhs = f.compose(&f0)?.compose(&f1)?.compose(&f0)?.compose(&f)?;
            let s = adjacent_transposition(i, n, Family::Signed)?;
            record(vec![n, i], Element::Signed(lhs) == s, "identity.sB_i");
        }
    }
    for n in 1..=max {
        for family in [Family::Unsigned, Family::Signed] {
            let low = crate::gens::min_subscript(family);
            for i in low..n {
                let word = GeneratorWord::new(family, n, flip_as_adjacent_word(i, family))?;
                let expanded = expand_word(&word, Alphabet::Adjacent)?;
                let flip = match family {
                    Family::Unsigned => Element::Unsigned(pancake_flip(i, n)?),
                    Family::Signed => Element::Signed(burnt_flip(i, n)?),
                };
                let label = match family {
                    Family::Unsigned => "identity.word",
                    Family::Signed => "identity.wordB",
                };
                record(vec![n, i], expanded == flip, label);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("orders4".parse::<Suite>().is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        assert!(sweep_two_flips(20).unwrap().passed());
        assert!(sweep_two_burnt_flips(20).unwrap().passed());
        assert!(sweep_three_flips(20).unwrap().passed());
        assert!(sweep_identities(6).unwrap().passed());
        assert!(sweep_girth(5, &Limits::default()).unwrap().passed());
        assert!(sweep_cycles(3, &Limits::default()).unwrap().passed());
    }

    #[test]
    fn corrupted_formula_is_caught() {
        let bad = |a: usize, b: usize| {
            let mut r = order_two_flips_formula(a, b)?;
            if r.case_label == "T1.4c" {
                r.value = r.value.map(|v| v + 1);
            }
            Ok(r)
        };
        let report = sweep_two_flips_with(10, bad).unwrap();
        assert!(!report.passed());
        assert!(report.mismatches.iter().all(|m| m.case_label == "T1.4c"));
    }

    #[test]
    fn corrupted_branch_is_caught() {
        let bad = |b: usize, c: usize| {
            let mut hits = three_flip_branches(b, c);
            for h in hits.iter_mut() {
                if h.0 == "T3.4" {
                    h.1 += 2;
                }
            }
            hits
        };
        let report = sweep_three_flips_with(12, bad).unwrap();
        assert!(report.mismatches.iter().any(|m| m.case_label == "T3.4"));
        assert!(!overlap_conflicts(12, bad).is_empty());
    }

    #[test]
    fn three_flip_sweep_logs_uncovered_pairs() {
        let report = sweep_three_flips(12).unwrap();
        assert!(report.uncovered.contains(&vec![3, 5]));
    }

    #[test]
    fn reflections_report_the_burnt_count_gap() {
        let report = sweep_reflections(4, &Limits::default()).unwrap();
        let labels: BTreeSet<&str> = report
            .mismatches
            .iter()
            .map(|m| m.case_label.as_str())
            .collect();
        assert_eq!(labels, BTreeSet::from(["burnt_reflections.count"]));
        let bad_n: Vec<usize> = report.mismatches.iter().map(|m| m.args[0]).collect();
        assert_eq!(bad_n, vec![3, 4]);
    }
}
