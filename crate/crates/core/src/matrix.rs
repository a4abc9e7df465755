//! Tables of generator-product orders.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::closed_forms::{
    order_three_flips_f1_formula, order_two_burnt_flips_formula, order_two_flips_formula, ORACLE,
};
use crate::error::{Error, Result};
use crate::oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    /// Orders of `f_a f_b` in S_n.
    PancakeS,
    /// Orders of `f_1 f_b f_c` in S_n.
    TripleF1,
    /// Orders of `f^B_a f^B_b` in B_n.
    BurntB,
}

/// Square table of orders, rows and columns labelled by generator subscript.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderMatrix {
    pub kind: MatrixKind,
    pub n: usize,
    pub labels: Vec<usize>,
    pub entries: Vec<Vec<u64>>,
    pub case_labels: Vec<Vec<String>>,
}

/// An entry whose stored value differs from the brute-force order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryMismatch {
    pub row: usize,
    pub col: usize,
    pub value: u64,
    pub oracle: u64,
    pub case_label: String,
}

fn build<F>(kind: MatrixKind, n: usize, labels: Vec<usize>, entry: F) -> Result<OrderMatrix>
where
    F: Fn(usize, usize) -> Result<(u64, String)>,
{
    let mut entries = Vec::with_capacity(labels.len());
    let mut case_labels = Vec::with_capacity(labels.len());
    for &r in &labels {
        let mut row = Vec::with_capacity(labels.len());
        let mut row_labels = Vec::with_capacity(labels.len());
        for &c in &labels {
            let (v, l) = entry(r, c)?;
            row.push(v);
            row_labels.push(l);
        }
        entries.push(row);
        case_labels.push(row_labels);
    }
    Ok(OrderMatrix {
        kind,
        n,
        labels,
        entries,
        case_labels,
    })
}

/// `(n-1) x (n-1)` table of orders of `f_a f_b`, `1 <= a, b <= n-1`.
pub fn pancake_matrix(n: usize) -> Result<OrderMatrix> {
    if n < 3 {
        return Err(Error::Degree { n, min: 3 });
    }
    build(MatrixKind::PancakeS, n, (1..n).collect(), |a, b| {
        let res = order_two_flips_formula(a, b)?;
        Ok((
            res.value.expect("two-flip formula is total"),
            res.case_label.to_string(),
        ))
    })
}

/// `(n-1) x (n-1)` table of orders of `f_1 f_b f_c`. Entries no branch
/// covers are filled from the oracle and labelled `oracle`.
pub fn triple_matrix_f1(n: usize) -> Result<OrderMatrix> {
    if n < 3 {
        return Err(Error::Degree { n, min: 3 });
    }
    build(MatrixKind::TripleF1, n, (1..n).collect(), |b, c| {
        let (lo, hi) = (b.min(c), b.max(c));
        let res = order_three_flips_f1_formula(lo, hi)?;
        Ok(match res.value {
            Some(v) => (v, res.case_label.to_string()),
            None => (oracle::three_flips_in(1, lo, hi, n)?, ORACLE.to_string()),
        })
    })
}

/// `n x n` table of orders of `f^B_a f^B_b`, `0 <= a, b <= n-1`.
pub fn burnt_matrix(n: usize) -> Result<OrderMatrix> {
    if n < 2 {
        return Err(Error::Degree { n, min: 2 });
    }
    build(MatrixKind::BurntB, n, (0..n).collect(), |a, b| {
        let res = order_two_burnt_flips_formula(a, b)?;
        Ok((
            res.value.expect("burnt formula is total"),
            res.case_label.to_string(),
        ))
    })
}

impl OrderMatrix {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let m = self.size();
        (0..m).all(|r| (0..m).all(|c| self.entries[r][c] == self.entries[c][r]))
    }

    pub fn diagonal(&self) -> Vec<u64> {
        (0..self.size()).map(|k| self.entries[k][k]).collect()
    }

    /// The same table with its last row and column removed.
    pub fn truncated(&self) -> Vec<Vec<u64>> {
        let m = self.size().saturating_sub(1);
        self.entries[..m]
            .iter()
            .map(|row| row[..m].to_vec())
            .collect()
    }

    /// Brute-force order of the product an entry stands for.
    pub fn oracle_entry(&self, row: usize, col: usize) -> Result<u64> {
        let (a, b) = (self.labels[row], self.labels[col]);
        match self.kind {
            MatrixKind::PancakeS => oracle::two_flips_in(a, b, self.n),
            MatrixKind::TripleF1 => oracle::three_flips_in(1, a, b, self.n),
            MatrixKind::BurntB => oracle::two_burnt_flips_in(a, b, self.n),
        }
    }

    /// Compares every entry with the oracle.
    pub fn verify_against_oracle(&self) -> Result<Vec<EntryMismatch>> {
        let mut out = Vec::new();
        for row in 0..self.size() {
            for col in 0..self.size() {
                let oracle = self.oracle_entry(row, col)?;
                let value = self.entries[row][col];
                if value != oracle {
                    out.push(EntryMismatch {
                        row: self.labels[row],
                        col: self.labels[col],
                        value,
                        oracle,
                        case_label: self.case_labels[row][col].clone(),
                    });
                }
            }
        }
        Ok(out)
    }

    /// Space-separated rows, one line per row.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(u64::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// CSV with a header of column subscripts; each row starts with its
    /// own subscript.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("gen");
        for l in &self.labels {
            let _ = write!(out, ",{l}");
        }
        out.push('\n');
        for (l, row) in self.labels.iter().zip(&self.entries) {
            let _ = write!(out, "{l}");
            for v in row {
                let _ = write!(out, ",{v}");
            }
            out.push('\n');
        }
        out
    }

    /// Parses the text form back into a grid.
    pub fn parse_text(text: &str) -> Result<Vec<Vec<u64>>> {
        text.lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|tok| {
                        tok.parse::<u64>()
                            .map_err(|_| Error::Parse(format!("bad matrix entry `{tok}`")))
                    })
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matrices() {
        assert_eq!(
            pancake_matrix(3).unwrap().entries,
            vec![vec![1, 3], vec![3, 1]]
        );
        assert_eq!(
            burnt_matrix(2).unwrap().entries,
            vec![vec![1, 4], vec![4, 1]]
        );
        assert!(pancake_matrix(2).is_err());
        assert!(triple_matrix_f1(2).is_err());
        assert!(burnt_matrix(1).is_err());
    }

    #[test]
    fn structural_invariants() {
        for n in 3..=16 {
            let p = pancake_matrix(n).unwrap();
            assert!(p.is_symmetric());
            assert!(p.diagonal().iter().all(|&v| v == 1));
            if n > 3 {
                assert_eq!(pancake_matrix(n - 1).unwrap().entries, p.truncated());
            }

            let b = burnt_matrix(n).unwrap();
            assert!(b.is_symmetric());
            assert!(b.diagonal().iter().all(|&v| v == 1));
            assert_eq!(burnt_matrix(n - 1).unwrap().entries, b.truncated());
            for r in 0..b.size() {
                for c in 0..b.size() {
                    if r != c {
                        let v = b.entries[r][c];
                        assert!(v >= 4 && v.is_multiple_of(2));
                    }
                }
            }

            let t = triple_matrix_f1(n).unwrap();
            assert!(t.is_symmetric());
            assert!(t.diagonal().iter().all(|&v| v == 2));
            assert!(t.entries[0].iter().all(|&v| v == 2));
            if n > 3 {
                assert_eq!(triple_matrix_f1(n - 1).unwrap().entries, t.truncated());
            }
        }
    }

    #[test]
    fn serialisations() {
        let m = pancake_matrix(4).unwrap();
        assert_eq!(m.to_text(), "1 3 4\n3 1 4\n4 4 1\n");
        assert_eq!(m.to_csv(), "gen,1,2,3\n1,1,3,4\n2,3,1,4\n3,4,4,1\n");
        assert_eq!(OrderMatrix::parse_text(&m.to_text()).unwrap(), m.entries);
        assert!(OrderMatrix::parse_text("1 x").is_err());
    }

    #[test]
    fn triple_matrix_labels_oracle_entries() {
        let t = triple_matrix_f1(7).unwrap();
        // (3, 5) has no covering branch
        assert_eq!(t.case_labels[2][4], ORACLE);
        assert_eq!(t.entries[2][4], 3);
        assert!(t.verify_against_oracle().unwrap().is_empty());
    }
}
