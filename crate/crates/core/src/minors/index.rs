use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

use super::MinorError;

/// Row set `I` and column set `J` of a square submatrix, both strictly
/// increasing and 1-based, with `|I| = |J|`.
///
/// Ordered by size first, then `I`, then `J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinorIndex {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

fn check_list(v: &[usize]) -> Result<(), MinorError> {
    if v.first() == Some(&0) || v.windows(2).any(|w| w[0] >= w[1]) {
        Err(MinorError::BadIndexList(v.to_vec()))
    } else {
        Ok(())
    }
}

impl MinorIndex {
    /// Requires `k >= 1`; see [`MinorIndex::empty`] for the size-0 minor.
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self, MinorError> {
        if rows.len() != cols.len() || rows.is_empty() {
            return Err(MinorError::SizeMismatch {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        check_list(&rows)?;
        check_list(&cols)?;
        Ok(Self { rows, cols })
    }

    /// The size-0 minor, whose quantum determinant is 1.
    pub fn empty() -> Self {
        Self {
            rows: Vec::new(),
            cols: Vec::new(),
        }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn fits(&self, m: usize, n: usize) -> bool {
        self.rows.last().is_none_or(|&r| r <= m) && self.cols.last().is_none_or(|&c| c <= n)
    }

    /// Keeps the positions in `keep` (ascending) of both lists.
    pub fn restrict(&self, keep: &[usize]) -> MinorIndex {
        MinorIndex {
            rows: keep.iter().map(|&p| self.rows[p]).collect(),
            cols: keep.iter().map(|&p| self.cols[p]).collect(),
        }
    }
}

impl Ord for MinorIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.k()
            .cmp(&other.k())
            .then_with(|| self.rows.cmp(&other.rows))
            .then_with(|| self.cols.cmp(&other.cols))
    }
}

impl PartialOrd for MinorIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MinorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "I={{{}}} J={{{}}}",
            self.rows.iter().join(","),
            self.cols.iter().join(",")
        )
    }
}

/// Every minor index of an `m x n` matrix with `k >= 1`, in [`MinorIndex`] order.
pub fn all_minor_indices(m: usize, n: usize) -> Vec<MinorIndex> {
    let mut out = Vec::new();
    for k in 1..=m.min(n) {
        for rows in (1..=m).combinations(k) {
            for cols in (1..=n).combinations(k) {
                out.push(MinorIndex {
                    rows: rows.clone(),
                    cols,
                });
            }
        }
    }
    out
}
