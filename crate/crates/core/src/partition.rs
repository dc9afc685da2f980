//! Integer partitions and the rectangles they are confined to.
//!
//! A [`Partition`] indexes a Schubert class; a [`Rectangle`] of `k` rows and
//! `n - k` columns bounds the partitions that survive in `H*(Gr(k, n))`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped by every constructor, so two partitions are
/// equal exactly when their nonzero parts agree.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// The empty partition, indexing the unit class.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition, rejecting sequences that increase anywhere.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                text: format!("{parts:?}"),
                reason: "parts must be weakly decreasing".into(),
            });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Caller guarantees the parts are weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    /// The single-row partition `(p)`.
    pub fn row(p: usize) -> Self {
        Partition::from_sorted(vec![p])
    }

    /// The single-column partition `(1, ..., 1)` with `len` parts.
    pub fn column(len: usize) -> Self {
        Partition(vec![1; len])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn fits(&self, rect: Rectangle) -> bool {
        self.len() <= rect.rows() && self.part(0) <= rect.cols()
    }

    /// Componentwise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    /// The partition whose diagram fills the rest of `rect` once this one is
    /// rotated by 180 degrees: `μ_i = cols - λ_{rows+1-i}`.
    pub fn complement(&self, rect: Rectangle) -> Result<Partition> {
        if !self.fits(rect) {
            return Err(Error::DoesNotFit {
                partition: self.clone(),
                rows: rect.rows(),
                cols: rect.cols(),
            });
        }
        let parts = (0..rect.rows())
            .map(|i| rect.cols() - self.part(rect.rows() - 1 - i))
            .collect();
        Ok(Partition::from_sorted(parts))
    }

    /// The transpose partition.
    pub fn conjugate(&self) -> Partition {
        let parts = (0..self.part(0))
            .map(|j| self.0.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"4,3,1"`; `""` and `"0"` are the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidPartition {
                text: s.to_string(),
                reason: e.to_string(),
            })?;
        Partition::new(parts).map_err(|_| Error::InvalidPartition {
            text: s.to_string(),
            reason: "parts must be weakly decreasing".into(),
        })
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// The `rows x cols` box, `k x (n - k)` for `Gr(k, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rectangle {
    rows: usize,
    cols: usize,
}

impl Rectangle {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidGrassmannian {
                k: rows,
                n: rows + cols,
            });
        }
        Ok(Rectangle { rows, cols })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols
    }

    /// The full rectangle as a partition.
    pub fn full(&self) -> Partition {
        Partition(vec![self.cols; self.rows])
    }

    /// All partitions fitting in the rectangle, ordered by size and then
    /// descending lexicographically within each size.
    pub fn partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.rows);
        fill(self.rows, self.cols, &mut current, &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.cmp(a)));
        out
    }

    /// Fitting partitions of the given size.
    pub fn partitions_of(&self, size: usize) -> Vec<Partition> {
        self.partitions()
            .into_iter()
            .filter(|p| p.size() == size)
            .collect()
    }
}

fn fill(rows_left: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    out.push(Partition::from_sorted(current.clone()));
    if rows_left == 0 {
        return;
    }
    for p in 1..=max {
        current.push(p);
        fill(rows_left - 1, p, current, out);
        current.pop();
    }
}
