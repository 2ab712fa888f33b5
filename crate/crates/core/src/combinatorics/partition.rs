use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{FusionError, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The stored form never carries trailing zeros; every constructor
/// normalizes padded input.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Validates and normalizes `parts` (zeros anywhere in the tail are dropped).
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(FusionError::Parse(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self(parts))
    }

    /// Caller guarantees the parts are weakly decreasing; trailing zeros are stripped.
    pub(crate) fn from_decreasing(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Self(parts)
    }

    /// Single row `(r)`.
    pub fn row(r: usize) -> Self {
        Self::from_decreasing(vec![r])
    }

    /// Single column `(1^r)`.
    pub fn column(r: usize) -> Self {
        Self(vec![1; r])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// `i`-th part, 1-based, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// First part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parts padded with zeros to exactly `len` entries (panics if too long).
    pub fn padded(&self, len: usize) -> Vec<usize> {
        assert!(self.len() <= len, "{self} has more than {len} parts");
        let mut v = self.0.clone();
        v.resize(len, 0);
        v
    }

    pub fn transpose(&self) -> Self {
        let width = self.first();
        let parts = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self(parts)
    }

    /// Young diagram fits into `rows` rows of width `cols`.
    pub fn fits_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.first() <= cols
    }

    /// Deletes every column of height `height` (only possible when the
    /// partition has exactly `height` rows).
    pub fn remove_full_columns(&self, height: usize) -> Self {
        if height == 0 || self.len() < height {
            return self.clone();
        }
        assert!(
            self.len() == height,
            "{self} is taller than {height}, columns of that height are not full"
        );
        let drop = self.0[height - 1];
        Self::from_decreasing(self.0.iter().map(|p| p - drop).collect())
    }

    /// Deletes every row of length `len`.
    pub fn remove_rows_of_length(&self, len: usize) -> Self {
        Self::from_decreasing(self.0.iter().copied().filter(|&p| p != len).collect())
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// `self / inner` is a vertical strip (at most one box per row).
    pub fn is_vertical_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (1..=self.len()).all(|i| self.part(i) - inner.part(i) <= 1)
    }

    /// `self / inner` is a horizontal strip (at most one box per column).
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (2..=self.len()).all(|i| self.part(i) <= inner.part(i - 1))
    }

    /// Boxes `(row, column)`, both 1-based, in reading order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// Hook length of box `(i, j)`.
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let t = self.transpose();
        self.part(i) + t.part(j) + 1 - i - j
    }
}

/// Graded order: smaller weight first, then lexicographic on the parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `"3,1"`; the empty partition prints as `"0"`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = FusionError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(s);
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| FusionError::Parse(format!("bad part {p:?} in {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Convenience constructor for literals in tests and examples; panics on bad input.
pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}

/// All partitions fitting the `rows × cols` box, in graded order.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::from_decreasing(cur.clone()));
        if cur.len() == rows {
            return;
        }
        for v in 1..=max {
            cur.push(v);
            rec(rows, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All partitions of `size`, in lexicographic order.
pub fn partitions_of(size: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_decreasing(cur.clone()));
            return;
        }
        for v in (1..=max.min(rest)).rev() {
            cur.push(v);
            rec(rest - v, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, size, &mut Vec::new(), &mut out);
    out.sort();
    out
}
