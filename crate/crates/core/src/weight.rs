//! Integer weights of `GL_n`, dominant weights and partitions.

use std::fmt;
use std::ops::{Add, Index};

use crate::error::{Error, Result};

/// An arbitrary element of `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerWeight(Vec<i64>);

impl IntegerWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyWeight);
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &[i64]) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        Self(v)
    }

    pub fn into_dominant(self) -> Result<DominantWeight> {
        DominantWeight::new(self.0)
    }
}

impl Add<&IntegerWeight> for &IntegerWeight {
    type Output = IntegerWeight;

    fn add(self, rhs: &IntegerWeight) -> IntegerWeight {
        assert_eq!(self.len(), rhs.len(), "weight length mismatch");
        IntegerWeight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Index<usize> for IntegerWeight {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl From<DominantWeight> for IntegerWeight {
    fn from(w: DominantWeight) -> Self {
        Self(w.0)
    }
}

/// A non-increasing integer sequence: the highest weight of an irreducible
/// polynomial-times-determinant representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if !entries.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotDominant(entries));
        }
        Ok(Self(entries))
    }

    /// The weight `(c, c, ..., c)` of length `n`.
    pub fn constant(n: usize, c: i64) -> Self {
        Self(vec![c; n])
    }

    pub fn zero(n: usize) -> Self {
        Self::constant(n, 0)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn first(&self) -> Option<i64> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<i64> {
        self.0.last().copied()
    }

    /// Sum of the entries (the degree of the scalar action).
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Adds `t` to every entry (tensoring with the `t`-th power of the determinant).
    pub fn twist(&self, t: i64) -> Self {
        Self(self.0.iter().map(|x| x + t).collect())
    }

    /// The highest weight of the dual representation: `-reverse(w)`.
    pub fn dual(&self) -> Self {
        Self(self.0.iter().rev().map(|x| -x).collect())
    }

    /// Reads the weight as a partition, if all entries are non-negative.
    pub fn to_partition(&self) -> Option<Partition> {
        if self.0.iter().any(|&x| x < 0) {
            return None;
        }
        Some(Partition::from_sorted(self.0.iter().map(|&x| x as u32).collect()))
    }
}

impl Index<usize> for DominantWeight {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

impl fmt::Display for IntegerWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

fn write_tuple<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    it: impl Iterator<Item = T>,
) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in it.enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// A partition, stored without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotDominant(parts.iter().map(|&x| x as i64).collect()));
        }
        Ok(Self::from_sorted(parts))
    }

    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of non-zero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `i`-th part, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Pads with zeros to a dominant weight of length `n`. `None` if the
    /// partition has more than `n` parts.
    pub fn to_weight(&self, n: usize) -> Option<DominantWeight> {
        if self.0.len() > n {
            return None;
        }
        let mut v: Vec<i64> = self.0.iter().map(|&x| x as i64).collect();
        v.resize(n, 0);
        Some(DominantWeight(v))
    }

    /// All partitions of `size`, in reverse lexicographic order.
    pub fn all_of_size(size: u32) -> Vec<Partition> {
        fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

/// Result of sorting a weight into non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SortOutcome {
    /// Two entries coincide; no unique sorting permutation exists.
    Singular,
    /// All entries distinct. `inversions` is the length of the sorting
    /// permutation and `sorted` is strictly decreasing.
    Regular {
        inversions: usize,
        sorted: DominantWeight,
    },
}

impl SortOutcome {
    pub fn is_singular(&self) -> bool {
        matches!(self, SortOutcome::Singular)
    }
}

/// Sorts `v` into non-increasing order, counting the pairs `i < j` with
/// `v[i] < v[j]`. Any repeated entry yields [`SortOutcome::Singular`].
pub fn dominant_sort(v: &IntegerWeight) -> SortOutcome {
    let e = v.entries();
    let mut inversions = 0;
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            match e[i].cmp(&e[j]) {
                std::cmp::Ordering::Equal => return SortOutcome::Singular,
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    let mut sorted = e.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    SortOutcome::Regular {
        inversions,
        sorted: DominantWeight(sorted),
    }
}
