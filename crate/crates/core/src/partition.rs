//! Partitions, compositions and skew shapes.
//!
//! A [`Partition`] never stores trailing zeros. Whenever two partitions are
//! compared row by row the shorter one is implicitly padded with zeros, so
//! `part(i)` is defined for every `i`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers.
///
/// Ordering is lexicographic on the parts, so iterating a sorted collection
/// in reverse yields the reverse-lexicographic order used for all output.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary non-negative integers into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single-row partition `(n)`; empty when `n == 0`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// Single-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Zero-based part access with implicit zero padding.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.first();
        let parts = (1..=first)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// `true` iff `inner_i <= self_i` for every row.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.length() <= self.length() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Pairs `(i, m_i)` over the distinct part sizes, smallest first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((size, count)) if *size == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Centraliser order `z = prod i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (size, count) in self.multiplicities() {
            for j in 1..=count {
                acc *= BigInt::from(size) * BigInt::from(j);
            }
        }
        acc
    }

    /// Every part multiplied by `n`.
    pub fn scaled(&self, n: usize) -> Partition {
        Partition::from_unsorted(self.parts.iter().map(|&p| p * n).collect())
    }

    /// Multiset union of the parts, i.e. the key of a product of basis monomials.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Drops the first part.
    pub fn tail(&self) -> Partition {
        Partition { parts: self.parts.iter().skip(1).copied().collect() }
    }

    /// Parses `"3,1,1"`; the empty string, `"0"` and `"[]"` denote the empty partition.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .or_else(|| trimmed.strip_prefix('(').and_then(|t| t.strip_suffix(')')))
            .unwrap_or(trimmed)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(text.to_string()))?;
        Partition::new(parts).map_err(|_| Error::InvalidPartition(text.to_string()))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Shorthand used throughout the tests: `part![3, 1]`.
#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}

/// Finite sequence of non-negative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition {
    pub parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `outer / ()`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// Cells `(row, column)`, 1-based, row by row from the top.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.length())
            .flat_map(|i| (self.inner.part(i) + 1..=self.outer.part(i)).map(move |c| (i + 1, c)))
            .collect()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col > self.inner.part(row - 1) && col <= self.outer.part(row - 1)
    }

    /// Indices (1-based) of the rows holding at least one cell.
    pub fn occupied_rows(&self) -> Vec<usize> {
        (0..self.outer.length())
            .filter(|&i| self.outer.part(i) > self.inner.part(i))
            .map(|i| i + 1)
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

pub fn contains(outer: &Partition, inner: &Partition) -> bool {
    outer.contains(inner)
}

pub fn z_of(p: &Partition) -> BigInt {
    p.z()
}

/// All partitions of `n`, reverse-lexicographic, optionally capped in length.
pub fn partitions_of(n: usize, max_length: Option<usize>) -> Vec<Partition> {
    partitions_containing(&Partition::empty(), n, n, max_length.unwrap_or(n))
}

/// All `λ ⊢ weight` with `inner ⊆ λ`, `λ_1 <= max_first_part` and
/// `ℓ(λ) <= max_length`, reverse-lexicographic. Empty when `weight < |inner|`.
pub fn partitions_containing(
    inner: &Partition,
    weight: usize,
    max_first_part: usize,
    max_length: usize,
) -> Vec<Partition> {
    let mut out = Vec::new();
    if weight < inner.weight() {
        return out;
    }
    // suffix[i] = sum of inner parts from row i on; every later row must cover it
    let mut suffix = vec![0; inner.length() + 1];
    for i in (0..inner.length()).rev() {
        suffix[i] = suffix[i + 1] + inner.part(i);
    }
    let mut current = Vec::new();
    fill_rows(inner, &suffix, max_first_part, max_length, weight, &mut current, &mut out);
    out
}

fn fill_rows(
    inner: &Partition,
    suffix: &[usize],
    cap: usize,
    max_length: usize,
    remaining: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    let row = current.len();
    if remaining == 0 {
        if row >= inner.length() {
            out.push(Partition { parts: current.clone() });
        }
        return;
    }
    if row >= max_length {
        return;
    }
    let lower = inner.part(row).max(1);
    let upper = cap.min(remaining);
    let still_needed = suffix.get(row + 1).copied().unwrap_or(0);
    for v in (lower..=upper).rev() {
        if remaining - v < still_needed {
            continue;
        }
        current.push(v);
        fill_rows(inner, suffix, v, max_length, remaining - v, current, out);
        current.pop();
    }
}

/// All `length`-tuples of non-negative integers summing to `k`,
/// reverse-lexicographic.
pub fn compositions_of(k: usize, length: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(length);
    fill_composition(k, length, &mut current, &mut out);
    out
}

fn fill_composition(remaining: usize, length: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if current.len() + 1 == length {
        current.push(remaining);
        out.push(Composition::new(current.clone()));
        current.pop();
        return;
    }
    if length == 0 {
        if remaining == 0 {
            out.push(Composition::default());
        }
        return;
    }
    for v in (0..=remaining).rev() {
        current.push(v);
        fill_composition(remaining - v, length, current, out);
        current.pop();
    }
}
