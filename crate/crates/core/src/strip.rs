//! Border strips, strip chains and the horizontal-strip characterisation.
//!
//! Cells are `(row, column)` pairs, 1-based, rows counted from the top.
//! The starting box of a strip is its uppermost cell furthest to the right.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};

pub type Cell = (usize, usize);

/// Edge-connected, nonempty and free of 2x2 blocks.
pub fn is_border_strip(s: &SkewShape) -> bool {
    let cells: HashSet<Cell> = s.cells().into_iter().collect();
    let Some(&seed) = cells.iter().next() else {
        return false;
    };
    let has_square = cells
        .iter()
        .any(|&(r, c)| cells.contains(&(r, c + 1)) && cells.contains(&(r + 1, c)) && cells.contains(&(r + 1, c + 1)));
    if has_square {
        return false;
    }
    let mut seen = HashSet::from([seed]);
    let mut queue = VecDeque::from([seed]);
    while let Some((r, c)) = queue.pop_front() {
        let neighbours = [(r + 1, c), (r, c + 1), (r.wrapping_sub(1), c), (r, c.wrapping_sub(1))];
        for nb in neighbours {
            if cells.contains(&nb) && seen.insert(nb) {
                queue.push_back(nb);
            }
        }
    }
    seen.len() == cells.len()
}

/// Number of occupied rows minus one.
pub fn spin(s: &SkewShape) -> Result<usize> {
    if !is_border_strip(s) {
        return Err(Error::NotABorderStrip(s.to_string()));
    }
    Ok(s.occupied_rows().len() - 1)
}

/// The highest cell of every column meeting the skew shape.
pub fn top_strip(s: &SkewShape) -> BTreeSet<Cell> {
    let outer = s.outer().conjugate();
    let inner = s.inner().conjugate();
    (0..outer.length())
        .filter(|&c| outer.part(c) > inner.part(c))
        .map(|c| (inner.part(c) + 1, c + 1))
        .collect()
}

/// A border strip added on top of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ribbon {
    pub result: Partition,
    pub top_row: usize,
    pub bottom_row: usize,
    pub size: usize,
}

impl Ribbon {
    pub fn spin(&self) -> usize {
        self.bottom_row - self.top_row
    }

    pub fn start(&self) -> Cell {
        (self.top_row, self.result.part(self.top_row - 1))
    }
}

/// Every ribbon of `size` cells that can be added to `base` while staying
/// inside `bound`, ordered by top row then bottom row.
///
/// A ribbon spanning rows `a..=b` is forced in rows `a+1..=b` (row `i` must
/// end one column past row `i-1` of `base`), so only the top row is free.
pub fn addable_ribbons(base: &Partition, bound: &Partition, size: usize) -> Vec<Ribbon> {
    let mut out = Vec::new();
    if size == 0 {
        return out;
    }
    let rows = bound.length();
    for top in 0..rows {
        let mut lower = 0;
        for bottom in top..rows {
            if bottom > top {
                lower += base.part(bottom - 1) + 1 - base.part(bottom);
                if base.part(bottom - 1) + 1 > bound.part(bottom) {
                    break;
                }
            }
            if lower >= size {
                break;
            }
            let top_len = base.part(top) + size - lower;
            if top_len > bound.part(top) || (top > 0 && top_len > base.part(top - 1)) {
                continue;
            }
            let mut parts: Vec<usize> = (0..rows).map(|i| base.part(i)).collect();
            parts[top] = top_len;
            for i in top + 1..=bottom {
                parts[i] = base.part(i - 1) + 1;
            }
            out.push(Ribbon {
                result: Partition::from_unsorted(parts),
                top_row: top + 1,
                bottom_row: bottom + 1,
                size,
            });
        }
    }
    out
}

/// Nested partitions whose successive differences are border strips of
/// sizes `weights[i] * n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StripChain {
    pub stages: Vec<Partition>,
    pub weights: Vec<usize>,
}

impl StripChain {
    pub fn inner(&self) -> &Partition {
        &self.stages[0]
    }

    pub fn outer(&self) -> &Partition {
        self.stages.last().expect("chain has at least one stage")
    }

    /// Number of strips.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn strips(&self) -> Vec<SkewShape> {
        self.stages
            .windows(2)
            .map(|w| SkewShape::new(w[1].clone(), w[0].clone()).expect("chain stages are nested"))
            .collect()
    }

    pub fn spins(&self) -> Vec<usize> {
        self.strips().iter().map(|s| spin(s).expect("chain steps are border strips")).collect()
    }

    /// Product of `(-1)^spin` over the strips.
    pub fn sign(&self) -> i32 {
        if self.spins().iter().sum::<usize>() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Rows (1-based, inclusive) spanned by each strip.
    pub fn row_spans(&self) -> Vec<(usize, usize)> {
        self.strips()
            .iter()
            .map(|s| {
                let rows = s.occupied_rows();
                (rows[0], *rows.last().expect("strip is nonempty"))
            })
            .collect()
    }

    /// Starting box of each strip.
    pub fn starts(&self) -> Vec<Cell> {
        self.strips()
            .iter()
            .map(|s| {
                let row = s.occupied_rows()[0];
                (row, s.outer().part(row - 1))
            })
            .collect()
    }
}

/// Which chains a traversal visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainFilter {
    /// Only strips of exactly `n` cells.
    pub unit_weight_only: bool,
    /// Only strips whose starting box lies in the top strip of the whole shape.
    pub horizontal_only: bool,
}

/// Depth-first traversal of the strip chains of `s`, smallest strips first.
/// The visitor may stop the walk early by returning `Break`.
pub fn for_each_chain<F>(s: &SkewShape, n: usize, filter: ChainFilter, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&StripChain) -> ControlFlow<()>,
{
    assert!(n >= 1, "strip modulus must be positive");
    if s.size() == 0 || s.size() % n != 0 {
        return ControlFlow::Continue(());
    }
    let walker = ChainWalker { outer: s.outer(), n, filter, top: top_strip(s) };
    let mut stages = vec![s.inner().clone()];
    let mut weights = Vec::new();
    let mut dead = HashSet::new();
    match walker.walk(&mut stages, &mut weights, &mut dead, &mut visit) {
        ControlFlow::Break(()) => ControlFlow::Break(()),
        ControlFlow::Continue(_) => ControlFlow::Continue(()),
    }
}

struct ChainWalker<'a> {
    outer: &'a Partition,
    n: usize,
    filter: ChainFilter,
    top: BTreeSet<Cell>,
}

impl ChainWalker<'_> {
    /// Returns whether at least one chain was completed below this node.
    fn walk<F>(
        &self,
        stages: &mut Vec<Partition>,
        weights: &mut Vec<usize>,
        dead: &mut HashSet<Partition>,
        visit: &mut F,
    ) -> ControlFlow<(), bool>
    where
        F: FnMut(&StripChain) -> ControlFlow<()>,
    {
        let current = stages.last().expect("nonempty").clone();
        let remaining = self.outer.weight() - current.weight();
        if remaining == 0 {
            visit(&StripChain { stages: stages.clone(), weights: weights.clone() })?;
            return ControlFlow::Continue(true);
        }
        if dead.contains(&current) {
            return ControlFlow::Continue(false);
        }
        let max_weight = if self.filter.unit_weight_only { 1 } else { remaining / self.n };
        let mut found = false;
        for weight in 1..=max_weight {
            for ribbon in addable_ribbons(&current, self.outer, weight * self.n) {
                if self.filter.horizontal_only && !self.top.contains(&ribbon.start()) {
                    continue;
                }
                stages.push(ribbon.result);
                weights.push(weight);
                let below = self.walk(stages, weights, dead, visit);
                stages.pop();
                weights.pop();
                found |= below?;
            }
        }
        if !found {
            dead.insert(current);
        }
        ControlFlow::Continue(found)
    }
}

/// All `n`-border strip chains decomposing `s`, in traversal order.
pub fn enumerate_chains(s: &SkewShape, n: usize, unit_weight_only: bool) -> Vec<StripChain> {
    let mut out = Vec::new();
    let filter = ChainFilter { unit_weight_only, horizontal_only: false };
    let _ = for_each_chain(s, n, filter, |c| {
        out.push(c.clone());
        ControlFlow::Continue(())
    });
    out
}

/// Whether `s` splits into strips of sizes divisible by `n` at all.
pub fn chain_exists(s: &SkewShape, n: usize) -> bool {
    let filter = ChainFilter { unit_weight_only: false, horizontal_only: false };
    for_each_chain(s, n, filter, |_| ControlFlow::Break(())).is_break()
}

/// Every strip is a border strip of size divisible by `n` whose starting box
/// lies in the top strip of `outer / inner`.
pub fn is_horizontal_chain(c: &StripChain, n: usize) -> bool {
    if c.stages.len() != c.weights.len() + 1 || c.stages.windows(2).any(|w| !w[1].contains(&w[0])) {
        return false;
    }
    let Ok(whole) = SkewShape::new(c.outer().clone(), c.inner().clone()) else {
        return false;
    };
    let top = top_strip(&whole);
    let strips = c.strips();
    let well_formed = strips
        .iter()
        .zip(&c.weights)
        .all(|(s, &w)| w >= 1 && s.size() == w * n && is_border_strip(s));
    well_formed && c.starts().iter().all(|cell| top.contains(cell))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StripKind {
    NotWeightKStrip,
    NonHorizontal,
    Horizontal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripClassification {
    pub kind: StripKind,
    /// Longest horizontal chain, 0 when there is none.
    pub m_value: usize,
    /// `±1` when horizontal, otherwise 0.
    pub sign: i32,
}

/// Longest horizontal chains from one stage onward: their length and the
/// set of signs they realise (bit 0 for `+1`, bit 1 for `-1`).
#[derive(Clone, Copy, Debug)]
struct Longest {
    len: usize,
    signs: u8,
}

fn flip(signs: u8) -> u8 {
    ((signs & 1) << 1) | ((signs >> 1) & 1)
}

struct Classifier<'a> {
    outer: &'a Partition,
    n: usize,
    top: BTreeSet<Cell>,
    memo: HashMap<Partition, Option<Longest>>,
}

impl Classifier<'_> {
    fn longest(&mut self, current: &Partition) -> Option<Longest> {
        if let Some(hit) = self.memo.get(current) {
            return *hit;
        }
        let remaining = self.outer.weight() - current.weight();
        let result = if remaining == 0 {
            Some(Longest { len: 0, signs: 1 })
        } else {
            let mut best: Option<Longest> = None;
            for weight in 1..=remaining / self.n {
                for ribbon in addable_ribbons(current, self.outer, weight * self.n) {
                    if !self.top.contains(&ribbon.start()) {
                        continue;
                    }
                    let Some(tail) = self.longest(&ribbon.result) else { continue };
                    let signs = if ribbon.spin() % 2 == 0 { tail.signs } else { flip(tail.signs) };
                    let candidate = Longest { len: tail.len + 1, signs };
                    best = match best {
                        Some(b) if b.len > candidate.len => Some(b),
                        Some(b) if b.len == candidate.len => Some(Longest { len: b.len, signs: b.signs | signs }),
                        _ => Some(candidate),
                    };
                }
            }
            best
        };
        self.memo.insert(current.clone(), result);
        result
    }
}

/// Classifies `s` as a horizontal / non-horizontal `n`-border strip of
/// weight `k`, or neither. `m_value` is the length of the longest
/// horizontal chain with arbitrary strip weights.
pub fn classify(s: &SkewShape, n: usize, k: usize) -> Result<StripClassification> {
    assert!(n >= 1, "strip modulus must be positive");
    if s.size() != n * k {
        return Err(Error::SizeMismatch { expected: n * k, actual: s.size() });
    }
    let mut classifier = Classifier { outer: s.outer(), n, top: top_strip(s), memo: HashMap::new() };
    let longest = classifier.longest(s.inner());
    let m_value = longest.map_or(0, |l| l.len);
    match longest {
        Some(l) if l.len == k => {
            let sign = match l.signs {
                1 => 1,
                2 => -1,
                _ => return Err(Error::Inconsistent(format!("maximal horizontal chains of {s} disagree in sign"))),
            };
            Ok(StripClassification { kind: StripKind::Horizontal, m_value, sign })
        }
        _ if longest.is_some() || chain_exists(s, n) => {
            Ok(StripClassification { kind: StripKind::NonHorizontal, m_value, sign: 0 })
        }
        _ => Ok(StripClassification { kind: StripKind::NotWeightKStrip, m_value: 0, sign: 0 }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::{partitions_containing, partitions_of};

    fn skew(outer: Partition, inner: Partition) -> SkewShape {
        SkewShape::new(outer, inner).unwrap()
    }

    #[test]
    fn border_strip_examples() {
        assert!(is_border_strip(&skew(part![2, 1], part![])));
        assert!(!is_border_strip(&skew(part![2, 2], part![])));
        assert!(!is_border_strip(&skew(part![2, 1, 1], part![1, 1])));
        assert!(!is_border_strip(&skew(part![2, 1], part![2, 1])));
        assert!(is_border_strip(&skew(part![3, 3], part![2])));
    }

    #[test]
    fn spin_examples() {
        assert_eq!(spin(&skew(part![3], part![])).unwrap(), 0);
        assert_eq!(spin(&skew(part![2, 1], part![])).unwrap(), 1);
        // six-row strip shaped like a staircase path
        let outer = part![9, 5, 5, 4, 2, 2];
        let inner = part![4, 4, 3, 1, 1];
        assert_eq!(spin(&skew(outer, inner)).unwrap(), 5);
        assert!(matches!(spin(&skew(part![2, 2], part![])), Err(Error::NotABorderStrip(_))));
    }

    #[test]
    fn top_strip_examples() {
        assert_eq!(top_strip(&skew(part![2, 2], part![])), BTreeSet::from([(1, 1), (1, 2)]));
        assert_eq!(top_strip(&skew(part![2, 1], part![1])), BTreeSet::from([(1, 2), (2, 1)]));
        assert!(top_strip(&skew(part![], part![])).is_empty());
    }

    #[test]
    fn top_strip_has_one_cell_per_column() {
        for w in 0..=8 {
            for outer in partitions_of(w, None) {
                for inner in (0..=w).flat_map(|m| partitions_of(m, None)).filter(|i| outer.contains(i)) {
                    let top = top_strip(&skew(outer.clone(), inner.clone()));
                    let columns: HashSet<usize> = top.iter().map(|c| c.1).collect();
                    assert_eq!(columns.len(), top.len());
                }
            }
        }
    }

    #[test]
    fn addable_ribbons_match_brute_force() {
        for w in 0..=7 {
            for base in partitions_of(w, None) {
                for size in 1..=5 {
                    let bound_weight = w + size + 2;
                    let bound = Partition::new(vec![bound_weight.min(6); 5]).unwrap();
                    if !bound.contains(&base) {
                        continue;
                    }
                    let fast: BTreeSet<Partition> =
                        addable_ribbons(&base, &bound, size).into_iter().map(|r| r.result).collect();
                    let slow: BTreeSet<Partition> = partitions_containing(&base, w + size, 6, 5)
                        .into_iter()
                        .filter(|b| is_border_strip(&skew(b.clone(), base.clone())))
                        .collect();
                    assert_eq!(fast, slow, "base {base}, size {size}");
                }
            }
        }
    }

    #[test]
    fn chain_enumeration_examples() {
        let chains = enumerate_chains(&skew(part![2, 2], part![]), 2, true);
        let mids: Vec<Partition> = chains.iter().map(|c| c.stages[1].clone()).collect();
        assert_eq!(mids, vec![part![2], part![1, 1]]);

        let chains = enumerate_chains(&skew(part![2, 1, 1], part![]), 2, true);
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].stages[1], part![2]);

        assert!(enumerate_chains(&skew(part![3], part![]), 2, false).is_empty());
        assert!(enumerate_chains(&skew(part![3], part![]), 2, true).is_empty());

        // weighted: (2,1,1) is also a single 4-strip
        assert_eq!(enumerate_chains(&skew(part![2, 1, 1], part![]), 2, false).len(), 2);
    }

    #[test]
    fn horizontal_chain_examples() {
        let via_column = StripChain { stages: vec![part![], part![1, 1], part![2, 2]], weights: vec![1, 1] };
        assert!(is_horizontal_chain(&via_column, 2));
        let via_row = StripChain { stages: vec![part![], part![2], part![2, 2]], weights: vec![1, 1] };
        assert!(!is_horizontal_chain(&via_row, 2));
        let single = StripChain { stages: vec![part![], part![3]], weights: vec![1] };
        assert!(is_horizontal_chain(&single, 3));
        let wrong_size = StripChain { stages: vec![part![], part![3]], weights: vec![1] };
        assert!(!is_horizontal_chain(&wrong_size, 2));
    }

    #[test]
    fn classify_examples() {
        let c = classify(&skew(part![2, 2], part![]), 2, 2).unwrap();
        assert_eq!(c, StripClassification { kind: StripKind::Horizontal, m_value: 2, sign: 1 });
        let c = classify(&skew(part![2, 1, 1], part![]), 2, 2).unwrap();
        assert_eq!(c, StripClassification { kind: StripKind::NonHorizontal, m_value: 1, sign: 0 });
        let c = classify(&skew(part![4], part![]), 2, 2).unwrap();
        assert_eq!(c, StripClassification { kind: StripKind::Horizontal, m_value: 2, sign: 1 });
        // () < (1,1) < (3,1): spins 1 and 0
        let c = classify(&skew(part![3, 1], part![]), 2, 2).unwrap();
        assert_eq!(c, StripClassification { kind: StripKind::Horizontal, m_value: 2, sign: -1 });
        let c = classify(&skew(part![2, 1], part![]), 3, 1).unwrap();
        assert_eq!(c, StripClassification { kind: StripKind::Horizontal, m_value: 1, sign: -1 });
        let c = classify(&skew(part![2, 2], part![]), 4, 1).unwrap();
        assert_eq!(c.kind, StripKind::NotWeightKStrip);
        assert!(matches!(classify(&skew(part![3], part![]), 2, 1), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn weight_one_horizontal_iff_border_strip() {
        for w in 1..=8 {
            for outer in partitions_of(w, None) {
                for inner in (0..w).flat_map(|m| partitions_of(m, None)).filter(|i| outer.contains(i)) {
                    let s = skew(outer.clone(), inner);
                    let c = classify(&s, s.size(), 1).unwrap();
                    assert_eq!(c.kind == StripKind::Horizontal, is_border_strip(&s), "{s}");
                    if c.kind == StripKind::Horizontal {
                        let expected = if spin(&s).unwrap() % 2 == 0 { 1 } else { -1 };
                        assert_eq!(c.sign, expected);
                    }
                }
            }
        }
    }

    #[test]
    fn enumerated_chains_are_valid() {
        for w in 1..=8 {
            for outer in partitions_of(w, None) {
                let s = SkewShape::straight(outer.clone());
                for n in 1..=3 {
                    for chain in enumerate_chains(&s, n, false) {
                        assert_eq!(chain.inner(), &part![]);
                        assert_eq!(chain.outer(), &outer);
                        for (strip, weight) in chain.strips().iter().zip(&chain.weights) {
                            assert!(is_border_strip(strip));
                            assert_eq!(strip.size(), weight * n);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn chain_json_shape() {
        let chain = StripChain { stages: vec![part![], part![1, 1], part![2, 2]], weights: vec![1, 1] };
        let text = serde_json::to_string(&chain).unwrap();
        assert_eq!(text, r#"{"stages":[[],[1,1],[2,2]],"weights":[1,1]}"#);
    }
}
