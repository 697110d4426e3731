//! Exhaustive enumeration of small posets and of connected cores of height
//! one and two, up to isomorphism.
//!
//! Cores are generated level by level. Elements are stratified by element
//! height, incidence rows between strata are produced in non-increasing
//! order, and the bottom-to-middle incidence is additionally kept in doubly
//! lexical form (columns non-increasing as well). Every 0/1 matrix has such an
//! ordering, so this only removes relabelled copies. Survivors are filtered
//! for connectivity, then for beat points, then deduplicated by canonical code.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::classify::ClassificationRecord;
use crate::poset::{CanonicalCode, Poset};

pub const MAX_GENERAL_N: usize = 6;
pub const MAX_HEIGHT1_N: usize = 12;
pub const MAX_HEIGHT2_N: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("n = {n} exceeds the enumeration cap of {max}")]
    SizeTooLarge { n: usize, max: usize },
    #[error("n must be at least 1")]
    SizeTooSmall,
    #[error("height {0} is not supported; use 1 or 2")]
    UnsupportedHeight(usize),
}

/// Sizes of the height-2, height-1 and height-0 strata.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LevelShape {
    pub m2: usize,
    pub m1: usize,
    pub m0: usize,
}

impl LevelShape {
    pub fn n(&self) -> usize {
        self.m2 + self.m1 + self.m0
    }
}

/// Enumeration results with per-label counts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Inventory {
    pub n: usize,
    pub height: usize,
    pub filters: Vec<String>,
    pub records: Vec<ClassificationRecord>,
    pub counts: BTreeMap<String, usize>,
}

/// Relabels by level: the top level gets `a1, a2, ..`, the next `b1, ..`,
/// and so on down, numbered in index order.
pub fn tier_labels(p: &Poset) -> Poset {
    let h = p.element_heights();
    let top = h.iter().copied().max().unwrap_or(0);
    let mut counters = vec![0usize; top + 1];
    let labels: Vec<String> = h
        .iter()
        .map(|&hx| {
            counters[hx] += 1;
            let tier = top - hx;
            let letter = if tier < 26 {
                char::from(b'a' + tier as u8).to_string()
            } else {
                format!("l{tier}_")
            };
            format!("{letter}{}", counters[hx])
        })
        .collect();
    p.with_labels(labels).expect("tier labels are distinct")
}

fn canonical_representative(p: &Poset) -> (CanonicalCode, Poset) {
    let (code, q) = p.canonical_form();
    (code, tier_labels(&q))
}

fn check_size(n: usize, max: usize) -> Result<(), EnumerateError> {
    if n == 0 {
        Err(EnumerateError::SizeTooSmall)
    } else if n > max {
        Err(EnumerateError::SizeTooLarge { n, max })
    } else {
        Ok(())
    }
}

/// All posets on `n <= 6` points up to isomorphism, sorted by canonical code.
///
/// Each new point picks an order ideal of the earlier points as its strict
/// down-set, which reaches every poset through a linear extension.
pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>, EnumerateError> {
    check_size(n, MAX_GENERAL_N)?;
    let mut found: BTreeMap<CanonicalCode, Poset> = BTreeMap::new();
    let mut down: Vec<u64> = Vec::with_capacity(n);
    fn grow(n: usize, down: &mut Vec<u64>, found: &mut BTreeMap<CanonicalCode, Poset>) {
        let k = down.len();
        if k == n {
            let p = Poset::from_down_sets_unchecked(crate::poset::default_labels(n), down.clone());
            found.entry(p.canonical_code()).or_insert(p);
            return;
        }
        for ideal in 0u64..(1u64 << k) {
            let closed = (0..k)
                .filter(|&y| ideal >> y & 1 == 1)
                .all(|y| down[y] & !ideal == 0);
            if closed {
                down.push(ideal | (1u64 << k));
                grow(n, down, found);
                down.pop();
            }
        }
    }
    grow(n, &mut down, &mut found);
    Ok(found.into_values().map(|p| p.canonical_form().1).collect())
}

/// Calls `f` on every non-increasing sequence of length `len` drawn from
/// `0..choices`, as indices into a list sorted by preference.
fn multisets(len: usize, choices: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(
        len: usize,
        start: usize,
        choices: usize,
        acc: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if acc.len() == len {
            f(acc);
            return;
        }
        for c in start..choices {
            acc.push(c);
            rec(len, c, choices, acc, f);
            acc.pop();
        }
    }
    rec(len, 0, choices, &mut Vec::with_capacity(len), f);
}

/// Bottom-level subsets of size at least two, in decreasing order of the
/// lexical key where column 0 is most significant.
fn lower_rows(m0: usize) -> Vec<u64> {
    let mut rows: Vec<u64> = (0u64..(1u64 << m0))
        .filter(|r| r.count_ones() >= 2)
        .collect();
    rows.sort_by_key(|&r| std::cmp::Reverse(lex_key(r, m0)));
    rows
}

/// Bit-reversal of the low `width` bits, so column 0 dominates comparisons.
fn lex_key(row: u64, width: usize) -> u64 {
    row.reverse_bits() >> (64 - width)
}

/// Rows (already non-increasing) whose columns are non-increasing too.
#[cfg(test)]
fn columns_non_increasing(rows: &[u64], width: usize) -> bool {
    (0..width.saturating_sub(1)).all(|j| {
        for &r in rows {
            let (a, b) = (r >> j & 1, r >> (j + 1) & 1);
            if a != b {
                return a > b;
            }
        }
        true
    })
}

/// Incremental multiset search over `rows` with the doubly lexical prune.
fn lower_incidences(len: usize, width: usize, rows: &[u64], f: &mut impl FnMut(&[u64])) {
    fn rec(
        len: usize,
        start: usize,
        rows: &[u64],
        tied: u64,
        acc: &mut Vec<u64>,
        f: &mut impl FnMut(&[u64]),
    ) {
        if acc.len() == len {
            f(acc);
            return;
        }
        for (i, &r) in rows.iter().enumerate().skip(start) {
            // tied bit j: columns j and j+1 agree on all rows so far
            let mut next = tied;
            let mut ok = true;
            for j in crate::poset::ElementSet::from_bits(tied) {
                let (a, b) = (r >> j & 1, r >> (j + 1) & 1);
                if a < b {
                    ok = false;
                    break;
                }
                if a > b {
                    next &= !(1u64 << j);
                }
            }
            if ok {
                acc.push(r);
                rec(len, i, rows, next, acc, f);
                acc.pop();
            }
        }
    }
    let tied = if width >= 2 {
        (1u64 << (width - 1)) - 1
    } else {
        0
    };
    rec(len, 0, rows, tied, &mut Vec::with_capacity(len), f);
}

/// Level shapes `(m2, m1, m0)` with every stratum nonempty.
pub fn height2_shapes(n: usize) -> Vec<LevelShape> {
    let mut out = Vec::new();
    for m2 in 1..n {
        for m1 in 1..n {
            if m2 + m1 < n {
                out.push(LevelShape {
                    m2,
                    m1,
                    m0: n - m2 - m1,
                });
            }
        }
    }
    out
}

/// Number of raw candidates a shard would produce, before any filter.
pub fn height2_candidate_count(shape: LevelShape) -> usize {
    let mut count = 0;
    for_each_height2_candidate(shape, true, &mut |_| count += 1);
    count
}

fn for_each_height2_candidate(shape: LevelShape, prune: bool, f: &mut impl FnMut(Vec<u64>)) {
    let LevelShape { m2, m1, m0 } = shape;
    let n = shape.n();
    let rows = lower_rows(m0);
    let mut per_middle = |middle: &[u64]| {
        // top states: strict down-set S of middles plus bottoms T covering S's bottoms
        let mut states: Vec<u64> = Vec::new();
        for s in 1u64..(1u64 << m1) {
            let forced = (0..m1)
                .filter(|&j| s >> j & 1 == 1)
                .fold(0u64, |acc, j| acc | middle[j]);
            let free = ((1u64 << m0) - 1) & !forced;
            let mut extra = free;
            loop {
                let t = forced | extra;
                let single_beat = s.count_ones() == 1 && extra == 0;
                if !single_beat {
                    states.push((s << m0) | t);
                }
                if extra == 0 {
                    break;
                }
                extra = (extra - 1) & free;
            }
        }
        states.sort_unstable_by(|a, b| b.cmp(a));
        multisets(m2, states.len(), &mut |choice: &[usize]| {
            let mut down = Vec::with_capacity(n);
            for i in 0..m0 {
                down.push(1u64 << i);
            }
            for (j, &r) in middle.iter().enumerate() {
                down.push(r | (1u64 << (m0 + j)));
            }
            for (t, &c) in choice.iter().enumerate() {
                down.push(states[c] | (1u64 << (m0 + m1 + t)));
            }
            f(down);
        });
    };
    if prune {
        lower_incidences(m1, m0, &rows, &mut per_middle);
    } else {
        multisets(m1, rows.len(), &mut |c: &[usize]| {
            let middle: Vec<u64> = c.iter().map(|&i| rows[i]).collect();
            per_middle(&middle);
        });
    }
}

/// Connected height-2 cores of one level shape, sorted by canonical code.
pub fn enumerate_height2_shard(shape: LevelShape) -> Vec<(CanonicalCode, Poset)> {
    height2_shard(shape, true)
}

fn height2_shard(shape: LevelShape, prune: bool) -> Vec<(CanonicalCode, Poset)> {
    let n = shape.n();
    let labels = crate::poset::default_labels(n);
    let mut found: BTreeMap<CanonicalCode, Poset> = BTreeMap::new();
    for_each_height2_candidate(shape, prune, &mut |down| {
        let p = Poset::from_down_sets_unchecked(labels.clone(), down);
        debug_assert!(Poset::from_down_sets(p.labels().to_vec(), p.down_rows().to_vec()).is_ok());
        if p.is_connected() && p.is_core() {
            let (code, q) = canonical_representative(&p);
            found.entry(code).or_insert(q);
        }
    });
    found.into_iter().collect()
}

/// Merges shard outputs into one list sorted by canonical code.
pub fn merge_shards(shards: Vec<Vec<(CanonicalCode, Poset)>>) -> Vec<Poset> {
    let mut all: BTreeMap<CanonicalCode, Poset> = BTreeMap::new();
    for shard in shards {
        for (code, p) in shard {
            all.entry(code).or_insert(p);
        }
    }
    all.into_values().collect()
}

/// All connected height-2 posets without beat points on `n <= 10` points, up
/// to isomorphism, sorted by canonical code. Shards run on the rayon pool.
pub fn enumerate_height2_cores(n: usize) -> Result<Vec<Poset>, EnumerateError> {
    check_size(n, MAX_HEIGHT2_N)?;
    let shards = height2_shapes(n)
        .into_par_iter()
        .map(enumerate_height2_shard)
        .collect();
    Ok(merge_shards(shards))
}

/// Shapes `(upper, lower)` for height 1, as `LevelShape` with `m2 = 0`.
pub fn height1_shapes(n: usize) -> Vec<LevelShape> {
    (1..n)
        .map(|m1| LevelShape {
            m2: 0,
            m1,
            m0: n - m1,
        })
        .collect()
}

/// Connected height-1 cores of one shape, sorted by canonical code.
pub fn enumerate_height1_shard(shape: LevelShape) -> Vec<(CanonicalCode, Poset)> {
    height1_shard(shape, true)
}

fn height1_shard(shape: LevelShape, prune: bool) -> Vec<(CanonicalCode, Poset)> {
    let LevelShape { m1, m0, .. } = shape;
    let n = m1 + m0;
    let labels = crate::poset::default_labels(n);
    let rows = lower_rows(m0);
    let mut found: BTreeMap<CanonicalCode, Poset> = BTreeMap::new();
    let full = (1u64 << m0) - 1;
    let mut per_upper = |upper: &[u64]| {
        if upper.iter().fold(0, |a, &r| a | r) != full {
            return;
        }
        let mut down: Vec<u64> = (0..m0).map(|i| 1u64 << i).collect();
        down.extend(
            upper
                .iter()
                .enumerate()
                .map(|(j, &r)| r | (1u64 << (m0 + j))),
        );
        let p = Poset::from_down_sets_unchecked(labels.clone(), down);
        if p.is_connected() && p.is_core() {
            let (code, q) = canonical_representative(&p);
            found.entry(code).or_insert(q);
        }
    };
    if prune {
        lower_incidences(m1, m0, &rows, &mut per_upper);
    } else {
        multisets(m1, rows.len(), &mut |c: &[usize]| {
            let upper: Vec<u64> = c.iter().map(|&i| rows[i]).collect();
            per_upper(&upper);
        });
    }
    found.into_iter().collect()
}

/// All connected height-1 posets without beat points on `n <= 12` points.
pub fn enumerate_height1_cores(n: usize) -> Result<Vec<Poset>, EnumerateError> {
    check_size(n, MAX_HEIGHT1_N)?;
    let shards = height1_shapes(n)
        .into_par_iter()
        .map(enumerate_height1_shard)
        .collect();
    Ok(merge_shards(shards))
}

/// Shards for `enumerate_cores(n, height)`, after the size checks.
pub fn core_shapes(n: usize, height: usize) -> Result<Vec<LevelShape>, EnumerateError> {
    match height {
        1 => check_size(n, MAX_HEIGHT1_N).map(|_| height1_shapes(n)),
        2 => check_size(n, MAX_HEIGHT2_N).map(|_| height2_shapes(n)),
        h => Err(EnumerateError::UnsupportedHeight(h)),
    }
}

/// Runs one shard from `core_shapes`; `m2 == 0` marks a height-1 shape.
pub fn enumerate_shard(shape: LevelShape) -> Vec<(CanonicalCode, Poset)> {
    if shape.m2 == 0 {
        enumerate_height1_shard(shape)
    } else {
        enumerate_height2_shard(shape)
    }
}

/// Dispatches to the height-1 or height-2 generator.
pub fn enumerate_cores(n: usize, height: usize) -> Result<Vec<Poset>, EnumerateError> {
    match height {
        1 => enumerate_height1_cores(n),
        2 => enumerate_height2_cores(n),
        h => Err(EnumerateError::UnsupportedHeight(h)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_poset_counts() {
        let counts: Vec<usize> = (1..=4)
            .map(|n| enumerate_posets(n).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 2, 5, 16]);
    }

    #[test]
    fn size_caps() {
        assert_eq!(
            enumerate_posets(7),
            Err(EnumerateError::SizeTooLarge { n: 7, max: 6 })
        );
        assert_eq!(enumerate_posets(0), Err(EnumerateError::SizeTooSmall));
        assert!(enumerate_height2_cores(11).is_err());
        assert!(enumerate_height1_cores(13).is_err());
        assert_eq!(
            enumerate_cores(5, 3),
            Err(EnumerateError::UnsupportedHeight(3))
        );
    }

    #[test]
    fn height2_small() {
        assert!(enumerate_height2_cores(5).unwrap().is_empty());
        let six = enumerate_height2_cores(6).unwrap();
        assert_eq!(six.len(), 1);
        assert!(six[0].is_isomorphic(&Poset::sphere_model(2)));
        assert_eq!(six[0].labels(), ["c1", "c2", "b1", "b2", "a1", "a2"]);
    }

    #[test]
    fn height1_small() {
        assert!(enumerate_height1_cores(3).unwrap().is_empty());
        let four = enumerate_height1_cores(4).unwrap();
        assert_eq!(four.len(), 1);
        assert!(four[0].is_isomorphic(&Poset::sphere_model(1)));
    }

    #[test]
    fn shapes() {
        assert_eq!(
            height2_shapes(3),
            [LevelShape {
                m2: 1,
                m1: 1,
                m0: 1
            }]
        );
        assert_eq!(height2_shapes(5).len(), 6);
        assert!(height2_shapes(8).iter().all(|s| s.n() == 8));
    }

    #[test]
    fn doubly_lexical_prune_matches_plain_search() {
        for m0 in 1..=4 {
            let rows = lower_rows(m0);
            for len in 1..=3 {
                let mut pruned = Vec::new();
                lower_incidences(len, m0, &rows, &mut |r: &[u64]| pruned.push(r.to_vec()));
                let mut plain = Vec::new();
                multisets(len, rows.len(), &mut |c: &[usize]| {
                    let r: Vec<u64> = c.iter().map(|&i| rows[i]).collect();
                    if columns_non_increasing(&r, m0) {
                        plain.push(r);
                    }
                });
                assert_eq!(pruned, plain);
            }
        }
    }

    #[test]
    fn column_prune_keeps_every_height2_core() {
        for n in 6..=8 {
            let pruned = enumerate_height2_cores(n).unwrap();
            let plain = merge_shards(
                height2_shapes(n)
                    .into_iter()
                    .map(|s| height2_shard(s, false))
                    .collect(),
            );
            assert_eq!(pruned, plain, "n = {n}");
        }
    }

    #[test]
    fn column_prune_keeps_every_height1_core() {
        for n in 4..=8 {
            let pruned = enumerate_height1_cores(n).unwrap();
            let plain = merge_shards(
                height1_shapes(n)
                    .into_iter()
                    .map(|s| height1_shard(s, false))
                    .collect(),
            );
            assert_eq!(pruned, plain, "n = {n}");
        }
    }

    #[test]
    fn tier_labels_by_level() {
        let p = tier_labels(&Poset::sphere_model(1));
        assert_eq!(p.labels(), ["b1", "b2", "a1", "a2"]);
    }
}
