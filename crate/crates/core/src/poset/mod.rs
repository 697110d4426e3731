//! Finite T0-spaces represented as posets under the specialization order.
//!
//! Every element `x` carries two bitmask rows: `down[x]` is the minimal open
//! set `U_x = {y : y <= x}` and `up[x]` is the closure `F_x = {y : y >= x}`.
//! The 64-bit rows cap a poset at [`MAX_ELEMENTS`] points.

mod canon;
mod format;

pub use canon::CanonicalCode;
pub use format::{parse_json, parse_poset, parse_text, to_dot, to_json, to_text, PosetJson};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported number of points.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("a poset needs between 1 and {MAX_ELEMENTS} elements, got {0}")]
    Size(usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("invalid element label `{0}`")]
    InvalidLabel(String),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("element index {index} out of range for {n} elements")]
    InvalidIndex { index: usize, n: usize },
    #[error("cover relations contain a cycle through `{0}`")]
    CycleDetected(String),
    #[error("`{lower} < {upper}` is implied transitively and is not a cover")]
    NotCover { lower: String, upper: String },
    #[error("cover `{lower} < {upper}` is listed twice")]
    DuplicateCover { lower: String, upper: String },
    #[error("relation is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("relation is not antisymmetric: `{0}` and `{1}` are mutually below each other")]
    NotAntisymmetric(String, String),
    #[error("relation is not transitive: `{0}` <= `{1}` <= `{2}` but not `{0}` <= `{2}`")]
    NotTransitive(String, String, String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid JSON poset: {0}")]
    Json(String),
}

/// A set of elements of one poset, stored as a bitmask over element indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn singleton(x: usize) -> Self {
        ElementSet(1u64 << x)
    }

    /// The set `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub const fn contains(self, x: usize) -> bool {
        x < 64 && (self.0 >> x) & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> ElementIter {
        ElementIter(self.0)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = ElementIter;

    fn into_iter(self) -> ElementIter {
        self.iter()
    }
}

/// Ascending iterator over the members of an [`ElementSet`].
#[derive(Clone, Debug)]
pub struct ElementIter(u64);

impl Iterator for ElementIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for ElementIter {}

/// The edge set of a Hasse diagram: `(lower, upper)` cover pairs over `n`
/// labelled elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverRelationList {
    pub labels: Vec<String>,
    pub pairs: Vec<(usize, usize)>,
}

impl CoverRelationList {
    /// Cover list over `n` elements with default labels `x1 .. xn`.
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Self {
        CoverRelationList {
            labels: default_labels(n),
            pairs,
        }
    }

    pub fn with_labels(labels: Vec<String>, pairs: Vec<(usize, usize)>) -> Self {
        CoverRelationList { labels, pairs }
    }

    /// Builds the list from label pairs such as `("c1", "b1")`.
    pub fn from_named<S: AsRef<str>>(labels: &[S], pairs: &[(S, S)]) -> Result<Self, PosetError> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_owned()).collect();
        let lookup = |name: &str| {
            labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| PosetError::UnknownElement(name.to_owned()))
        };
        let pairs = pairs
            .iter()
            .map(|(lo, hi)| Ok((lookup(lo.as_ref())?, lookup(hi.as_ref())?)))
            .collect::<Result<Vec<_>, PosetError>>()?;
        Ok(CoverRelationList { labels, pairs })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }
}

/// Maximal, minimal and remaining points of a poset.
///
/// An isolated point is both maximal and minimal; it is reported in both sets
/// and recorded in `isolated` instead of being rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RolePartition {
    pub maximal: ElementSet,
    pub minimal: ElementSet,
    pub middle: ElementSet,
    pub isolated: ElementSet,
}

impl RolePartition {
    pub fn has_isolated(&self) -> bool {
        !self.isolated.is_empty()
    }

    /// True when the three role sets are pairwise disjoint.
    pub fn is_partition(&self) -> bool {
        self.maximal.intersection(self.minimal).is_empty()
    }
}

/// A finite T0-space viewed as a partially ordered set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    labels: Vec<String>,
    down: Vec<u64>,
    up: Vec<u64>,
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn check_labels(labels: &[String]) -> Result<(), PosetError> {
    let n = labels.len();
    if n == 0 || n > MAX_ELEMENTS {
        return Err(PosetError::Size(n));
    }
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty()
            || l.starts_with('#')
            || l.chars().any(|c| c.is_whitespace() || c.is_control())
        {
            return Err(PosetError::InvalidLabel(l.clone()));
        }
        if labels[..i].contains(l) {
            return Err(PosetError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

fn transpose(rows: &[u64]) -> Vec<u64> {
    let n = rows.len();
    let mut t = vec![0u64; n];
    for (i, &row) in rows.iter().enumerate() {
        for j in ElementSet(row) {
            t[j] |= 1u64 << i;
        }
    }
    t
}

impl Poset {
    /// Builds a poset from `down[x] = U_x` bitmasks, checking the order axioms.
    pub fn from_down_sets(labels: Vec<String>, down: Vec<u64>) -> Result<Self, PosetError> {
        check_labels(&labels)?;
        let n = labels.len();
        if down.len() != n {
            return Err(PosetError::LabelCount {
                expected: down.len(),
                got: n,
            });
        }
        let full = ElementSet::full(n).bits();
        for (x, &row) in down.iter().enumerate() {
            if row & !full != 0 {
                let index = (row & !full).trailing_zeros() as usize;
                return Err(PosetError::InvalidIndex { index, n });
            }
            if (row >> x) & 1 == 0 {
                return Err(PosetError::NotReflexive(labels[x].clone()));
            }
        }
        for x in 0..n {
            for y in ElementSet(down[x]) {
                if y != x && (down[y] >> x) & 1 == 1 {
                    return Err(PosetError::NotAntisymmetric(
                        labels[y].clone(),
                        labels[x].clone(),
                    ));
                }
                if down[y] & !down[x] != 0 {
                    let z = (down[y] & !down[x]).trailing_zeros() as usize;
                    return Err(PosetError::NotTransitive(
                        labels[z].clone(),
                        labels[y].clone(),
                        labels[x].clone(),
                    ));
                }
            }
        }
        Ok(Self::from_down_sets_unchecked(labels, down))
    }

    /// Builds a poset from a relation predicate `leq(i, j)` meaning `i <= j`.
    pub fn from_relation(
        labels: Vec<String>,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<Self, PosetError> {
        let n = labels.len();
        let down = (0..n)
            .map(|j| (0..n).filter(|&i| leq(i, j)).collect::<ElementSet>().bits())
            .collect();
        Self::from_down_sets(labels, down)
    }

    pub(crate) fn from_down_sets_unchecked(labels: Vec<String>, down: Vec<u64>) -> Self {
        debug_assert_eq!(labels.len(), down.len());
        let up = transpose(&down);
        Poset { labels, down, up }
    }

    /// Reflexive-transitive closure of a Hasse diagram.
    pub fn from_cover_relations(c: &CoverRelationList) -> Result<Self, PosetError> {
        check_labels(&c.labels)?;
        let n = c.n();
        let mut down: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for &(lo, hi) in &c.pairs {
            for index in [lo, hi] {
                if index >= n {
                    return Err(PosetError::InvalidIndex { index, n });
                }
            }
            if lo == hi {
                return Err(PosetError::CycleDetected(c.labels[lo].clone()));
            }
            if (down[hi] >> lo) & 1 == 1 {
                return Err(PosetError::DuplicateCover {
                    lower: c.labels[lo].clone(),
                    upper: c.labels[hi].clone(),
                });
            }
            down[hi] |= 1u64 << lo;
        }
        for k in 0..n {
            for i in 0..n {
                if (down[i] >> k) & 1 == 1 {
                    down[i] |= down[k];
                }
            }
        }
        for x in 0..n {
            for y in ElementSet(down[x]) {
                if y != x && (down[y] >> x) & 1 == 1 {
                    return Err(PosetError::CycleDetected(c.labels[x].clone()));
                }
            }
        }
        let p = Self::from_down_sets_unchecked(c.labels.clone(), down);
        for &(lo, hi) in &c.pairs {
            if !p.is_cover(lo, hi) {
                return Err(PosetError::NotCover {
                    lower: c.labels[lo].clone(),
                    upper: c.labels[hi].clone(),
                });
            }
        }
        Ok(p)
    }

    /// Total order `x1 < x2 < .. < xn`.
    pub fn chain(n: usize) -> Self {
        let down = (0..n).map(|i| ElementSet::full(i + 1).bits()).collect();
        Self::from_down_sets_unchecked(default_labels(n), down)
    }

    /// `n` pairwise incomparable points.
    pub fn antichain(n: usize) -> Self {
        let down = (0..n).map(|i| 1u64 << i).collect();
        Self::from_down_sets_unchecked(default_labels(n), down)
    }

    /// The minimal finite model of `S^0` suspended `k` times.
    pub fn sphere_model(k: usize) -> Self {
        let mut s0 = Self::antichain(2);
        s0.labels = vec!["s0".into(), "n0".into()];
        s0.nh_suspension(k)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn elements(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    /// `x <= y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        (self.down[y] >> x) & 1 == 1
    }

    /// `x < y`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `F_x`, the points above `x` (including `x`).
    pub fn up_set(&self, x: usize) -> ElementSet {
        ElementSet(self.up[x])
    }

    /// `U_x`, the points below `x` (including `x`).
    pub fn down_set(&self, x: usize) -> ElementSet {
        ElementSet(self.down[x])
    }

    /// `F̂_x = F_x \ {x}`.
    pub fn hat_up_set(&self, x: usize) -> ElementSet {
        ElementSet(self.up[x] & !(1u64 << x))
    }

    /// `Û_x = U_x \ {x}`.
    pub fn hat_down_set(&self, x: usize) -> ElementSet {
        ElementSet(self.down[x] & !(1u64 << x))
    }

    pub(crate) fn down_rows(&self) -> &[u64] {
        &self.down
    }

    /// `y` covers `x`: `x < y` with nothing strictly between.
    pub fn is_cover(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) && self.up[x] & self.down[y] == (1u64 << x) | (1u64 << y)
    }

    /// Hasse diagram edges, sorted by `(lower, upper)`.
    pub fn covers(&self) -> CoverRelationList {
        let mut pairs = Vec::new();
        for x in 0..self.len() {
            for y in self.hat_up_set(x) {
                if self.is_cover(x, y) {
                    pairs.push((x, y));
                }
            }
        }
        CoverRelationList::with_labels(self.labels.clone(), pairs)
    }

    /// Elements covered by `x`.
    pub fn lower_covers(&self, x: usize) -> ElementSet {
        self.hat_down_set(x)
            .iter()
            .filter(|&y| self.is_cover(y, x))
            .collect()
    }

    /// Elements covering `x`.
    pub fn upper_covers(&self, x: usize) -> ElementSet {
        self.hat_up_set(x)
            .iter()
            .filter(|&y| self.is_cover(x, y))
            .collect()
    }

    /// Indices sorted so that every element comes after everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.down[x].count_ones(), x));
        order
    }

    /// Length of the longest chain strictly below each element.
    pub fn element_heights(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.len()];
        for x in self.linear_extension() {
            h[x] = self
                .hat_down_set(x)
                .iter()
                .map(|y| h[y] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }

    pub fn element_height(&self, x: usize) -> usize {
        self.element_heights()[x]
    }

    /// Number of points in a longest chain, minus one.
    pub fn height(&self) -> usize {
        self.element_heights().into_iter().max().unwrap_or(0)
    }

    /// Points grouped by element height, lowest level first.
    pub fn levels(&self) -> Vec<ElementSet> {
        let h = self.element_heights();
        let top = h.iter().copied().max().unwrap_or(0);
        let mut levels = vec![ElementSet::EMPTY; top + 1];
        for (x, &hx) in h.iter().enumerate() {
            levels[hx].insert(x);
        }
        levels
    }

    pub fn maximal_elements(&self) -> ElementSet {
        (0..self.len())
            .filter(|&x| self.hat_up_set(x).is_empty())
            .collect()
    }

    pub fn minimal_elements(&self) -> ElementSet {
        (0..self.len())
            .filter(|&x| self.hat_down_set(x).is_empty())
            .collect()
    }

    /// `mxl(X)`, `mnl(X)` and `B_X`.
    pub fn role_partition(&self) -> RolePartition {
        let maximal = self.maximal_elements();
        let minimal = self.minimal_elements();
        let isolated = maximal.intersection(minimal);
        RolePartition {
            maximal,
            minimal,
            middle: self.elements().difference(maximal.union(minimal)),
            isolated,
        }
    }

    /// Connected components of the comparability graph, ordered by least element.
    pub fn components(&self) -> Vec<ElementSet> {
        let mut remaining = self.elements();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut seen = ElementSet::singleton(start);
            let mut frontier = seen;
            while !frontier.is_empty() {
                let mut next = ElementSet::EMPTY;
                for x in frontier {
                    next = next.union(self.up_set(x)).union(self.down_set(x));
                }
                frontier = next.difference(seen);
                seen = seen.union(frontier);
            }
            remaining = remaining.difference(seen);
            out.push(seen);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The opposite order `X^op` on the same labels.
    pub fn dual(&self) -> Poset {
        Poset {
            labels: self.labels.clone(),
            down: self.up.clone(),
            up: self.down.clone(),
        }
    }

    /// `Û_x` has a maximum.
    pub fn is_down_beat_point(&self, x: usize) -> bool {
        let below = self.hat_down_set(x).bits();
        below != 0 && ElementSet(below).iter().any(|y| below & !self.down[y] == 0)
    }

    /// `F̂_x` has a minimum.
    pub fn is_up_beat_point(&self, x: usize) -> bool {
        let above = self.hat_up_set(x).bits();
        above != 0 && ElementSet(above).iter().any(|y| above & !self.up[y] == 0)
    }

    pub fn is_beat_point(&self, x: usize) -> bool {
        self.is_down_beat_point(x) || self.is_up_beat_point(x)
    }

    pub fn beat_points(&self) -> ElementSet {
        (0..self.len()).filter(|&x| self.is_beat_point(x)).collect()
    }

    /// A minimal finite space: no beat points.
    pub fn is_core(&self) -> bool {
        (0..self.len()).all(|x| !self.is_beat_point(x))
    }

    /// Subposet on `keep`, preserving the relative order of indices.
    pub fn induced(&self, keep: ElementSet) -> Poset {
        let idx: Vec<usize> = keep.iter().collect();
        let mut position = [usize::MAX; MAX_ELEMENTS];
        for (new, &old) in idx.iter().enumerate() {
            position[old] = new;
        }
        let down = idx
            .iter()
            .map(|&old| {
                ElementSet(self.down[old] & keep.bits())
                    .iter()
                    .map(|y| position[y])
                    .collect::<ElementSet>()
                    .bits()
            })
            .collect();
        let labels = idx.iter().map(|&old| self.labels[old].clone()).collect();
        Self::from_down_sets_unchecked(labels, down)
    }

    pub fn remove_element(&self, x: usize) -> Poset {
        let mut keep = self.elements();
        keep.remove(x);
        self.induced(keep)
    }

    /// Removes the lowest-index beat point until none remain.
    pub fn core(&self) -> Poset {
        let mut p = self.clone();
        while let Some(x) = (0..p.len()).find(|&x| p.is_beat_point(x)) {
            p = p.remove_element(x);
        }
        p
    }

    /// Reorders elements: position `k` of the result holds old element `order[k]`.
    ///
    /// Panics if `order` is not a permutation of `0..len`.
    pub fn reorder(&self, order: &[usize]) -> Poset {
        assert_eq!(order.len(), self.len(), "reorder needs a full permutation");
        let mut position = vec![usize::MAX; self.len()];
        for (new, &old) in order.iter().enumerate() {
            assert!(position[old] == usize::MAX, "reorder needs a permutation");
            position[old] = new;
        }
        let down = order
            .iter()
            .map(|&old| {
                ElementSet(self.down[old])
                    .iter()
                    .map(|y| position[y])
                    .collect::<ElementSet>()
                    .bits()
            })
            .collect();
        let labels = order.iter().map(|&old| self.labels[old].clone()).collect();
        Self::from_down_sets_unchecked(labels, down)
    }

    /// Copy with new labels.
    pub fn with_labels(&self, labels: Vec<String>) -> Result<Poset, PosetError> {
        if labels.len() != self.len() {
            return Err(PosetError::LabelCount {
                expected: self.len(),
                got: labels.len(),
            });
        }
        check_labels(&labels)?;
        Ok(Poset {
            labels,
            down: self.down.clone(),
            up: self.up.clone(),
        })
    }

    /// Disjoint union; labels of `other` are suffixed with `'` on collision.
    pub fn disjoint_union(&self, other: &Poset) -> Result<Poset, PosetError> {
        let n = self.len();
        let mut labels = self.labels.clone();
        for l in &other.labels {
            labels.push(fresh_label(&labels, l));
        }
        check_labels(&labels)?;
        let mut down = self.down.clone();
        down.extend(other.down.iter().map(|&row| row << n));
        Ok(Self::from_down_sets_unchecked(labels, down))
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        canon::canonical_form(self).0
    }

    /// The isomorphic copy whose index order is the canonical labelling.
    pub fn canonical_form(&self) -> (CanonicalCode, Poset) {
        let (code, order) = canon::canonical_form(self);
        (code, self.reorder(&order))
    }

    /// Posets are homeomorphic as finite T0-spaces exactly when isomorphic.
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.len() == other.len()
            && self.covers().pairs.len() == other.covers().pairs.len()
            && self.canonical_code() == other.canonical_code()
    }

    /// `k`-fold non-Hausdorff suspension: each step adds two incomparable
    /// points above every existing point.
    pub fn nh_suspension(&self, k: usize) -> Poset {
        let mut labels = self.labels.clone();
        let mut down = self.down.clone();
        let base_height = self.height();
        for step in 0..k {
            let all = ElementSet::full(labels.len()).bits();
            let level = base_height + step + 1;
            for side in ["s", "n"] {
                let name = fresh_label(&labels, &format!("{side}{level}"));
                down.push(all | (1u64 << labels.len()));
                labels.push(name);
            }
        }
        assert!(
            labels.len() <= MAX_ELEMENTS,
            "suspension exceeds {MAX_ELEMENTS} points"
        );
        Self::from_down_sets_unchecked(labels, down)
    }

    /// Lengths (number of cover steps) of all maximal chains, as a bitmask.
    fn maximal_chain_lengths(&self) -> u64 {
        let mut lengths = vec![0u64; self.len()];
        for x in self.linear_extension() {
            let lower = self.lower_covers(x);
            lengths[x] = if lower.is_empty() {
                1
            } else {
                lower.iter().fold(0, |acc, y| acc | (lengths[y] << 1))
            };
        }
        self.maximal_elements()
            .iter()
            .fold(0, |acc, x| acc | lengths[x])
    }

    /// Every maximal chain has the same length.
    pub fn is_homogeneous(&self) -> bool {
        self.maximal_chain_lengths().count_ones() == 1
    }
}

fn fresh_label(existing: &[String], wanted: &str) -> String {
    let mut name = wanted.to_owned();
    while existing.contains(&name) {
        name.push('\'');
    }
    name
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers = self.covers();
        let pairs: Vec<String> = covers
            .pairs
            .iter()
            .map(|&(a, b)| format!("{}<{}", self.labels[a], self.labels[b]))
            .collect();
        f.debug_struct("Poset")
            .field("labels", &self.labels)
            .field("covers", &pairs)
            .finish()
    }
}
