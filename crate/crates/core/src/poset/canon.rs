//! Canonical labelling by colour refinement and individualization.
//!
//! The code of a poset is the order matrix of the relabelling that makes the
//! matrix lexicographically least among all leaves of the search tree. Every
//! step only looks at the order structure, so isomorphic posets reach the same
//! leaf set and the same code.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{default_labels, ElementSet, Poset};

/// Byte string identifying a poset up to isomorphism: the element count
/// followed by the order matrix of the canonical labelling, packed row-major
/// with the most significant bit first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.first().copied().unwrap_or(0) as usize
    }

    /// Rebuilds the canonical representative with labels `x1 .. xn`.
    pub fn decode(&self) -> Option<Poset> {
        let n = self.n();
        if n == 0 || self.0.len() != 1 + (n * n).div_ceil(8) {
            return None;
        }
        let bit = |k: usize| (self.0[1 + k / 8] >> (7 - k % 8)) & 1 == 1;
        let down = (0..n)
            .map(|j| {
                (0..n)
                    .filter(|&i| bit(i * n + j))
                    .collect::<ElementSet>()
                    .bits()
            })
            .collect();
        Poset::from_down_sets(default_labels(n), down).ok()
    }

    fn from_matrix(p: &Poset, order: &[usize]) -> Self {
        let n = order.len();
        let mut bytes = vec![0u8; 1 + (n * n).div_ceil(8)];
        bytes[0] = n as u8;
        for (i, &x) in order.iter().enumerate() {
            for (j, &y) in order.iter().enumerate() {
                if p.leq(x, y) {
                    let k = i * n + j;
                    bytes[1 + k / 8] |= 0x80 >> (k % 8);
                }
            }
        }
        CanonicalCode(bytes)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseCodeError;

impl fmt::Display for ParseCodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("canonical code must be an even-length hex string")
    }
}

impl std::error::Error for ParseCodeError {}

impl FromStr for CanonicalCode {
    type Err = ParseCodeError;

    fn from_str(s: &str) -> Result<Self, ParseCodeError> {
        if !s.len().is_multiple_of(2) || !s.is_ascii() {
            return Err(ParseCodeError);
        }
        (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16).map_err(|_| ParseCodeError))
            .collect::<Result<Vec<u8>, _>>()
            .map(CanonicalCode)
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Renumbers colours until the partition is stable. Colours are dense
/// `0..k` and their order only depends on the order structure.
fn refine(p: &Poset, colors: &mut [u32]) {
    let n = p.len();
    let mut classes = count_classes(colors);
    loop {
        let keys: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..n)
            .map(|x| {
                let mut below: Vec<u32> = p.hat_down_set(x).iter().map(|y| colors[y]).collect();
                let mut above: Vec<u32> = p.hat_up_set(x).iter().map(|y| colors[y]).collect();
                below.sort_unstable();
                above.sort_unstable();
                (colors[x], below, above)
            })
            .collect();
        let mut sorted: Vec<&(u32, Vec<u32>, Vec<u32>)> = keys.iter().collect();
        sorted.sort();
        sorted.dedup();
        for (x, key) in keys.iter().enumerate() {
            colors[x] = sorted.binary_search(&key).unwrap() as u32;
        }
        let now = sorted.len();
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn initial_colors(p: &Poset) -> Vec<u32> {
    let h = p.element_heights();
    let keys: Vec<(usize, usize, usize)> = (0..p.len())
        .map(|x| (h[x], p.down_set(x).len(), p.up_set(x).len()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap() as u32)
        .collect()
}

/// Incomparable points with the same strict neighbourhoods can be swapped by
/// an automorphism.
fn twins(p: &Poset, v: usize, w: usize) -> bool {
    p.hat_down_set(v) == p.hat_down_set(w) && p.hat_up_set(v) == p.hat_up_set(w)
}

struct Search<'a> {
    p: &'a Poset,
    best: Option<(CanonicalCode, Vec<usize>)>,
}

impl Search<'_> {
    fn visit(&mut self, colors: Vec<u32>) {
        let n = self.p.len();
        let mut cells: Vec<ElementSet> = vec![ElementSet::EMPTY; n];
        for (x, &c) in colors.iter().enumerate() {
            cells[c as usize].insert(x);
        }
        let Some(cell) = cells.iter().copied().find(|c| c.len() > 1) else {
            let mut order = vec![0usize; n];
            for (x, &c) in colors.iter().enumerate() {
                order[c as usize] = x;
            }
            let code = CanonicalCode::from_matrix(self.p, &order);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, order));
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for v in cell {
            if tried.iter().any(|&t| twins(self.p, t, v)) {
                continue;
            }
            tried.push(v);
            let mut next: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(x, &c)| 2 * c + u32::from(x != v))
                .collect();
            refine(self.p, &mut next);
            self.visit(next);
        }
    }
}

/// Canonical code and the labelling that realizes it (`order[k]` is the
/// element placed at position `k`).
pub(super) fn canonical_form(p: &Poset) -> (CanonicalCode, Vec<usize>) {
    let mut colors = initial_colors(p);
    refine(p, &mut colors);
    let mut search = Search { p, best: None };
    search.visit(colors);
    search.best.expect("search tree has at least one leaf")
}

#[cfg(test)]
mod tests {
    use super::super::CoverRelationList;
    use super::*;

    fn from(n: usize, pairs: &[(usize, usize)]) -> Poset {
        Poset::from_cover_relations(&CoverRelationList::new(n, pairs.to_vec())).unwrap()
    }

    #[test]
    fn relabelling_invariance() {
        let p = from(6, &[(0, 2), (1, 2), (1, 3), (2, 4), (3, 4), (3, 5)]);
        let code = p.canonical_code();
        for order in [[5, 4, 3, 2, 1, 0], [2, 0, 4, 1, 5, 3], [1, 3, 5, 0, 2, 4]] {
            assert_eq!(p.reorder(&order).canonical_code(), code);
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let n_shape = from(4, &[(0, 2), (1, 2), (1, 3)]);
        let fence = from(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]);
        let chain = Poset::chain(4);
        assert_ne!(n_shape.canonical_code(), fence.canonical_code());
        assert_ne!(chain.canonical_code(), fence.canonical_code());
        assert_ne!(Poset::antichain(4).canonical_code(), chain.canonical_code());
    }

    #[test]
    fn dual_of_chain_is_chain() {
        let c = Poset::chain(5);
        assert_eq!(c.dual().canonical_code(), c.canonical_code());
    }

    #[test]
    fn hex_roundtrip_and_decode() {
        let p = from(5, &[(0, 3), (1, 3), (1, 4), (2, 4)]);
        let code = p.canonical_code();
        let text = code.to_string();
        assert_eq!(text.parse::<CanonicalCode>().unwrap(), code);
        let q = code.decode().unwrap();
        assert!(q.is_isomorphic(&p));
        assert_eq!(code.n(), 5);
        assert!("abc".parse::<CanonicalCode>().is_err());
    }

    #[test]
    fn canonical_form_realizes_code() {
        let p = from(5, &[(0, 3), (1, 3), (1, 4), (2, 4)]);
        let (code, q) = p.canonical_form();
        let identity: Vec<usize> = (0..q.len()).collect();
        assert_eq!(CanonicalCode::from_matrix(&q, &identity), code);
    }

    #[test]
    fn large_symmetric_inputs_finish() {
        let a = Poset::antichain(64);
        assert_eq!(a.canonical_code().n(), 64);
        let s = Poset::sphere_model(20);
        assert_eq!(s.len(), 42);
        assert_eq!(
            s.reorder(&(0..42).rev().collect::<Vec<_>>())
                .canonical_code(),
            s.canonical_code()
        );
    }
}
