//! Edge-path group presentations of simplicial complexes and a budgeted
//! Tietze simplifier.
//!
//! Words are sequences of nonzero `i32`: `g + 1` stands for generator `g` and
//! `-(g + 1)` for its inverse.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::complex::{rational_rank, IntegerMatrix, SimplicialComplex};

pub const DEFAULT_STEP_BUDGET: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("complex is not connected")]
    Disconnected,
    #[error("basepoint {basepoint} is not a vertex of a complex with {vertices} vertices")]
    InvalidBasepoint { basepoint: usize, vertices: usize },
}

pub type Word = Vec<i32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<Word>,
    /// Spanning-tree edges `(u, v)`, `u < v`, in discovery order.
    pub tree_edges: Vec<(usize, usize)>,
    /// The edge each generator came from; empty for hand-built presentations
    /// and after simplification.
    pub generator_edges: Vec<(usize, usize)>,
}

impl GroupPresentation {
    pub fn new(generators: usize, relators: Vec<Word>) -> Self {
        GroupPresentation {
            generators,
            relators,
            tree_edges: Vec::new(),
            generator_edges: Vec::new(),
        }
    }

    /// Rank of the abelianization: generators minus the rank of the
    /// exponent-sum matrix.
    pub fn abelianization_rank(&self) -> usize {
        let mut m = IntegerMatrix::zeros(self.relators.len(), self.generators);
        for (r, word) in self.relators.iter().enumerate() {
            for &letter in word {
                let g = letter.unsigned_abs() as usize - 1;
                m.set(r, g, m.get(r, g) + letter.signum() as i64);
            }
        }
        self.generators - rational_rank(&m)
    }

    pub fn is_valid(&self) -> bool {
        self.relators
            .iter()
            .flatten()
            .all(|&l| l != 0 && (l.unsigned_abs() as usize) <= self.generators)
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &[i32]) -> fmt::Result {
    if w.is_empty() {
        return f.write_str("1");
    }
    for (i, &l) in w.iter().enumerate() {
        if i > 0 {
            f.write_str("*")?;
        }
        write!(f, "g{}", l.unsigned_abs())?;
        if l < 0 {
            f.write_str("^-1")?;
        }
    }
    Ok(())
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟨")?;
        let gens: Vec<String> = (1..=self.generators).map(|g| format!("g{g}")).collect();
        f.write_str(&gens.join(","))?;
        f.write_str(" | ")?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write_word(f, r)?;
        }
        f.write_str("⟩")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplificationStatus {
    FreeOfRank(usize),
    Trivial,
    Inconclusive(GroupPresentation),
}

impl SimplificationStatus {
    /// Certified free rank, with the trivial group as rank zero.
    pub fn free_rank(&self) -> Option<usize> {
        match self {
            SimplificationStatus::FreeOfRank(k) => Some(*k),
            SimplificationStatus::Trivial => Some(0),
            SimplificationStatus::Inconclusive(_) => None,
        }
    }
}

impl fmt::Display for SimplificationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimplificationStatus::FreeOfRank(k) => write!(f, "free of rank {k}"),
            SimplificationStatus::Trivial => f.write_str("trivial"),
            SimplificationStatus::Inconclusive(g) => write!(f, "inconclusive {g}"),
        }
    }
}

/// Edge-path group of the 2-skeleton based at `basepoint`. Generators are the
/// edges outside a breadth-first spanning tree; each triangle `u < v < w`
/// contributes `[uv][vw][uw]^-1` with tree edges deleted.
pub fn presentation(
    k: &SimplicialComplex,
    basepoint: usize,
) -> Result<GroupPresentation, GroupError> {
    let nv = k.vertex_count();
    if basepoint >= nv {
        return Err(GroupError::InvalidBasepoint {
            basepoint,
            vertices: nv,
        });
    }
    if !k.is_connected() {
        return Err(GroupError::Disconnected);
    }
    let edges = k.simplices(1);
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for e in edges {
        adjacency[e[0]].push(e[1]);
        adjacency[e[1]].push(e[0]);
    }
    for a in &mut adjacency {
        a.sort_unstable();
    }
    let mut seen = vec![false; nv];
    let mut tree_edges = Vec::new();
    let mut tree: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut queue = VecDeque::from([basepoint]);
    seen[basepoint] = true;
    while let Some(u) = queue.pop_front() {
        for &v in &adjacency[u] {
            if !seen[v] {
                seen[v] = true;
                let e = (u.min(v), u.max(v));
                tree.insert(e);
                tree_edges.push(e);
                queue.push_back(v);
            }
        }
    }
    let mut generator_of = std::collections::HashMap::new();
    let mut generator_edges = Vec::new();
    for e in edges {
        let pair = (e[0], e[1]);
        if !tree.contains(&pair) {
            generator_of.insert(pair, generator_edges.len() as i32 + 1);
            generator_edges.push(pair);
        }
    }
    let letter = |a: usize, b: usize| generator_of.get(&(a, b)).copied();
    let relators = k
        .simplices(2)
        .iter()
        .map(|t| {
            let (u, v, w) = (t[0], t[1], t[2]);
            [letter(u, v), letter(v, w), letter(u, w).map(|g| -g)]
                .into_iter()
                .flatten()
                .collect()
        })
        .collect();
    Ok(GroupPresentation {
        generators: generator_edges.len(),
        relators,
        tree_edges,
        generator_edges,
    })
}

fn free_reduce(w: &mut Word) {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w.iter() {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    *w = out;
}

fn cyclic_reduce(w: &mut Word) {
    free_reduce(w);
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == -w[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    *w = w[lo..hi].to_vec();
}

fn inverse(w: &[i32]) -> Word {
    w.iter().rev().map(|&l| -l).collect()
}

/// Least rotation of the word or its inverse; shared by all cyclic
/// conjugates of a relator and of its inverse.
fn cyclic_class(w: &[i32]) -> Word {
    let mut best: Option<Word> = None;
    for base in [w.to_vec(), inverse(w)] {
        for r in 0..base.len().max(1) {
            let mut rot = base[r..].to_vec();
            rot.extend_from_slice(&base[..r]);
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

fn normalize(relators: &mut Vec<Word>) {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mut r in relators.drain(..) {
        cyclic_reduce(&mut r);
        if r.is_empty() {
            continue;
        }
        if seen.insert(cyclic_class(&r)) {
            out.push(r);
        }
    }
    *relators = out;
}

/// A relator and a generator occurring exactly once in it, preferring the
/// shortest relator and then the lowest generator.
fn find_isolated(relators: &[Word], generators: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for (ri, r) in relators.iter().enumerate() {
        if best.is_some_and(|(len, _, _)| r.len() >= len) {
            continue;
        }
        let mut counts = vec![0usize; generators];
        for &l in r {
            counts[l.unsigned_abs() as usize - 1] += 1;
        }
        if let Some(g) = counts.iter().position(|&c| c == 1) {
            best = Some((r.len(), ri, g));
        }
    }
    best.map(|(_, ri, g)| (ri, g))
}

/// Applies free and cyclic reduction, duplicate and conjugate removal, and
/// elimination of generators that occur once in some relator, until no
/// rule applies or `step_budget` eliminations have been spent.
pub fn tietze_simplify(g: &GroupPresentation, step_budget: usize) -> SimplificationStatus {
    let mut generators = g.generators;
    let mut relators = g.relators.clone();
    let mut steps = 0;
    loop {
        normalize(&mut relators);
        let Some((ri, x)) = find_isolated(&relators, generators) else {
            break;
        };
        if steps >= step_budget {
            break;
        }
        steps += 1;
        let r = relators.remove(ri);
        let pos = r
            .iter()
            .position(|&l| l.unsigned_abs() as usize == x + 1)
            .unwrap();
        let sign = r[pos].signum();
        // r = A x^s B, so x^s = A^-1 B^-1
        let mut value: Word = inverse(&r[..pos]);
        value.extend(inverse(&r[pos + 1..]));
        if sign < 0 {
            value = inverse(&value);
        }
        let value_inv = inverse(&value);
        let target = (x + 1) as i32;
        let rename = |l: i32| if l.abs() > target { l - l.signum() } else { l };
        for w in &mut relators {
            let mut out = Vec::with_capacity(w.len());
            for &l in w.iter() {
                if l == target {
                    out.extend(value.iter().copied().map(rename));
                } else if l == -target {
                    out.extend(value_inv.iter().copied().map(rename));
                } else {
                    out.push(rename(l));
                }
            }
            free_reduce(&mut out);
            *w = out;
        }
        generators -= 1;
    }
    if relators.is_empty() {
        if generators == 0 {
            SimplificationStatus::Trivial
        } else {
            SimplificationStatus::FreeOfRank(generators)
        }
    } else {
        SimplificationStatus::Inconclusive(GroupPresentation::new(generators, relators))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::order_complex;
    use crate::poset::Poset;

    #[test]
    fn one_relator_trivial() {
        let g = GroupPresentation::new(1, vec![vec![1]]);
        assert_eq!(tietze_simplify(&g, 10), SimplificationStatus::Trivial);
    }

    #[test]
    fn free_without_relators() {
        let g = GroupPresentation::new(2, vec![]);
        assert_eq!(tietze_simplify(&g, 10), SimplificationStatus::FreeOfRank(2));
        assert_eq!(g.abelianization_rank(), 2);
    }

    #[test]
    fn commutator_is_inconclusive() {
        let g = GroupPresentation::new(2, vec![vec![1, 2, -1, -2]]);
        let s = tietze_simplify(&g, 100);
        assert!(matches!(s, SimplificationStatus::Inconclusive(_)));
        assert_eq!(s.free_rank(), None);
        assert_eq!(g.abelianization_rank(), 2);
    }

    #[test]
    fn cyclic_group_not_free() {
        let g = GroupPresentation::new(1, vec![vec![1, 1]]);
        assert!(matches!(
            tietze_simplify(&g, 100),
            SimplificationStatus::Inconclusive(_)
        ));
        assert_eq!(g.abelianization_rank(), 0);
    }

    #[test]
    fn substitution_chain() {
        // a b = 1, b c^-1 = 1 leaves one free generator
        let g = GroupPresentation::new(3, vec![vec![1, 2], vec![2, -3]]);
        assert_eq!(
            tietze_simplify(&g, 100),
            SimplificationStatus::FreeOfRank(1)
        );
    }

    #[test]
    fn budget_exhaustion() {
        let g = GroupPresentation::new(3, vec![vec![1, 2], vec![2, -3]]);
        assert!(matches!(
            tietze_simplify(&g, 1),
            SimplificationStatus::Inconclusive(_)
        ));
    }

    #[test]
    fn duplicate_conjugates_removed() {
        // b a^-1 is a conjugate of the inverse of a b^-1
        let g = GroupPresentation::new(2, vec![vec![1, -2], vec![2, -1], vec![-2, 1]]);
        assert_eq!(
            tietze_simplify(&g, 100),
            SimplificationStatus::FreeOfRank(1)
        );
    }

    #[test]
    fn triangle_presentation() {
        let k = SimplicialComplex::from_facets(3, &[vec![0, 1, 2]]);
        let g = presentation(&k, 0).unwrap();
        assert_eq!(g.generators, 1);
        assert_eq!(g.relators, [vec![1]]);
        assert_eq!(tietze_simplify(&g, 10), SimplificationStatus::Trivial);
    }

    #[test]
    fn circle_presentation() {
        let k = order_complex(&Poset::sphere_model(1));
        let g = presentation(&k, 0).unwrap();
        assert_eq!(g.generators, 1);
        assert!(g.relators.is_empty());
        assert_eq!(g.tree_edges.len(), 3);
        assert_eq!(tietze_simplify(&g, 10), SimplificationStatus::FreeOfRank(1));
        assert_eq!(g.to_string(), "⟨g1 | ⟩");
    }

    #[test]
    fn sphere_is_simply_connected() {
        let k = order_complex(&Poset::sphere_model(2));
        for b in 0..k.vertex_count() {
            let g = presentation(&k, b).unwrap();
            assert!(g.is_valid());
            assert!(g.relators.iter().all(|r| r.len() <= 3));
            assert_eq!(
                tietze_simplify(&g, DEFAULT_STEP_BUDGET),
                SimplificationStatus::Trivial
            );
        }
    }

    #[test]
    fn errors() {
        let k = order_complex(&Poset::antichain(2));
        assert_eq!(presentation(&k, 0), Err(GroupError::Disconnected));
        let k = order_complex(&Poset::chain(2));
        assert!(matches!(
            presentation(&k, 5),
            Err(GroupError::InvalidBasepoint { .. })
        ));
    }

    #[test]
    fn display_form() {
        let g = GroupPresentation::new(2, vec![vec![1, -2], vec![]]);
        assert_eq!(g.to_string(), "⟨g1,g2 | g1*g2^-1, 1⟩");
    }
}
