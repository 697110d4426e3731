//! Order complexes and their integral homology.

mod homology;
mod matrix;

pub use homology::{euler_characteristic, homology, rational_betti, HomologyProfile};
pub use matrix::{f2_rank, rational_rank, smith_normal_form, IntegerMatrix, SmithNormalForm};

use std::collections::HashMap;

use crate::poset::Poset;

/// A simplicial complex on vertices `0..vertex_count`. `simplices[d]` holds
/// the `d`-simplices as strictly increasing vertex tuples in lexicographic
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    simplices: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// Downward closure of the given faces. Vertices not used by any face are
    /// still 0-simplices.
    pub fn from_facets(vertex_count: usize, facets: &[Vec<usize>]) -> Self {
        let mut by_dim: Vec<Vec<Vec<usize>>> = vec![(0..vertex_count).map(|v| vec![v]).collect()];
        for facet in facets {
            let mut f = facet.clone();
            f.sort_unstable();
            f.dedup();
            assert!(
                f.last().is_none_or(|&v| v < vertex_count),
                "facet vertex out of range"
            );
            let k = f.len();
            for mask in 1u64..(1u64 << k) {
                let face: Vec<usize> = (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| f[i])
                    .collect();
                let d = face.len() - 1;
                if by_dim.len() <= d {
                    by_dim.resize(d + 1, Vec::new());
                }
                by_dim[d].push(face);
            }
        }
        for list in &mut by_dim {
            list.sort();
            list.dedup();
        }
        SimplicialComplex {
            vertex_count,
            simplices: by_dim,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Largest simplex dimension; 0 for a complex that only has vertices.
    pub fn dimension(&self) -> usize {
        self.simplices.len().saturating_sub(1)
    }

    pub fn simplices(&self, d: usize) -> &[Vec<usize>] {
        self.simplices.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    /// Connectivity of the 1-skeleton.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = self.vertex_count;
        for e in self.simplices(1) {
            let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components == 1
    }

    /// Position of every simplex in its dimension list.
    pub(crate) fn index(&self, d: usize) -> HashMap<&[usize], usize> {
        self.simplices(d)
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect()
    }

    /// The complex restricted to simplices of dimension at most `d`.
    pub fn skeleton(&self, d: usize) -> SimplicialComplex {
        SimplicialComplex {
            vertex_count: self.vertex_count,
            simplices: self.simplices.iter().take(d + 1).cloned().collect(),
        }
    }
}

/// All nonempty chains of `p`, on the element indices of `p`.
pub fn order_complex(p: &Poset) -> SimplicialComplex {
    let n = p.len();
    let mut by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut chain: Vec<usize> = Vec::new();
    fn extend(p: &Poset, chain: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        let d = chain.len() - 1;
        if out.len() <= d {
            out.resize(d + 1, Vec::new());
        }
        let mut simplex = chain.clone();
        simplex.sort_unstable();
        out[d].push(simplex);
        let top = *chain.last().unwrap();
        for y in p.hat_up_set(top) {
            chain.push(y);
            extend(p, chain, out);
            chain.pop();
        }
    }
    for x in 0..n {
        chain.push(x);
        extend(p, &mut chain, &mut by_dim);
        chain.pop();
    }
    for list in &mut by_dim {
        list.sort();
    }
    SimplicialComplex {
        vertex_count: n,
        simplices: by_dim,
    }
}

/// `d_i : C_i -> C_{i-1}` for `i = 1 ..= dim`; entry `(face, simplex)` is
/// `(-1)^j` when the face omits the `j`-th vertex.
pub fn boundary_matrices(k: &SimplicialComplex) -> Vec<IntegerMatrix> {
    (1..=k.dimension()).map(|i| boundary_matrix(k, i)).collect()
}

pub fn boundary_matrix(k: &SimplicialComplex, i: usize) -> IntegerMatrix {
    let faces = k.index(i - 1);
    let cells = k.simplices(i);
    let mut m = IntegerMatrix::zeros(k.simplices(i - 1).len(), cells.len());
    let mut face = Vec::with_capacity(i);
    for (c, s) in cells.iter().enumerate() {
        for j in 0..s.len() {
            face.clear();
            face.extend(
                s.iter()
                    .enumerate()
                    .filter(|&(t, _)| t != j)
                    .map(|(_, &v)| v),
            );
            let r = faces[face.as_slice()];
            m.set(r, c, if j % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}
