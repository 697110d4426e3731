use serde::{Deserialize, Serialize};

use super::{boundary_matrices, f2_rank, rational_rank, smith_normal_form, SimplicialComplex};

/// Unreduced integral homology of a complex together with the data it was
/// computed from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub f_vector: Vec<usize>,
    pub betti: Vec<usize>,
    /// `torsion[d]` lists the invariant factors above one of `d_{d+1}`.
    pub torsion: Vec<Vec<u64>>,
    pub euler: i64,
    /// `f2_ranks[i]` is the rank of `d_{i+1}` over the two-element field.
    pub f2_ranks: Vec<usize>,
}

impl HomologyProfile {
    pub fn has_torsion(&self) -> bool {
        self.torsion.iter().any(|t| !t.is_empty())
    }

    pub fn betti_at(&self, d: usize) -> usize {
        self.betti.get(d).copied().unwrap_or(0)
    }

    /// Reduced Betti numbers: `beta_0` drops by one for a nonempty complex.
    pub fn reduced_betti(&self) -> Vec<usize> {
        let mut b = self.betti.clone();
        if let Some(b0) = b.first_mut() {
            *b0 = b0.saturating_sub(1);
        }
        b
    }

    /// Betti numbers with mod-2 coefficients, from `f2_ranks`.
    pub fn f2_betti(&self) -> Vec<usize> {
        betti_from_ranks(&self.f_vector, &self.f2_ranks)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("homology JSON is serializable")
    }
}

fn betti_from_ranks(f: &[usize], ranks: &[usize]) -> Vec<usize> {
    let rank = |i: usize| {
        if i == 0 {
            0
        } else {
            ranks.get(i - 1).copied().unwrap_or(0)
        }
    };
    (0..f.len()).map(|d| f[d] - rank(d) - rank(d + 1)).collect()
}

pub fn euler_characteristic(k: &SimplicialComplex) -> i64 {
    k.f_vector()
        .iter()
        .enumerate()
        .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

/// Betti numbers from integral Smith normal forms, torsion from their
/// invariant factors, and mod-2 ranks by separate elimination.
pub fn homology(k: &SimplicialComplex) -> HomologyProfile {
    let f_vector = k.f_vector();
    let ds = boundary_matrices(k);
    let snf: Vec<_> = ds.iter().map(smith_normal_form).collect();
    let ranks: Vec<usize> = snf.iter().map(|s| s.rank).collect();
    let mut torsion: Vec<Vec<u64>> = snf.iter().map(|s| s.torsion()).collect();
    torsion.push(Vec::new());
    HomologyProfile {
        betti: betti_from_ranks(&f_vector, &ranks),
        torsion,
        euler: euler_characteristic(k),
        f2_ranks: ds.iter().map(f2_rank).collect(),
        f_vector,
    }
}

/// Betti numbers over the rationals via fraction-free elimination.
pub fn rational_betti(k: &SimplicialComplex) -> Vec<usize> {
    let ranks: Vec<usize> = boundary_matrices(k).iter().map(rational_rank).collect();
    betti_from_ranks(&k.f_vector(), &ranks)
}
