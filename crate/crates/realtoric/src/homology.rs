//! Augmented chain complexes over ℚ and reduced Betti numbers.
//!
//! The chain complex of a nonvoid complex always includes the empty face
//! as the basis of C_{-1}, so degree 0 homology counts components minus
//! one and degree -1 is nontrivial only when there are no vertices. The
//! void complex gets reduced Betti {-1: 1} by convention: it arises as
//! the support of an empty row selection, where the formula this library
//! implements needs the term to contribute one unit in degree -1.

use std::collections::BTreeMap;

use crate::complex::SimplicialComplex;
use crate::linalg::{rank_q, Mat};

/// Boundary operators of a simplicial complex, indexed by cardinality:
/// `boundaries[k]` maps chains on k-vertex faces to chains on (k-1)-vertex
/// faces, with `boundaries[0]` the empty map out of the ∅ basis.
pub struct ChainComplexQ {
    bases: Vec<Vec<Vec<u32>>>,
    boundaries: Vec<Mat<i64>>,
}

impl ChainComplexQ {
    /// Basis of q-dimensional chains (faces with q+1 vertices), in
    /// lexicographic order.
    pub fn basis(&self, q: i32) -> &[Vec<u32>] {
        static EMPTY: &[Vec<u32>] = &[];
        usize::try_from(q + 1)
            .ok()
            .and_then(|k| self.bases.get(k))
            .map_or(EMPTY, Vec::as_slice)
    }

    /// Boundary matrix from q-chains to (q-1)-chains; `q = 0` is the
    /// augmentation onto ∅.
    pub fn boundary(&self, q: i32) -> Option<&Mat<i64>> {
        usize::try_from(q + 1).ok().and_then(|k| self.boundaries.get(k))
    }

    /// Dimension of the top chain group, or `None` for the void complex.
    pub fn top_dim(&self) -> Option<i32> {
        (!self.bases.is_empty()).then(|| self.bases.len() as i32 - 2)
    }

    /// Exact check that consecutive boundary maps compose to zero.
    pub fn boundary_square_is_zero(&self) -> bool {
        for k in 1..self.boundaries.len() {
            let (lo, hi) = (&self.boundaries[k - 1], &self.boundaries[k]);
            for i in 0..lo.rows() {
                for j in 0..hi.cols() {
                    let entry: i64 = (0..hi.rows())
                        .map(|t| lo.get(i, t) * hi.get(t, j))
                        .sum();
                    if entry != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn reduced_betti(&self) -> ReducedBetti {
        if self.bases.is_empty() {
            let mut tilde = BTreeMap::new();
            tilde.insert(-1, 1u64);
            return ReducedBetti { tilde };
        }
        let ranks: Vec<usize> = self.boundaries.iter().map(rank_q).collect();
        let mut tilde = BTreeMap::new();
        for k in 0..self.bases.len() {
            let cycles = self.bases[k].len() - ranks[k];
            let boundaries = if k + 1 < self.bases.len() { ranks[k + 1] } else { 0 };
            let b = cycles - boundaries;
            if b > 0 {
                tilde.insert(k as i32 - 1, b as u64);
            }
        }
        ReducedBetti { tilde }
    }
}

/// Builds the augmented chain complex: bases are the faces grouped by
/// cardinality in lexicographic order; deleting the j-th vertex of a face
/// contributes (-1)^j, and every vertex maps to 1·∅.
pub fn build_chain_complex(k: &SimplicialComplex) -> ChainComplexQ {
    let bases = k.all_faces();
    let mut boundaries = Vec::with_capacity(bases.len());
    for card in 0..bases.len() {
        let rows = if card == 0 { 0 } else { bases[card - 1].len() };
        let mut matrix = Mat::zeros(rows, bases[card].len());
        if card > 0 {
            for (col, face) in bases[card].iter().enumerate() {
                for j in 0..face.len() {
                    let mut sub = face.clone();
                    sub.remove(j);
                    let row = bases[card - 1]
                        .binary_search(&sub)
                        .expect("subface of a face is a face");
                    matrix.set(row, col, if j % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        boundaries.push(matrix);
    }
    let cc = ChainComplexQ { bases, boundaries };
    debug_assert!(cc.boundary_square_is_zero());
    cc
}

/// Reduced rational Betti numbers as a sparse degree table; only nonzero
/// entries are stored, so tables compare canonically.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedBetti {
    tilde: BTreeMap<i32, u64>,
}

impl ReducedBetti {
    pub fn get(&self, q: i32) -> u64 {
        self.tilde.get(&q).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<i32, u64> {
        &self.tilde
    }

    pub fn is_zero(&self) -> bool {
        self.tilde.is_empty()
    }

    /// The only nonzero degree, if the table is concentrated in one.
    pub fn concentrated_degree(&self) -> Option<i32> {
        (self.tilde.len() == 1).then(|| *self.tilde.keys().next().unwrap())
    }

    /// Alternating sum Σ_{q≥0} (-1)^q b̃_q, ignoring degree -1.
    pub fn alternating_sum(&self) -> i64 {
        self.tilde
            .iter()
            .filter(|(&q, _)| q >= 0)
            .map(|(&q, &b)| if q % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

pub fn reduced_betti(k: &SimplicialComplex) -> ReducedBetti {
    build_chain_complex(k).reduced_betti()
}

pub fn reduced_betti_in_degree(k: &SimplicialComplex, q: i32) -> u64 {
    reduced_betti(k).get(q)
}
