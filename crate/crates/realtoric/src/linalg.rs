//! Exact integer matrices and fraction-free rank computation.
//!
//! Ranks over the rationals are computed with Bareiss elimination, which
//! keeps every intermediate entry an integer (a minor of the input, up to
//! sign). The i64 path uses checked arithmetic and reruns with [`BigInt`]
//! entries if anything overflows, so results are exact for all inputs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed, Zero};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Mat<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols));
        let nrows = rows.len();
        Mat {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = value;
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Mat<T>
    where
        T: Clone,
    {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Mat {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }
}

impl<T: Zero + Clone> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }
}

/// Scalars usable as Bareiss elimination entries. Checked operations let
/// the i64 instantiation signal overflow; `BigInt` never does.
pub trait BareissEntry: Integer + Signed + CheckedMul + CheckedSub + Clone {}
impl<T: Integer + Signed + CheckedMul + CheckedSub + Clone> BareissEntry for T {}

/// Rank by fraction-free elimination. Returns `None` if a checked
/// multiply or subtract overflows; a `BigInt` instantiation never can.
///
/// Pivot rows are chosen by first-nonzero scan, so the elimination is
/// deterministic. Each two-term update divides exactly by the previous
/// pivot (Sylvester's identity); the quotient is asserted exact.
pub fn bareiss_rank<T: BareissEntry>(m: &Mat<T>) -> Option<usize> {
    let mut a: Vec<Vec<T>> = (0..m.rows)
        .map(|i| (0..m.cols).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut rank = 0;
    let mut prev = T::one();
    for col in 0..m.cols {
        let Some(pivot) = (rank..m.rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for i in rank + 1..m.rows {
            for j in col + 1..m.cols {
                let lhs = a[rank][col].checked_mul(&a[i][j])?;
                let rhs = a[i][col].checked_mul(&a[rank][j])?;
                let num = lhs.checked_sub(&rhs)?;
                let (q, r) = num.div_rem(&prev);
                assert!(r.is_zero(), "inexact division in fraction-free elimination");
                a[i][j] = q;
            }
            a[i][col] = T::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    Some(rank)
}

/// Rank of an integer matrix over the rationals. Runs the i64 fast path
/// first and falls back to arbitrary precision on overflow.
pub fn rank_q(m: &Mat<i64>) -> usize {
    if let Some(rank) = bareiss_rank(m) {
        return rank;
    }
    bareiss_rank(&m.map(|&x| BigInt::from(x))).expect("BigInt arithmetic does not overflow")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;
    use proptest::prelude::*;

    #[test]
    fn rank_identity() {
        let m = Mat::from_rows(vec![vec![1i64, 0], vec![0, 1]]);
        assert_eq!(rank_q(&m), 2);
    }

    #[test]
    fn rank_repeated_row() {
        let m = Mat::from_rows(vec![vec![1i64, 1], vec![1, 1]]);
        assert_eq!(rank_q(&m), 1);
    }

    #[test]
    fn rank_zero_and_empty() {
        assert_eq!(rank_q(&Mat::zeros(3, 4)), 0);
        assert_eq!(rank_q(&Mat::zeros(0, 0)), 0);
        assert_eq!(rank_q(&Mat::zeros(0, 5)), 0);
        assert_eq!(rank_q(&Mat::zeros(5, 0)), 0);
    }

    #[test]
    fn rank_edge_boundary_of_square() {
        // Vertex-by-edge incidence of a 4-cycle, oriented i -> i+1.
        let m = Mat::from_rows(vec![
            vec![-1i64, 0, 0, 1],
            vec![1, -1, 0, 0],
            vec![0, 1, -1, 0],
            vec![0, 0, 1, -1],
        ]);
        assert_eq!(rank_q(&m), 3);
    }

    #[test]
    fn rank_needs_column_skip() {
        let m = Mat::from_rows(vec![vec![0i64, 2, 3], vec![0, 4, 6], vec![0, 0, 5]]);
        assert_eq!(rank_q(&m), 2);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        // Entries near 2^32 make the stage-two products exceed i64.
        let b = 1i64 << 32;
        let m = Mat::from_rows(vec![
            vec![b + 1, b + 2, b + 3],
            vec![b + 5, b + 7, b + 11],
            vec![b + 13, b + 17, b + 19],
        ]);
        assert_eq!(bareiss_rank(&m), None);
        assert_eq!(rank_q(&m), 3);
    }

    /// Plain Gaussian elimination over the rationals, written directly
    /// against the definition as a cross-check on the Bareiss path.
    #[allow(clippy::needless_range_loop)]
    fn rational_rank(m: &Mat<i64>) -> usize {
        let mut a: Vec<Vec<Ratio<i64>>> = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| Ratio::from_integer(*m.get(i, j))).collect())
            .collect();
        let mut rank = 0;
        for col in 0..m.cols() {
            let Some(p) = (rank..a.len()).find(|&i| a[i][col] != Ratio::from_integer(0)) else {
                continue;
            };
            a.swap(rank, p);
            let inv = a[rank][col].recip();
            for j in col..m.cols() {
                a[rank][j] *= inv;
            }
            for i in 0..a.len() {
                if i != rank && a[i][col] != Ratio::from_integer(0) {
                    let factor = a[i][col];
                    for j in col..m.cols() {
                        let sub = factor * a[rank][j];
                        a[i][j] -= sub;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn small_matrix() -> impl Strategy<Value = Mat<i64>> {
        (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
            prop::collection::vec(-2i64..=2, r * c).prop_map(move |data| Mat::new(r, c, data))
        })
    }

    proptest! {
        #[test]
        fn matches_rational_elimination(m in small_matrix()) {
            prop_assert_eq!(rank_q(&m), rational_rank(&m));
        }

        #[test]
        fn rank_equals_transpose_rank(m in small_matrix()) {
            prop_assert_eq!(rank_q(&m), rank_q(&m.transpose()));
        }

        #[test]
        fn rational_rank_dominates_mod2_rank(m in small_matrix()) {
            let mut bits = Vec::with_capacity(m.rows() * m.cols());
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    bits.push(m.get(i, j).rem_euclid(2) as u8);
                }
            }
            let g = crate::gf2::BitMatrix::from_bits(m.rows(), m.cols(), &bits);
            prop_assert!(rank_q(&m) >= crate::gf2::rank_gf2(&g));
        }
    }
}
