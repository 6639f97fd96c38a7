//! Small covers: a simplicial complex paired with a GF(2) characteristic
//! matrix, validated by the nonsingular-minor condition at every facet.
//!
//! Rational Betti numbers come from summing, over every subset S of the
//! matrix rows, the reduced homology of the subcomplex induced on the
//! support of the mod-2 row sum χ_S, shifted up one degree. Orientability
//! is witnessed by a row combination with full support.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::complex::{HVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::gf2::{is_nonsingular_gf2, BitMatrix, BitVec};
use crate::homology::{reduced_betti, ReducedBetti};

/// Largest supported row count; subsets of rows are enumerated as u64
/// bitmasks and the Betti computation is exponential in n anyway.
pub const MAX_RANK: usize = 62;

/// An n-row GF(2) matrix stored column-wise as row bitmasks (bit i-1 of
/// `columns[j]` is the entry of row i in column j).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharMatrix {
    n: usize,
    columns: Vec<u64>,
}

impl CharMatrix {
    /// Builds from integer column vectors, reducing entries mod 2.
    pub fn from_int_columns(n: usize, columns: &[Vec<i64>]) -> Result<Self> {
        if n == 0 || n > MAX_RANK || columns.len() < n {
            return Err(Error::BadCharMatrixShape {
                n,
                m: columns.len(),
                max: MAX_RANK,
            });
        }
        let mut packed = Vec::with_capacity(columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != n {
                return Err(Error::ColumnLengthMismatch {
                    col: j,
                    got: col.len(),
                    expected: n,
                });
            }
            let mask = col
                .iter()
                .enumerate()
                .filter(|(_, &e)| e.rem_euclid(2) == 1)
                .fold(0u64, |acc, (i, _)| acc | 1 << i);
            if mask == 0 {
                return Err(Error::ZeroColumn { col: j });
            }
            packed.push(mask);
        }
        Ok(CharMatrix {
            n,
            columns: packed,
        })
    }

    /// Builds from columns already packed as row bitmasks.
    pub fn from_packed_columns(n: usize, columns: Vec<u64>) -> Result<Self> {
        if n == 0 || n > MAX_RANK || columns.len() < n {
            return Err(Error::BadCharMatrixShape {
                n,
                m: columns.len(),
                max: MAX_RANK,
            });
        }
        if let Some(j) = columns.iter().position(|&c| c == 0 || c >> n != 0) {
            return Err(Error::ZeroColumn { col: j });
        }
        Ok(CharMatrix { n, columns })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> u64 {
        self.columns[j]
    }

    pub fn entry(&self, row: usize, col: usize) -> bool {
        self.columns[col] >> row & 1 == 1
    }

    /// Column vectors as 0/1 integers, row index ascending.
    pub fn int_columns(&self) -> Vec<Vec<i64>> {
        self.columns
            .iter()
            .map(|&c| (0..self.n).map(|i| (c >> i & 1) as i64).collect())
            .collect()
    }

    /// Mod-2 sum of the rows selected by `s` (bit i-1 picks row i), as a
    /// GF(2) vector of length m.
    pub fn row_sum(&self, s: u64) -> BitVec {
        BitVec::from_bits(
            self.columns
                .iter()
                .map(|&col| (col & s).count_ones() % 2 == 1),
        )
    }

    /// The minor on the given column indices.
    pub fn minor(&self, cols: &[u32]) -> BitMatrix {
        let mut minor = BitMatrix::zeros(self.n, cols.len());
        for (jj, &j) in cols.iter().enumerate() {
            for i in 0..self.n {
                if self.entry(i, j as usize) {
                    minor.set(i, jj, true);
                }
            }
        }
        minor
    }
}

/// A complex and characteristic matrix that passed validation together.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmallCover {
    k: SimplicialComplex,
    chi: CharMatrix,
}

/// Checks the pair: matching sizes, K pure of dimension n-1, and an
/// invertible minor at every maximal face.
pub fn validate(k: SimplicialComplex, chi: CharMatrix) -> Result<SmallCover> {
    if chi.m() != k.vertex_count() {
        return Err(Error::FacetCountMismatch {
            cols: chi.m(),
            m: k.vertex_count(),
        });
    }
    if k.is_void() {
        return Err(Error::EmptyComplex);
    }
    let n = chi.n();
    if !k.is_pure(n as i32 - 1) {
        return Err(Error::NotPure {
            expected: n as i32 - 1,
        });
    }
    for face in k.maximal_faces() {
        let nonsingular = is_nonsingular_gf2(&chi.minor(face))?;
        if !nonsingular {
            let labels: Vec<&str> = face.iter().map(|&v| k.label(v)).collect();
            return Err(Error::SingularMinor {
                face: face.clone(),
                labels: labels.join(","),
            });
        }
    }
    Ok(SmallCover { k, chi })
}

impl SmallCover {
    pub fn complex(&self) -> &SimplicialComplex {
        &self.k
    }

    pub fn chi(&self) -> &CharMatrix {
        &self.chi
    }

    pub fn n(&self) -> usize {
        self.chi.n()
    }

    pub fn m(&self) -> usize {
        self.chi.m()
    }

    /// Mod-2 sum of the rows in `s`; the zero vector for s = 0.
    pub fn chi_row_sum(&self, s: u64) -> BitVec {
        self.chi.row_sum(s)
    }

    /// Subcomplex induced on the support of the row sum χ_S. The empty
    /// selection has empty support and yields the void complex.
    pub fn support_subcomplex(&self, s: u64) -> SimplicialComplex {
        let support = self.chi_row_sum(s).support();
        self.k
            .induced_subcomplex(&support)
            .expect("support indices come from the complex")
    }

    /// Rational Betti numbers via the per-subset reduced homology sum.
    /// Subsets run in parallel; accumulation is in bitmask order, so the
    /// result is schedule-independent.
    pub fn betti_numbers(&self) -> BettiVector {
        let n = self.n();
        let tables: Vec<(u64, ReducedBetti)> = (0u64..1 << n)
            .into_par_iter()
            .map(|s| (s, reduced_betti(&self.support_subcomplex(s))))
            .collect();
        let mut b = vec![0u64; n + 1];
        let mut breakdown = BTreeMap::new();
        for (s, table) in tables {
            let mut contributions = BTreeMap::new();
            for (&tilde_deg, &rank) in table.entries() {
                let q = tilde_deg + 1;
                debug_assert!((0..=n as i32).contains(&q));
                b[q as usize] += rank;
                contributions.insert(q, rank);
            }
            if !contributions.is_empty() {
                breakdown.insert(s, contributions);
            }
        }
        BettiVector { b, breakdown }
    }

    /// Least nonempty row subset whose combination has full support, if
    /// any; its existence is equivalent to orientability.
    pub fn orientation_witness(&self) -> Option<u64> {
        let m = self.m();
        (1u64..1 << self.n()).find(|&s| self.chi_row_sum(s).count_ones() == m)
    }

    pub fn is_orientable(&self) -> bool {
        self.orientation_witness().is_some()
    }

    /// Mod-2 Betti numbers, which equal the h-vector of the underlying
    /// complex for these quotient manifolds.
    pub fn mod2_betti(&self) -> Result<HVector> {
        self.k.h_vector(self.n())
    }

    /// Euler characteristic, computed twice (alternating sums of the
    /// rational and the mod-2 Betti numbers) and cross-checked.
    pub fn euler_characteristic(&self) -> Result<i64> {
        let betti = self.betti_numbers();
        self.euler_characteristic_checked(&betti)
    }

    /// Same check against an already computed Betti vector.
    pub fn euler_characteristic_checked(&self, betti: &BettiVector) -> Result<i64> {
        let from_betti = betti.alternating_sum();
        let from_h = self.mod2_betti()?.alternating_sum();
        if from_betti != from_h {
            return Err(Error::Inconsistency(format!(
                "Euler characteristic mismatch: {from_betti} from rational Betti numbers, \
                 {from_h} from the h-vector"
            )));
        }
        Ok(from_betti)
    }

    /// Set when the complex is disconnected in a way that undermines the
    /// polytope-boundary reading. The 0-sphere (two points, n = 1) is the
    /// one legitimately disconnected case and is exempt.
    pub fn connectivity_warning(&self) -> Option<String> {
        if self.k.is_connected() || (self.n() == 1 && self.k.is_pseudomanifold(0)) {
            return None;
        }
        Some(
            "complex is disconnected; Betti numbers are still computed, but the input \
             is not the boundary dual of a simple polytope"
                .to_string(),
        )
    }
}

/// Members {1,…,n} of a row-subset bitmask, ascending.
pub fn subset_members(s: u64) -> Vec<u32> {
    (0..64).filter(|i| s >> i & 1 == 1).map(|i| i + 1).collect()
}

/// Betti numbers b_0 … b_n together with the per-subset contributions
/// that sum to them (only contributing subsets are recorded).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiVector {
    b: Vec<u64>,
    breakdown: BTreeMap<u64, BTreeMap<i32, u64>>,
}

impl BettiVector {
    pub fn get(&self, q: usize) -> u64 {
        self.b.get(q).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &[u64] {
        &self.b
    }

    pub fn total(&self) -> u64 {
        self.b.iter().sum()
    }

    pub fn alternating_sum(&self) -> i64 {
        self.b
            .iter()
            .enumerate()
            .map(|(q, &b)| if q % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Contribution tables keyed by row-subset bitmask; inner maps send a
    /// homology degree of the quotient manifold to the rank contributed.
    pub fn breakdown(&self) -> &BTreeMap<u64, BTreeMap<i32, u64>> {
        &self.breakdown
    }
}

/// Euler characteristic of the real moment-angle complex over K by cell
/// counting: a cell of dimension |σ| for each face σ (including the empty
/// selection, even for the void complex) and each sign choice on the
/// remaining m - |σ| coordinates.
pub fn moment_angle_euler(k: &SimplicialComplex, m: usize) -> Result<i128> {
    if m != k.vertex_count() {
        return Err(Error::BadParameter(format!(
            "moment-angle cell count needs m = vertex count, got m={m} for a complex on {}",
            k.vertex_count()
        )));
    }
    if m > 100 {
        return Err(Error::BadParameter(format!(
            "moment-angle cell count overflows beyond 100 vertices, got m={m}"
        )));
    }
    if k.is_void() {
        return Ok(1i128 << m);
    }
    let f = k.f_vector();
    let mut total = 0i128;
    for (card, &count) in f.counts().iter().enumerate() {
        let sign = if card % 2 == 0 { 1 } else { -1 };
        total += sign * count as i128 * (1i128 << (m - card));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::rank_gf2;

    fn square() -> SimplicialComplex {
        SimplicialComplex::with_default_labels(
            4,
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        )
        .unwrap()
    }

    pub fn torus_cover() -> SmallCover {
        let chi = CharMatrix::from_packed_columns(2, vec![0b01, 0b10, 0b01, 0b10]).unwrap();
        validate(square(), chi).unwrap()
    }

    pub fn klein_cover() -> SmallCover {
        let chi = CharMatrix::from_packed_columns(2, vec![0b01, 0b10, 0b01, 0b11]).unwrap();
        validate(square(), chi).unwrap()
    }

    #[test]
    fn square_covers_validate() {
        assert_eq!(torus_cover().n(), 2);
        assert_eq!(klein_cover().m(), 4);
    }

    #[test]
    fn repeated_adjacent_columns_fail_validation() {
        let chi = CharMatrix::from_packed_columns(2, vec![0b01, 0b01, 0b10, 0b10]).unwrap();
        match validate(square(), chi) {
            Err(Error::SingularMinor { face, labels }) => {
                assert_eq!(face, vec![0, 1]);
                assert_eq!(labels, "1,2");
            }
            other => panic!("expected a singular minor, got {other:?}"),
        }
    }

    #[test]
    fn char_matrix_construction_errors() {
        assert!(matches!(
            CharMatrix::from_int_columns(2, &[vec![1, 0], vec![0, 0], vec![1, 1]]),
            Err(Error::ZeroColumn { col: 1 })
        ));
        assert!(matches!(
            CharMatrix::from_int_columns(2, &[vec![1], vec![0, 1], vec![1, 1]]),
            Err(Error::ColumnLengthMismatch { col: 0, .. })
        ));
        assert!(matches!(
            CharMatrix::from_int_columns(0, &[]),
            Err(Error::BadCharMatrixShape { .. })
        ));
        assert!(matches!(
            CharMatrix::from_int_columns(3, &[vec![1, 0, 1], vec![0, 1, 0]]),
            Err(Error::BadCharMatrixShape { .. })
        ));
    }

    #[test]
    fn negative_entries_reduce_mod_two() {
        let chi = CharMatrix::from_int_columns(2, &[vec![-1, 0], vec![2, 3], vec![1, 1]]).unwrap();
        assert_eq!(chi.column(0), 0b01);
        assert_eq!(chi.column(1), 0b10);
        assert_eq!(chi.column(2), 0b11);
    }

    #[test]
    fn size_mismatch_is_rejected() {
        let chi = CharMatrix::from_packed_columns(2, vec![0b01, 0b10, 0b01]).unwrap();
        assert!(matches!(
            validate(square(), chi),
            Err(Error::FacetCountMismatch { .. })
        ));
    }

    #[test]
    fn row_sums() {
        let torus = torus_cover();
        assert_eq!(torus.chi_row_sum(0b01).support(), vec![0, 2]);
        assert!(torus.chi_row_sum(0).is_zero());
        let klein = klein_cover();
        assert_eq!(klein.chi_row_sum(0b11).support(), vec![0, 1, 2]);
    }

    #[test]
    fn torus_supports() {
        let torus = torus_cover();
        let opposite = torus.support_subcomplex(0b01);
        assert_eq!(opposite.vertex_count(), 2);
        assert!(opposite.is_pure(0));
        assert_eq!(torus.support_subcomplex(0b11), *torus.complex());
        assert!(torus.support_subcomplex(0).is_void());
    }

    #[test]
    fn klein_support_is_contractible_path() {
        let path = klein_cover().support_subcomplex(0b01);
        assert_eq!(path.vertex_count(), 3);
        assert!(path.is_pure(1));
        assert!(!path.is_pseudomanifold(1));
        assert!(reduced_betti(&path).is_zero());
    }

    #[test]
    fn torus_betti_numbers() {
        let betti = torus_cover().betti_numbers();
        assert_eq!(betti.entries(), &[1, 2, 1]);
        assert_eq!(betti.breakdown()[&0], BTreeMap::from([(0, 1)]));
        assert_eq!(betti.breakdown()[&0b01], BTreeMap::from([(1, 1)]));
        assert_eq!(betti.breakdown()[&0b10], BTreeMap::from([(1, 1)]));
        assert_eq!(betti.breakdown()[&0b11], BTreeMap::from([(2, 1)]));
    }

    #[test]
    fn klein_betti_numbers() {
        let betti = klein_cover().betti_numbers();
        assert_eq!(betti.entries(), &[1, 1, 0]);
        let contributing: Vec<u64> = betti.breakdown().keys().copied().collect();
        assert_eq!(contributing, vec![0, 0b10]);
    }

    #[test]
    fn orientability_of_square_covers() {
        assert_eq!(torus_cover().orientation_witness(), Some(0b11));
        assert_eq!(subset_members(0b11), vec![1, 2]);
        assert!(!klein_cover().is_orientable());
    }

    #[test]
    fn square_h_vector_gives_mod2_betti() {
        let h = torus_cover().mod2_betti().unwrap();
        assert_eq!(h.entries(), &[1, 2, 1]);
    }

    #[test]
    fn euler_characteristics_agree() {
        assert_eq!(torus_cover().euler_characteristic().unwrap(), 0);
        assert_eq!(klein_cover().euler_characteristic().unwrap(), 0);
    }

    #[test]
    fn moment_angle_cell_counts() {
        assert_eq!(moment_angle_euler(&square(), 4).unwrap(), 0);
        let two_points =
            SimplicialComplex::with_default_labels(2, vec![vec![0], vec![1]]).unwrap();
        assert_eq!(moment_angle_euler(&two_points, 2).unwrap(), 0);
        assert_eq!(moment_angle_euler(&SimplicialComplex::void(1), 1).unwrap(), 2);
        assert!(moment_angle_euler(&square(), 5).is_err());
    }

    #[test]
    fn covering_identity_for_square_covers() {
        for cover in [torus_cover(), klein_cover()] {
            let scale = 1i128 << (cover.m() - cover.n());
            let chi_n = cover.euler_characteristic().unwrap() as i128;
            assert_eq!(
                moment_angle_euler(cover.complex(), cover.m()).unwrap(),
                scale * chi_n
            );
        }
    }

    #[test]
    fn breakdown_sums_to_totals() {
        let betti = torus_cover().betti_numbers();
        for (q, &bq) in betti.entries().iter().enumerate() {
            let sum: u64 = betti
                .breakdown()
                .values()
                .map(|c| c.get(&(q as i32)).copied().unwrap_or(0))
                .sum();
            assert_eq!(sum, bq);
        }
    }

    #[test]
    fn connectivity_warning_cases() {
        assert!(torus_cover().connectivity_warning().is_none());
        // two points with a 1x2 matrix: the 0-sphere is exempt
        let two_points =
            SimplicialComplex::with_default_labels(2, vec![vec![0], vec![1]]).unwrap();
        let chi = CharMatrix::from_packed_columns(1, vec![1, 1]).unwrap();
        let cover = validate(two_points, chi).unwrap();
        assert!(cover.connectivity_warning().is_none());
        // two disjoint squares are flagged
        let disjoint = SimplicialComplex::with_default_labels(
            8,
            (0..2u32)
                .flat_map(|b| (0..4).map(move |i| vec![4 * b + i, 4 * b + (i + 1) % 4]))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let chi = CharMatrix::from_packed_columns(
            2,
            vec![0b01, 0b10, 0b01, 0b10, 0b01, 0b10, 0b01, 0b10],
        )
        .unwrap();
        let cover = validate(disjoint, chi).unwrap();
        assert!(cover.connectivity_warning().is_some());
    }

    fn random_invertible(n: usize, rng: &mut impl rand::Rng) -> Vec<u64> {
        loop {
            let rows: Vec<u64> = (0..n).map(|_| rng.gen_range(1..1u64 << n)).collect();
            let mut bits = Vec::new();
            for &r in &rows {
                for j in 0..n {
                    bits.push((r >> j & 1) as u8);
                }
            }
            if rank_gf2(&BitMatrix::from_bits(n, n, &bits)) == n {
                return rows;
            }
        }
    }

    #[test]
    fn betti_invariant_under_row_operations() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for cover in [torus_cover(), klein_cover()] {
            let n = cover.n();
            let reference = cover.betti_numbers();
            for _ in 0..10 {
                // left multiplication by an invertible matrix: new row i is
                // the combination of old rows picked by g[i]
                let g = random_invertible(n, &mut rng);
                let columns: Vec<u64> = (0..cover.m())
                    .map(|j| {
                        g.iter().enumerate().fold(0u64, |acc, (i, &gi)| {
                            acc | u64::from((cover.chi().column(j) & gi).count_ones() % 2) << i
                        })
                    })
                    .collect();
                let chi = CharMatrix::from_packed_columns(n, columns).unwrap();
                let transformed = validate(cover.complex().clone(), chi).unwrap();
                assert_eq!(transformed.betti_numbers().entries(), reference.entries());
                assert_eq!(transformed.is_orientable(), cover.is_orientable());
            }
        }
    }
}
