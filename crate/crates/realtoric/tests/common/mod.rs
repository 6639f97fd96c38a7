//! Shared pieces for the integration suites: a from-scratch reduced
//! homology oracle and the catalog of covers used by the cross-check
//! criteria.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::Zero;

use realtoric::cover::{validate, BettiVector, CharMatrix, SmallCover};
use realtoric::families::{graph_associahedron_cover, permutahedron_cover, Graph};
use realtoric::SimplicialComplex;

/// Reduced Betti numbers computed directly from the definition: subset
/// closure, dense boundary matrices over arbitrary-precision rationals,
/// and textbook Gaussian elimination. Independent of the library's
/// homology code on purpose.
pub fn oracle_reduced_betti(maximal: &[Vec<u32>]) -> BTreeMap<i32, u64> {
    let mut faces: BTreeSet<Vec<u32>> = BTreeSet::new();
    for face in maximal {
        let mut sorted = face.clone();
        sorted.sort_unstable();
        sorted.dedup();
        for mask in 0u32..1 << sorted.len() {
            faces.insert(
                (0..sorted.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| sorted[i])
                    .collect(),
            );
        }
    }
    let mut betti = BTreeMap::new();
    if faces.is_empty() {
        betti.insert(-1, 1);
        return betti;
    }
    let top = faces.iter().map(Vec::len).max().unwrap();
    let mut by_card: Vec<Vec<Vec<u32>>> = vec![Vec::new(); top + 1];
    for f in faces {
        by_card[f.len()].push(f);
    }
    // boundary matrix out of the k-vertex faces, then ranks
    let mut ranks = vec![0usize; top + 2];
    for card in 1..=top {
        let rows = by_card[card - 1].len();
        let mut matrix = vec![vec![BigRational::zero(); by_card[card].len()]; rows];
        for (col, face) in by_card[card].iter().enumerate() {
            for j in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(j);
                let row = by_card[card - 1].binary_search(&sub).unwrap();
                matrix[row][col] = BigRational::from_integer(if j % 2 == 0 {
                    1.into()
                } else {
                    (-1).into()
                });
            }
        }
        ranks[card] = rational_gauss_rank(matrix);
    }
    for card in 0..=top {
        let b = by_card[card].len() - ranks[card] - ranks[card + 1];
        if b > 0 {
            betti.insert(card as i32 - 1, b as u64);
        }
    }
    betti
}

#[allow(clippy::needless_range_loop)]
fn rational_gauss_rank(mut a: Vec<Vec<BigRational>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for r in rank + 1..rows {
            if !a[r][c].is_zero() {
                let factor = &a[r][c] / &pivot;
                for cc in c..cols {
                    let sub = &factor * &a[rank][cc];
                    a[r][cc] = &a[r][cc] - sub;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn square_complex() -> SimplicialComplex {
    SimplicialComplex::with_default_labels(
        4,
        vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
    )
    .unwrap()
}

pub fn torus_cover() -> SmallCover {
    let chi = CharMatrix::from_packed_columns(2, vec![0b01, 0b10, 0b01, 0b10]).unwrap();
    validate(square_complex(), chi).unwrap()
}

pub fn klein_cover() -> SmallCover {
    let chi = CharMatrix::from_packed_columns(2, vec![0b01, 0b10, 0b01, 0b11]).unwrap();
    validate(square_complex(), chi).unwrap()
}

pub struct CatalogEntry {
    pub name: String,
    pub cover: SmallCover,
    pub betti: BettiVector,
}

/// Every cover the cross-check criteria quantify over: the two square
/// covers, permutahedra up to order 6, and graph associahedra for paths,
/// cycles and stars up to 5 vertices.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut entries = vec![
            entry("torus square", torus_cover()),
            entry("klein square", klein_cover()),
        ];
        for n in 2..=6 {
            entries.push(entry(
                &format!("permutahedron {n}"),
                permutahedron_cover(n).unwrap(),
            ));
        }
        for n in 2..=5 {
            entries.push(entry(
                &format!("path {n}"),
                graph_associahedron_cover(&Graph::path(n).unwrap()).unwrap(),
            ));
        }
        for n in 3..=5 {
            entries.push(entry(
                &format!("cycle {n}"),
                graph_associahedron_cover(&Graph::cycle(n).unwrap()).unwrap(),
            ));
            entries.push(entry(
                &format!("star {n}"),
                graph_associahedron_cover(&Graph::star(n).unwrap()).unwrap(),
            ));
        }
        entries
    })
}

fn entry(name: &str, cover: SmallCover) -> CatalogEntry {
    let betti = cover.betti_numbers();
    CatalogEntry {
        name: name.to_string(),
        cover,
        betti,
    }
}
