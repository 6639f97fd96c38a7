//! Finite abstract simplicial complexes.
//!
//! A complex on `m` vertices is stored by its maximal faces (an antichain
//! of sorted vertex lists). Two degenerate complexes are distinguished:
//! the void complex has no faces at all, while `{∅}` contains the empty
//! face and nothing else. Any complex with a vertex in some face contains
//! the empty face implicitly; closures and face counts account for it.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    m: usize,
    labels: Vec<String>,
    maximal: BTreeSet<Vec<u32>>,
}

impl SimplicialComplex {
    /// Builds a complex from any generating set of faces; faces contained
    /// in another are dropped so `maximal_faces` is always an antichain.
    pub fn new(
        m: usize,
        labels: Vec<String>,
        faces: impl IntoIterator<Item = Vec<u32>>,
    ) -> Result<Self> {
        if labels.len() != m {
            return Err(Error::LabelCountMismatch {
                expected: m,
                got: labels.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for label in &labels {
            if !seen.insert(label) {
                return Err(Error::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        let mut sorted: Vec<Vec<u32>> = Vec::new();
        for mut face in faces {
            face.sort_unstable();
            if let Some(&v) = face.iter().find(|&&v| v as usize >= m) {
                return Err(Error::VertexOutOfRange {
                    index: v as usize,
                    m,
                });
            }
            if face.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertex { face });
            }
            sorted.push(face);
        }
        let maximal = sorted
            .iter()
            .filter(|f| {
                !sorted
                    .iter()
                    .any(|g| g.len() > f.len() && is_subset(f, g))
            })
            .cloned()
            .collect();
        Ok(SimplicialComplex { m, labels, maximal })
    }

    /// Same, with vertices labeled "1" … "m".
    pub fn with_default_labels(m: usize, faces: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        SimplicialComplex::new(m, default_labels(m), faces)
    }

    /// The complex with no faces at all (not even the empty face).
    pub fn void(m: usize) -> Self {
        SimplicialComplex {
            m,
            labels: default_labels(m),
            maximal: BTreeSet::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: u32) -> &str {
        &self.labels[v as usize]
    }

    pub fn maximal_faces(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.maximal.iter()
    }

    pub fn maximal_face_count(&self) -> usize {
        self.maximal.len()
    }

    pub fn is_void(&self) -> bool {
        self.maximal.is_empty()
    }

    /// Dimension of the largest face: `None` for void, `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<i32> {
        self.maximal
            .iter()
            .map(|f| f.len() as i32 - 1)
            .max()
    }

    pub fn contains_face(&self, face: &[u32]) -> bool {
        if face.is_empty() {
            return !self.is_void();
        }
        let mut sorted = face.to_vec();
        sorted.sort_unstable();
        self.maximal.iter().any(|m| is_subset(&sorted, m))
    }

    /// Every face of the complex grouped by cardinality: entry `k` lists
    /// the k-vertex faces in lexicographic order. The void complex gives
    /// an empty list; otherwise entry 0 is the singleton `[∅]`.
    pub fn all_faces(&self) -> Vec<Vec<Vec<u32>>> {
        if self.is_void() {
            return Vec::new();
        }
        let top = self.maximal.iter().map(Vec::len).max().unwrap();
        let mut by_card: Vec<BTreeSet<Vec<u32>>> = vec![BTreeSet::new(); top + 1];
        for face in &self.maximal {
            for mask in 0u64..(1 << face.len()) {
                let sub: Vec<u32> = face
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                by_card[sub.len()].insert(sub);
            }
        }
        by_card
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect()
    }

    /// The subcomplex of all faces contained in `vertices`. The result is
    /// reindexed to the selected vertices (ascending), keeping their
    /// labels. An empty selection gives the void complex.
    pub fn induced_subcomplex(&self, vertices: &[u32]) -> Result<SimplicialComplex> {
        let selected: BTreeSet<u32> = vertices.iter().copied().collect();
        if let Some(&v) = selected.iter().find(|&&v| v as usize >= self.m) {
            return Err(Error::VertexOutOfRange {
                index: v as usize,
                m: self.m,
            });
        }
        let keep: Vec<u32> = selected.into_iter().collect();
        let labels = keep.iter().map(|&v| self.labels[v as usize].clone()).collect();
        if keep.is_empty() || self.is_void() {
            let mut void = SimplicialComplex::void(keep.len());
            void.labels = labels;
            return Ok(void);
        }
        let reindex: std::collections::HashMap<u32, u32> = keep
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new as u32))
            .collect();
        let restricted = self.maximal.iter().map(|face| {
            face.iter()
                .filter_map(|v| reindex.get(v).copied())
                .collect::<Vec<u32>>()
        });
        SimplicialComplex::new(keep.len(), labels, restricted)
    }

    /// Face counts indexed by cardinality (`counts[k]` is the number of
    /// faces on `k` vertices, so `counts[0] = 1` unless the complex is
    /// void, in which case the vector is empty).
    pub fn f_vector(&self) -> FVector {
        FVector {
            counts: self.all_faces().iter().map(|g| g.len() as i64).collect(),
        }
    }

    /// Converts face counts to the h-vector via
    /// Σ_i h_i t^{n-i} = Σ_i f_{i-1} (t-1)^{n-i}; requires a complex
    /// that is pure of dimension n-1.
    pub fn h_vector(&self, n: usize) -> Result<HVector> {
        if self.is_void() {
            return Err(Error::EmptyComplex);
        }
        if !self.is_pure(n as i32 - 1) {
            return Err(Error::NotPure {
                expected: n as i32 - 1,
            });
        }
        let f = self.f_vector();
        // poly[j] accumulates the coefficient of t^j.
        let mut poly = vec![0i64; n + 1];
        for i in 0..=n {
            let fi = f.faces_with_cardinality(i);
            if fi == 0 {
                continue;
            }
            // f_{i-1} (t-1)^{n-i}
            let deg = n - i;
            for (j, c) in binomial_row(deg).iter().enumerate() {
                let sign = if (deg - j).is_multiple_of(2) { 1 } else { -1 };
                poly[j] += fi * c * sign;
            }
        }
        let h: Vec<i64> = (0..=n).map(|i| poly[n - i]).collect();
        debug_assert_eq!(h[0], 1);
        Ok(HVector { h })
    }

    /// True iff every maximal face has dimension `d` (vacuously true for
    /// the void complex).
    pub fn is_pure(&self, d: i32) -> bool {
        self.maximal.iter().all(|f| f.len() as i32 - 1 == d)
    }

    /// Pure of dimension `d` with every (d-1)-face in exactly two
    /// d-faces. For d = 0 this means the empty face lies in exactly two
    /// vertices, i.e. the complex is a 0-sphere.
    pub fn is_pseudomanifold(&self, d: i32) -> bool {
        if !self.is_pure(d) || self.is_void() || d < 0 {
            return false;
        }
        let faces = self.all_faces();
        let d = d as usize;
        faces[d].iter().all(|ridge| {
            faces[d + 1]
                .iter()
                .filter(|facet| is_subset(ridge, facet))
                .count()
                == 2
        })
    }

    /// True iff all `m` vertices lie in one connected component of the
    /// graph formed by the faces (vertices in no face count as isolated).
    pub fn is_connected(&self) -> bool {
        if self.m <= 1 {
            return true;
        }
        let mut parent: Vec<usize> = (0..self.m).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                parent[x] = find(parent, parent[x]);
            }
            parent[x]
        }
        for face in &self.maximal {
            for w in face.windows(2) {
                let a = find(&mut parent, w[0] as usize);
                let b = find(&mut parent, w[1] as usize);
                parent[a] = b;
            }
        }
        let root = find(&mut parent, 0);
        (1..self.m).all(|v| find(&mut parent, v) == root)
    }
}

fn is_subset(small: &[u32], large: &[u32]) -> bool {
    small.iter().all(|v| large.binary_search(v).is_ok())
}

fn default_labels(m: usize) -> Vec<String> {
    (1..=m).map(|i| i.to_string()).collect()
}

/// Row `n` of Pascal's triangle.
fn binomial_row(n: usize) -> Vec<i64> {
    let mut row = vec![1i64];
    for _ in 0..n {
        let mut next = vec![1i64];
        for w in row.windows(2) {
            next.push(w[0] + w[1]);
        }
        next.push(1);
        row = next;
    }
    row
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FVector {
    counts: Vec<i64>,
}

impl FVector {
    /// Number of faces of dimension `dim` (so `f(-1)` counts the empty face).
    pub fn f(&self, dim: i32) -> i64 {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|k| self.counts.get(k).copied())
            .unwrap_or(0)
    }

    pub fn faces_with_cardinality(&self, k: usize) -> i64 {
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    pub fn total(&self) -> i64 {
        self.counts.iter().sum()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HVector {
    h: Vec<i64>,
}

impl HVector {
    pub fn entries(&self) -> &[i64] {
        &self.h
    }

    pub fn get(&self, i: usize) -> i64 {
        self.h.get(i).copied().unwrap_or(0)
    }

    pub fn sum(&self) -> i64 {
        self.h.iter().sum()
    }

    pub fn alternating_sum(&self) -> i64 {
        self.h
            .iter()
            .enumerate()
            .map(|(i, &v)| if i % 2 == 0 { v } else { -v })
            .sum()
    }
}

/// The nonempty proper subsets of {1,…,n} ordered by (cardinality,
/// lexicographic on member lists). This ordering fixes vertex numbering
/// for the subdivision complex below and for its characteristic columns.
pub fn proper_nonempty_subsets(n: usize) -> Vec<Vec<u32>> {
    assert!(n <= 62);
    let mut subsets: Vec<Vec<u32>> = (1u64..(1 << n) - 1)
        .map(|mask| (1..=n as u32).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets
}

/// Renders a subset as "{1,2,3}" for vertex labels.
pub fn subset_label(q: &[u32]) -> String {
    let inner: Vec<String> = q.iter().map(u32::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

/// The barycentric subdivision of the boundary of the (n-1)-simplex:
/// vertices are the 2^n - 2 nonempty proper subsets Q of {1,…,n}, faces
/// are chains of subsets under inclusion, and the n! maximal faces are
/// the complete chains, one per permutation.
pub fn barycentric_subdivision_of_simplex_boundary(n: usize) -> Result<SimplicialComplex> {
    if n < 2 {
        return Err(Error::BadParameter(format!(
            "subdivision of a simplex boundary needs n >= 2, got {n}"
        )));
    }
    if n > 16 {
        return Err(Error::BadParameter(format!(
            "subdivision of a simplex boundary on 2^{n}-2 vertices is too large"
        )));
    }
    let subsets = proper_nonempty_subsets(n);
    let labels = subsets.iter().map(|q| subset_label(q)).collect();
    let index: std::collections::HashMap<&[u32], u32> = subsets
        .iter()
        .enumerate()
        .map(|(i, q)| (q.as_slice(), i as u32))
        .collect();
    let mut chains: Vec<Vec<u32>> = Vec::new();
    let mut perm: Vec<u32> = (1..=n as u32).collect();
    loop {
        let mut chain = Vec::with_capacity(n - 1);
        let mut prefix: Vec<u32> = Vec::with_capacity(n - 1);
        for &x in perm.iter().take(n - 1) {
            prefix.push(x);
            let mut q = prefix.clone();
            q.sort_unstable();
            chain.push(index[q.as_slice()]);
        }
        chains.push(chain);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    SimplicialComplex::new(subsets.len(), labels, chains)
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}
