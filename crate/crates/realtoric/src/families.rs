//! Generators for the worked families: the permutahedral cover, its
//! row-interval support subcomplexes, Euler secant numbers, and covers
//! over graph associahedra.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::complex::{
    barycentric_subdivision_of_simplex_boundary, proper_nonempty_subsets, subset_label,
    SimplicialComplex,
};
use crate::cover::{validate, CharMatrix, SmallCover};
use crate::error::{Error, Result};

/// Exact binomial coefficient.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Secant numbers A_0, A_2, …, A_{2k}: A_{2i} is the coefficient of
/// x^{2i}/(2i)! in the Maclaurin expansion of sec(x).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SecantTable {
    a: Vec<BigUint>,
}

impl SecantTable {
    /// A_{2i}.
    pub fn get(&self, i: usize) -> &BigUint {
        &self.a[i]
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.a
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }
}

/// Computes the table by exact power-series inversion of cos(x) in
/// rational arithmetic: with s_i the x^{2i} coefficient of sec(x),
/// s_0 = 1 and s_i = Σ_{j≥1} (-1)^{j+1} s_{i-j} / (2j)!, then
/// A_{2i} = s_i · (2i)!. The finished table is rechecked against the
/// sec·cos = 1 convolution before it is returned.
pub fn secant_numbers(k: usize) -> SecantTable {
    // factorials (2j)! for j <= k
    let mut fact = Vec::with_capacity(2 * k + 1);
    fact.push(BigUint::one());
    for t in 1..=2 * k {
        let prev = fact.last().unwrap().clone();
        fact.push(prev * BigUint::from(t));
    }
    let mut s: Vec<BigRational> = vec![BigRational::one()];
    for i in 1..=k {
        let mut acc = BigRational::zero();
        for j in 1..=i {
            let term = &s[i - j] / BigRational::from(BigInt::from(fact[2 * j].clone()));
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        s.push(acc);
    }
    let a: Vec<BigUint> = s
        .iter()
        .enumerate()
        .map(|(i, si)| {
            let scaled = si * BigRational::from(BigInt::from(fact[2 * i].clone()));
            assert!(
                scaled.is_integer() && !scaled.is_negative(),
                "series inversion must produce nonnegative integers"
            );
            scaled.to_integer().to_biguint().unwrap()
        })
        .collect();
    for i in 1..=k {
        let mut acc = BigInt::zero();
        for j in 0..=i {
            let term = BigInt::from(binomial(2 * i, 2 * j) * &a[i - j]);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        assert!(acc.is_zero(), "sec·cos convolution failed at degree {}", 2 * i);
    }
    SecantTable { a }
}

/// A_{2i}·C(n,2i): the closed form for the rank of H_i of the
/// permutahedral cover in dimension n-1.
pub fn hessenberg_betti_closed_form(n: usize, i: usize) -> BigUint {
    let c = binomial(n, 2 * i);
    if c.is_zero() {
        return BigUint::zero();
    }
    secant_numbers(i).get(i) * c
}

/// The characteristic column attached to a subset Q of {1,…,n}, over
/// n-1 rows: the mod-2 sum over i ∈ Q of e_i for i < n, with i = n
/// contributing the all-ones vector.
fn subset_column(q: &[u32], n: usize) -> u64 {
    let full = (1u64 << (n - 1)) - 1;
    q.iter().fold(0u64, |acc, &i| {
        acc ^ if (i as usize) < n { 1 << (i - 1) } else { full }
    })
}

/// The cover over the permutahedron: the subdivided simplex boundary on
/// the 2^n - 2 proper subsets, with the subset-sum characteristic rule.
pub fn permutahedron_cover(n: usize) -> Result<SmallCover> {
    let k = barycentric_subdivision_of_simplex_boundary(n)?;
    let columns = proper_nonempty_subsets(n)
        .iter()
        .map(|q| subset_column(q, n))
        .collect();
    let chi = CharMatrix::from_packed_columns(n - 1, columns)?;
    validate(k, chi)
}

/// Support subcomplex of the permutahedral cover for the leading row
/// interval S = {1,…,r}; up to relabeling this depends only on r.
pub fn permutahedron_support_complex(n: usize, r: usize) -> Result<SimplicialComplex> {
    if r == 0 || r >= n {
        return Err(Error::BadParameter(format!(
            "support interval needs 1 <= r <= n-1, got r={r}, n={n}"
        )));
    }
    let mask = (1u64 << r) - 1;
    Ok(permutahedron_cover(n)?.support_subcomplex(mask))
}

/// A finite simple graph on vertices {1,…,n}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(u32, u32)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        if n == 0 || n > 62 {
            return Err(Error::BadParameter(format!(
                "graph needs 1 <= n <= 62 vertices, got {n}"
            )));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            if a < 1 || b < 1 || a as usize > n || b as usize > n {
                return Err(Error::EdgeOutOfRange { a, b, n });
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::new(n, (1..n as u32).map(|i| (i, i + 1)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::BadParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        Graph::new(n, (1..=n as u32).map(|i| (i, i % n as u32 + 1)))
    }

    /// Star with center 1 and leaves 2,…,n.
    pub fn star(n: usize) -> Result<Self> {
        Graph::new(n, (2..=n as u32).map(|i| (1, i)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(
            n,
            (1..=n as u32).flat_map(|a| (a + 1..=n as u32).map(move |b| (a, b))),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn is_connected(&self) -> bool {
        self.induces_connected_mask(if self.n == 62 { !0 >> 2 } else { (1 << self.n) - 1 })
    }

    /// Whether the subgraph induced on the vertex bitmask (bit i-1 for
    /// vertex i) is nonempty and connected.
    fn induces_connected_mask(&self, subset: u64) -> bool {
        if subset == 0 {
            return false;
        }
        let start = subset.trailing_zeros();
        let mut reached = 1u64 << start;
        let mut frontier = vec![start + 1];
        while let Some(v) = frontier.pop() {
            for &(a, b) in &self.edges {
                let w = if a == v { b } else if b == v { a } else { continue };
                let bit = 1u64 << (w - 1);
                if subset & bit != 0 && reached & bit == 0 {
                    reached |= bit;
                    frontier.push(w);
                }
            }
        }
        reached == subset
    }
}

fn to_mask(t: &[u32]) -> u64 {
    t.iter().fold(0, |acc, &v| acc | 1 << (v - 1))
}

/// Proper nonempty vertex subsets that induce connected subgraphs, in
/// (cardinality, lexicographic) order; the facet set of the graph
/// associahedron.
pub fn tubes(g: &Graph) -> Result<Vec<Vec<u32>>> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    Ok(proper_nonempty_subsets(g.n())
        .into_iter()
        .filter(|q| g.induces_connected_mask(to_mask(q)))
        .collect())
}

/// Two tubes are compatible when nested, or disjoint with a union that
/// does not induce a connected subgraph (so they cannot be merged).
pub fn are_compatible(g: &Graph, t1: &[u32], t2: &[u32]) -> bool {
    let (m1, m2) = (to_mask(t1), to_mask(t2));
    if m1 & m2 == m1 || m1 & m2 == m2 {
        return true;
    }
    m1 & m2 == 0 && !g.induces_connected_mask(m1 | m2)
}

/// Maximal cliques by Bron-Kerbosch with pivoting over index bitmasks.
fn maximal_cliques(adjacency: &[u128]) -> Vec<Vec<u32>> {
    fn expand(
        r: u128,
        mut p: u128,
        mut x: u128,
        adjacency: &[u128],
        out: &mut Vec<u128>,
    ) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = {
            let mut best = None;
            let mut candidates = p | x;
            while candidates != 0 {
                let u = candidates.trailing_zeros() as usize;
                candidates &= candidates - 1;
                let degree = (p & adjacency[u]).count_ones();
                if best.is_none_or(|(d, _)| degree > d) {
                    best = Some((degree, u));
                }
            }
            best.unwrap().1
        };
        let mut rest = p & !adjacency[pivot];
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let bit = 1u128 << v;
            expand(r | bit, p & adjacency[v], x & adjacency[v], adjacency, out);
            p &= !bit;
            x |= bit;
        }
    }
    let mut raw = Vec::new();
    let all = if adjacency.len() == 128 {
        !0u128
    } else {
        (1u128 << adjacency.len()) - 1
    };
    expand(0, all, 0, adjacency, &mut raw);
    let mut cliques: Vec<Vec<u32>> = raw
        .into_iter()
        .map(|mask| (0..adjacency.len() as u32).filter(|&i| mask >> i & 1 == 1).collect())
        .collect();
    cliques.sort();
    cliques
}

/// The nested set complex of a connected graph: vertices are the tubes,
/// faces are pairwise-compatible tube collections (the flag complex of
/// the compatibility graph). Always pure of dimension n-2.
pub fn nested_set_complex(g: &Graph) -> Result<SimplicialComplex> {
    let tubes = tubes(g)?;
    if tubes.len() > 128 {
        return Err(Error::BadParameter(format!(
            "{} tubes exceed the supported clique enumeration width of 128",
            tubes.len()
        )));
    }
    let adjacency: Vec<u128> = tubes
        .iter()
        .enumerate()
        .map(|(i, t1)| {
            tubes
                .iter()
                .enumerate()
                .filter(|&(j, t2)| i != j && are_compatible(g, t1, t2))
                .fold(0u128, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    let labels = tubes.iter().map(|t| subset_label(t)).collect();
    let complex = SimplicialComplex::new(tubes.len(), labels, maximal_cliques(&adjacency))?;
    if !complex.is_pure(g.n() as i32 - 2) {
        return Err(Error::Inconsistency(format!(
            "nested set complex of a connected graph on {} vertices is not pure of dimension {}",
            g.n(),
            g.n() as i32 - 2
        )));
    }
    Ok(complex)
}

/// Cover over the graph associahedron: the nested set complex with the
/// same subset-sum characteristic rule as the permutahedron, applied to
/// tubes. For the complete graph this reproduces the permutahedral cover
/// exactly.
pub fn graph_associahedron_cover(g: &Graph) -> Result<SmallCover> {
    let n = g.n();
    if n < 2 {
        return Err(Error::BadParameter(format!(
            "graph associahedron cover needs n >= 2 vertices, got {n}"
        )));
    }
    let k = nested_set_complex(g)?;
    let columns = tubes(g)?.iter().map(|t| subset_column(t, n)).collect();
    let chi = CharMatrix::from_packed_columns(n - 1, columns)?;
    validate(k, chi)
}
