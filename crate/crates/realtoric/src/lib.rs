//! Exact rational Betti numbers of real toric manifolds built from a
//! simplicial complex and a GF(2) characteristic matrix.
//!
//! The homology of such a manifold decomposes over the subsets S of the
//! characteristic matrix rows: each S selects the subcomplex induced on
//! the support of the mod-2 row sum, and the reduced Betti numbers of
//! those subcomplexes, shifted up one degree, add up to the Betti numbers
//! of the manifold. Everything is computed exactly: ranks over ℚ use
//! fraction-free integer elimination, ranks over GF(2) use bitset
//! elimination, and count sequences use arbitrary precision.
//!
//! The crate also generates the worked families: covers over
//! permutahedra (whose Betti numbers are secant numbers times binomials)
//! and over graph associahedra, plus h-vector, orientability and
//! Euler-characteristic cross-checks. The `realtoric` binary exposes the
//! same pipeline on JSON problem files.

pub mod complex;
pub mod cover;
pub mod error;
pub mod families;
pub mod gf2;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod report;

pub use complex::{
    barycentric_subdivision_of_simplex_boundary, proper_nonempty_subsets, FVector, HVector,
    SimplicialComplex,
};
pub use cover::{moment_angle_euler, validate, BettiVector, CharMatrix, SmallCover};
pub use error::{Error, Result};
pub use families::{
    graph_associahedron_cover, hessenberg_betti_closed_form, nested_set_complex,
    permutahedron_cover, permutahedron_support_complex, secant_numbers, Graph, SecantTable,
};
pub use gf2::{rank_gf2, BitMatrix, BitVec};
pub use homology::{build_chain_complex, reduced_betti, ChainComplexQ, ReducedBetti};
pub use linalg::{rank_q, Mat};

/// Machine-word integer matrix; ranks computed through [`rank_q`] retry
/// with [`BigIntMatrix`] entries on overflow.
pub type IntMatrix = Mat<i64>;

/// Arbitrary-precision integer matrix.
pub type BigIntMatrix = Mat<num_bigint::BigInt>;
