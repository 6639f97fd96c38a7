//! JSON file formats: complexes, characteristic matrices, bundled
//! problems, and graphs.
//!
//! Complex files use 0-based vertex indices; graph files use 1-based
//! vertices. Characteristic matrix entries may be arbitrary integers and
//! are reduced mod 2 on ingestion.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::cover::{CharMatrix, SmallCover};
use crate::error::Result;
use crate::families::Graph;

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ComplexFile {
    pub m: usize,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    pub maximal_faces: Vec<Vec<u32>>,
}

impl ComplexFile {
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        match &self.labels {
            Some(labels) => {
                SimplicialComplex::new(self.m, labels.clone(), self.maximal_faces.clone())
            }
            None => SimplicialComplex::with_default_labels(self.m, self.maximal_faces.clone()),
        }
    }

    pub fn from_complex(k: &SimplicialComplex) -> Self {
        ComplexFile {
            m: k.vertex_count(),
            labels: Some(k.labels().to_vec()),
            maximal_faces: k.maximal_faces().cloned().collect(),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ChiFile {
    pub n: usize,
    pub columns: Vec<Vec<i64>>,
}

impl ChiFile {
    pub fn to_char_matrix(&self) -> Result<CharMatrix> {
        CharMatrix::from_int_columns(self.n, &self.columns)
    }

    pub fn from_char_matrix(chi: &CharMatrix) -> Self {
        ChiFile {
            n: chi.n(),
            columns: chi.int_columns(),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ProblemFile {
    pub complex: ComplexFile,
    pub chi: ChiFile,
}

impl ProblemFile {
    pub fn from_cover(cover: &SmallCover) -> Self {
        ProblemFile {
            complex: ComplexFile::from_complex(cover.complex()),
            chi: ChiFile::from_char_matrix(cover.chi()),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<(u32, u32)>,
}

impl GraphFile {
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied())
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphFile {
            n: g.n(),
            edges: g.edges().collect(),
        }
    }
}
