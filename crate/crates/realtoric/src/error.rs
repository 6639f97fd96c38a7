use thiserror::Error;

/// Errors produced by complex construction, cover validation and the
/// family generators.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for a complex on {m} vertices")]
    VertexOutOfRange { index: usize, m: usize },

    #[error("face {face:?} repeats a vertex")]
    RepeatedVertex { face: Vec<u32> },

    #[error("expected {expected} labels, got {got}")]
    LabelCountMismatch { expected: usize, got: usize },

    #[error("label {label:?} appears more than once")]
    DuplicateLabel { label: String },

    #[error("complex is not pure of dimension {expected}")]
    NotPure { expected: i32 },

    #[error("empty complex has no h-vector")]
    EmptyComplex,

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("characteristic matrix shape n={n}, m={m} invalid: need 1 <= n <= {max} and m >= n")]
    BadCharMatrixShape { n: usize, m: usize, max: usize },

    #[error("characteristic matrix column {col} reduces to zero mod 2")]
    ZeroColumn { col: usize },

    #[error("column {col} has {got} entries, expected {expected}")]
    ColumnLengthMismatch { col: usize, got: usize, expected: usize },

    #[error("characteristic matrix has {cols} columns but the complex has {m} vertices")]
    FacetCountMismatch { cols: usize, m: usize },

    #[error("singular minor at maximal face {{{labels}}} (vertex indices {face:?})")]
    SingularMinor { face: Vec<u32>, labels: String },

    #[error("parameter out of range: {0}")]
    BadParameter(String),

    #[error("graph is disconnected; graph associahedra of disconnected graphs are products and unsupported")]
    DisconnectedGraph,

    #[error("graph edge ({a},{b}) out of range for vertex set 1..={n}")]
    EdgeOutOfRange { a: u32, b: u32, n: usize },

    #[error("graph has a loop at vertex {0}")]
    LoopEdge(u32),

    #[error("internal consistency violation: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
