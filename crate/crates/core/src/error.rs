use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid family spec `{0}`")]
    InvalidFamily(String),

    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix is not Hermitian")]
    NotHermitian,

    #[error("tridiagonal matrix has sub != super")]
    AsymmetricTridiagonal,

    #[error("not symmetrizable: sub[{index}]*super[{index}] = {product} < 0")]
    NotSymmetrizable { index: usize, product: f64 },

    #[error("eigensolver exceeded the iteration cap of {0}")]
    NumericalFailure(usize),

    #[error("zero vector")]
    ZeroVector,

    #[error("multiset mismatch: no unmatched element within {tol} of {value}")]
    MultisetMismatch { value: f64, tol: f64 },

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error(
        "partition is not regular: vertices {u} and {w} of cell {cell_of_u} have {cu} vs {cw} \
         neighbors in cell {cell}"
    )]
    NotRegular {
        u: usize,
        w: usize,
        cell_of_u: usize,
        cell: usize,
        cu: i64,
        cw: i64,
    },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("algebraic connectivity {0} is too close to zero for a ratio")]
    VanishingConnectivity(f64),

    #[error("token graph on {size} vertices exceeds the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("lift is not a simple graph: {0}")]
    LiftNotSimple(String),

    #[error(
        "over-lift assembly: {found} of the {expected} eigenvalues nearest 4 lie within {tol} of 4"
    )]
    OverliftInconsistency {
        expected: usize,
        found: usize,
        tol: f64,
    },

    #[error("no asymptotic closed form for n={n}, r={r}")]
    AsymptoticUnsupported { n: usize, r: usize },

    #[error("eigenvector residual {residual} exceeds {bound}")]
    ResidualTooLarge { residual: f64, bound: f64 },

    #[error("edge list: {0}")]
    EdgeList(String),

    #[error("{0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
