use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("cannot parse scalar {input:?}: {message}")]
pub struct ScalarParseError {
    pub input: String,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum Error {
    /// Structure constants with inconsistent shapes or out-of-range indices.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// The system `sum_k nu_k(e_i*) mu_k(e_j) = delta_ij` has no solution for this corepresentation.
    #[error("not principal: no dual bases exist for corepresentation {corep:?}")]
    NotPrincipal { corep: String },

    #[error("canonical map is not bijective (kernel {kernel_dim}, cokernel {cokernel_dim})")]
    NotGalois { kernel_dim: usize, cokernel_dim: usize },

    #[error("incomplete irreducible list: {0}")]
    IncompleteIrreps(String),

    #[error("antipode does not square to the identity; the Peter-Weyl path requires S^2 = id")]
    AntipodeNotInvolutive,

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A builder produced an object that fails its own axioms.
    #[error("construction failed: {0}")]
    Construction(String),

    /// A computed object failed a post-condition that the construction guarantees.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Scalar(#[from] ScalarParseError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
