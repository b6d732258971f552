use alloc::string::String;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("vectors do not span C^{dim} (rank {rank})")]
    NotAFrame { dim: usize, rank: usize },
    #[error("operator is not bijective: {0}")]
    NotBijective(&'static str),
    #[error("{what} disagree (residual {residual:e})")]
    FormulaMismatch { what: &'static str, residual: f64 },
    #[error("invalid generator parameters: {0}")]
    BadGeneratorParams(String),
    #[error("middle frame is a Riesz basis; no decomposition counterexample exists")]
    XiIsRiesz,
    #[error("frame is ill-conditioned (bound ratio {ratio:e})")]
    IllConditioned { ratio: f64 },
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(&'static str),
    #[error("matrix has {found} entries, expected {expected}")]
    BadShape { expected: usize, found: usize },
    #[error("non-finite entry")]
    NonFinite,
    #[error("invalid suite configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn check_dim(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            context,
            expected,
            found,
        })
    }
}
