use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("operands belong to different algebras")]
    OwnerMismatch,
    #[error("product degree {degree} exceeds the model bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("root finder did not converge within {sweeps} sweeps")]
    NonConvergence { sweeps: usize },
    #[error("polynomial degree {0} is too small for this operation")]
    DegenerateDegree(usize),
    #[error("invalid norm parameter t = {t}: t^n < sum of |a_k| t^k")]
    InvalidParameter { t: f64 },
    #[error("norm parameters out of order: {t1} > {t2}")]
    ParameterOrder { t1: f64, t2: f64 },
    #[error("homomorphism domain does not match the polynomial's owner")]
    DomainMismatch,
    #[error("element is not a root: residual {residual:e}")]
    NotARoot { residual: f64 },
    #[error("layers do not belong to the same tower: {0}")]
    LayerMismatch(String),
    #[error("extension data mismatch: {0}")]
    MismatchedData(String),
    #[error("invalid construction: {0}")]
    Invalid(String),
}

impl Error {
    /// True for failures of a numerical kernel rather than of the input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NonConvergence { .. })
    }
}
