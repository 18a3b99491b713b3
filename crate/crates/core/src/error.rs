use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input data (bad tables, non-homomorphisms, bad scalars).
    #[error("input error: {0}")]
    Input(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    /// A construction needs the grading group to be abelian.
    #[error("requires abelian π: {0}")]
    NonAbelian(String),
    #[error("requires cocommutative input: {0}")]
    NotCocommutative(String),
    /// A construction's hypotheses (other than abelian/cocommutative) do not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("one-sided convolution inverse: {0}")]
    OneSidedInverse(String),
    #[error("search space of size {required} exceeds bound {bound}")]
    BoundExceeded { required: u128, bound: u128 },
}

impl Error {
    /// Errors caused by the input itself rather than by a failed hypothesis.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Input(_)
                | Error::Shape(_)
                | Error::Dimension(_)
                | Error::FieldMismatch(_)
                | Error::BoundExceeded { .. }
        )
    }
}
