use qiso_scalars::ScalarError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NcError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("operands live in different algebras ({0} vs {1})")]
    AlgebraMismatch(&'static str, &'static str),
    #[error("expected an element of {expected}, found {found}")]
    WrongAlgebra { expected: &'static str, found: &'static str },
    #[error("basis element {0} is a combination of the earlier ones")]
    DependentBasis(usize),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
