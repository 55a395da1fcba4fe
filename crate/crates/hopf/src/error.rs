use qiso_ncalg::NcError;
use qiso_scalars::ScalarError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HopfError {
    #[error("{0} carries no Hopf structure here")]
    NoHopfData(&'static str),
    #[error("expected an element of {expected}, found {found}")]
    WrongAlgebra { expected: &'static str, found: &'static str },
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
