use qiso_ncalg::NcError;
use qiso_scalars::ScalarError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExprError {
    #[error("at {pos}: unexpected character {ch:?}")]
    Lex { pos: usize, ch: char },
    #[error("at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("at {pos}: unknown identifier {name:?}")]
    UnknownIdentifier { pos: usize, name: String },
    #[error("at {pos}: division by a non-scalar")]
    NonScalarDivisor { pos: usize },
    #[error("at {pos}: negative power of a non-invertible element")]
    NegativePower { pos: usize },
    #[error("at {pos}: sqrt needs a scalar argument with an exact root")]
    Sqrt { pos: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Nc(#[from] NcError),
}
