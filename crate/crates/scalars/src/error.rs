use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("radical `{0}` is not available in this coefficient type")]
    RadicalUnavailable(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("symbolic q needs a function-field coefficient type")]
    SymbolicUnsupported,
    #[error("unknown scalar atom `{0}`")]
    UnknownAtom(String),
    #[error("numeric evaluation needs a rational q")]
    NeedsNumericQ,
    #[error("pole at the evaluation point")]
    Pole,
}
