use qiso_expr::ExprError;
use qiso_hopf::HopfError;
use qiso_ncalg::NcError;
use qiso_podles::SphereError;
use qiso_scalars::ScalarError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum So3Error {
    #[error("first legs of Delta({0}) leave the span of 1, A, B, B*")]
    NotInSpan(&'static str),
    #[error("coefficient {0} is not radical-free")]
    NotRadicalFree(String),
    #[error("unknown catalog id {0:?}")]
    UnknownId(String),
    #[error("catalog entry {id}: {source}")]
    Catalog { id: String, source: ExprError },
    #[error(transparent)]
    Sphere(#[from] SphereError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
