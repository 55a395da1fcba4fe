use qiso_hopf::HopfError;
use qiso_ncalg::NcError;
use qiso_scalars::ScalarError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SphereError {
    #[error("kernel check is limited to degree {max}, got {got}")]
    DegreeGuard { max: usize, got: usize },
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
