use qiso_hopf::HopfError;
use qiso_ncalg::NcError;
use qiso_podles::SphereError;
use qiso_scalars::ScalarError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("level 2l = {got} is outside the enabled range (odd, 1 ..= {max})")]
    LevelGuard { got: i32, max: i32 },
    #[error("no basis vector with 2l = {l2}, 2m = {m2}, 2N = {n2}")]
    NoSuchVector { l2: i32, m2: i32, n2: i32 },
    #[error("first legs of Delta(v) leave level 2l = {0}")]
    NotInLevel(i32),
    #[error(transparent)]
    Sphere(#[from] SphereError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
