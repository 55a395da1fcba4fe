use thiserror::Error;

/// Everything that ends a run with exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("config: {0}")]
    Config(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Expr(#[from] qiso_expr::ExprError),
    #[error(transparent)]
    Scalar(#[from] qiso_scalars::ScalarError),
    #[error(transparent)]
    Hopf(#[from] qiso_hopf::HopfError),
    #[error(transparent)]
    Sphere(#[from] qiso_podles::SphereError),
    #[error(transparent)]
    So3(#[from] qiso_somu3::So3Error),
    #[error(transparent)]
    Spectral(#[from] qiso_spectral::SpectralError),
}
