//! Spectral-triple data of the Podles sphere at low levels, exact.

pub mod checks;
pub mod error;
pub mod level;
pub mod ops;

pub use error::SpectralError;
pub use level::{BasisVector, LevelBlock, Spectral, VecKey, DEFAULT_MAX_L2, DEFAULT_TOP_L2};
pub use ops::{Corep, Expansion, Order, Weights};

use qiso_scalars::Scalar;

pub type ExactSpectral = Spectral<Scalar>;
