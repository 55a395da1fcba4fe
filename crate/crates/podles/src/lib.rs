//! The Podles sphere O(S²_{μ,c}) as a *-subalgebra of O(SU_μ(2)).

pub mod checks;
pub mod coaction;
pub mod embedding;
pub mod error;
pub mod haar_a;
pub mod kernel;

pub use embedding::{label, xc, Embedding, Sphere};
pub use coaction::{first_leg_coefficients, reassemble};
pub use error::SphereError;
pub use haar_a::{haar_poly_in_a, haar_poly_in_a_closed};
pub use kernel::{KernelReport, MAX_KERNEL_DEGREE};

use qiso_scalars::Scalar;

pub type ExactSphere = Sphere<Scalar>;
