//! Hopf *-structure of O(SU_μ(2)) and U_μ(su(2)): coproducts, counits,
//! antipodes, the Haar state, the dual pairing and the actions ▷ and ◁.

pub mod checks;
pub mod error;
pub mod haar;
pub mod pairing;
pub mod structure;

pub use checks::{identity_check, normal_monomials, scalar_check};
pub use error::HopfError;
pub use pairing::Side;
pub use structure::QuantumGroup;

use qiso_scalars::{RatFunc, Scalar};

/// Exact, with the radical tower.
pub type Qg = QuantumGroup<Scalar>;
/// Exact over Q(q) only.
pub type QgBase = QuantumGroup<RatFunc>;
