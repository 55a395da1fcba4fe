//! Presented *-algebras over exact scalars: normal forms by oriented
//! rewriting, tensor products, and sparse linear algebra on coordinates.

pub mod confluence;
pub mod error;
pub mod instances;
pub mod linalg;
pub mod mono;
pub mod poly;
pub mod presentation;
pub mod tensor;

pub use confluence::{all_words, confluence_check, pbw_count, star_closed, ConfluenceReport, CriticalPair, PbwCount};
pub use error::NcError;
pub use instances::{free, su2, su2_presentation, su2_shape, uq, uq_presentation, uq_shape};
pub use linalg::{combine, independent_solver, kernel, poly_vec, rank, solve_in_span, Pushed, SpanSolver, SparseVec};
pub use mono::{Gen, Mono, Word};
pub use poly::{render_terms, NCPoly};
pub use presentation::{AlgKind, Algebra, Presentation, Rule};
pub use tensor::{MonoPair, TensorPoly};

use qiso_scalars::{RatFunc, Scalar};

pub type Poly = NCPoly<Scalar>;
pub type PolyQ = NCPoly<RatFunc>;
pub type PolyF = NCPoly<f64>;
pub type Tensor = TensorPoly<Scalar>;

/// Parity filter on O(SU_μ(2)) elements.
pub fn degree_filter<C: qiso_scalars::Coeff>(a: &NCPoly<C>, even: bool) -> Result<bool, NcError> {
    if a.algebra().kind() != AlgKind::Su2 {
        return Err(NcError::WrongAlgebra { expected: "O(SU_mu(2))", found: a.algebra().name() });
    }
    Ok(a.has_parity(even))
}
