//! Exact coefficient arithmetic: Q(q) with q = μ^{1/2}, extended by square roots.

pub mod coeff;
pub mod error;
pub mod expr;
pub mod interval;
pub mod params;
pub mod ratfunc;
pub mod scalar;
pub mod tower;
pub mod upoly;

pub use coeff::Coeff;
pub use error::ScalarError;
pub use expr::ScalarExpr;
pub use interval::{eval_numeric, Interval};
pub use params::{parse_rational, ParamConfig, Params, QMode};
pub use ratfunc::RatFunc;
pub use scalar::{sqrt_rational, RadKey, Scalar};
pub use tower::{tower_report, AtomStatus};
pub use upoly::UPoly;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact scalars with the radical tower.
pub type ExactParams = Params<Scalar>;
/// The radical-free base field.
pub type BaseParams = Params<RatFunc>;
/// Floating-point exploration.
pub type FloatParams = Params<f64>;

/// `p/q` as a rational.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}
