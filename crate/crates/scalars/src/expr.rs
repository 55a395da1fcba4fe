//! Commutative scalar expression trees and their normalization.

use num_rational::BigRational;

use crate::coeff::Coeff;
use crate::error::ScalarError;
use crate::params::Params;

#[derive(Clone, Debug, PartialEq)]
pub enum ScalarExpr {
    Rational(BigRational),
    Atom(String),
    Add(Box<ScalarExpr>, Box<ScalarExpr>),
    Sub(Box<ScalarExpr>, Box<ScalarExpr>),
    Mul(Box<ScalarExpr>, Box<ScalarExpr>),
    Div(Box<ScalarExpr>, Box<ScalarExpr>),
    Neg(Box<ScalarExpr>),
    Pow(Box<ScalarExpr>, i64),
}

impl ScalarExpr {
    pub fn int(n: i64) -> Self {
        ScalarExpr::Rational(BigRational::from_integer(n.into()))
    }

    pub fn atom(s: &str) -> Self {
        ScalarExpr::Atom(s.to_string())
    }

    /// Evaluate to the canonical form of the coefficient type.
    pub fn normalize<C: Coeff>(&self, p: &Params<C>) -> Result<C, ScalarError> {
        use ScalarExpr::*;
        Ok(match self {
            Rational(r) => C::from_rational(r),
            Atom(a) => p.atom(a)?,
            Add(a, b) => a.normalize(p)? + b.normalize(p)?,
            Sub(a, b) => a.normalize(p)? - b.normalize(p)?,
            Mul(a, b) => a.normalize(p)? * b.normalize(p)?,
            Div(a, b) => {
                let d = b.normalize(p)?;
                a.normalize(p)? * d.try_inv().ok_or(ScalarError::DivisionByZero)?
            }
            Neg(a) => -a.normalize(p)?,
            Pow(a, k) => a.normalize(p)?.powi(*k).ok_or(ScalarError::DivisionByZero)?,
        })
    }
}
