//! Evaluation into a presented algebra.

use std::collections::HashMap;
use std::sync::Arc;

use qiso_ncalg::{Algebra, NCPoly};
use qiso_scalars::{Coeff, Params};

use crate::ast::Expr;
use crate::error::ExprError;
use crate::parser::parse;

/// Names visible to an expression: the algebra's generators, any bound
/// elements (sphere or SO_μ(3) generators, T/S coefficients), then the
/// scalar atoms of the parameter set.
pub struct Env<'a, C: Coeff> {
    pub alg: Arc<Algebra<C>>,
    pub params: &'a Params<C>,
    pub bindings: HashMap<String, NCPoly<C>>,
}

impl<'a, C: Coeff> Env<'a, C> {
    pub fn new(alg: &Arc<Algebra<C>>, params: &'a Params<C>) -> Self {
        Env { alg: alg.clone(), params, bindings: HashMap::new() }
    }

    pub fn bind(&mut self, name: &str, v: NCPoly<C>) -> &mut Self {
        self.bindings.insert(name.to_string(), v);
        self
    }

    pub fn with(mut self, items: impl IntoIterator<Item = (String, NCPoly<C>)>) -> Self {
        self.bindings.extend(items);
        self
    }

    fn lookup(&self, name: &str, pos: usize) -> Result<NCPoly<C>, ExprError> {
        if let Some(g) = self.alg.pres.gen_index(name) {
            return Ok(NCPoly::gen(&self.alg, g));
        }
        if let Some(v) = self.bindings.get(name) {
            return Ok(v.clone());
        }
        match self.params.atom(name) {
            Ok(c) => Ok(NCPoly::constant(&self.alg, c)),
            Err(qiso_scalars::ScalarError::UnknownAtom(_)) => Err(ExprError::UnknownIdentifier { pos, name: name.into() }),
            Err(e) => Err(e.into()),
        }
    }

    pub fn eval(&self, e: &Expr) -> Result<NCPoly<C>, ExprError> {
        Ok(match e {
            Expr::Num(n) => NCPoly::constant(&self.alg, C::from_rational(n)),
            Expr::Ident { name, pos } => self.lookup(name, *pos)?,
            Expr::Add(a, b) => self.eval(a)?.try_add(&self.eval(b)?)?,
            Expr::Sub(a, b) => self.eval(a)?.try_add(&-self.eval(b)?)?,
            Expr::Mul(a, b) => self.eval(a)?.try_mul(&self.eval(b)?)?,
            Expr::Neg(a) => -self.eval(a)?,
            Expr::Star(a) => self.eval(a)?.star(),
            Expr::Div(a, b, pos) => {
                let d = self.eval(b)?.as_constant().ok_or(ExprError::NonScalarDivisor { pos: *pos })?;
                let inv = d.try_inv().ok_or(qiso_scalars::ScalarError::DivisionByZero)?;
                self.eval(a)?.scale(&inv)
            }
            Expr::Pow(a, k, pos) => {
                let base = self.eval(a)?;
                if *k >= 0 {
                    base.pow(*k as u32)
                } else {
                    self.inverse(&base, *pos)?.pow(k.unsigned_abs() as u32)
                }
            }
            Expr::Sqrt(a, pos) => {
                let v = self.eval(a)?.as_constant().ok_or(ExprError::Sqrt { pos: *pos })?;
                NCPoly::constant(&self.alg, v.sqrt_exact().ok_or(ExprError::Sqrt { pos: *pos })?)
            }
        })
    }

    /// Inverse of a nonzero scalar or of a monomial in invertible generators
    /// (K and Kinv).
    fn inverse(&self, x: &NCPoly<C>, pos: usize) -> Result<NCPoly<C>, ExprError> {
        if let Some(c) = x.as_constant() {
            let inv = c.try_inv().ok_or(qiso_scalars::ScalarError::DivisionByZero)?;
            return Ok(NCPoly::constant(&self.alg, inv));
        }
        let (k, kinv) = (self.alg.pres.gen_index("K"), self.alg.pres.gen_index("Kinv"));
        if let ([(m, c)], Some(k), Some(kinv)) = (x.terms().iter().collect::<Vec<_>>().as_slice(), k, kinv) {
            if m.letters().iter().all(|&g| g == k || g == kinv) {
                let inv_word: Vec<_> = m.letters().iter().rev().map(|&g| if g == k { kinv } else { k }).collect();
                let ci = c.try_inv().ok_or(qiso_scalars::ScalarError::DivisionByZero)?;
                return Ok(NCPoly::word(&self.alg, &inv_word).scale(&ci));
            }
        }
        Err(ExprError::NegativePower { pos })
    }

    pub fn eval_str(&self, src: &str) -> Result<NCPoly<C>, ExprError> {
        self.eval(&parse(src)?)
    }
}
