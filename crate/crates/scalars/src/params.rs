//! Parameter configuration and the derived constants of the workbench.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeff::Coeff;
use crate::error::ScalarError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QMode {
    /// q = μ^{1/2} is an indeterminate.
    Symbolic,
    /// q is a fixed rational in (0, 1).
    Rational(BigRational),
}

/// Rational t in (0, 1); c = t⁻¹ − t is derived.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamConfig {
    pub q: QMode,
    pub t: BigRational,
}

pub fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let s = s.trim();
    let bad = || ScalarError::InvalidParam(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a = BigInt::from_str(a.trim()).map_err(|_| bad())?;
            let b = BigInt::from_str(b.trim()).map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

impl ParamConfig {
    pub fn new(q: QMode, t: BigRational) -> Result<Self, ScalarError> {
        let cfg = ParamConfig { q, t };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn symbolic(t: BigRational) -> Result<Self, ScalarError> {
        Self::new(QMode::Symbolic, t)
    }

    /// Symbolic q, t = 1/2.
    pub fn default_symbolic() -> Self {
        Self::symbolic(BigRational::new(1.into(), 2.into())).unwrap()
    }

    pub fn validate(&self) -> Result<(), ScalarError> {
        let zero = BigRational::zero();
        let one = BigRational::one();
        if !(self.t > zero && self.t < one) {
            return Err(ScalarError::InvalidParam(format!("t = {} must lie strictly between 0 and 1", self.t)));
        }
        if let QMode::Rational(q) = &self.q {
            if !(q > &zero && q < &one) {
                return Err(ScalarError::InvalidParam(format!("q = {q} must lie strictly between 0 and 1")));
            }
        }
        Ok(())
    }

    pub fn c(&self) -> BigRational {
        self.t.recip() - &self.t
    }
}

impl fmt::Display for ParamConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.q {
            QMode::Symbolic => write!(f, "q symbolic, t = {}", self.t),
            QMode::Rational(q) => write!(f, "q = {q}, t = {}", self.t),
        }
    }
}

/// Parameter values realised in a coefficient type. Radicals are `None`
/// when the type cannot hold them (the radical-free path).
#[derive(Clone, Debug)]
pub struct Params<C> {
    pub config: ParamConfig,
    pub q: C,
    pub mu: C,
    pub t: C,
    pub c: C,
    /// √(1 + μ²)
    pub r: Option<C>,
    /// √c
    pub sigma: Option<C>,
    /// √(c + 1/4)
    pub lamp: Option<C>,
    /// √(1 − t)
    pub tau: Option<C>,
}

fn half<C: Coeff>() -> C {
    C::from_rational(&BigRational::new(1.into(), 2.into()))
}

impl<C: Coeff> Params<C> {
    pub fn new(config: &ParamConfig) -> Result<Self, ScalarError> {
        config.validate()?;
        let q = match &config.q {
            QMode::Symbolic => C::q_symbolic().ok_or(ScalarError::SymbolicUnsupported)?,
            QMode::Rational(q0) => C::from_rational(q0),
        };
        let mu = q.mul_ref(&q);
        let t = C::from_rational(&config.t);
        let c_rat = config.c();
        let c = C::from_rational(&c_rat);
        let one = C::one();
        let r = (one.clone() + mu.mul_ref(&mu)).sqrt_exact();
        let sigma = c.sqrt_exact();
        let quarter = BigRational::new(1.into(), 4.into());
        let lamp = C::from_rational(&(c_rat + quarter)).sqrt_exact();
        let tau = (one - t.clone()).sqrt_exact();
        Ok(Params { config: config.clone(), q, mu, t, c, r, sigma, lamp, tau })
    }

    /// q^k = μ^{k/2}
    pub fn q_pow(&self, k: i64) -> C {
        self.q.powi(k).expect("q is nonzero")
    }

    /// μ^k
    pub fn mu_pow(&self, k: i64) -> C {
        self.q_pow(2 * k)
    }

    fn need(&self, v: &Option<C>, name: &'static str) -> Result<C, ScalarError> {
        v.clone().ok_or(ScalarError::RadicalUnavailable(name))
    }

    pub fn r(&self) -> Result<C, ScalarError> {
        self.need(&self.r, "r")
    }

    pub fn sigma(&self) -> Result<C, ScalarError> {
        self.need(&self.sigma, "sigma")
    }

    pub fn lamp(&self) -> Result<C, ScalarError> {
        self.need(&self.lamp, "lamp")
    }

    pub fn tau(&self) -> Result<C, ScalarError> {
        self.need(&self.tau, "tau")
    }

    /// λ₊ = 1/2 + √(c + 1/4)
    pub fn lambda_plus(&self) -> Result<C, ScalarError> {
        Ok(half::<C>() + self.lamp()?)
    }

    /// λ₋ = 1/2 − √(c + 1/4)
    pub fn lambda_minus(&self) -> Result<C, ScalarError> {
        Ok(half::<C>() - self.lamp()?)
    }

    /// s = −λ₋ / √c, positive.
    pub fn s(&self) -> Result<C, ScalarError> {
        let inv = self.sigma()?.try_inv().ok_or(ScalarError::DivisionByZero)?;
        Ok(-(self.lambda_minus()?) * inv)
    }

    /// ρ = μ / ((1 + μ²)√c): the constant that makes the x-form embedding consistent.
    pub fn rho(&self) -> Result<C, ScalarError> {
        let den = (C::one() + self.mu.mul_ref(&self.mu)) * self.sigma()?;
        Ok(self.mu.clone() * den.try_inv().ok_or(ScalarError::DivisionByZero)?)
    }

    /// The printed root ρ = μt / ((1 + μ²)√(1 − t)).
    pub fn rho_printed(&self) -> Result<C, ScalarError> {
        let den = (C::one() + self.mu.mul_ref(&self.mu)) * self.tau()?;
        Ok(self.mu.mul_ref(&self.t) * den.try_inv().ok_or(ScalarError::DivisionByZero)?)
    }

    /// 1 + μ²
    pub fn one_plus_mu2(&self) -> C {
        C::one() + self.mu.mul_ref(&self.mu)
    }

    /// [2] = μ + μ⁻¹
    pub fn bracket2(&self) -> C {
        self.mu.clone() + self.mu_pow(-1)
    }

    pub fn inv(&self, x: &C) -> Result<C, ScalarError> {
        x.try_inv().ok_or(ScalarError::DivisionByZero)
    }

    /// Named scalar atom of the expression grammar.
    pub fn atom(&self, name: &str) -> Result<C, ScalarError> {
        match name {
            "mu" => Ok(self.mu.clone()),
            "sqrtmu" | "q" => Ok(self.q.clone()),
            "t" => Ok(self.t.clone()),
            "c" => Ok(self.c.clone()),
            "rho" => self.rho(),
            "s" => self.s(),
            "lamp" => self.lamp(),
            "lamm" | "lambda_minus" => self.lambda_minus(),
            "lambda_plus" => self.lambda_plus(),
            "r" => self.r(),
            "sigma" => self.sigma(),
            "tau" => self.tau(),
            _ => Err(ScalarError::UnknownAtom(name.to_string())),
        }
    }
}
