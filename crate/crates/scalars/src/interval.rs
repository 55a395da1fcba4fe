//! Certified numeric evaluation with exact rational interval endpoints.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ScalarError;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn point(x: BigRational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn add(&self, o: &Self) -> Self {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = p.iter().min().unwrap().clone();
        let hi = p.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    /// True when the interval excludes zero, so the sign is certified.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn midpoint_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        ((&self.lo + &self.hi) / BigRational::from_integer(2.into())).to_f64().unwrap_or(f64::NAN)
    }
}

/// Enclosure of √v with width at most 2^{-k}/denominator.
pub fn sqrt_interval(v: &BigRational, k: u32) -> Interval {
    let d = v.denom().clone();
    let a = v.numer() * &d;
    let scale = BigInt::one() << (2 * k);
    let m = (a * scale).sqrt();
    let den = d << k;
    let lo = BigRational::new(m.clone(), den.clone());
    let hi = if lo.clone() * lo.clone() == *v { lo.clone() } else { BigRational::new(m + 1, den) };
    Interval { lo, hi }
}

fn eval_at(x: &Scalar, q0: &BigRational, k: u32) -> Result<Interval, ScalarError> {
    let mut acc = Interval::point(BigRational::zero());
    let r2 = BigRational::one() + q0 * q0 * q0 * q0;
    for (key, f) in x.terms() {
        let base = f.eval(q0).ok_or(ScalarError::Pole)?;
        let mut term = Interval::point(base);
        if key.n != 1 {
            term = term.mul(&sqrt_interval(&BigRational::from_integer(key.n.into()), k));
        }
        if key.r {
            term = term.mul(&sqrt_interval(&r2, k));
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Interval of width ≤ 2^{-bits} containing the value of `x` at q = q0,
/// radicals taken as positive roots.
pub fn eval_numeric(x: &Scalar, q0: &BigRational, bits: u32) -> Result<Interval, ScalarError> {
    let target = BigRational::new(BigInt::one(), BigInt::one() << bits);
    let mut k = bits + 8;
    loop {
        let iv = eval_at(x, q0, k)?;
        if iv.width() <= target {
            return Ok(iv);
        }
        k += 32;
    }
}
