//! Dense univariate polynomials over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly(Vec<BigInt>);

impl UPoly {
    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn one() -> Self {
        UPoly(vec![BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        UPoly::from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        UPoly::from_coeffs(v)
    }

    pub fn from_coeffs(mut v: Vec<BigInt>) -> Self {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        UPoly(v)
    }

    pub fn from_i64s(v: &[i64]) -> Self {
        UPoly::from_coeffs(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lead(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_default()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    /// Largest k with x^k dividing self (0 for the zero polynomial).
    pub fn valuation(&self) -> usize {
        self.0.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn shift_down(&self, k: usize) -> Self {
        UPoly(self.0[k.min(self.0.len())..].to_vec())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        UPoly(v)
    }

    pub fn neg(&self) -> Self {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            match (self.0.get(i), o.0.get(i)) {
                (Some(a), Some(b)) => v.push(a + b),
                (Some(a), None) => v.push(a.clone()),
                (None, Some(b)) => v.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        UPoly::from_coeffs(v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(v)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly(self.0.iter().map(|a| a * c).collect())
    }

    /// Divide every coefficient by `c`, which must divide each exactly.
    pub fn div_exact_scalar(&self, c: &BigInt) -> Self {
        UPoly(self.0.iter().map(|a| a / c).collect())
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut g = self.content();
        if self.lead().is_negative() {
            g = -g;
        }
        self.div_exact_scalar(&g)
    }

    /// Pseudo-remainder of self by d.
    fn prem(&self, d: &Self) -> Self {
        let dl = d.lead();
        let dd = d.degree();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let rl = r.lead();
            r = r.scale(&dl).sub(&d.scale(&rl).shift_up(shift));
        }
        r
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.primitive();
        }
        if o.is_zero() {
            return self.primitive();
        }
        let (mut a, mut b) = if self.degree() >= o.degree() {
            (self.primitive(), o.primitive())
        } else {
            (o.primitive(), self.primitive())
        };
        while !b.is_zero() {
            if b.degree() == 0 {
                return UPoly::one();
            }
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a
    }

    /// Exact quotient self / d; panics if the division leaves a remainder.
    pub fn div_exact(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero polynomial");
        if d.is_one() {
            return self.clone();
        }
        let mut r = self.clone();
        let dd = d.degree();
        let dl = d.lead();
        if r.is_zero() {
            return r;
        }
        let mut q = vec![BigInt::zero(); r.degree().saturating_sub(dd) + 1];
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let (c, rem) = r.lead().div_rem(&dl);
            assert!(rem.is_zero(), "inexact polynomial division");
            r = r.sub(&d.scale(&c).shift_up(shift));
            q[shift] = c;
        }
        assert!(r.is_zero(), "inexact polynomial division");
        UPoly::from_coeffs(q)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Render in the variable `var`, ascending degree, e.g. `1 - mu^2`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a} {mono}"));
            }
        }
        out
    }

    /// Keep only coefficients of degrees divisible by `k`, compressing exponents.
    pub fn decimate(&self, k: usize) -> Option<Self> {
        if self.0.iter().enumerate().any(|(i, c)| i % k != 0 && !c.is_zero()) {
            return None;
        }
        Some(UPoly::from_coeffs(self.0.iter().step_by(k).cloned().collect()))
    }
}
